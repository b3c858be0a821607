#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

#include "chebylie/errors.hpp"

namespace chebylie {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coordinate overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coordinate overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coordinate overflow in multiplication");
  return r;
}

}  // namespace checked

using CoordStorage = boost::container::small_vector<std::int64_t, 8>;

/// Integer coordinate vector with overflow-checked arithmetic. `Tag` keeps the
/// weight lattice and the coroot lattice apart at the type level.
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank, 0) {}
  LatticeVector(std::initializer_list<std::int64_t> init) : coords_(init.begin(), init.end()) {}
  explicit LatticeVector(std::span<const std::int64_t> values)
      : coords_(values.begin(), values.end()) {}

  static LatticeVector unit(std::size_t rank, std::size_t i) {
    LatticeVector v(rank);
    v.coords_.at(i) = 1;
    return v;
  }

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return {coords_.data(), coords_.size()}; }
  bool is_zero() const {
    for (auto c : coords_)
      if (c != 0) return false;
    return true;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    require_same_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::add(coords_[i], o.coords_[i]);
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    require_same_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::sub(coords_[i], o.coords_[i]);
    return *this;
  }
  LatticeVector& operator*=(std::int64_t s) {
    for (auto& c : coords_) c = checked::mul(c, s);
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(std::int64_t s, LatticeVector a) { return a *= s; }
  friend LatticeVector operator-(LatticeVector a) { return a *= -1; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

  void require_same_rank(const LatticeVector& o) const {
    if (o.rank() != rank())
      throw DimensionError("rank mismatch: " + std::to_string(rank()) + " vs " +
                           std::to_string(o.rank()));
  }

 private:
  CoordStorage coords_;
};

struct WeightTag {};
struct CorootTag {};

/// Coordinates in the fundamental-weight basis: coords[j] = (lambda, alpha_j^vee).
using Weight = LatticeVector<WeightTag>;
/// Coordinates in the simple-coroot basis: coords[m] = (omega_m, gamma).
using CorootVector = LatticeVector<CorootTag>;

struct LatticeHash {
  template <class Tag>
  std::size_t operator()(const LatticeVector<Tag>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto c : v.coords()) {
      h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Pairing between the weight and coroot lattices.
inline std::int64_t inner_product(const Weight& lambda, const CorootVector& gamma) {
  if (lambda.rank() != gamma.rank())
    throw DimensionError("inner_product: rank mismatch " + std::to_string(lambda.rank()) + " vs " +
                         std::to_string(gamma.rank()));
  std::int64_t acc = 0;
  for (std::size_t m = 0; m < lambda.rank(); ++m)
    acc = checked::add(acc, checked::mul(lambda[m], gamma[m]));
  return acc;
}

inline bool is_dominant(const Weight& w) {
  for (auto c : w.coords())
    if (c < 0) return false;
  return true;
}

inline bool is_strictly_dominant(const Weight& w) {
  for (auto c : w.coords())
    if (c <= 0) return false;
  return true;
}

}  // namespace chebylie
