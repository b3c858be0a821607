#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "chebylie/rootsys.hpp"

namespace chebylie {

/// A Weyl group element realized as T_w = [(omega_i, w(alpha_j^vee))].
///
/// With this matrix, column j holds w(alpha_j^vee) in the coroot basis, so w
/// acts on coroot columns by T_w * gamma and on weight rows by lambda * T_w^{-1}.
/// Products satisfy T_w T_v = T_{wv}.
class WeylElement {
 public:
  WeylElement(IntMatrix matrix, IntMatrix inverse, int det_sign, int length)
      : matrix_(std::move(matrix)), inverse_(std::move(inverse)), det_(det_sign), length_(length) {}

  const IntMatrix& matrix() const { return matrix_; }
  const IntMatrix& inverse_matrix() const { return inverse_; }
  int det_sign() const { return det_; }
  int length() const { return length_; }
  std::size_t rank() const { return matrix_.rows(); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

 private:
  IntMatrix matrix_;
  IntMatrix inverse_;
  int det_;
  int length_;
};

WeylElement simple_reflection(const RootSystem& rs, std::size_t i);

Weight act_on_weight(const WeylElement& w, const Weight& lambda);
CorootVector act_on_coroot(const WeylElement& w, const CorootVector& gamma);

/// The full Weyl group, enumerated by breadth-first closure of the simple
/// reflections under right multiplication. Elements are stored compactly
/// (int8 matrix entries) and addressed by index; index 0 is the identity and
/// indices follow BFS order, so lengths are nondecreasing.
class WeylGroup {
 public:
  static constexpr std::uint64_t kDefaultCap = 3'000'000;

  static WeylGroup enumerate(const RootSystem& rs, std::uint64_t cap = kDefaultCap);

  WeylGroup(WeylGroup&&) noexcept;
  WeylGroup& operator=(WeylGroup&&) noexcept;
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;
  ~WeylGroup();

  const RootSystem& root_system() const { return rs_; }
  std::size_t rank() const { return rs_.rank(); }
  std::size_t order() const { return det_.size(); }

  std::span<const std::int8_t> matrix_entries(std::size_t idx) const;
  int det_sign(std::size_t idx) const { return det_[idx]; }
  int length(std::size_t idx) const { return length_[idx]; }
  std::size_t inverse_index(std::size_t idx) const { return inverse_[idx]; }
  std::size_t generator_index(std::size_t i) const { return generators_.at(i); }

  WeylElement element(std::size_t idx) const;
  std::vector<WeylElement> generators() const;
  std::optional<std::size_t> find(const IntMatrix& m) const;
  /// Index of the product a*b.
  std::size_t multiply(std::size_t a, std::size_t b) const;

  Weight act_on_weight(std::size_t idx, const Weight& lambda) const;
  CorootVector act_on_coroot(std::size_t idx, const CorootVector& gamma) const;

 private:
  explicit WeylGroup(const RootSystem& rs);

  struct Storage;

  RootSystem rs_;
  std::size_t stride_;
  std::vector<std::int8_t> det_;
  std::vector<std::uint16_t> length_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::size_t> generators_;
  std::unique_ptr<Storage> storage_;
};

/// Orbit of lambda under the simple reflections, sorted.
std::vector<Weight> orbit(const RootSystem& rs, const Weight& lambda);
std::vector<Weight> orbit(const WeylGroup& grp, const Weight& lambda);
std::uint64_t stabilizer_size(const WeylGroup& grp, const Weight& lambda);

int max_abs_entry(const WeylGroup& grp);

}  // namespace chebylie
