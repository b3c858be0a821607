#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "chebylie/errors.hpp"

namespace chebylie {

/// Dense row-major matrix over an arbitrary ring-like value type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

template <class T>
Matrix<T> identity_matrix(std::size_t n, const T& zero, const T& one) {
  Matrix<T> m(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc{};
      bool first = true;
      for (std::size_t m = 0; m < a.cols(); ++m) {
        if (first) {
          acc = a(i, m) * b(m, j);
          first = false;
        } else {
          acc = acc + a(i, m) * b(m, j);
        }
      }
      out(i, j) = std::move(acc);
    }
  return out;
}

/// Exact determinant by Laplace expansion with memoized minors over column
/// subsets: O(2^n * n) ring multiplications and no division, so it works over
/// any commutative ring. Rows are consumed top to bottom.
template <class T>
T determinant(const Matrix<T>& m, const T& zero, const T& one) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n > 20) throw LimitExceeded("determinant: dimension above 20 is not supported");
  // minors[S] = det of rows 0..|S|-1 restricted to the columns in S.
  std::vector<T> minors(std::size_t{1} << n, zero);
  minors[0] = one;
  for (std::size_t s = 1; s < minors.size(); ++s) {
    const int r = __builtin_popcountll(s) - 1;
    T acc = zero;
    int above = 0;  // set bits of s greater than the current column
    for (int c = static_cast<int>(n) - 1; c >= 0; --c) {
      if (!(s & (std::size_t{1} << c))) continue;
      const T& sub = minors[s & ~(std::size_t{1} << c)];
      T term = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) * sub;
      acc = (above % 2 == 0) ? acc + term : acc - term;
      ++above;
    }
    minors[s] = std::move(acc);
  }
  return minors.back();
}

}  // namespace chebylie
