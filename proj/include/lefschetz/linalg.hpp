#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lefschetz {

// Exact rational scalar. gmpxx keeps results of arithmetic in lowest terms
// with a positive denominator; values built from strings go through
// parse_scalar, which canonicalizes.
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Mat transpose() const;
  /// Square submatrix on the given row and column index lists.
  [[nodiscard]] Mat submatrix(const std::vector<std::size_t>& row_idx,
                              const std::vector<std::size_t>& col_idx) const;
  [[nodiscard]] bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact rank over Q (fraction-free elimination on the integer-scaled rows).
std::size_t rank(const Mat& m);

/// Exact determinant; throws Error{NonSquare} for non-square input.
Scalar det(const Mat& m);

/// Leftmost column basis: the pivot columns of a left-to-right echelon form.
std::vector<std::size_t> pivot_columns(const Mat& m);

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Mat& m);

}  // namespace lefschetz
