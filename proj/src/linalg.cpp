#include "lefschetz/linalg.hpp"

#include "lefschetz/error.hpp"

#include <utility>

namespace lefschetz {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  Scalar x;
  if (x.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad scalar '" + s + "'");
  if (x.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  x.canonicalize();
  return x;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
  Mat s(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c) s(r, c) = (*this)(row_idx[r], col_idx[c]);
  return s;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  Mat p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shapes");
  Mat s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

struct IntegerRows {
  std::vector<std::vector<Integer>> rows;
  Integer scale = 1;  // product of the per-row multipliers
};

// Multiply each row by the lcm of its denominators. Rank and pivot columns are
// unchanged; the determinant is multiplied by `scale`.
IntegerRows to_integer_rows(const Mat& m) {
  IntegerRows out;
  out.rows.resize(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& den = m(r, c).get_den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    auto& row = out.rows[r];
    row.resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& x = m(r, c);
      row[c] = x.get_num() * (l / x.get_den());
    }
    out.scale *= l;
  }
  return out;
}

struct Echelon {
  std::vector<std::size_t> pivots;
  int sign = 1;
  Integer last_pivot = 1;
};

// One-step Bareiss elimination with left-to-right pivot search and the first
// nonzero row chosen as pivot. Every division is exact.
Echelon bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  Echelon e;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.sign = -e.sign;
    }
    const Integer piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a[i][c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        Integer v = piv * a[i][k];
        if (f != 0) v -= f * a[r][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][k] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  e.last_pivot = prev;
  return e;
}

}  // namespace

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter dimension.
  const Mat& src = m;
  auto ir = m.rows() <= m.cols() ? to_integer_rows(src) : to_integer_rows(src.transpose());
  const std::size_t cols = m.rows() <= m.cols() ? m.cols() : m.rows();
  return bareiss(ir.rows, cols).pivots.size();
}

Scalar det(const Mat& m) {
  if (!m.is_square())
    throw Error(ErrorCode::NonSquare,
                "det of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  auto ir = to_integer_rows(m);
  const Echelon e = bareiss(ir.rows, n);
  if (e.pivots.size() < n) return Scalar(0);
  Scalar d(e.last_pivot * e.sign, ir.scale);
  d.canonicalize();
  return d;
}

std::vector<std::size_t> pivot_columns(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  auto ir = to_integer_rows(m);
  return bareiss(ir.rows, m.cols()).pivots;
}

std::vector<std::vector<Scalar>> nullspace(const Mat& m) {
  // Reduced row echelon form over Q; small sizes only.
  const std::size_t rows = m.rows(), cols = m.cols();
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    const Scalar inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar f = a(i, c);
      for (std::size_t k = c; k < cols; ++k) a(i, k) -= f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lefschetz
