#pragma once

#include "lefschetz/linalg.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

/// Exponent vector x^a (in S) or X^a (in R).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<unsigned> exponents) : exps_(exponents) {}

  static Monomial one(std::size_t n_vars) { return Monomial(std::vector<unsigned>(n_vars, 0)); }
  static Monomial variable(std::size_t n_vars, std::size_t i);

  [[nodiscard]] std::size_t n_vars() const noexcept { return exps_.size(); }
  [[nodiscard]] unsigned degree() const noexcept;
  [[nodiscard]] unsigned operator[](std::size_t i) const { return exps_[i]; }
  [[nodiscard]] const std::vector<unsigned>& exponents() const noexcept { return exps_; }

  [[nodiscard]] bool divides(const Monomial& other) const;
  [[nodiscard]] Monomial operator*(const Monomial& other) const;
  /// other / *this, assuming divides(other).
  [[nodiscard]] Monomial quotient_of(const Monomial& other) const;

  /// Product of coordinates raised to the exponents.
  [[nodiscard]] Scalar evaluate(std::span<const Scalar> point) const;
  /// a! = prod a_i!
  [[nodiscard]] Integer factorial() const;

  [[nodiscard]] std::string to_string(char var = 'x') const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Total degree first, then lexicographic with x_0 largest: at equal degree
  /// x_0^d sorts before x_0^{d-1} x_1 and so on.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<unsigned> exps_;
};

/// All monomials of the given degree in n_vars variables, in descending lex
/// order (x_0^deg first, x_{n}^deg last).
std::vector<Monomial> monomials_of_degree(std::size_t n_vars, unsigned degree);

enum class Ring { S, R };

/// Sparse polynomial over Q in S = k[x_0..x_n] or R = k[X_0..X_n].
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Poly(std::size_t n_vars, Ring ring) : n_vars_(n_vars), ring_(ring) {}

  static Poly monomial(Ring ring, const Monomial& m, const Scalar& coef = 1);
  static Poly constant(std::size_t n_vars, Ring ring, const Scalar& c);

  [[nodiscard]] std::size_t n_vars() const noexcept { return n_vars_; }
  [[nodiscard]] Ring ring() const noexcept { return ring_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }

  /// Total degree of the highest term; -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept;
  [[nodiscard]] bool is_homogeneous() const noexcept;
  [[nodiscard]] Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  [[nodiscard]] Scalar evaluate(std::span<const Scalar> point) const;
  /// Terms by descending degree, x_0-heavy first within a degree.
  [[nodiscard]] std::vector<std::pair<Monomial, Scalar>> display_terms() const;
  [[nodiscard]] std::string to_string() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void check_compatible(const Poly& other) const;

  std::size_t n_vars_;
  Ring ring_;
  Terms terms_;
};

/// a∘F: x_i acts on R as the partial derivative d/dX_i. Throws RingMismatch
/// unless a lives in S, F in R, with equal variable counts.
Poly contract(const Poly& a, const Poly& F);
/// m∘F for a monomial m of S.
Poly contract(const Monomial& m, const Poly& F);
/// (m∘F)(P) without building the intermediate polynomial.
Scalar contract_and_evaluate(const Monomial& m, const Poly& F, std::span<const Scalar> point);

namespace detail {
std::vector<Scalar> checked_coefficients(std::vector<Scalar> coefficients);
}

/// L = a_0 X_0 + ... + a_n X_n in R; the dual of the point (a_0 : ... : a_n).
class LinearFormR {
 public:
  explicit LinearFormR(std::vector<Scalar> coefficients)
      : coefs_(detail::checked_coefficients(std::move(coefficients))) {}

  [[nodiscard]] std::size_t n_vars() const noexcept { return coefs_.size(); }
  [[nodiscard]] const std::vector<Scalar>& coefficients() const noexcept { return coefs_; }
  [[nodiscard]] Poly to_poly() const;

 private:
  std::vector<Scalar> coefs_;
};

/// ell = a_0 x_0 + ... + a_n x_n in S. Its coefficient vector is the point at
/// which Hessians are evaluated.
class LinearFormS {
 public:
  explicit LinearFormS(std::vector<Scalar> coefficients)
      : coefs_(detail::checked_coefficients(std::move(coefficients))) {}

  [[nodiscard]] std::size_t n_vars() const noexcept { return coefs_.size(); }
  [[nodiscard]] const std::vector<Scalar>& coefficients() const noexcept { return coefs_; }
  [[nodiscard]] std::span<const Scalar> point() const noexcept { return coefs_; }
  [[nodiscard]] Poly to_poly() const;
  /// ell^k as an element of S.
  [[nodiscard]] Poly power(unsigned k) const;
  /// The pairing ell∘L = sum a_i b_i.
  [[nodiscard]] Scalar apply(const LinearFormR& L) const;

  friend bool operator==(const LinearFormS&, const LinearFormS&) = default;

 private:
  std::vector<Scalar> coefs_;
};

/// L^d expanded by the multinomial theorem.
Poly power_of_linear(const LinearFormR& L, unsigned d);

/// Checks m∘L^d == d!/(d-j)! * m(P) * L^(d-j), where j = deg m and P is the
/// coefficient point of L. Requires j <= d.
bool contract_power_formula_check(const Monomial& m, const LinearFormR& L, unsigned d);

Integer factorial(unsigned n);
/// n!/(n-k)!
Integer falling_factorial(unsigned n, unsigned k);

}  // namespace lefschetz
