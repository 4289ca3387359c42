#include "lefschetz/apolar.hpp"

#include "lefschetz/error.hpp"

#include <algorithm>
#include <numeric>

namespace lefschetz {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer falling_factorial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t n_vars, std::size_t i) {
  std::vector<unsigned> e(n_vars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

unsigned Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool Monomial::divides(const Monomial& other) const {
  if (other.n_vars() != n_vars()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.n_vars() != n_vars()) throw Error(ErrorCode::DimensionMismatch, "monomial variable counts");
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<unsigned> e(other.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
  return Monomial(std::move(e));
}

Scalar Monomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != exps_.size()) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  Scalar r = 1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), exps_[i]);
    mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), exps_[i]);
    r *= Scalar(num, den);
  }
  return r;
}

Integer Monomial::factorial() const {
  Integer r = 1;
  for (unsigned e : exps_)
    if (e > 1) r *= lefschetz::factorial(e);
  return r;
}

std::string Monomial::to_string(char var) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.n_vars() <=> b.n_vars(); c != 0) return c;
  for (std::size_t i = 0; i < a.n_vars(); ++i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(std::size_t n_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (n_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> e(n_vars, 0);
  // depth-first with the current variable's exponent descending
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == n_vars) {
      e[var] = remaining;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

// ---------------------------------------------------------------- Poly

Poly Poly::monomial(Ring ring, const Monomial& m, const Scalar& coef) {
  Poly p(m.n_vars(), ring);
  p.add_term(m, coef);
  return p;
}

Poly Poly::constant(std::size_t n_vars, Ring ring, const Scalar& c) {
  return monomial(ring, Monomial::one(n_vars), c);
}

int Poly::degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

bool Poly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (m.n_vars() != n_vars_) throw Error(ErrorCode::DimensionMismatch, "term variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  Scalar r = 0;
  for (const auto& [m, c] : terms_) r += c * m.evaluate(point);
  return r;
}

std::vector<std::pair<Monomial, Scalar>> Poly::display_terms() const {
  std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const char var = ring_ == Ring::S ? 'x' : 'X';
  std::string out;
  for (const auto& [m, c] : display_terms()) {
    std::string coef = lefschetz::to_string(c);
    if (!out.empty()) {
      if (coef.front() == '-') {
        out += " - ";
        coef.erase(coef.begin());
      } else {
        out += " + ";
      }
    }
    if (m.degree() == 0)
      out += coef;
    else if (coef == "1")
      out += m.to_string(var);
    else if (coef == "-1")
      out += "-" + m.to_string(var);
    else
      out += coef + "*" + m.to_string(var);
  }
  return out;
}

void Poly::check_compatible(const Poly& other) const {
  if (other.ring_ != ring_) throw Error(ErrorCode::RingMismatch, "polynomials live in different rings");
  if (other.n_vars_ != n_vars_) throw Error(ErrorCode::DimensionMismatch, "polynomial variable counts");
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly p(a.n_vars_, a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

// ---------------------------------------------------------------- contraction

namespace {
void check_action(const Poly& a, const Poly& F) {
  if (a.ring() != Ring::S || F.ring() != Ring::R)
    throw Error(ErrorCode::RingMismatch, "contraction needs an element of S acting on R");
  if (a.n_vars() != F.n_vars())
    throw Error(ErrorCode::RingMismatch, "S and R have different variable counts");
}

// d^m/dX^m of X^b = prod b_i!/(b_i - m_i)! X^(b-m)
Integer derivative_factor(const Monomial& m, const Monomial& b) {
  Integer r = 1;
  for (std::size_t i = 0; i < m.n_vars(); ++i) r *= falling_factorial(b[i], m[i]);
  return r;
}
}  // namespace

Poly contract(const Monomial& m, const Poly& F) {
  if (F.ring() != Ring::R || m.n_vars() != F.n_vars())
    throw Error(ErrorCode::RingMismatch, "monomial of S must act on R with equal variable count");
  Poly out(F.n_vars(), Ring::R);
  for (const auto& [b, c] : F.terms()) {
    if (!m.divides(b)) continue;
    out.add_term(m.quotient_of(b), c * derivative_factor(m, b));
  }
  return out;
}

Poly contract(const Poly& a, const Poly& F) {
  check_action(a, F);
  Poly out(F.n_vars(), Ring::R);
  for (const auto& [m, c] : a.terms()) out += contract(m, F) * c;
  return out;
}

Scalar contract_and_evaluate(const Monomial& m, const Poly& F, std::span<const Scalar> point) {
  if (F.ring() != Ring::R || m.n_vars() != F.n_vars())
    throw Error(ErrorCode::RingMismatch, "monomial of S must act on R with equal variable count");
  Scalar r = 0;
  for (const auto& [b, c] : F.terms()) {
    if (!m.divides(b)) continue;
    r += c * derivative_factor(m, b) * m.quotient_of(b).evaluate(point);
  }
  return r;
}

// ---------------------------------------------------------------- linear forms

std::vector<Scalar> detail::checked_coefficients(std::vector<Scalar> coefficients) {
  if (std::all_of(coefficients.begin(), coefficients.end(), [](const Scalar& c) { return c == 0; }))
    throw Error(ErrorCode::PreconditionViolated, "linear form with all coefficients zero");
  return coefficients;
}

namespace {
Poly linear_poly(const std::vector<Scalar>& coefs, Ring ring) {
  Poly p(coefs.size(), ring);
  for (std::size_t i = 0; i < coefs.size(); ++i) p.add_term(Monomial::variable(coefs.size(), i), coefs[i]);
  return p;
}
}  // namespace

Poly LinearFormR::to_poly() const { return linear_poly(coefs_, Ring::R); }
Poly LinearFormS::to_poly() const { return linear_poly(coefs_, Ring::S); }

Poly LinearFormS::power(unsigned k) const {
  Poly result = Poly::constant(coefs_.size(), Ring::S, 1);
  const Poly base = to_poly();
  for (unsigned i = 0; i < k; ++i) result = result * base;
  return result;
}

Scalar LinearFormS::apply(const LinearFormR& L) const {
  if (L.n_vars() != n_vars()) throw Error(ErrorCode::RingMismatch, "linear forms of different sizes");
  Scalar r = 0;
  for (std::size_t i = 0; i < coefs_.size(); ++i) r += coefs_[i] * L.coefficients()[i];
  return r;
}

Poly power_of_linear(const LinearFormR& L, unsigned d) {
  const auto& a = L.coefficients();
  Poly p(a.size(), Ring::R);
  const Integer dfact = factorial(d);
  for (const auto& m : monomials_of_degree(a.size(), d)) {
    // d!/(e_0! ... e_n!) * prod a_i^e_i
    p.add_term(m, Scalar(Integer(dfact / m.factorial())) * m.evaluate(a));
  }
  return p;
}

bool contract_power_formula_check(const Monomial& m, const LinearFormR& L, unsigned d) {
  const unsigned j = m.degree();
  if (j > d) throw Error(ErrorCode::DegreeOutOfRange, "monomial degree exceeds power");
  const Poly lhs = contract(m, power_of_linear(L, d));
  const Poly rhs = power_of_linear(L, d - j) * (Scalar(falling_factorial(d, j)) * m.evaluate(L.coefficients()));
  return lhs == rhs;
}

}  // namespace lefschetz
