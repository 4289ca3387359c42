#include "lefschetz/points.hpp"

#include "lefschetz/error.hpp"

#include <algorithm>
#include <set>

namespace lefschetz {

namespace {

Point normalized(Point p, std::size_t n) {
  if (p.size() != n + 1)
    throw Error(ErrorCode::InvalidPoint, "point has " + std::to_string(p.size()) + " coordinates, expected " +
                                             std::to_string(n + 1));
  auto lead = std::find_if(p.begin(), p.end(), [](const Scalar& c) { return c != 0; });
  if (lead == p.end()) throw Error(ErrorCode::InvalidPoint, "all coordinates are zero");
  const Scalar inv = 1 / *lead;
  for (auto it = lead; it != p.end(); ++it) *it *= inv;
  return p;
}

std::string point_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ":" : "") + to_string(p[i]);
  return out + ")";
}

}  // namespace

PointSet::PointSet(std::size_t n, std::vector<Point> points) : n_(n) {
  if (points.empty()) throw Error(ErrorCode::InvalidPoint, "empty point set");
  points_.reserve(points.size());
  std::set<Point> seen;
  for (auto& p : points) {
    Point q = normalized(std::move(p), n);
    if (!seen.insert(q).second) throw Error(ErrorCode::DuplicatePoint, point_string(q));
    points_.push_back(std::move(q));
  }
  for (const auto& p : points_) duals_.emplace_back(p);

  const std::size_t s = points_.size();
  for (unsigned i = 0;; ++i) {
    hilbert_.push_back(hilbert_of_points(*this, i));
    if (hilbert_.back() == s) break;
  }
  tau_ = static_cast<unsigned>(hilbert_.size() - 1);
}

std::size_t PointSet::hilbert(unsigned i) const noexcept { return i < hilbert_.size() ? hilbert_[i] : size(); }

std::vector<std::int64_t> PointSet::hilbert_prefix(std::size_t len) const {
  std::vector<std::int64_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<std::int64_t>(hilbert(static_cast<unsigned>(i)));
  return out;
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Point> pts;
  for (auto i : indices) pts.push_back(points_.at(i));
  return PointSet(n_, std::move(pts));
}

PointSet PointSet::without(std::size_t i) const {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < size(); ++k)
    if (k != i) idx.push_back(k);
  return subset(idx);
}

Mat evaluation_matrix(const PointSet& X, unsigned i) {
  const auto monos = monomials_of_degree(X.n() + 1, i);
  Mat m(X.size(), monos.size());
  for (std::size_t r = 0; r < X.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c) m(r, c) = monos[c].evaluate(X[r]);
  return m;
}

std::size_t hilbert_of_points(const PointSet& X, unsigned i) { return rank(evaluation_matrix(X, i)); }

unsigned tau(const PointSet& X) { return X.tau(); }

// ---------------------------------------------------------------- generators

PointSet gen_rnc(std::size_t n, const std::vector<Scalar>& params) {
  if (std::set<Scalar>(params.begin(), params.end()).size() != params.size())
    throw Error(ErrorCode::DuplicateParameter, "curve parameters must be distinct");
  std::vector<Point> pts;
  for (const auto& t : params) {
    Point p(n + 1);
    p[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) p[k] = p[k - 1] * t;
    pts.push_back(std::move(p));
  }
  return PointSet(n, std::move(pts));
}

PointSet gen_two_lines(std::size_t s1, std::size_t s2, bool share) {
  if (s1 == 0 || s2 == 0) throw Error(ErrorCode::PreconditionViolated, "each line needs at least one point");
  std::vector<Point> pts;
  const std::size_t own1 = share ? s1 - 1 : s1;
  const std::size_t own2 = share ? s2 - 1 : s2;
  if (share) pts.push_back({0, 0, 1});
  for (std::size_t k = 1; k <= own1; ++k) pts.push_back({1, 0, Scalar(static_cast<long>(k))});
  for (std::size_t k = 1; k <= own2; ++k) pts.push_back({0, 1, Scalar(static_cast<long>(k))});
  return PointSet(2, std::move(pts));
}

PointSet gen_collinear(std::size_t n, std::size_t s) {
  if (n == 0 && s > 1) throw Error(ErrorCode::PreconditionViolated, "P^0 holds a single point");
  std::vector<Point> pts;
  for (std::size_t t = 0; t < s; ++t) {
    Point p(n + 1);
    p[0] = 1;
    if (n > 0) p[1] = static_cast<long>(t);
    pts.push_back(std::move(p));
  }
  return PointSet(n, std::move(pts));
}

PointSet gen_generic(std::size_t n, std::size_t s, Rng& rng, std::int64_t box) {
  for (;;) {
    std::vector<Point> pts(s, Point(n + 1));
    for (auto& p : pts)
      for (auto& c : p) c = rng.uniform(-box, box);
    try {
      PointSet X(n, std::move(pts));
      bool generic = true;
      for (unsigned i = 0; i <= X.tau() && generic; ++i)
        generic = X.hilbert(i) == std::min<std::uint64_t>(binomial(n + i, i), s);
      if (generic) return X;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidPoint && e.code() != ErrorCode::DuplicatePoint) throw;
    }
  }
}

bool in_general_linear_position(const PointSet& X) {
  const std::size_t k = std::min(X.size(), X.n() + 1);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  // walk all k-subsets in lexicographic order
  for (;;) {
    Mat m(k, X.n() + 1);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c <= X.n(); ++c) m(r, c) = X[idx[r]][c];
    if (rank(m) != k) return false;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == X.size() - k + pos - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t r = pos; r < k; ++r) idx[r] = idx[r - 1] + 1;
  }
}

// ---------------------------------------------------------------- order ideals

OrderIdeal::OrderIdeal(std::size_t n_vars, std::vector<Monomial> monomials) : n_vars_(n_vars) {
  std::set<Monomial> set;
  for (auto& m : monomials) {
    if (m.n_vars() != n_vars) throw Error(ErrorCode::NotOrderIdeal, "monomial variable count");
    set.insert(std::move(m));
  }
  if (set.empty()) throw Error(ErrorCode::NotOrderIdeal, "empty order ideal");
  for (const auto& m : set)
    for (std::size_t v = 0; v < n_vars; ++v) {
      if (m[v] == 0) continue;
      auto e = m.exponents();
      --e[v];
      if (!set.count(Monomial(std::move(e))))
        throw Error(ErrorCode::NotOrderIdeal, "not closed under division at " + m.to_string());
    }
  monomials_.assign(set.begin(), set.end());
}

std::vector<std::int64_t> OrderIdeal::degree_counts() const {
  std::vector<std::int64_t> counts(monomials_.back().degree() + 1, 0);
  for (const auto& m : monomials_) ++counts[m.degree()];
  return counts;
}

OrderIdeal lex_order_ideal(const std::vector<std::int64_t>& delta, std::size_t n_vars) {
  if (!is_O_sequence(delta) || (delta.size() > 1 && static_cast<std::size_t>(delta[1]) > n_vars))
    throw Error(ErrorCode::NotOSequence, "not an O-sequence in " + std::to_string(n_vars) + " variables");
  std::vector<Monomial> chosen;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    // monomials_of_degree is descending lex with index 0 largest; reversing
    // the exponent vector makes x_n the leading variable, so the tail of that
    // list holds the smallest monomials in the x_n > ... > x_1 order
    auto monos = monomials_of_degree(n_vars, static_cast<unsigned>(i));
    for (auto& m : monos) {
      auto e = m.exponents();
      std::reverse(e.begin(), e.end());
      m = Monomial(std::move(e));
    }
    const auto count = static_cast<std::size_t>(delta[i]);
    chosen.insert(chosen.end(), monos.end() - static_cast<std::ptrdiff_t>(count), monos.end());
  }
  return OrderIdeal(n_vars, std::move(chosen));
}

PointSet gen_distraction(const OrderIdeal& ideal) {
  const std::size_t n = ideal.n_vars();
  std::vector<Point> pts;
  for (const auto& m : ideal.monomials()) {
    Point p(n + 1);
    p[0] = 1;
    for (std::size_t v = 0; v < n; ++v) p[v + 1] = static_cast<long>(m[v]);
    pts.push_back(std::move(p));
  }
  PointSet X(n, std::move(pts));
  const auto counts = ideal.degree_counts();
  std::int64_t cumulative = 0;
  for (std::size_t i = 0; i <= counts.size(); ++i) {
    cumulative += i < counts.size() ? counts[i] : 0;
    if (static_cast<std::int64_t>(X.hilbert(static_cast<unsigned>(i))) != cumulative)
      throw Error(ErrorCode::RealizationMismatch,
                  "distraction has h(" + std::to_string(i) + ") = " + std::to_string(X.hilbert(i)) +
                      ", expected " + std::to_string(cumulative));
  }
  return X;
}

std::optional<DavisHint> davis_hint(const PointSet& X) {
  if (X.n() != 2) throw Error(ErrorCode::NotPlaneConfig, "Davis hint needs points in P^2");
  const auto h = X.hilbert_prefix(X.tau() + 2);
  const auto dh = first_difference(h);
  unsigned t0 = 0;
  while (static_cast<std::uint64_t>(h[t0]) == binomial(t0 + 2, 2)) ++t0;
  for (unsigned j = t0; j + 1 <= X.tau(); ++j) {
    if (dh[j] >= 1 && dh[j] == dh[j + 1]) {
      DavisHint hint;
      hint.r = dh[j];
      hint.j = j;
      hint.t0 = t0;
      hint.description = "X contains a subset on a curve of degree " + std::to_string(dh[j]);
      return hint;
    }
  }
  return std::nullopt;
}

}  // namespace lefschetz
