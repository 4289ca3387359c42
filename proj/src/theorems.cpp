#include "lefschetz/theorems.hpp"

#include "lefschetz/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lefschetz {

namespace {

Scalar det_or_one(const Mat& m) { return m.rows() == 0 ? Scalar(1) : det(m); }

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v(to - from);
  std::iota(v.begin(), v.end(), from);
  return v;
}

std::string tension(const std::string& what) { return "THEOREM-TENSION: " + what; }

}  // namespace

// ---------------------------------------------------------------- block determinants

Mat BlockPair::assembled() const {
  if (B.rows() != m || B.cols() != m || C.rows() != m || C.cols() != m)
    throw Error(ErrorCode::DimensionMismatch, "blocks must be m x m");
  const std::size_t n = 2 * m - 1;
  Mat A(n, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      A(r, c) += B(r, c);
      A(m - 1 + r, m - 1 + c) += C(r, c);
    }
  return A;
}

BlockPair random_block_pair(std::size_t m, Rng& rng, std::int64_t box) {
  BlockPair p{m, Mat(m, m), Mat(m, m)};
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      p.B(r, c) = rng.uniform(-box, box);
      p.C(r, c) = rng.uniform(-box, box);
    }
  return p;
}

BlockDetResult block_det_identity(const BlockPair& p) {
  if (p.m == 0) throw Error(ErrorCode::PreconditionViolated, "block size must be positive");
  BlockDetResult r;
  r.lhs = det(p.assembled());
  const auto head = iota(0, p.m - 1);
  const auto tail = iota(1, p.m);
  r.rhs = det_or_one(p.B.submatrix(head, head)) * det(p.C) + det(p.B) * det_or_one(p.C.submatrix(tail, tail));
  r.equal = r.lhs == r.rhs;
  return r;
}

// ---------------------------------------------------------------- rational normal curves

SlpRun verify_rnc_slp(std::size_t n, std::size_t s, unsigned d, Rng& rng, const SearchConfig& cfg) {
  std::set<Scalar> params;
  const std::int64_t box = std::max<std::int64_t>(cfg.coord_box, static_cast<std::int64_t>(s));
  while (params.size() < s) params.insert(Scalar(rng.uniform(-box, box)));
  PointSet X = gen_rnc(n, {params.begin(), params.end()});
  if (d < 2 * X.tau())
    throw Error(ErrorCode::PreconditionViolated,
                "needs d >= 2 tau = " + std::to_string(2 * X.tau()) + ", have " + std::to_string(d));

  StructuredGenerator g(std::move(X), sample_alphas(rng, s, cfg.alpha_box), d);
  const GorensteinAlgebra A(g.expanded);
  SlpRun run{g, A.hilbert(), check_slp(A, rng, cfg), {}};
  if (run.hilbert != predicted_hilbert(g.X, d))
    run.tension.push_back(tension("Hilbert function differs from the point-set formula"));
  if (!run.certificate.verdict)
    run.tension.push_back(tension("no Lefschetz element after " + std::to_string(cfg.attempts) + " attempts"));
  return run;
}

// ---------------------------------------------------------------- two lines

namespace {

// x_a^k x_b^0, x_a^{k-1} x_b, ..., x_b^k in three variables
std::vector<Monomial> binary_monomials(std::size_t a, std::size_t b, unsigned k) {
  std::vector<Monomial> out;
  for (unsigned e = k + 1; e-- > 0;) {
    std::vector<unsigned> v(3, 0);
    v[a] = e;
    v[b] = k - e;
    out.emplace_back(std::move(v));
  }
  return out;
}

Scalar hessian_det(const Poly& F, const std::vector<Monomial>& monos, const LinearFormS& ell) {
  return det_or_one(hessian_matrix(F, monos, ell.point()));
}

}  // namespace

bool two_line_decomposition_holds(const Poly& F1, const Poly& F2, unsigned j, const LinearFormS& ell) {
  if (j == 0) throw Error(ErrorCode::PreconditionViolated, "decomposition needs j >= 1");
  auto basis = binary_monomials(0, 2, j);
  const auto right = binary_monomials(2, 1, j);
  basis.insert(basis.end(), right.begin() + 1, right.end());
  const Scalar lhs = hessian_det(F1 + F2, basis, ell);

  const Poly F1p = contract(Monomial{2, 0, 0}, F1);
  const Poly F2p = contract(Monomial{0, 2, 0}, F2);
  const Scalar rhs = hessian_det(F1p, binary_monomials(0, 2, j - 1), ell) * hessian_det(F2, right, ell) +
                     hessian_det(F2p, binary_monomials(2, 1, j - 1), ell) *
                         hessian_det(F1, binary_monomials(0, 2, j), ell);
  return lhs == rhs;
}

ConicRun verify_conic_slp(std::size_t s1, std::size_t s2, bool share, unsigned d, Rng& rng,
                          const SearchConfig& cfg, unsigned decomposition_points) {
  PointSet X = gen_two_lines(s1, s2, share);
  if (d < 2 * X.tau())
    throw Error(ErrorCode::PreconditionViolated,
                "needs d >= 2 tau = " + std::to_string(2 * X.tau()) + ", have " + std::to_string(d));
  StructuredGenerator g(std::move(X), sample_alphas(rng, share ? s1 + s2 - 1 : s1 + s2, cfg.alpha_box), d);
  const GorensteinAlgebra A(g.expanded);
  if (A.hilbert() != predicted_hilbert(g.X, d))
    throw Error(ErrorCode::ShapeMismatch, "h_A = (" + A.hilbert().to_string() + ") does not match the points");

  ConicRun run{{g, A.hilbert(), check_slp(A, rng, cfg), {}}, false, 0, true};
  const auto s = static_cast<std::int64_t>(g.X.size());
  run.display_holds = true;
  for (unsigned i = 0; 2 * i <= d; ++i)
    run.display_holds = run.display_holds && run.hilbert[i] == std::min<std::int64_t>(2 * i + 1, s);
  if (!run.certificate.verdict)
    run.tension.push_back(tension("no Lefschetz element after " + std::to_string(cfg.attempts) + " attempts"));

  // the shared point, when present, is index 0 and belongs to the first line
  std::vector<Scalar> a1(g.alphas.size(), 0), a2(g.alphas.size(), 0);
  for (std::size_t i = 0; i < g.alphas.size(); ++i) (i < s1 ? a1 : a2)[i] = g.alphas[i];
  const Poly F1 = power_sum(g.X, a1, d);
  const Poly F2 = power_sum(g.X, a2, d);
  for (unsigned p = 0; p < decomposition_points; ++p) {
    const auto ell = sample_linear_form(rng, 3, cfg.coord_box);
    for (unsigned j = 1; 2 * j <= d; ++j)
      run.decomposition_holds = run.decomposition_holds && two_line_decomposition_holds(F1, F2, j, ell);
    ++run.decomposition_points;
  }
  if (!run.decomposition_holds) run.tension.push_back(tension("two-line Hessian decomposition failed"));
  return run;
}

// ---------------------------------------------------------------- tails

namespace {

struct TailShape {
  unsigned k = 0;
  std::vector<std::size_t> off;
};

TailShape detect_tail(TailKind kind, const PointSet& X) {
  if (X.n() != 2) throw Error(ErrorCode::ShapeMismatch, "tail configurations live in P^2");
  const unsigned tau = X.tau();
  const std::int64_t c = kind == TailKind::Conic ? 2 : 1;
  const auto dh = first_difference(X.hilbert_prefix(tau + 1));
  if (tau < 1 || dh[1] != 2 || dh[tau] != c || dh[tau - 1] != c)
    throw Error(ErrorCode::ShapeMismatch, "first difference of h_{A(X)} has no tail of " + std::to_string(c) + "s");
  TailShape shape;
  shape.k = tau;
  while (shape.k > 1 && dh[shape.k - 1] == c) --shape.k;

  const std::size_t h_prev = X.hilbert(tau - 1);
  for (std::size_t i = 0; i < X.size(); ++i)
    if (X.without(i).hilbert(tau - 1) < h_prev) shape.off.push_back(i);
  const std::size_t on = kind == TailKind::Conic ? 2 * tau + 1 : tau + 1;
  if (X.size() < on || shape.off.size() != X.size() - on)
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(on) + " points on the curve");
  return shape;
}

bool on_curve(TailKind kind, const Point& p) {
  return kind == TailKind::Conic ? p[0] * p[2] == p[1] * p[1] : p[2] == 0;
}

}  // namespace

bool TailReport::complete() const {
  if (!tension.empty() || degrees.empty()) return false;
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const TailDegree& t) { return t.witness.has_value() && t.zero_forcing_holds; });
}

TailReport verify_tail_nonvanishing(TailKind kind, const PointSet& X, unsigned d, Rng& rng,
                                    const SearchConfig& cfg, unsigned zero_trials) {
  const TailShape shape = detect_tail(kind, X);
  if (d < 2 * X.tau())
    throw Error(ErrorCode::ShapeMismatch, "needs d >= 2 tau = " + std::to_string(2 * X.tau()));
  StructuredGenerator g(X, sample_alphas(rng, X.size(), cfg.alpha_box), d);
  const GorensteinAlgebra A(g.expanded);

  TailReport report{kind, g, shape.k, shape.k - 1, d / 2, shape.off, {}, {}};
  for (unsigned j = report.j_begin; j <= report.j_end; ++j) {
    TailDegree td;
    td.j = j;
    const auto& basis = A.basis(j);
    auto r = find_nonzero_hessian_det(g.expanded, basis, cfg.attempts, rng, cfg.coord_box);
    td.witness = r.witness;
    td.det = r.value;
    if (!r.nonzero) report.tension.push_back(tension("no nonzero Hessian determinant in degree " + std::to_string(j)));

    td.zero_forcing_holds = true;
    for (auto i : shape.off) {
      auto alphas = g.alphas;
      alphas[i] = 0;
      const Poly Fi = power_sum(g.X, alphas, d);
      for (unsigned t = 0; t < zero_trials && td.zero_forcing_holds; ++t) {
        const auto ell = sample_linear_form(rng, 3, cfg.coord_box);
        td.zero_forcing_holds = det_or_one(hessian_matrix(Fi, basis, ell.point())) == 0;
      }
    }
    if (!td.zero_forcing_holds)
      report.tension.push_back(tension("dropping an off-curve point left det Hess^" + std::to_string(j) + " nonzero"));
    report.degrees.push_back(std::move(td));
  }
  return report;
}

PointSet gen_curve_with_off_points(TailKind kind, std::size_t on, std::size_t off, Rng& rng, std::int64_t box) {
  std::vector<Point> base;
  for (std::size_t t = 0; t < on; ++t) {
    const Scalar x(static_cast<long>(t));
    base.push_back(kind == TailKind::Conic ? Point{1, x, x * x} : Point{1, x, 0});
  }
  for (int round = 0; round < 500; ++round) {
    auto pts = base;
    while (pts.size() < on + off) {
      Point p{rng.uniform(-box, box), rng.uniform(-box, box), rng.uniform(-box, box)};
      if (std::all_of(p.begin(), p.end(), [](const Scalar& c) { return c == 0; }) || on_curve(kind, p)) continue;
      pts.push_back(std::move(p));
    }
    try {
      PointSet X(2, std::move(pts));
      if (detect_tail(kind, X).off.size() == off) return X;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ShapeMismatch && e.code() != ErrorCode::DuplicatePoint) throw;
    }
  }
  throw Error(ErrorCode::ShapeMismatch, "could not place " + std::to_string(off) + " points off the curve with " +
                                            std::to_string(on) + " on it");
}

// ---------------------------------------------------------------- families

std::vector<std::int64_t> family_delta(Family f, std::size_t m) {
  std::vector<std::int64_t> prefix;
  std::int64_t repeated = 1;
  switch (f) {
    case Family::OnesAfter12: prefix = {1, 2}; break;
    case Family::OnesAfter122: prefix = {1, 2, 2}; break;
    case Family::OnesAfter123: prefix = {1, 2, 3}; break;
    case Family::Twos: prefix = {1}; repeated = 2; break;
    case Family::TwosAfter123: prefix = {1, 2, 3}; repeated = 2; break;
  }
  prefix.insert(prefix.end(), m, repeated);
  return prefix;
}

SlpRun verify_corollary_families(Family f, std::size_t m, std::optional<unsigned> d, Rng& rng,
                                 const SearchConfig& cfg) {
  if (m < 2) throw Error(ErrorCode::PreconditionViolated, "family parameter m must be at least 2");
  PointSet X = gen_distraction(lex_order_ideal(family_delta(f, m), 2));
  const unsigned deg = d.value_or(2 * X.tau());
  if (deg < 2 * X.tau()) throw Error(ErrorCode::PreconditionViolated, "needs d >= 2 tau");
  const std::size_t s = X.size();
  StructuredGenerator g(std::move(X), sample_alphas(rng, s, cfg.alpha_box), deg);
  const GorensteinAlgebra A(g.expanded);
  SlpRun run{g, A.hilbert(), check_slp(A, rng, cfg), {}};
  if (!run.certificate.verdict)
    run.tension.push_back(tension("no Lefschetz element after " + std::to_string(cfg.attempts) + " attempts"));
  return run;
}

// ---------------------------------------------------------------- s - 1, s - 2

PropReport verify_prop_s_minus(int kind, const PointSet& X, unsigned d, unsigned j, Rng& rng,
                               const SearchConfig& cfg) {
  if (kind != 1 && kind != 2) throw Error(ErrorCode::PreconditionViolated, "kind must be 1 or 2");
  if (2 * j > d) throw Error(ErrorCode::PreconditionViolated, "Hessian order needs 2j <= d");
  StructuredGenerator g(X, sample_alphas(rng, X.size(), cfg.alpha_box), d);
  const GorensteinAlgebra A(g.expanded);
  PropReport report;
  report.s = X.size();
  report.h_j = A.hilbert()[j];
  const auto s = static_cast<std::int64_t>(report.s);
  if (kind == 1 && report.h_j != s - 1)
    throw Error(ErrorCode::PreconditionViolated, "h_A(j) = " + std::to_string(report.h_j) + ", not s - 1");
  if (kind == 2) {
    if (report.h_j != s - 2)
      throw Error(ErrorCode::PreconditionViolated, "h_A(j) = " + std::to_string(report.h_j) + ", not s - 2");
    if (X.n() != 2 || s < 3 || 2 * j > d + 1 || !in_general_linear_position(X))
      throw Error(ErrorCode::PreconditionViolated, "needs s >= 3 points of P^2 in general linear position");
  }
  report.witness = find_nonzero_hessian_det(g.expanded, A.basis(j), cfg.attempts, rng, cfg.coord_box);
  if (!report.witness.nonzero)
    report.tension.push_back(tension("no nonzero Hessian determinant in degree " + std::to_string(j)));
  return report;
}

}  // namespace lefschetz
