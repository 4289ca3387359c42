#include "lefschetz/construct.hpp"

#include "lefschetz/error.hpp"

#include <algorithm>
#include <set>

namespace lefschetz {

Poly power_sum(const PointSet& X, const std::vector<Scalar>& alphas, unsigned d) {
  if (alphas.size() != X.size()) throw Error(ErrorCode::PreconditionViolated, "one weight per point");
  Poly F(X.n() + 1, Ring::R);
  for (std::size_t i = 0; i < X.size(); ++i)
    if (alphas[i] != 0) F += power_of_linear(X.duals()[i], d) * alphas[i];
  return F;
}

namespace {
std::vector<Scalar> checked_weights(std::vector<Scalar> w, std::size_t s) {
  if (w.size() != s) throw Error(ErrorCode::PreconditionViolated, "one weight per point");
  if (std::any_of(w.begin(), w.end(), [](const Scalar& a) { return a == 0; }))
    throw Error(ErrorCode::PreconditionViolated, "weights must be nonzero");
  return w;
}
}  // namespace

StructuredGenerator::StructuredGenerator(PointSet points, std::vector<Scalar> weights, unsigned degree)
    : X(std::move(points)),
      alphas(checked_weights(std::move(weights), X.size())),
      d(degree),
      expanded(power_sum(X, alphas, d)) {}

std::vector<Scalar> sample_alphas(Rng& rng, std::size_t s, std::int64_t box) {
  std::vector<Scalar> a(s);
  for (auto& x : a) x = rng.nonzero(-box, box);
  return a;
}

HVector predicted_hilbert(const PointSet& X, unsigned d) {
  std::vector<std::int64_t> h(d + 1);
  for (unsigned i = 0; i <= d; ++i) h[i] = static_cast<std::int64_t>(X.hilbert(std::min(i, d - i)));
  return HVector(std::move(h));
}

FormulaCheck hilbert_formula_check(const StructuredGenerator& g) {
  if (g.d + 1 < 2 * g.X.tau())
    throw Error(ErrorCode::PreconditionViolated, "formula needs d >= 2 tau(X) - 1, have d = " +
                                                     std::to_string(g.d) + ", tau = " + std::to_string(g.X.tau()));
  FormulaCheck r;
  r.predicted = predicted_hilbert(g.X, g.d);
  if (g.expanded.is_zero()) return r;
  r.actual = hilbert_function(g.expanded);
  r.holds = r.actual == r.predicted;
  return r;
}

// ---------------------------------------------------------------- SI construction

namespace {

struct Realization {
  PointSet X;
  unsigned t;
};

Realization realize_hbar(const HVector& h) {
  const HBar hb = hbar(h);
  if (h.size() == 1 || h[1] == 1) return {PointSet(0, {{1}}), static_cast<unsigned>(hb.t)};
  const std::size_t n = static_cast<std::size_t>(h[1]) - 1;
  // first difference of hbar vanishes after t
  const auto delta = first_difference(hb.truncated(hb.t + 1));
  return {gen_distraction(lex_order_ideal(delta, n)), static_cast<unsigned>(hb.t)};
}

LinearFormS sample_avoiding(Rng& rng, const PointSet& X, std::int64_t box) {
  for (;;) {
    auto ell = sample_linear_form(rng, X.n() + 1, box);
    if (std::all_of(X.duals().begin(), X.duals().end(), [&](const LinearFormR& L) { return ell.apply(L) != 0; }))
      return ell;
  }
}

// Hessian determinants below t, multiplication-map ranks from t on; every
// determinant is confirmed by the rank of the matching map.
SlpCertificate construction_certificate(const GorensteinAlgebra& A, const LinearFormS& ell, unsigned t) {
  SlpCertificate cert;
  cert.kind = LefschetzKind::Strong;
  cert.ell = ell;
  cert.verdict = true;
  const unsigned d = A.socle_degree();
  for (unsigned j = 0; 2 * j <= d; ++j) {
    DegreeRecord rec;
    rec.j = j;
    rec.power = d - 2 * j;
    rec.required = A.hilbert()[j];
    rec.rank = A.multiplication_rank(j, rec.power, ell);
    if (j < t) {
      rec.method = DegreeMethod::HessianDet;
      rec.det = det(A.hessian_at(j, ell));
      rec.ok = rec.det != 0;
      if (rec.ok != (rec.rank == static_cast<std::size_t>(rec.required)))
        throw Error(ErrorCode::InternalInconsistency,
                    "Hessian determinant and multiplication rank disagree in degree " + std::to_string(j));
    } else {
      rec.method = DegreeMethod::MapRank;
      rec.ok = rec.rank == static_cast<std::size_t>(rec.required);
    }
    cert.verdict = cert.verdict && rec.ok;
    cert.degrees.push_back(std::move(rec));
    if (!cert.verdict) break;
  }
  return cert;
}

}  // namespace

ConstructionResult construct_slp_algebra(const HVector& h, Rng& rng, const SearchConfig& cfg) {
  if (!is_SI(h)) throw Error(ErrorCode::NotSI, "(" + h.to_string() + ") is not an SI-sequence");
  auto [X, t] = realize_hbar(h);
  const auto d = static_cast<unsigned>(h.socle_degree());
  const bool degenerate = X.n() == 0;

  for (unsigned attempt = 1; attempt <= cfg.attempts; ++attempt) {
    auto alphas = degenerate ? std::vector<Scalar>{1} : sample_alphas(rng, X.size(), cfg.alpha_box);
    const auto ell = sample_avoiding(rng, X, cfg.coord_box);
    StructuredGenerator g(X, std::move(alphas), d);
    GorensteinAlgebra A(g.expanded);
    if (A.hilbert() != h)
      throw Error(ErrorCode::InternalInconsistency,
                  "generator has Hilbert function (" + A.hilbert().to_string() + "), expected (" + h.to_string() + ")");
    auto cert = construction_certificate(A, ell, t);
    cert.seed = rng.seed();
    cert.attempts = attempt;
    if (cert.verdict)
      return ConstructionResult{h, std::move(g), std::move(A), std::move(cert), rng.seed(), attempt};
  }
  throw Error(ErrorCode::NoWitnessFound,
              "no Lefschetz element for (" + h.to_string() + ") after " + std::to_string(cfg.attempts) + " attempts");
}

// ---------------------------------------------------------------- subset criterion

SubsetVerdicts hess_coefficient_criterion(const PointSet& X, unsigned j, unsigned d,
                                          const std::vector<std::size_t>& I, Rng& rng, unsigned trials,
                                          std::int64_t box) {
  if (d + 1 < 2 * X.tau() || j + 1 > X.tau())
    throw Error(ErrorCode::PreconditionViolated, "needs d >= 2 tau - 1 and j <= tau - 1");
  SubsetVerdicts v;
  v.full_h = X.hilbert(j);
  const std::set<std::size_t> distinct(I.begin(), I.end());
  if (I.size() != v.full_h || distinct.size() != I.size() || (!I.empty() && *distinct.rbegin() >= X.size()))
    throw Error(ErrorCode::BadSubsetSize, "subset must consist of h(j) = " + std::to_string(v.full_h) +
                                              " distinct point indices");

  const GorensteinAlgebra full(power_sum(X, std::vector<Scalar>(X.size(), 1), d));
  std::vector<Scalar> alphas(X.size(), 0);
  for (auto i : I) alphas[i] = 1;
  const auto r = find_nonzero_hessian_det(power_sum(X, alphas, d), full.basis(j), trials, rng, box);
  v.hessian_nonzero = r.nonzero;
  v.trials_used = r.trials_used;
  v.subset_h = X.subset(I).hilbert(j);
  v.subset_full = v.subset_h == v.full_h;
  return v;
}

Scalar alpha_second_difference(const StructuredGenerator& g, unsigned j, std::size_t i, const LinearFormS& ell) {
  if (i >= g.X.size()) throw Error(ErrorCode::PreconditionViolated, "weight index out of range");
  const GorensteinAlgebra A(g.expanded);
  if (2 * j > A.socle_degree()) throw Error(ErrorCode::DegreeOutOfRange, "Hessian order needs 2j <= d");
  auto f = [&](long a) {
    auto alphas = g.alphas;
    alphas[i] = a;
    return det(hessian_matrix(power_sum(g.X, alphas, g.d), A.basis(j), ell.point()));
  };
  return f(0) - 2 * f(1) + f(2);
}

}  // namespace lefschetz
