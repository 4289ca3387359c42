#pragma once

#include "lefschetz/gorenstein.hpp"
#include "lefschetz/points.hpp"

#include <cstdint>
#include <vector>

namespace lefschetz {

/// sum alpha_i L_i^d; zero weights are allowed here.
Poly power_sum(const PointSet& X, const std::vector<Scalar>& alphas, unsigned d);

/// F = sum alpha_i L_i^d over a point set, with every alpha_i != 0.
struct StructuredGenerator {
  PointSet X;
  std::vector<Scalar> alphas;
  unsigned d = 0;
  Poly expanded;

  /// Throws PreconditionViolated on a zero weight or a size mismatch.
  StructuredGenerator(PointSet points, std::vector<Scalar> weights, unsigned degree);
};

/// Nonzero integer weights drawn from [-box, box].
std::vector<Scalar> sample_alphas(Rng& rng, std::size_t s, std::int64_t box);

/// h_A(i) = h_{A(X)}(min(i, d - i)) for i = 0..d.
HVector predicted_hilbert(const PointSet& X, unsigned d);

struct FormulaCheck {
  HVector actual;     // catalecticant ranks of the expanded generator
  HVector predicted;  // piecewise formula in terms of h_{A(X)}
  bool holds = false;
};

/// Compares the Hilbert function of S/Ann(F) with the point-set formula.
/// Throws PreconditionViolated unless d >= 2 tau(X) - 1.
FormulaCheck hilbert_formula_check(const StructuredGenerator& g);

struct ConstructionResult {
  HVector input_h;
  StructuredGenerator generator;
  GorensteinAlgebra algebra;
  SlpCertificate certificate;
  std::uint64_t seed = 0;
  unsigned attempts_used = 0;
};

/// Realizes an SI-sequence as the Hilbert function of a Gorenstein algebra
/// with a certified strong Lefschetz element. Throws NotSI, and
/// NoWitnessFound once cfg.attempts (alpha, ell) pairs have failed.
ConstructionResult construct_slp_algebra(const HVector& h, Rng& rng, const SearchConfig& cfg = {});

struct SubsetVerdicts {
  bool hessian_nonzero = false;  // det Hess^j(F_I) != 0 as a polynomial in ell
  bool subset_full = false;      // h_{A(X_I)}(j) == h_{A(X)}(j)
  std::size_t subset_h = 0;
  std::size_t full_h = 0;
  unsigned trials_used = 0;
};

/// With alpha supported on I (alpha_i = 1 there), tests det Hess^j over the
/// degree-j basis of the all-ones algebra, and compares h_{A(X_I)}(j) with
/// h_{A(X)}(j). Throws BadSubsetSize unless I has h_{A(X)}(j) distinct
/// valid indices, PreconditionViolated unless d >= 2 tau - 1 and j <= tau - 1.
SubsetVerdicts hess_coefficient_criterion(const PointSet& X, unsigned j, unsigned d,
                                          const std::vector<std::size_t>& I, Rng& rng, unsigned trials,
                                          std::int64_t box = SearchConfig{}.coord_box);

/// f(0) - 2 f(1) + f(2) where f(a) = det Hess^j_ell(F) with alpha_i = a and
/// the other weights fixed; the basis is that of the algebra of g.
Scalar alpha_second_difference(const StructuredGenerator& g, unsigned j, std::size_t i, const LinearFormS& ell);

}  // namespace lefschetz
