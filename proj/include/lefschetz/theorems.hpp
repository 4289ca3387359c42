#pragma once

#include "lefschetz/construct.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

// ---------------------------------------------------------------- block determinants

/// Two m x m blocks in a (2m-1)^2 frame: B on rows/cols [0, m), C on
/// [m-1, 2m-1), overlapping in the single entry (m-1, m-1).
struct BlockPair {
  std::size_t m = 0;
  Mat B;
  Mat C;

  [[nodiscard]] Mat assembled() const;
};

BlockPair random_block_pair(std::size_t m, Rng& rng, std::int64_t box = 9);

struct BlockDetResult {
  Scalar lhs;  // det(B + C)
  Scalar rhs;  // det B' det C + det B det C', primes dropping the shared row/col
  bool equal = false;
};

BlockDetResult block_det_identity(const BlockPair& p);

// ---------------------------------------------------------------- SLP verifiers

/// Outcome of one theorem instance. `tension` collects THEOREM-TENSION
/// diagnostics: a verdict contradicting the theorem under its hypotheses.
struct SlpRun {
  StructuredGenerator generator;
  HVector hilbert;
  SlpCertificate certificate;
  std::vector<std::string> tension;

  [[nodiscard]] bool passed() const { return certificate.verdict && tension.empty(); }
};

/// s points on the rational normal curve of P^n with random distinct
/// parameters, random weights, then check_slp. Requires d >= 2 tau(X).
SlpRun verify_rnc_slp(std::size_t n, std::size_t s, unsigned d, Rng& rng, const SearchConfig& cfg = {});

struct ConicRun : SlpRun {
  bool display_holds = false;         // h_A(i) = min(2i + 1, s) for i <= d/2
  unsigned decomposition_points = 0;  // evaluation points where the identity was tested
  bool decomposition_holds = false;
};

/// Two-line configuration from gen_two_lines with random weights. Checks h_A
/// against the point-set formula (ShapeMismatch otherwise), runs check_slp
/// and tests the two-line Hessian decomposition at `decomposition_points`
/// random points for every 1 <= j <= d/2.
ConicRun verify_conic_slp(std::size_t s1, std::size_t s2, bool share, unsigned d, Rng& rng,
                          const SearchConfig& cfg = {}, unsigned decomposition_points = 20);

/// det Hess^j(F) == det Hess^{j-1}(x0^2∘F1) det Hess^j(F2) + det Hess^{j-1}(x1^2∘F2) det Hess^j(F1)
/// at ell, with F = F1 + F2, F1 in X0, X2 and F2 in X1, X2, over the basis
/// x0^j, ..., x2^j, x2^{j-1} x1, ..., x1^j.
bool two_line_decomposition_holds(const Poly& F1, const Poly& F2, unsigned j, const LinearFormS& ell);

// ---------------------------------------------------------------- tails

enum class TailKind { Conic, Line };

struct TailDegree {
  unsigned j = 0;
  std::optional<LinearFormS> witness;
  Scalar det;
  bool zero_forcing_holds = false;  // every off index forces det = 0 at all sampled ell
};

struct TailReport {
  TailKind kind = TailKind::Conic;
  StructuredGenerator generator;
  unsigned k = 0;  // first index of the constant tail of the first difference
  unsigned j_begin = 0, j_end = 0;
  std::vector<std::size_t> factored_indices;  // points off the curve
  std::vector<TailDegree> degrees;
  std::vector<std::string> tension;

  [[nodiscard]] bool complete() const;
};

/// Checks the first difference of h_{A(X)} ends in a run of 2s (conic) or 1s
/// (line) from k < tau, identifies the points off the curve, then for each j
/// in [k-1, d/2] finds ell with det Hess^j_ell(F) != 0 and confirms that
/// dropping any off-curve term makes det Hess^j vanish at `zero_trials`
/// random points. Throws ShapeMismatch when the hypotheses fail.
TailReport verify_tail_nonvanishing(TailKind kind, const PointSet& X, unsigned d, Rng& rng,
                                    const SearchConfig& cfg = {}, unsigned zero_trials = 30);

/// `on` points on a smooth conic (resp. the line x_2 = 0) of P^2 plus `off`
/// random points off it, resampled until the tail hypotheses hold with the
/// expected number of off-curve points. Throws ShapeMismatch if that fails
/// repeatedly.
PointSet gen_curve_with_off_points(TailKind kind, std::size_t on, std::size_t off, Rng& rng,
                                   std::int64_t box = 20);

// ---------------------------------------------------------------- families

enum class Family { OnesAfter12, OnesAfter122, OnesAfter123, Twos, TwosAfter123 };

/// First difference of the family member: fixed prefix followed by m copies
/// of the repeated entry, e.g. OnesAfter12 with m = 2 is (1,2,1,1).
std::vector<std::int64_t> family_delta(Family f, std::size_t m);

/// Realizes the family by distraction, takes d = 2 tau unless d is given,
/// and runs check_slp.
SlpRun verify_corollary_families(Family f, std::size_t m, std::optional<unsigned> d, Rng& rng,
                                 const SearchConfig& cfg = {});

// ---------------------------------------------------------------- s - 1, s - 2

struct PropReport {
  std::size_t s = 0;
  std::int64_t h_j = 0;
  NonvanishingResult witness;
  std::vector<std::string> tension;
};

/// kind 1: h_A(j) = s - 1. kind 2: h_A(j) = s - 2, X in general linear
/// position in P^2, s >= 3, j <= (d + 1)/2. Both need 2j <= d. Throws
/// PreconditionViolated otherwise.
PropReport verify_prop_s_minus(int kind, const PointSet& X, unsigned d, unsigned j, Rng& rng,
                               const SearchConfig& cfg = {});

}  // namespace lefschetz
