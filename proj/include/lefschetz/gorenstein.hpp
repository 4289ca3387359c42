#pragma once

#include "lefschetz/apolar.hpp"
#include "lefschetz/hvector.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/random.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lefschetz {

/// Knobs shared by every randomized search.
struct SearchConfig {
  unsigned attempts = 50;       // candidate linear forms (or alpha/ell pairs) tried
  unsigned trials = 20;         // evaluation points for polynomial nonvanishing
  std::int64_t coord_box = 50;  // linear-form coordinates drawn from [-box, box]
  std::int64_t alpha_box = 20;  // structured-generator weights drawn from [-box, box] \ {0}
};

/// Rows: degree-j monomials of S, columns: degree-(d-j) monomials (both in
/// descending lex order); entry (u, v) = (m_u m_v)∘F. F must be zero or
/// homogeneous of degree d.
Mat catalecticant(const Poly& F, unsigned j, unsigned d);
/// As above with d = deg F; F must be nonzero.
Mat catalecticant(const Poly& F, unsigned j);

/// ((b_u b_v)∘F)(P) over the given monomials, for any list of equal-degree
/// monomials of S (not necessarily a basis of A_j).
Mat hessian_matrix(const Poly& F, std::span<const Monomial> monomials, std::span<const Scalar> point);

/// A = S/Ann(F) described degree by degree. Immutable after construction.
class GorensteinAlgebra {
 public:
  /// Throws ZeroGenerator for F = 0 and NotHomogeneous for a non-form.
  explicit GorensteinAlgebra(Poly F);

  [[nodiscard]] const Poly& generator() const noexcept { return F_; }
  [[nodiscard]] unsigned socle_degree() const noexcept { return d_; }
  [[nodiscard]] std::size_t n_vars() const noexcept { return F_.n_vars(); }
  [[nodiscard]] const HVector& hilbert() const noexcept { return hilbert_; }
  /// Pivot monomials of the degree-j catalecticant rows; |basis(j)| = h_A(j).
  [[nodiscard]] const std::vector<Monomial>& basis(unsigned j) const;

  [[nodiscard]] Mat catalecticant(unsigned j) const { return lefschetz::catalecticant(F_, j, d_); }
  /// Hess^j_ell(F) with respect to basis(j); requires 2j <= d.
  [[nodiscard]] Mat hessian_at(unsigned j, const LinearFormS& ell) const;
  /// Rank of x ell^k : A_i -> A_{i+k}; requires i + k <= d.
  [[nodiscard]] std::size_t multiplication_rank(unsigned i, unsigned k, const LinearFormS& ell) const;

 private:
  Poly F_;
  unsigned d_ = 0;
  HVector hilbert_;
  std::vector<std::vector<Monomial>> bases_;
};

HVector hilbert_function(const Poly& F);
std::vector<Monomial> basis(const Poly& F, unsigned j);
Mat hessian_at(const Poly& F, unsigned j, const LinearFormS& ell);
std::size_t multiplication_rank(const Poly& F, unsigned i, unsigned k, const LinearFormS& ell);

/// Integer linear form with coordinates in [-box, box], not all zero.
LinearFormS sample_linear_form(Rng& rng, std::size_t n_vars, std::int64_t box);

struct NonvanishingResult {
  bool nonzero = false;
  std::optional<LinearFormS> witness;  // first point with nonzero determinant
  Scalar value;                        // determinant at the witness
  unsigned trials_used = 0;
};

/// Randomized test of det Hess^j(F) != 0 as a polynomial: evaluates at up to
/// `trials` random integer points. A negative answer is probabilistic.
NonvanishingResult hessian_det_nonzero_as_polynomial(const Poly& F, unsigned j, unsigned trials, Rng& rng,
                                                     std::int64_t box = SearchConfig{}.coord_box);
/// Same test for the Hessian over an explicit monomial list.
NonvanishingResult find_nonzero_hessian_det(const Poly& F, std::span<const Monomial> monomials,
                                            unsigned trials, Rng& rng, std::int64_t box);

enum class LefschetzKind { Strong, Weak };
enum class DegreeMethod { HessianDet, MapRank };

struct DegreeRecord {
  unsigned j = 0;
  DegreeMethod method = DegreeMethod::HessianDet;
  Scalar det;                   // HessianDet only
  std::size_t rank = 0;         // MapRank value, or the cross-check rank for HessianDet
  unsigned power = 0;           // k in x ell^k : A_j -> A_{j+k}
  std::int64_t required = 0;    // expected rank
  bool ok = false;
};

struct LefschetzCertificate {
  LefschetzKind kind = LefschetzKind::Strong;
  std::optional<LinearFormS> ell;  // successful form, or the last candidate tried
  std::vector<DegreeRecord> degrees;
  bool verdict = false;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
};
using SlpCertificate = LefschetzCertificate;

/// Evaluates the Hessian criterion for every j <= d/2 at a fixed ell and
/// cross-checks each nonzero determinant against the rank of x ell^{d-2j}.
/// Throws InternalInconsistency if the two routes disagree.
SlpCertificate slp_certificate_at(const GorensteinAlgebra& A, const LinearFormS& ell);

/// Samples ell until every Hessian determinant is nonzero. A false verdict
/// means no witness was found, not that the SLP fails.
SlpCertificate check_slp(const GorensteinAlgebra& A, Rng& rng, const SearchConfig& cfg = {});
SlpCertificate check_slp(const Poly& F, Rng& rng, const SearchConfig& cfg = {});

/// Samples ell until x ell : A_i -> A_{i+1} has maximal rank for all i < d.
LefschetzCertificate check_wlp(const GorensteinAlgebra& A, Rng& rng, const SearchConfig& cfg = {});
LefschetzCertificate check_wlp(const Poly& F, Rng& rng, const SearchConfig& cfg = {});

}  // namespace lefschetz
