#include "lefschetz/gorenstein.hpp"

#include "lefschetz/error.hpp"

#include <algorithm>
#include <map>

namespace lefschetz {

namespace {

void require_form_of_degree(const Poly& F, unsigned d) {
  if (F.ring() != Ring::R) throw Error(ErrorCode::RingMismatch, "dual generator must live in R");
  if (F.is_zero()) return;
  if (!F.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "dual generator is not a form");
  if (static_cast<unsigned>(F.degree()) != d)
    throw Error(ErrorCode::DegreeOutOfRange,
                "form of degree " + std::to_string(F.degree()) + " used as degree " + std::to_string(d));
}

unsigned degree_of_generator(const Poly& F) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroGenerator, "dual generator is zero");
  if (!F.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "dual generator is not a form");
  return static_cast<unsigned>(F.degree());
}

}  // namespace

Mat catalecticant(const Poly& F, unsigned j, unsigned d) {
  require_form_of_degree(F, d);
  if (j > d) throw Error(ErrorCode::DegreeOutOfRange, "catalecticant degree exceeds socle degree");
  const auto rows = monomials_of_degree(F.n_vars(), j);
  const auto cols = monomials_of_degree(F.n_vars(), d - j);
  Mat m(rows.size(), cols.size());
  for (std::size_t u = 0; u < rows.size(); ++u)
    for (std::size_t v = 0; v < cols.size(); ++v) {
      const Monomial prod = rows[u] * cols[v];
      if (const Scalar c = F.coefficient(prod); c != 0) m(u, v) = c * prod.factorial();
    }
  return m;
}

Mat catalecticant(const Poly& F, unsigned j) { return catalecticant(F, j, degree_of_generator(F)); }

Mat hessian_matrix(const Poly& F, std::span<const Monomial> monomials, std::span<const Scalar> point) {
  const std::size_t n = monomials.size();
  Mat h(n, n);
  std::map<Monomial, Scalar> cache;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) {
      const Monomial prod = monomials[u] * monomials[v];
      auto it = cache.find(prod);
      if (it == cache.end()) it = cache.emplace(prod, contract_and_evaluate(prod, F, point)).first;
      h(u, v) = it->second;
      h(v, u) = it->second;
    }
  return h;
}

// ---------------------------------------------------------------- algebra

GorensteinAlgebra::GorensteinAlgebra(Poly F) : F_(std::move(F)) {
  if (F_.ring() != Ring::R) throw Error(ErrorCode::RingMismatch, "dual generator must live in R");
  d_ = degree_of_generator(F_);
  std::vector<std::int64_t> h(d_ + 1);
  bases_.resize(d_ + 1);
  for (unsigned j = 0; j <= d_; ++j) {
    const auto rows = monomials_of_degree(F_.n_vars(), j);
    // pivot rows of Cat^j are the pivot columns of its transpose
    for (auto r : pivot_columns(lefschetz::catalecticant(F_, j, d_).transpose())) bases_[j].push_back(rows[r]);
    h[j] = static_cast<std::int64_t>(bases_[j].size());
  }
  hilbert_ = HVector(std::move(h));
}

const std::vector<Monomial>& GorensteinAlgebra::basis(unsigned j) const {
  if (j > d_) throw Error(ErrorCode::DegreeOutOfRange, "basis degree exceeds socle degree");
  return bases_[j];
}

Mat GorensteinAlgebra::hessian_at(unsigned j, const LinearFormS& ell) const {
  if (2 * j > d_) throw Error(ErrorCode::DegreeOutOfRange, "Hessian order needs 2j <= d");
  if (ell.n_vars() != n_vars()) throw Error(ErrorCode::RingMismatch, "linear form size");
  return hessian_matrix(F_, bases_[j], ell.point());
}

std::size_t GorensteinAlgebra::multiplication_rank(unsigned i, unsigned k, const LinearFormS& ell) const {
  if (i + k > d_) throw Error(ErrorCode::DegreeOutOfRange, "multiplication map leaves the algebra");
  if (ell.n_vars() != n_vars()) throw Error(ErrorCode::RingMismatch, "linear form size");
  const Poly ell_k = ell.power(k);
  const auto& rows = bases_[i];
  const auto cols = monomials_of_degree(n_vars(), d_ - i - k);
  Mat m(rows.size(), cols.size());
  for (std::size_t u = 0; u < rows.size(); ++u) {
    // the image of m_u in A_{i+k}, represented by (ell^k m_u)∘F in R_{d-i-k}
    const Poly image = contract(ell_k * Poly::monomial(Ring::S, rows[u]), F_);
    for (std::size_t v = 0; v < cols.size(); ++v)
      if (const Scalar c = image.coefficient(cols[v]); c != 0) m(u, v) = c * cols[v].factorial();
  }
  return rank(m);
}

HVector hilbert_function(const Poly& F) { return GorensteinAlgebra(F).hilbert(); }

std::vector<Monomial> basis(const Poly& F, unsigned j) { return GorensteinAlgebra(F).basis(j); }

Mat hessian_at(const Poly& F, unsigned j, const LinearFormS& ell) { return GorensteinAlgebra(F).hessian_at(j, ell); }

std::size_t multiplication_rank(const Poly& F, unsigned i, unsigned k, const LinearFormS& ell) {
  return GorensteinAlgebra(F).multiplication_rank(i, k, ell);
}

// ---------------------------------------------------------------- randomized checks

LinearFormS sample_linear_form(Rng& rng, std::size_t n_vars, std::int64_t box) {
  for (;;) {
    std::vector<Scalar> c(n_vars);
    bool any = false;
    for (auto& x : c) {
      x = rng.uniform(-box, box);
      any = any || x != 0;
    }
    if (any) return LinearFormS(std::move(c));
  }
}

NonvanishingResult find_nonzero_hessian_det(const Poly& F, std::span<const Monomial> monomials,
                                            unsigned trials, Rng& rng, std::int64_t box) {
  NonvanishingResult r;
  if (F.is_zero()) return r;
  for (unsigned t = 0; t < trials; ++t) {
    const auto ell = sample_linear_form(rng, F.n_vars(), box);
    ++r.trials_used;
    if (Scalar v = det(hessian_matrix(F, monomials, ell.point())); v != 0) {
      r.nonzero = true;
      r.witness = ell;
      r.value = std::move(v);
      return r;
    }
  }
  return r;
}

NonvanishingResult hessian_det_nonzero_as_polynomial(const Poly& F, unsigned j, unsigned trials, Rng& rng,
                                                     std::int64_t box) {
  if (F.is_zero()) return {};
  const GorensteinAlgebra A(F);
  if (2 * j > A.socle_degree()) throw Error(ErrorCode::DegreeOutOfRange, "Hessian order needs 2j <= d");
  return find_nonzero_hessian_det(F, A.basis(j), trials, rng, box);
}

SlpCertificate slp_certificate_at(const GorensteinAlgebra& A, const LinearFormS& ell) {
  SlpCertificate cert;
  cert.kind = LefschetzKind::Strong;
  cert.ell = ell;
  cert.verdict = true;
  const unsigned d = A.socle_degree();
  for (unsigned j = 0; 2 * j <= d; ++j) {
    DegreeRecord rec;
    rec.j = j;
    rec.method = DegreeMethod::HessianDet;
    rec.power = d - 2 * j;
    rec.required = A.hilbert()[j];
    rec.det = det(A.hessian_at(j, ell));
    rec.ok = rec.det != 0;
    cert.degrees.push_back(std::move(rec));
    if (!cert.degrees.back().ok) {
      cert.verdict = false;
      return cert;
    }
  }
  for (auto& rec : cert.degrees) {
    rec.rank = A.multiplication_rank(rec.j, rec.power, ell);
    if (rec.rank != static_cast<std::size_t>(rec.required))
      throw Error(ErrorCode::InternalInconsistency,
                  "nonzero Hessian determinant in degree " + std::to_string(rec.j) +
                      " but multiplication map has rank " + std::to_string(rec.rank));
  }
  return cert;
}

SlpCertificate check_slp(const GorensteinAlgebra& A, Rng& rng, const SearchConfig& cfg) {
  SlpCertificate cert;
  for (unsigned attempt = 1; attempt <= cfg.attempts; ++attempt) {
    cert = slp_certificate_at(A, sample_linear_form(rng, A.n_vars(), cfg.coord_box));
    cert.seed = rng.seed();
    cert.attempts = attempt;
    if (cert.verdict) return cert;
  }
  return cert;
}

SlpCertificate check_slp(const Poly& F, Rng& rng, const SearchConfig& cfg) {
  return check_slp(GorensteinAlgebra(F), rng, cfg);
}

LefschetzCertificate check_wlp(const GorensteinAlgebra& A, Rng& rng, const SearchConfig& cfg) {
  LefschetzCertificate cert;
  cert.kind = LefschetzKind::Weak;
  const unsigned d = A.socle_degree();
  const auto& h = A.hilbert();
  for (unsigned attempt = 1; attempt <= cfg.attempts; ++attempt) {
    const auto ell = sample_linear_form(rng, A.n_vars(), cfg.coord_box);
    cert.ell = ell;
    cert.degrees.clear();
    cert.verdict = true;
    cert.seed = rng.seed();
    cert.attempts = attempt;
    for (unsigned i = 0; i < d; ++i) {
      DegreeRecord rec;
      rec.j = i;
      rec.method = DegreeMethod::MapRank;
      rec.power = 1;
      rec.required = std::min(h[i], h[i + 1]);
      rec.rank = A.multiplication_rank(i, 1, ell);
      rec.ok = rec.rank == static_cast<std::size_t>(rec.required);
      cert.degrees.push_back(rec);
      if (!rec.ok) {
        cert.verdict = false;
        break;
      }
    }
    if (cert.verdict) return cert;
  }
  return cert;
}

LefschetzCertificate check_wlp(const Poly& F, Rng& rng, const SearchConfig& cfg) {
  return check_wlp(GorensteinAlgebra(F), rng, cfg);
}

}  // namespace lefschetz
