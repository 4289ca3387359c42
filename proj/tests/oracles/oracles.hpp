#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include "lefschetz/apolar.hpp"
#include "lefschetz/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using lefschetz::Mat;
using lefschetz::Monomial;
using lefschetz::Poly;
using lefschetz::Scalar;

// sum over permutations of sign * product
inline Scalar leibniz_det(const Mat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    Scalar prod = inversions % 2 ? -1 : 1;
    for (std::size_t r = 0; r < n && prod != 0; ++r) prod *= m(r, perm[r]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// textbook Gaussian elimination with rational division
inline std::size_t gauss_rank(Mat m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rank, k));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const Scalar f = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// every (m_i > ... > m_j >= j >= 1) with sum C(m_k, k) = h, found by search
inline std::vector<std::vector<std::pair<std::uint64_t, unsigned>>> binomial_tuples(std::uint64_t h, unsigned i) {
  std::vector<std::vector<std::pair<std::uint64_t, unsigned>>> found;
  std::vector<std::pair<std::uint64_t, unsigned>> cur;
  std::function<void(unsigned, std::uint64_t, std::uint64_t)> rec = [&](unsigned k, std::uint64_t upper,
                                                                       std::uint64_t rest) {
    if (rest == 0) {
      if (!cur.empty()) found.push_back(cur);
      return;
    }
    if (k == 0) return;
    for (std::uint64_t m = k; m < upper; ++m) {
      const auto c = choose(m, k);
      if (c > rest) break;
      cur.emplace_back(m, k);
      rec(k - 1, m, rest - c);
      cur.pop_back();
    }
  };
  rec(i, h + i + 1, h);
  return found;
}

// h^<i> as the size of the largest degree-(i+1) set whose degree-i divisors
// all lie among the h lex-smallest degree-i monomials
inline std::uint64_t lex_shadow_bound(std::uint64_t h, unsigned i) {
  std::size_t k = 1;
  while (choose(k + i - 1, i) < h) ++k;
  const std::size_t n = k + 1;
  auto seg = lefschetz::monomials_of_degree(n, i);  // descending lex
  std::set<Monomial> smallest(seg.end() - static_cast<std::ptrdiff_t>(h), seg.end());
  std::uint64_t count = 0;
  for (const auto& m : lefschetz::monomials_of_degree(n, i + 1)) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (m[v] == 0) continue;
      auto e = m.exponents();
      --e[v];
      ok = smallest.count(Monomial(e)) > 0;
    }
    count += ok;
  }
  return count;
}

// d/dX_v, one variable at a time
inline Poly differentiate(const Poly& F, std::size_t v) {
  Poly out(F.n_vars(), F.ring());
  for (const auto& [m, c] : F.terms()) {
    if (m[v] == 0) continue;
    auto e = m.exponents();
    --e[v];
    out.add_term(Monomial(e), c * static_cast<long>(m[v]));
  }
  return out;
}

inline Poly contract_by_derivatives(const Monomial& m, Poly F) {
  for (std::size_t v = 0; v < m.n_vars(); ++v)
    for (unsigned k = 0; k < m[v]; ++k) F = differentiate(F, v);
  return F;
}

inline Poly power_by_multiplication(const Poly& L, unsigned d) {
  Poly out = Poly::constant(L.n_vars(), L.ring(), 1);
  for (unsigned k = 0; k < d; ++k) out = out * L;
  return out;
}

// Walks every plane partition (order ideal of k[x1, x2, x3]) with at most
// `max_size` cells; `visit` receives the monomial exponent triples.
inline void for_each_order_ideal3(std::size_t max_size,
                                  const std::function<void(const std::vector<std::array<unsigned, 3>>&)>& visit) {
  std::vector<std::vector<unsigned>> rows;
  std::vector<std::array<unsigned, 3>> cells;
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t j,
                                                                       std::size_t remaining) {
    const unsigned above = r == 0 ? ~0u : (j < rows[r - 1].size() ? rows[r - 1][j] : 0);
    const unsigned left = j == 0 ? ~0u : rows[r][j - 1];
    const auto bound = static_cast<unsigned>(std::min<std::size_t>({above, left, remaining}));
    // close this row
    if (j == 0) {
      visit(cells);
    } else if (r + 1 < 64) {
      rows.emplace_back();
      rec(r + 1, 0, remaining);
      rows.pop_back();
    }
    for (unsigned h = 1; h <= bound; ++h) {
      rows[r].push_back(h);
      for (unsigned k = 0; k < h; ++k) cells.push_back({static_cast<unsigned>(r), static_cast<unsigned>(j), k});
      rec(r, j + 1, remaining - h);
      cells.resize(cells.size() - h);
      rows[r].pop_back();
    }
  };
  rows.emplace_back();
  rec(0, 0, max_size);
}

}  // namespace oracle
