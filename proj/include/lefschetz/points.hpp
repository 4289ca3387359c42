#pragma once

#include "lefschetz/apolar.hpp"
#include "lefschetz/hvector.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/random.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

using Point = std::vector<Scalar>;

/// A finite set of distinct points in P^n. Coordinates are normalized so the
/// first nonzero one equals 1. The Hilbert function of the coordinate ring is
/// computed once, up to tau, at construction.
class PointSet {
 public:
  /// Throws InvalidPoint for a zero vector or wrong length, DuplicatePoint
  /// for two points equal after normalization.
  PointSet(std::size_t n, std::vector<Point> points);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }
  [[nodiscard]] const Point& operator[](std::size_t i) const { return points_[i]; }
  /// L_i = a_0 X_0 + ... + a_n X_n for P_i = (a_0 : ... : a_n).
  [[nodiscard]] const std::vector<LinearFormR>& duals() const noexcept { return duals_; }

  /// h_{A(X)}(i); equal to size() for i >= tau().
  [[nodiscard]] std::size_t hilbert(unsigned i) const noexcept;
  /// (h(0), ..., h(len-1)).
  [[nodiscard]] std::vector<std::int64_t> hilbert_prefix(std::size_t len) const;
  [[nodiscard]] unsigned tau() const noexcept { return tau_; }

  /// X_I for the given indices (in the given order).
  [[nodiscard]] PointSet subset(const std::vector<std::size_t>& indices) const;
  /// X with point i removed.
  [[nodiscard]] PointSet without(std::size_t i) const;

 private:
  std::size_t n_;
  std::vector<Point> points_;
  std::vector<LinearFormR> duals_;
  std::vector<std::size_t> hilbert_;  // h(0..tau)
  unsigned tau_ = 0;
};

/// Rows: points, columns: degree-i monomials in x_0..x_n (descending lex).
Mat evaluation_matrix(const PointSet& X, unsigned i);
std::size_t hilbert_of_points(const PointSet& X, unsigned i);
unsigned tau(const PointSet& X);

/// Points (1 : t : t^2 : ... : t^n). Throws DuplicateParameter.
PointSet gen_rnc(std::size_t n, const std::vector<Scalar>& params);
/// s1 points on {x_1 = 0} and s2 points on {x_0 = 0} in P^2. With `share`,
/// (0:0:1) is counted in both groups and listed once, first among the
/// s1 group; otherwise it is excluded. Group one occupies indices [0, s1).
PointSet gen_two_lines(std::size_t s1, std::size_t s2, bool share);
/// s points (1 : t : 0 : ... : 0), t = 0..s-1, on a line in P^n.
PointSet gen_collinear(std::size_t n, std::size_t s);
/// Random integer points, resampled until h_{A(X)}(i) = min(C(n+i, i), s) for all i.
PointSet gen_generic(std::size_t n, std::size_t s, Rng& rng, std::int64_t box = 50);

/// Every min(s, n+1) of the points are linearly independent.
bool in_general_linear_position(const PointSet& X);

/// A set of monomials in x_1..x_n closed under division.
class OrderIdeal {
 public:
  /// Throws NotOrderIdeal unless closed under division and nonempty.
  OrderIdeal(std::size_t n_vars, std::vector<Monomial> monomials);

  [[nodiscard]] std::size_t n_vars() const noexcept { return n_vars_; }
  [[nodiscard]] const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  [[nodiscard]] std::size_t size() const noexcept { return monomials_.size(); }
  /// Number of monomials in each degree, (delta(0), ..., delta(maxdeg)).
  [[nodiscard]] std::vector<std::int64_t> degree_counts() const;

 private:
  std::size_t n_vars_;
  std::vector<Monomial> monomials_;  // sorted by degree, then lex
};

/// In each degree i, the delta(i) smallest monomials of degree i in lex
/// order with x_n > ... > x_1. Throws NotOSequence unless delta is an
/// O-sequence with delta(1) <= n_vars.
OrderIdeal lex_order_ideal(const std::vector<std::int64_t>& delta, std::size_t n_vars);

/// x^a -> (1 : a_1 : ... : a_n) in P^n. Checks h_{A(X)} against the
/// cumulative degree counts; throws RealizationMismatch on disagreement.
PointSet gen_distraction(const OrderIdeal& ideal);

struct DavisHint {
  std::int64_t r = 0;       // degree of the curve carrying a subset
  unsigned j = 0;           // first index of the flat stretch in the first difference
  unsigned t0 = 0;          // least degree of a form vanishing on X
  std::string description;
};

/// Looks for Delta h_j = Delta h_{j+1} = r >= 1 with t0 <= j <= tau - 1.
/// Throws NotPlaneConfig unless n = 2.
std::optional<DavisHint> davis_hint(const PointSet& X);

}  // namespace lefschetz
