#pragma once

#include <vector>

#include "polyconj/ratpoly.hpp"

namespace polyconj::sos {

/// f(x_1, ..., x_l) = sum_j A_j(x_j)^2 with each A_j of degree k and k
/// distinct rational roots; f is a sum of squares of degree 2k whose zero set
/// is exactly the k^l grid of axis roots.
struct GridSOS {
  int k = 0;
  int l = 0;
  std::vector<RatPoly> axis_polys;
  std::vector<std::vector<Rational>> axis_roots;

  Rational eval(const std::vector<Rational>& x) const;
  /// Hessian of f at x, which is diagonal for a separable f.
  std::vector<Rational> hessian_diagonal(const std::vector<Rational>& x) const;
  /// All k^l grid points, the first axis varying slowest.
  std::vector<std::vector<Rational>> zeros() const;
  std::size_t zero_count() const;
};

/// axis_roots holds either l lists or a single list reused on every axis,
/// each with k distinct rationals. DuplicateAxisRoots on repeats,
/// InvalidArgument on wrong sizes.
GridSOS grid_sos(int k, int l, const std::vector<std::vector<Rational>>& axis_roots);
/// Axis roots 0, 1, ..., k-1.
GridSOS grid_sos(int k, int l);

struct Verification {
  bool ok = false;
  std::size_t zeros_checked = 0;
  bool all_vanish = false;
  bool all_hessians_positive = false;
  /// Each A_j has exactly k simple real roots, so f has no zeros off the grid.
  bool zero_set_exact = false;
  Rational min_hessian_entry;
};

Verification verify_isolated(const GridSOS& g);

struct BoundsTable {
  int k = 0, l = 0;
  Integer sos_lower;      // k^l <= #~(2k, l)
  Integer general_upper;  // #(2k, l) <= (2k - 1)^l
  /// l = 2 only: #~(2k, 2) = k^2 and #(2k, 2) <= 3k(k - 1)/2 + 1.
  bool has_plane_refinement = false;
  Integer plane_sos_exact;
  Integer plane_upper;
  /// The tightest upper bound the table knows for #(2k, l).
  Integer best_upper;
};

BoundsTable bounds_table(int k, int l);

}  // namespace polyconj::sos
