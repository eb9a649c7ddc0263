#pragma once

#include <complex>
#include <span>
#include <vector>

#include "polyconj/ratpoly.hpp"

namespace polyconj {

using Complex = std::complex<double>;

struct NumericRoot {
  Complex z;
  /// |p(z)|
  double residual = 0.0;
  /// Weierstrass inclusion radius n |p(z) / (a_n prod_{j != i} (z - z_j))|;
  /// every connected component of the union of these disks holds as many
  /// roots as it has disks.
  double radius = 0.0;
};

struct AberthOptions {
  double tol = 1e-14;
  int max_iterations = 1000;
  /// Symmetrize conjugate pairs (real input only).
  bool pair_conjugates = true;
};

/// Simultaneous (Aberth-Ehrlich) iteration from deterministic starting
/// points on the circle of radius 1 + max |a_i / a_n|. Coefficients are in
/// ascending order. Throws NonConvergence after the iteration cap.
std::vector<NumericRoot> aberth_roots(std::span<const Complex> coeffs, const AberthOptions& opts = {},
                                      bool real_input = false);

std::vector<NumericRoot> complex_roots_numeric(const RatPoly& p, double tol = 1e-14);

/// Real-root census from numeric roots using the inclusion disks. A root is
/// certainly real when its disk is isolated and its mirror image meets no
/// other disk; certainly non-real when its isolated disk misses the axis.
struct NumericRealCensus {
  int real = 0;
  int non_real = 0;
  bool ambiguous = false;
};

NumericRealCensus numeric_real_census(std::span<const NumericRoot> roots);

}  // namespace polyconj
