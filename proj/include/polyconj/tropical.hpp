#pragma once

#include <cstdint>
#include <vector>

#include "polyconj/ratpoly.hpp"

namespace polyconj::tropical {

/// Number of corners of x -> max_k (log a_k + log C(n,k) + k x). Requires
/// all coefficients strictly positive (NotAdmissible otherwise).
int trop_corner_count(const RatPoly& f);

/// Parity-change count over the indices where (k+1)a_k^2 - k a_{k-1}a_{k+1} > 0.
int vtilde(const RatPoly& f);
/// Parity-change count over the indices where a_k^2 - a_{k-1}a_{k+1} >= 0.
int vc(const RatPoly& f);

struct BoundCheck {
  int real_zeros = 0;  // with multiplicity
  int corner_bound = 0;
  int vtilde = 0;
  int vc = 0;
  bool all_real_negative = true;
  bool violates_corners = false;
  bool violates_vtilde = false;
  bool violates_vc = false;

  bool any_violation() const { return violates_corners || violates_vtilde || violates_vc; }
};

BoundCheck check_bounds(const RatPoly& f);

/// Positive coefficients 10^u, u uniform on [-spread, spread], rounded to
/// five significant digits.
RatPoly random_positive_poly(int degree, int spread, std::uint64_t seed, std::uint64_t trial);

}  // namespace polyconj::tropical
