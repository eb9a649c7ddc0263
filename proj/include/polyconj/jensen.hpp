#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyconj/ratpoly.hpp"

namespace polyconj::jensen {

/// P_i := (2i)! times the y^{2i} coefficient of p(x+iy) p(x-iy), i = 0..k.
std::vector<RatPoly> phi_expand(const RatPoly& p);

/// sum_{j=0}^{2i} (-1)^{i+j} C(2i,j) p^(j) p^(2i-j)
RatPoly jensen_literal(const RatPoly& p, int i);
/// The same sum truncated at j = i. Kept only to measure how far it is from
/// P_i; it is not proportional to P_i in general.
RatPoly jensen_truncated(const RatPoly& p, int i);

struct SumFormulaCheck {
  /// (2i)! p^2 sum over i-element root subsets S of 1/prod_{l in S}(x-x_l)^2.
  RatPoly subset_sum;
  /// (2i)! p^2 sum over 2i-element root subsets.
  RatPoly tuple_sum;
  /// P_i = factor * subset_sum, when proportional.
  std::optional<Rational> subset_factor;
  std::optional<Rational> tuple_factor;
};

/// Requires p to split over Q with simple roots (NotRationallySplit).
SumFormulaCheck sum_formula_check(const RatPoly& p, int i);

/// G_i = (k-i)(p^(i))^2 - (k-i+1) p^(i-1) p^(i+1), 1 <= i <= k-1.
RatPoly g_poly(const RatPoly& p, int i);

struct CriterionRecord {
  bool all_positive = false;
  bool real_simple = false;
  bool agree() const { return all_positive == real_simple; }
};

CriterionRecord criterion1(const RatPoly& p);
CriterionRecord criterion2(const RatPoly& p);

/// How real zeros of the derived polynomials are counted. Non-real zeros of
/// p are always counted with multiplicity.
struct Counting {
  bool real_with_multiplicity = false;
};

/// Result of one inequality check: lhs <= rhs (or lhs > rhs for the
/// strict-positivity conjecture).
struct InequalityRecord {
  long lhs = 0;
  long rhs = 0;
  bool holds = true;
  /// Per-index rows for the families indexed by i.
  std::vector<InequalityRecord> rows;
  std::string detail;
};

/// #_r[(p')^2 - p p''] <= #_nr p. Requires simple real zeros.
InequalityRecord hawaiian_check(const RatPoly& p, Counting c = {});
/// #_r G_1 <= #_nr p.
InequalityRecord conjweight_check(const RatPoly& p, Counting c = {});
/// #_r G_1 + #_r p > 0 for even degree (OddDegree otherwise); lhs is the sum.
InequalityRecord conjwplus_check(const RatPoly& p, Counting c = {});
/// #_r P_i <= min(deg P_i, k) for i = 1..k-1.
InequalityRecord conj2_check(const RatPoly& p, Counting c = {});
/// #_r G_i <= min(deg G_i, #_nr p) for i = 1..k-1.
InequalityRecord corollary19_check(const RatPoly& p, Counting c = {});

/// Degree in [1, max_degree]; half the samples are products of distinct
/// rational linear factors and random irreducible quadratics, half have small
/// integer coefficients. All have simple real zeros.
RatPoly random_corpus_poly(int min_degree, int max_degree, std::uint64_t seed, std::uint64_t trial);

bool real_zeros_simple(const RatPoly& p);

}  // namespace polyconj::jensen
