#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyconj/numeric_roots.hpp"
#include "polyconj/ratpoly.hpp"

namespace polyconj::hb {

enum class Placement { Upper, NotUpper, Indeterminate };
std::string to_string(Placement p);

struct HBRecord {
  bool hypotheses_hold = false;
  Placement placement = Placement::Indeterminate;
  bool all_roots_upper() const { return placement == Placement::Upper; }
  double min_imag = 0.0;
  std::vector<NumericRoot> roots;
};

/// Roots of p + i q; coefficients ascending.
std::vector<NumericRoot> roots_of_sum(const RatPoly& p, const RatPoly& q, double tol = 1e-14);

/// Hypotheses checked exactly (real-rooted simple, interlacing, negative
/// leading coefficient of q); the conclusion from numeric roots of p + iq, a
/// root counting as off the axis only when |Im z| exceeds max(tol, its
/// inclusion radius). Requires deg q = deg p - 1 (DegreeMismatch).
HBRecord hb_verify(const RatPoly& p, const RatPoly& q, double tol = 1e-9);

/// p q' - p' q
RatPoly wronskian(const RatPoly& p, const RatPoly& q);

struct FiskRow {
  std::uint64_t trial = 0;
  std::string law;  // "interlacing", "random" or "q=0"
  RatPoly p, q, w;
  std::vector<NumericRoot> roots_p, roots_q, roots_s, roots_w;
  bool interlacing = false;
  bool degenerate = false;
  Placement placement = Placement::Indeterminate;
};

/// Random (p, q) pairs of degrees (k, k-1): a third with certified
/// interlacing and negative q leading coefficient, a third random integer
/// pairs, and every tenth trial with q = 0.
std::pair<RatPoly, RatPoly> fisk_pair(int k, std::uint64_t seed, std::uint64_t trial, std::string* law = nullptr);
FiskRow fisk_row(int k, std::uint64_t seed, std::uint64_t trial, double tol = 1e-9);
std::vector<FiskRow> fisk_scan(int k, std::uint64_t trials, std::uint64_t seed, double tol = 1e-9);

/// Certified interlacing pair with roots of q strictly between those of p and
/// negative q leading coefficient.
std::pair<RatPoly, RatPoly> random_interlacing_pair(int k, std::uint64_t seed, std::uint64_t trial);

}  // namespace polyconj::hb
