#include "polyconj/tropical.hpp"

#include <cmath>
#include <random>

#include "polyconj/error.hpp"
#include "polyconj/rng.hpp"
#include "polyconj/roots.hpp"
#include "polyconj/sampling.hpp"

namespace polyconj::tropical {

namespace {

void require_positive(const RatPoly& f) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "need degree >= 1");
  for (const auto& c : f.coeffs()) {
    if (sgn(c) <= 0) throw Error(ErrorKind::NotAdmissible, "coefficients must be positive: " + f.to_string());
  }
}

Rational rpow(const Rational& b, long e) {
  Rational r(1);
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

/// log b_j lies strictly above the chord from (i, log b_i) to (k, log b_k).
bool strictly_above(const std::vector<Rational>& b, int i, int j, int k) {
  return rpow(b[j], k - i) > rpow(b[i], k - j) * rpow(b[k], j - i);
}

int parity_changes(const std::vector<int>& idx) {
  int v = 0;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) v += (idx[i] % 2) != (idx[i + 1] % 2);
  return v;
}

}  // namespace

int trop_corner_count(const RatPoly& f) {
  require_positive(f);
  const int n = f.degree();
  std::vector<Rational> b;
  Integer binom(1);
  for (int k = 0; k <= n; ++k) {
    b.push_back(f.coeff(k) * Rational(binom));
    binom = binom * (n - k) / (k + 1);
  }
  std::vector<int> hull;
  for (int k = 0; k <= n; ++k) {
    while (hull.size() >= 2 && !strictly_above(b, hull[hull.size() - 2], hull.back(), k)) hull.pop_back();
    hull.push_back(k);
  }
  return static_cast<int>(hull.size()) - 1;
}

int vtilde(const RatPoly& f) {
  require_positive(f);
  std::vector<int> idx;
  for (int k = 0; k <= f.degree(); ++k) {
    Rational c = (k + 1) * f.coeff(k) * f.coeff(k);
    if (k > 0) c -= k * f.coeff(k - 1) * f.coeff(k + 1);
    if (sgn(c) > 0) idx.push_back(k);
  }
  return parity_changes(idx);
}

int vc(const RatPoly& f) {
  require_positive(f);
  std::vector<int> idx;
  for (int k = 0; k <= f.degree(); ++k) {
    Rational c = f.coeff(k) * f.coeff(k);
    if (k > 0) c -= f.coeff(k - 1) * f.coeff(k + 1);
    if (sgn(c) >= 0) idx.push_back(k);
  }
  return parity_changes(idx);
}

BoundCheck check_bounds(const RatPoly& f) {
  BoundCheck out;
  out.corner_bound = trop_corner_count(f);
  out.vtilde = vtilde(f);
  out.vc = vc(f);
  out.real_zeros = count_with_multiplicity(f);
  // f(0) = a_0 > 0, so every real zero is negative iff none lies in (0, inf).
  out.all_real_negative = count_with_multiplicity(f, Rational(0), std::nullopt) == 0;
  out.violates_corners = out.real_zeros > out.corner_bound;
  out.violates_vtilde = out.real_zeros > out.vtilde;
  out.violates_vc = out.real_zeros > out.vc;
  return out;
}

RatPoly random_positive_poly(int degree, int spread, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_rng(seed, "tropical", trial);
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(quantize_positive(std::pow(10.0, u(rng))));
  return RatPoly(std::move(c));
}

}  // namespace polyconj::tropical
