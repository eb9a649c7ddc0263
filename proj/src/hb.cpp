#include "polyconj/hb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "polyconj/error.hpp"
#include "polyconj/parallel.hpp"
#include "polyconj/rng.hpp"
#include "polyconj/roots.hpp"

namespace polyconj::hb {

std::string to_string(Placement p) {
  switch (p) {
    case Placement::Upper: return "UPPER";
    case Placement::NotUpper: return "NOT_UPPER";
    case Placement::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

std::vector<NumericRoot> roots_of_sum(const RatPoly& p, const RatPoly& q, double tol) {
  const int n = std::max(p.degree(), q.degree());
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "p + iq needs degree >= 1");
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = Complex(p.coeff(k).get_d(), q.coeff(k).get_d());
  AberthOptions opts;
  opts.tol = tol;
  opts.pair_conjugates = false;
  return aberth_roots(c, opts, false);
}

namespace {

Placement classify(const std::vector<NumericRoot>& roots, double tol, double& min_imag) {
  min_imag = std::numeric_limits<double>::infinity();
  bool indeterminate = false, lower = false;
  for (const auto& r : roots) {
    min_imag = std::min(min_imag, r.z.imag());
    double margin = std::max(tol, r.radius);
    if (std::abs(r.z.imag()) <= margin) indeterminate = true;
    else if (r.z.imag() < 0) lower = true;
  }
  if (lower) return Placement::NotUpper;
  return indeterminate ? Placement::Indeterminate : Placement::Upper;
}

bool hypotheses(const RatPoly& p, const RatPoly& q) {
  if (!is_real_rooted_simple(p)) return false;
  if (q.degree() >= 1 && !is_real_rooted_simple(q)) return false;
  if (sgn(q.leading()) >= 0) return false;
  if (q.degree() == 0) return true;  // one root of p, nothing to interlace
  return interlace_check(p, q);
}

}  // namespace

HBRecord hb_verify(const RatPoly& p, const RatPoly& q, double tol) {
  if (p.degree() < 1 || q.is_zero() || q.degree() != p.degree() - 1) {
    throw Error(ErrorKind::DegreeMismatch, "hb_verify needs deg q = deg p - 1");
  }
  HBRecord r;
  r.hypotheses_hold = hypotheses(p, q);
  r.roots = roots_of_sum(p, q);
  r.placement = classify(r.roots, tol, r.min_imag);
  return r;
}

RatPoly wronskian(const RatPoly& p, const RatPoly& q) { return p * q.derivative() - p.derivative() * q; }

std::pair<RatPoly, RatPoly> random_interlacing_pair(int k, std::uint64_t seed, std::uint64_t trial) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  auto rng = trial_rng(seed, "hb:interlacing", trial);
  std::uniform_int_distribution<int> start(-40, 40), gap(1, 40), lead(1, 5);
  std::uniform_int_distribution<int> frac(1, 99);
  std::vector<Rational> xs, ys;
  Rational x(start(rng), 4);
  for (int i = 0; i < k; ++i) {
    if (i > 0) x += Rational(gap(rng), 8);
    x.canonicalize();
    xs.push_back(x);
  }
  for (int i = 0; i + 1 < k; ++i) {
    Rational t(frac(rng), 100);
    Rational y = xs[static_cast<std::size_t>(i)] + t * (xs[static_cast<std::size_t>(i) + 1] - xs[static_cast<std::size_t>(i)]);
    y.canonicalize();
    ys.push_back(y);
  }
  RatPoly p = Rational(lead(rng)) * RatPoly::from_roots(xs);
  RatPoly q = Rational(-lead(rng)) * RatPoly::from_roots(ys);
  return {p, q};
}

std::pair<RatPoly, RatPoly> fisk_pair(int k, std::uint64_t seed, std::uint64_t trial, std::string* law) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  if (trial % 10 == 9) {
    if (law) *law = "q=0";
    auto [p, q] = random_interlacing_pair(k, seed, trial);
    return {p, RatPoly{}};
  }
  if (trial % 2 == 0) {
    if (law) *law = "interlacing";
    return random_interlacing_pair(k, seed, trial);
  }
  if (law) *law = "random";
  auto rng = trial_rng(seed, "hb:random", trial);
  std::uniform_int_distribution<int> coeff(-9, 9);
  auto draw = [&](int deg) {
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = coeff(rng);
    while (sgn(c.back()) == 0) c.back() = coeff(rng);
    return RatPoly(std::move(c));
  };
  RatPoly p = draw(k);
  RatPoly q = k >= 1 ? draw(k - 1) : RatPoly{};
  return {p, q};
}

FiskRow fisk_row(int k, std::uint64_t seed, std::uint64_t trial, double tol) {
  FiskRow row;
  row.trial = trial;
  auto [p, q] = fisk_pair(k, seed, trial, &row.law);
  row.p = p;
  row.q = q;
  row.w = wronskian(p, q);
  row.roots_p = complex_roots_numeric(p, 1e-14);
  if (q.degree() >= 1) row.roots_q = complex_roots_numeric(q, 1e-14);
  row.degenerate = q.is_zero();
  row.roots_s = row.degenerate ? row.roots_p : roots_of_sum(p, q);
  if (row.w.degree() >= 1) row.roots_w = complex_roots_numeric(row.w, 1e-14);
  row.interlacing = !row.degenerate && q.degree() == p.degree() - 1 && hypotheses(p, q);
  double min_imag = 0;
  row.placement = classify(row.roots_s, tol, min_imag);
  return row;
}

std::vector<FiskRow> fisk_scan(int k, std::uint64_t trials, std::uint64_t seed, double tol) {
  std::vector<FiskRow> rows(trials);
  parallel_for(trials, [&](std::size_t i) { rows[i] = fisk_row(k, seed, i, tol); });
  return rows;
}

}  // namespace polyconj::hb
