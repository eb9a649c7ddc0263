#include "polyconj/meshops.hpp"

#include <random>
#include <sstream>

#include "polyconj/error.hpp"
#include "polyconj/parallel.hpp"
#include "polyconj/rng.hpp"
#include "polyconj/roots.hpp"

namespace polyconj::meshops {

DiffOp parse_diffop(const std::string& text) {
  DiffOp t;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" []");
    auto e = item.find_last_not_of(" []");
    if (b == std::string::npos) continue;
    t.a.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  bool nonzero = false;
  for (auto& c : t.a) nonzero |= sgn(c) != 0;
  if (!nonzero) throw Error(ErrorKind::InvalidArgument, "difference operator needs a nonzero coefficient");
  return t;
}

RatPoly apply_diffop(const DiffOp& t, const RatPoly& p) {
  RatPoly out;
  for (std::size_t j = 0; j < t.a.size(); ++j) {
    if (sgn(t.a[j]) == 0) continue;
    out += t.a[j] * p.shifted(Rational(-static_cast<long>(j)));
  }
  return out;
}

RatPoly pochhammer(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "pochhammer needs m >= 1");
  RatPoly p = RatPoly::constant(1);
  for (int j = 0; j < m; ++j) p *= RatPoly::linear_factor(Rational(j));
  return p;
}

RatPoly forward_diff(const RatPoly& p, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "difference order must be >= 0");
  RatPoly q = p;
  for (int i = 0; i < order && !q.is_zero(); ++i) q = q.shifted(Rational(1)) - q;
  return q;
}

RatPoly bullet(const RatPoly& p, const RatPoly& q, int d) {
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "bullet level must be >= 0");
  if (p.degree() > d || q.degree() > d) throw Error(ErrorKind::DegreeTooHigh, "bullet operands exceed degree d");
  RatPoly out;
  RatPoly dp = p;
  for (int k = 0; k <= d; ++k) {
    Rational at0 = dp(Rational(0));
    if (sgn(at0) != 0) out += at0 * forward_diff(q, d - k);
    dp = forward_diff(dp);
  }
  return out;
}

bool in_class(const RatPoly& p) { return in_mesh_class(p, Rational(1)); }

RatPoly random_mesh_poly(int max_degree, std::uint64_t seed, std::string_view tag, std::uint64_t trial) {
  auto rng = trial_rng(seed, tag, trial);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> start(-64 * 5, 64 * 5);
  std::bernoulli_distribution unit_gap(0.5);
  std::bernoulli_distribution flip(0.5);
  std::exponential_distribution<double> extra(1.0);
  // Bias toward the full degree, where the class boundary is richest.
  int n = std::max(deg(rng), deg(rng));
  std::vector<Rational> roots;
  Rational r(start(rng), 64);
  r.canonicalize();
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      Rational gap(1);
      if (!unit_gap(rng)) gap += Rational(static_cast<long>(std::llround(extra(rng) * 64)), 64);
      gap.canonicalize();
      r += gap;
    }
    roots.push_back(r);
  }
  RatPoly p = RatPoly::from_roots(roots);
  return flip(rng) ? -p : p;
}

RatPoly conj8_sample(int m, std::uint64_t seed, std::uint64_t trial) {
  return random_mesh_poly(m, seed, "conj8", trial);
}

Conj8Report check_conj8(const DiffOp& t, int m, std::uint64_t trials, std::uint64_t seed) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "conj8 needs m >= 1");
  Conj8Report rep;
  rep.hypothesis = in_class(apply_diffop(t, pochhammer(m)));
  rep.trials = trials;
  std::vector<char> bad(trials, 0);
  parallel_for(trials, [&](std::size_t i) { bad[i] = !in_class(apply_diffop(t, conj8_sample(m, seed, i))); });
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (bad[i]) {
      rep.violations.push_back(conj8_sample(m, seed, i));
      rep.violation_trials.push_back(i);
    }
  }
  return rep;
}

std::pair<RatPoly, RatPoly> conj9_sample(int d, std::uint64_t seed, std::uint64_t trial) {
  return {random_mesh_poly(d, seed, "conj9:p", trial), random_mesh_poly(d, seed, "conj9:q", trial)};
}

Conj9Report check_conj9(std::uint64_t trials, int d, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "conj9 needs d >= 1");
  Conj9Report rep;
  rep.trials = trials;
  std::vector<char> bad(trials, 0);
  parallel_for(trials, [&](std::size_t i) {
    auto [p, q] = conj9_sample(d, seed, i);
    bad[i] = !in_class(bullet(p, q, d));
  });
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (bad[i]) {
      rep.violations.push_back(conj9_sample(d, seed, i));
      rep.violation_trials.push_back(i);
    }
  }
  return rep;
}

}  // namespace polyconj::meshops
