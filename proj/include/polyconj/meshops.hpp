#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polyconj/ratpoly.hpp"

namespace polyconj::meshops {

/// T(p)(x) = a_0 p(x) + a_1 p(x-1) + ... + a_k p(x-k).
struct DiffOp {
  std::vector<Rational> a;
};

DiffOp parse_diffop(const std::string& text);
RatPoly apply_diffop(const DiffOp& t, const RatPoly& p);
/// (x)_m = x(x-1)...(x-m+1)
RatPoly pochhammer(int m);
/// nabla p(x) = p(x+1) - p(x), applied `order` times.
RatPoly forward_diff(const RatPoly& p, int order = 1);
/// sum_{k=0}^{d} (nabla^k p)(0) (nabla^{d-k} q)(x). DegreeTooHigh if deg p or deg q > d.
RatPoly bullet(const RatPoly& p, const RatPoly& q, int d);

/// Real-rooted, simple, mesh >= 1. Polynomials with fewer than two roots
/// count as mesh infinity, constants included.
bool in_class(const RatPoly& p);

/// Random member of the class with degree <= max_degree: roots r_1 plus
/// gaps, half the time exactly 1, otherwise 1 + Exp(1) rounded to 1/64.
RatPoly random_mesh_poly(int max_degree, std::uint64_t seed, std::string_view tag, std::uint64_t trial);

struct Conj8Report {
  /// T((x)_m) is real-rooted with mesh >= 1.
  bool hypothesis = false;
  std::uint64_t trials = 0;
  /// Sampled p in the class with T(p) outside it.
  std::vector<RatPoly> violations;
  std::vector<std::uint64_t> violation_trials;
};

Conj8Report check_conj8(const DiffOp& t, int m, std::uint64_t trials, std::uint64_t seed);
RatPoly conj8_sample(int m, std::uint64_t seed, std::uint64_t trial);

struct Conj9Report {
  std::uint64_t trials = 0;
  std::vector<std::pair<RatPoly, RatPoly>> violations;
  std::vector<std::uint64_t> violation_trials;
};

Conj9Report check_conj9(std::uint64_t trials, int d, std::uint64_t seed);
std::pair<RatPoly, RatPoly> conj9_sample(int d, std::uint64_t seed, std::uint64_t trial);

}  // namespace polyconj::meshops
