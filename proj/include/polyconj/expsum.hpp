#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyconj::expsum {

using Complex = std::complex<double>;

/// y(x) = sum_j c_j e^{lambda_j x}. With realness set the (lambda, c) pairs
/// are closed under conjugation and y is real-valued.
struct ExpSum {
  std::vector<Complex> lambdas;
  std::vector<Complex> coeffs;
  bool realness = false;

  Complex eval_complex(double x) const;
  /// Real part of y(x).
  double eval(double x) const;
  double derivative(double x) const;
  /// sum_j |c_j| e^{Re(lambda_j) x}, the natural scale of y at x.
  double magnitude(double x) const;
};

/// Roots of t^k + a_1 t^{k-1} + ... + a_k, each repeated per multiplicity.
/// Throws NonConvergence or InvalidArgument (k = 0).
std::vector<Complex> char_roots(std::span<const Complex> a);

struct RootCluster {
  Complex z;
  int multiplicity = 1;
};

/// Groups roots closer than tol (relative to 1 + max |z|).
std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, double tol = 1e-6);

enum class Tri { True, False, Indeterminate };
std::string to_string(Tri t);

/// Distinct roots must have real parts further apart than tol. Equal real
/// parts (within root accuracy) give False; a gap inside (accuracy, tol]
/// gives Indeterminate.
Tri in_omega_roots(std::span<const Complex> roots, double tol = 1e-9);
Tri in_omega(std::span<const Complex> a, double tol = 1e-9);

/// The real-valued solution with the given coefficient per characteristic
/// root. Rejects clustered roots (NotSimple) and non-conjugate-symmetric data
/// (NotReal).
ExpSum solution(std::span<const Complex> a, std::span<const Complex> c);

struct CountOptions {
  std::size_t max_samples = 200000;
  /// Adaptive subdivision depth for intervals where a zero cannot be excluded.
  int max_depth = 30;
};

struct ZeroCount {
  int count = 0;
  std::vector<double> zeros;
  /// Every zero lies in [-T, T].
  double T = 0.0;
  bool certified_outside = false;
  /// A near-tangency could not be resolved; count is then a lower bound.
  bool indeterminate = false;
};

/// Errors: NotReal without realness or conjugate symmetry, EqualRealParts,
/// InvalidArgument for the trivial solution.
ZeroCount count_real_zeros(const ExpSum& s, const CountOptions& opts = {});

struct Witness {
  std::uint64_t trial = 0;
  std::string law;
  std::vector<Complex> a, c, lambdas;
  std::vector<double> zeros;
  bool indeterminate = false;
};

/// One trial of the search: nullopt when the sampled equation misses the
/// Omega set (rejection).
std::optional<Witness> search_trial(int k, std::uint64_t seed, std::uint64_t trial);

struct SearchRecord {
  int k = 0;
  int trials = 0;
  int accepted = 0;
  int rejected = 0;
  int indeterminate = 0;
  int max_count = 0;
  std::optional<Witness> witness;
  /// histogram[m] = accepted trials with m zeros
  std::vector<int> histogram;
  std::string law;
};

SearchRecord max_zero_search(int k, int trials, std::uint64_t seed);

}  // namespace polyconj::expsum
