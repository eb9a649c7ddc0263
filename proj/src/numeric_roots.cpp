#include "polyconj/numeric_roots.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "polyconj/error.hpp"

namespace polyconj {

namespace {

struct HornerResult {
  Complex value;
  Complex derivative;
  double error_bound;  // rounding bound on |value|
};

HornerResult horner(std::span<const Complex> a, Complex z) {
  Complex v = a.back();
  Complex d = 0.0;
  double mag = std::abs(a.back());
  const double az = std::abs(z);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    d = d * z + v;
    v = v * z + a[k];
    mag = mag * az + std::abs(a[k]);
  }
  return {v, d, 4.0 * static_cast<double>(a.size()) * DBL_EPSILON * mag};
}

void pair_conjugates(std::vector<Complex>& z) {
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].imag() > 0) upper.push_back(i);
    else if (z[i].imag() < 0) lower.push_back(i);
  }
  std::sort(upper.begin(), upper.end(), [&](std::size_t a, std::size_t b) { return z[a].imag() > z[b].imag(); });
  std::vector<bool> used(z.size(), false);
  for (std::size_t u : upper) {
    std::size_t best = z.size();
    double best_d = 0.0;
    for (std::size_t l : lower) {
      if (used[l]) continue;
      double d = std::abs(z[u] - std::conj(z[l]));
      if (best == z.size() || d < best_d) {
        best = l;
        best_d = d;
      }
    }
    if (best != z.size() && best_d < z[u].imag()) {
      used[best] = used[u] = true;
      Complex m = 0.5 * (z[u] + std::conj(z[best]));
      z[u] = m;
      z[best] = std::conj(m);
    }
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!used[i]) z[i] = Complex(z[i].real(), 0.0);
  }
}

}  // namespace

std::vector<NumericRoot> aberth_roots(std::span<const Complex> coeffs_in, const AberthOptions& opts, bool real_input) {
  std::vector<Complex> a(coeffs_in.begin(), coeffs_in.end());
  while (!a.empty() && a.back() == Complex(0.0)) a.pop_back();
  if (a.empty()) throw Error(ErrorKind::ZeroPolynomial, "aberth_roots");
  const std::size_t n = a.size() - 1;
  if (n == 0) return {};

  double max_ratio = 0.0;
  for (std::size_t k = 0; k < n; ++k) max_ratio = std::max(max_ratio, std::abs(a[k] / a[n]));
  const double radius = 1.0 + max_ratio;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      auto h = horner(a, z[i]);
      if (std::abs(h.value) <= h.error_bound) {
        done[i] = true;
        continue;
      }
      Complex newton = h.value / h.derivative;
      Complex s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) s += 1.0 / (z[i] - z[j]);
      }
      Complex w = newton / (1.0 - newton * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = newton;
      z[i] -= w;
      if (std::abs(w) <= opts.tol * std::max(1.0, std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  if (iter >= opts.max_iterations) {
    throw Error(ErrorKind::NonConvergence,
                "simultaneous iteration did not converge in " + std::to_string(opts.max_iterations) + " steps");
  }
  if (real_input && opts.pair_conjugates) pair_conjugates(z);

  std::vector<NumericRoot> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto h = horner(a, z[i]);
    Complex denom = a[n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= z[i] - z[j];
    }
    double r = std::abs(denom) > 0.0
                   ? static_cast<double>(n) * (std::abs(h.value) + h.error_bound) / std::abs(denom)
                   : INFINITY;
    out[i] = {z[i], std::abs(h.value), r};
  }
  std::sort(out.begin(), out.end(), [](const NumericRoot& x, const NumericRoot& y) {
    if (x.z.real() != y.z.real()) return x.z.real() < y.z.real();
    return x.z.imag() < y.z.imag();
  });
  return out;
}

std::vector<NumericRoot> complex_roots_numeric(const RatPoly& p, double tol) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "complex_roots_numeric");
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tol must be positive");
  std::vector<Complex> c;
  for (const auto& q : p.coeffs()) c.emplace_back(q.get_d(), 0.0);
  AberthOptions opts;
  opts.tol = tol;
  return aberth_roots(c, opts, true);
}

NumericRealCensus numeric_real_census(std::span<const NumericRoot> roots) {
  NumericRealCensus census;
  const std::size_t n = roots.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = roots[i];
    bool isolated = std::isfinite(a.radius);
    bool mirror_clear = true;
    for (std::size_t j = 0; j < n && isolated; ++j) {
      if (j == i) continue;
      const auto& b = roots[j];
      if (std::abs(a.z - b.z) <= a.radius + b.radius) isolated = false;
      if (std::abs(std::conj(a.z) - b.z) <= a.radius + b.radius) mirror_clear = false;
    }
    if (!isolated) {
      census.ambiguous = true;
    } else if (std::abs(a.z.imag()) > a.radius) {
      ++census.non_real;
    } else if (mirror_clear) {
      ++census.real;
    } else {
      census.ambiguous = true;
    }
  }
  return census;
}

}  // namespace polyconj
