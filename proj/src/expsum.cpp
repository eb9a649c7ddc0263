#include "polyconj/expsum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "polyconj/error.hpp"
#include "polyconj/numeric_roots.hpp"
#include "polyconj/parallel.hpp"
#include "polyconj/rng.hpp"

namespace polyconj::expsum {

Complex ExpSum::eval_complex(double x) const {
  Complex s = 0;
  for (std::size_t j = 0; j < lambdas.size(); ++j) s += coeffs[j] * std::exp(lambdas[j] * x);
  return s;
}

double ExpSum::eval(double x) const { return eval_complex(x).real(); }

double ExpSum::derivative(double x) const {
  Complex s = 0;
  for (std::size_t j = 0; j < lambdas.size(); ++j) s += coeffs[j] * lambdas[j] * std::exp(lambdas[j] * x);
  return s.real();
}

double ExpSum::magnitude(double x) const {
  double m = 0;
  for (std::size_t j = 0; j < lambdas.size(); ++j) m += std::abs(coeffs[j]) * std::exp(lambdas[j].real() * x);
  return m;
}

namespace {

bool lex_less(const Complex& a, const Complex& b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

std::vector<NumericRoot> numeric_char_roots(std::span<const Complex> a) {
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "need k >= 1");
  std::vector<Complex> coeffs(a.rbegin(), a.rend());
  coeffs.push_back(1.0);
  bool real = std::all_of(a.begin(), a.end(), [](const Complex& z) { return z.imag() == 0.0; });
  AberthOptions o;
  o.pair_conjugates = real;
  auto roots = aberth_roots(coeffs, o, real);
  std::sort(roots.begin(), roots.end(), [](const NumericRoot& x, const NumericRoot& y) { return lex_less(x.z, y.z); });
  return roots;
}

}  // namespace

std::vector<Complex> char_roots(std::span<const Complex> a) {
  std::vector<Complex> out;
  for (const auto& r : numeric_char_roots(a)) out.push_back(r.z);
  return out;
}

std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, double tol) {
  double scale = 1;
  for (const auto& z : roots) scale = std::max(scale, 1 + std::abs(z));
  std::vector<RootCluster> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    RootCluster c{roots[i], 1};
    Complex sum = roots[i];
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) <= tol * scale) {
        used[j] = true;
        ++c.multiplicity;
        sum += roots[j];
      }
    }
    c.z = sum / static_cast<double>(c.multiplicity);
    out.push_back(c);
  }
  return out;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::Indeterminate:
      return "INDETERMINATE";
  }
  return "?";
}

namespace {

/// Roots whose uncertainty disks overlap are one (multiple) root; otherwise
/// real parts equal up to the uncertainty mean the pair fails.
Tri omega_with_radii(std::span<const Complex> z, std::span<const double> radius, double tol) {
  double scale = 1;
  for (const auto& w : z) scale = std::max(scale, std::abs(w));
  Tri result = Tri::True;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      double u = std::max(radius[i] + radius[j], 1e-13 * scale);
      if (std::abs(z[i] - z[j]) <= u) continue;
      double gap = std::abs(z[i].real() - z[j].real());
      if (gap <= u) return Tri::False;
      if (gap <= tol) result = Tri::Indeterminate;
    }
  }
  return result;
}

}  // namespace

Tri in_omega_roots(std::span<const Complex> roots, double tol) {
  std::vector<double> radius(roots.size(), 0.0);
  return omega_with_radii(roots, radius, tol);
}

Tri in_omega(std::span<const Complex> a, double tol) {
  auto roots = numeric_char_roots(a);
  std::vector<Complex> z;
  std::vector<double> radius;
  for (const auto& r : roots) {
    z.push_back(r.z);
    radius.push_back(r.radius);
  }
  return omega_with_radii(z, radius, tol);
}

namespace {

constexpr double kSymmetryTol = 1e-9;

/// Conjugate closure of the support; returns false when some term lacks its
/// mirror image.
bool conjugate_symmetric(const std::vector<Complex>& lambdas, const std::vector<Complex>& coeffs) {
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    if (coeffs[j] == 0.0) continue;
    double tl = kSymmetryTol * (1 + std::abs(lambdas[j]));
    double tc = kSymmetryTol * (1 + std::abs(coeffs[j]));
    bool found = false;
    for (std::size_t m = 0; m < lambdas.size() && !found; ++m) {
      found = std::abs(lambdas[m] - std::conj(lambdas[j])) <= tl && std::abs(coeffs[m] - std::conj(coeffs[j])) <= tc;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

ExpSum solution(std::span<const Complex> a, std::span<const Complex> c) {
  auto roots = char_roots(a);
  if (c.size() != roots.size()) throw Error(ErrorKind::InvalidArgument, "need one coefficient per characteristic root");
  for (const auto& cl : cluster_roots(roots)) {
    if (cl.multiplicity > 1) throw Error(ErrorKind::NotSimple, "clustered characteristic roots");
  }
  ExpSum s;
  s.lambdas = roots;
  s.coeffs.assign(c.begin(), c.end());
  if (!conjugate_symmetric(s.lambdas, s.coeffs)) throw Error(ErrorKind::NotReal, "coefficients are not conjugate-symmetric");
  // Real exponents carry real coefficients exactly.
  for (std::size_t j = 0; j < s.lambdas.size(); ++j) {
    if (std::abs(s.lambdas[j].imag()) <= kSymmetryTol * (1 + std::abs(s.lambdas[j]))) {
      s.lambdas[j].imag(0.0);
      s.coeffs[j].imag(0.0);
    }
  }
  s.realness = true;
  return s;
}

namespace {

struct Term {
  Complex lambda, c;
  double r = 0, logc = 0;
};

/// y / M and its derivative, evaluated with a log-sum shift so large windows
/// do not overflow.
struct Normalized {
  const std::vector<Term>& terms;

  std::pair<double, double> operator()(double x) const {
    double shift = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) shift = std::max(shift, t.r * x + t.logc);
    Complex y = 0, dy = 0;
    double m = 0, dm = 0;
    for (const auto& t : terms) {
      Complex e = std::exp(t.lambda * x + Complex(t.logc - shift, 0.0)) * (t.c / std::abs(t.c));
      y += e;
      dy += t.lambda * e;
      double w = std::exp(t.r * x + t.logc - shift);
      m += w;
      dm += t.r * w;
    }
    double h = y.real() / m;
    return {h, dy.real() / m - h * dm / m};
  }
};

/// Smallest bracketed x where sum_j w_j e^{d_j x} <= 1/2 with all d_j < 0.
double dominance_point(const std::vector<std::pair<double, double>>& wd) {
  auto g = [&](double x) {
    double s = 0;
    for (auto [w, d] : wd) s += w * std::exp(d * x);
    return s;
  };
  if (wd.empty()) return -std::numeric_limits<double>::infinity();
  double hi = 1;
  while (g(hi) > 0.5) hi *= 2;
  double lo = hi > 1 ? hi / 2 : -1;
  if (hi == 1) {
    while (g(lo) <= 0.5 && lo > -1e6) lo *= 2;
    if (g(lo) <= 0.5) return lo;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12 * (1 + std::abs(hi)); ++it) {
    double m = 0.5 * (lo + hi);
    (g(m) > 0.5 ? lo : hi) = m;
  }
  return hi;
}

}  // namespace

ZeroCount count_real_zeros(const ExpSum& s, const CountOptions& opts) {
  if (!s.realness || s.lambdas.size() != s.coeffs.size() || !conjugate_symmetric(s.lambdas, s.coeffs)) {
    throw Error(ErrorKind::NotReal, "count_real_zeros needs a real-valued exponential sum");
  }
  std::vector<Term> terms;
  for (std::size_t j = 0; j < s.lambdas.size(); ++j) {
    if (s.coeffs[j] == 0.0) continue;
    terms.push_back({s.lambdas[j], s.coeffs[j], s.lambdas[j].real(), std::log(std::abs(s.coeffs[j]))});
  }
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "trivial solution");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.r < b.r; });
  double lam = 0;
  for (const auto& t : terms) lam = std::max(lam, std::abs(t.lambda));
  for (std::size_t j = 1; j < terms.size(); ++j) {
    if (terms[j].r - terms[j - 1].r <= 1e-12 * (1 + lam)) {
      throw Error(ErrorKind::EqualRealParts, "two exponents share a real part");
    }
  }
  ZeroCount out;
  out.certified_outside = true;
  if (terms.size() == 1) return out;

  // Past T+ the top term beats twice the rest, before T- the bottom one does.
  const Term& top = terms.back();
  const Term& bottom = terms.front();
  std::vector<std::pair<double, double>> up, down;
  for (std::size_t j = 0; j + 1 < terms.size(); ++j) {
    up.push_back({std::abs(terms[j].c) / std::abs(top.c), terms[j].r - top.r});
  }
  for (std::size_t j = 1; j < terms.size(); ++j) {
    down.push_back({std::abs(terms[j].c) / std::abs(bottom.c), bottom.r - terms[j].r});
  }
  double t_plus = dominance_point(up);
  double t_minus = -dominance_point(down);
  out.T = std::max({t_plus, -t_minus, 1e-6});

  Normalized h{terms};
  const double lipschitz = 2 * lam;
  const double lo = -out.T, hi = out.T;
  auto n = static_cast<std::size_t>(std::ceil((hi - lo) * 4 * lam));
  n = std::clamp<std::size_t>(n, 16, opts.max_samples);

  auto record_zero = [&](double a, double b, double ha) {
    for (int it = 0; it < 200 && b - a > 1e-15 * (1 + std::abs(a)); ++it) {
      double m = 0.5 * (a + b);
      double hm = h(m).first;
      if (hm == 0) {
        a = b = m;
        break;
      }
      if ((hm > 0) == (ha > 0)) {
        a = m;
      } else {
        b = m;
      }
    }
    double z = 0.5 * (a + b);
    out.zeros.push_back(z);
    if (std::abs(h(z).second) < 1e-10 * lam) out.indeterminate = true;
  };

  auto sample_zero = [&](double x) {
    out.zeros.push_back(x);
    if (std::abs(h(x).second) < 1e-10 * lam) out.indeterminate = true;
  };

  // Intervals with no sign change are cleared when the Lipschitz bound of
  // y / M rules out a zero; otherwise they are halved.
  auto scan = [&](auto&& self, double a, double b, double ha, double hb, int depth) -> void {
    if (ha == 0) return;  // counted by the caller
    if (hb != 0 && (ha > 0) != (hb > 0)) {
      record_zero(a, b, ha);
      return;
    }
    if (hb == 0) return;
    if (std::abs(ha) + std::abs(hb) > lipschitz * (b - a)) return;
    if (depth >= opts.max_depth) {
      out.indeterminate = true;
      return;
    }
    double m = 0.5 * (a + b);
    double hm = h(m).first;
    if (hm == 0) sample_zero(m);
    self(self, a, m, ha, hm, depth + 1);
    self(self, m, b, hm, hb, depth + 1);
  };

  double prev_x = lo, prev_h = h(lo).first;
  if (prev_h == 0) sample_zero(lo);
  for (std::size_t i = 1; i <= n; ++i) {
    double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    double hx = h(x).first;
    if (hx == 0) sample_zero(x);
    scan(scan, prev_x, x, prev_h, hx, 0);
    prev_x = x;
    prev_h = hx;
  }
  std::sort(out.zeros.begin(), out.zeros.end());
  out.count = static_cast<int>(out.zeros.size());
  return out;
}

namespace {

std::vector<Complex> poly_from_roots(const std::vector<double>& roots) {
  // prod (t - r_j) = t^k + a_1 t^{k-1} + ... + a_k
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= r * c[i];
    }
    c = next;
  }
  return std::vector<Complex>(c.begin() + 1, c.end());
}

}  // namespace

std::optional<Witness> search_trial(int k, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_rng(seed, "expsum", trial);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Witness w;
  w.trial = trial;
  if (trial % 2 == 0) {
    w.law = "random-a";
    for (int j = 0; j < k; ++j) w.a.push_back(1.5 * gauss(rng));
    if (in_omega(w.a) != Tri::True) return std::nullopt;
    for (int j = 0; j < k; ++j) w.c.push_back(gauss(rng));
  } else {
    // Real exponents with coefficients chosen so y vanishes at k - 1 random points.
    w.law = "forced-zeros";
    std::uniform_real_distribution<double> ul(-3, 3), uz(-2, 2);
    std::vector<double> lam;
    for (int j = 0; j < k; ++j) lam.push_back(ul(rng));
    w.a = poly_from_roots(lam);
    if (in_omega(w.a) != Tri::True) return std::nullopt;
    auto roots = char_roots(w.a);
    Eigen::MatrixXd m(k, k);
    m.setZero();
    for (int i = 0; i + 1 < k; ++i) {
      double z = uz(rng);
      for (int j = 0; j < k; ++j) m(i, j) = std::exp(roots[static_cast<std::size_t>(j)].real() * z);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    Eigen::VectorXd c = svd.matrixV().col(k - 1);
    for (int j = 0; j < k; ++j) w.c.push_back(c[j]);
  }
  ExpSum s;
  try {
    s = solution(w.a, w.c);
  } catch (const Error&) {
    return std::nullopt;
  }
  w.lambdas = s.lambdas;
  auto count = count_real_zeros(s);
  w.zeros = count.zeros;
  w.indeterminate = count.indeterminate;
  return w;
}

SearchRecord max_zero_search(int k, int trials, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "max_zero_search needs k >= 2");
  SearchRecord rec;
  rec.k = k;
  rec.trials = std::max(trials, 0);
  rec.law =
      "even trials: a_j ~ N(0, 1.5^2) real, c_j ~ N(0, 1); odd trials: real exponents ~ U[-3, 3], "
      "c spanning the kernel of y(z_i) = 0 at k-1 points z_i ~ U[-2, 2]; rejection outside Omega_k";
  std::vector<std::optional<Witness>> slots(static_cast<std::size_t>(rec.trials));
  parallel_for(slots.size(), [&](std::size_t i) { slots[i] = search_trial(k, seed, i); });
  rec.histogram.assign(static_cast<std::size_t>(k) + 1, 0);
  for (auto& w : slots) {
    if (!w) {
      ++rec.rejected;
      continue;
    }
    ++rec.accepted;
    if (w->indeterminate) ++rec.indeterminate;
    auto m = static_cast<std::size_t>(w->zeros.size());
    if (m >= rec.histogram.size()) rec.histogram.resize(m + 1, 0);
    ++rec.histogram[m];
    if (!rec.witness || static_cast<int>(m) > rec.max_count) {
      rec.max_count = static_cast<int>(m);
      rec.witness = *w;
    }
  }
  return rec;
}

}  // namespace polyconj::expsum
