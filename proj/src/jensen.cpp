#include "polyconj/jensen.hpp"

#include <algorithm>
#include <random>

#include "polyconj/error.hpp"
#include "polyconj/rng.hpp"
#include "polyconj/roots.hpp"

namespace polyconj::jensen {

namespace {

Integer factorial(int n) {
  Integer f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

void require_degree(const RatPoly& p, int min_degree, const char* what) {
  if (p.degree() < min_degree) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs degree >= " + std::to_string(min_degree));
  }
}

/// Bivariate polynomial, c[j][m] is the coefficient of y^j x^m.
using Bi = std::vector<std::vector<Rational>>;

void bi_add(Bi& acc, std::size_t j, std::size_t m, const Rational& v) {
  if (acc.size() <= j) acc.resize(j + 1);
  if (acc[j].size() <= m) acc[j].resize(m + 1, Rational(0));
  acc[j][m] += v;
}

Bi bi_square(const Bi& a) {
  Bi out;
  for (std::size_t j1 = 0; j1 < a.size(); ++j1)
    for (std::size_t m1 = 0; m1 < a[j1].size(); ++m1) {
      if (sgn(a[j1][m1]) == 0) continue;
      for (std::size_t j2 = 0; j2 < a.size(); ++j2)
        for (std::size_t m2 = 0; m2 < a[j2].size(); ++m2) {
          if (sgn(a[j2][m2]) == 0) continue;
          bi_add(out, j1 + j2, m1 + m2, a[j1][m1] * a[j2][m2]);
        }
    }
  return out;
}

long count_real(const RatPoly& q, Counting c) {
  if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "real-zero count of the zero polynomial");
  return c.real_with_multiplicity ? count_with_multiplicity(q) : sturm_count(q).count;
}

long count_nonreal(const RatPoly& p) { return p.degree() - count_with_multiplicity(p); }

void require_simple_real(const RatPoly& p) {
  if (!real_zeros_simple(p)) throw Error(ErrorKind::RealZerosNotSimple, p.to_string());
}

}  // namespace

bool real_zeros_simple(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "real_zeros_simple");
  RatPoly g = gcd(p, p.derivative());
  return g.degree() <= 0 || sturm_count(g).count == 0;
}

std::vector<RatPoly> phi_expand(const RatPoly& p) {
  require_degree(p, 1, "phi_expand");
  const int k = p.degree();
  // p(x+iy) = A + iB with (x+iy)^n = sum_m C(n,m) x^(n-m) i^m y^m.
  Bi re, im;
  for (int n = 0; n <= k; ++n) {
    if (sgn(p.coeff(n)) == 0) continue;
    for (int m = 0; m <= n; ++m) {
      Rational v = p.coeff(n) * Rational(binomial(n, m));
      if (m % 4 >= 2) v = -v;
      bi_add(m % 2 == 0 ? re : im, static_cast<std::size_t>(m), static_cast<std::size_t>(n - m), v);
    }
  }
  Bi phi = bi_square(re);
  Bi b2 = bi_square(im);
  for (std::size_t j = 0; j < b2.size(); ++j)
    for (std::size_t m = 0; m < b2[j].size(); ++m) bi_add(phi, j, m, b2[j][m]);
  std::vector<RatPoly> out;
  for (int i = 0; i <= k; ++i) {
    auto j = static_cast<std::size_t>(2 * i);
    RatPoly coef = j < phi.size() ? RatPoly(phi[j]) : RatPoly{};
    out.push_back(Rational(factorial(2 * i)) * coef);
  }
  return out;
}

RatPoly jensen_literal(const RatPoly& p, int i) {
  if (i < 0 || i > p.degree()) throw Error(ErrorKind::IndexOutOfRange, "jensen index " + std::to_string(i));
  RatPoly out;
  for (int j = 0; j <= 2 * i; ++j) {
    Rational c(binomial(2 * i, j));
    if ((i + j) % 2) c = -c;
    out += c * (p.derivative(j) * p.derivative(2 * i - j));
  }
  return out;
}

RatPoly jensen_truncated(const RatPoly& p, int i) {
  if (i < 0 || i > p.degree()) throw Error(ErrorKind::IndexOutOfRange, "jensen index " + std::to_string(i));
  RatPoly out;
  for (int j = 0; j <= i; ++j) {
    Rational c(binomial(2 * i, j));
    if ((i + j) % 2) c = -c;
    out += c * (p.derivative(j) * p.derivative(2 * i - j));
  }
  return out;
}

SumFormulaCheck sum_formula_check(const RatPoly& p, int i) {
  if (i < 0 || i > p.degree()) throw Error(ErrorKind::IndexOutOfRange, "jensen index " + std::to_string(i));
  auto roots = rational_roots(p);
  const int k = static_cast<int>(roots.size());
  const Rational lead2 = p.leading() * p.leading();

  // p^2 / prod_{l in S} (x - x_l)^2 = lead^2 prod_{l not in S} (x - x_l)^2
  auto subset_sum = [&](int size) {
    RatPoly sum;
    if (size > k) return sum;
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    std::fill(pick.end() - size, pick.end(), 1);
    do {
      RatPoly term = RatPoly::constant(lead2);
      for (int l = 0; l < k; ++l) {
        if (!pick[static_cast<std::size_t>(l)]) {
          RatPoly f = RatPoly::linear_factor(roots[static_cast<std::size_t>(l)]);
          term *= f * f;
        }
      }
      sum += term;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return Rational(factorial(2 * i)) * sum;
  };

  const RatPoly pi = phi_expand(p)[static_cast<std::size_t>(i)];
  auto factor = [&](const RatPoly& q) -> std::optional<Rational> {
    if (q.is_zero() || q.degree() != pi.degree()) return std::nullopt;
    Rational f = pi.leading() / q.leading();
    if (f * q == pi) return f;
    return std::nullopt;
  };

  SumFormulaCheck out;
  out.subset_sum = subset_sum(i);
  out.tuple_sum = subset_sum(2 * i);
  out.subset_factor = factor(out.subset_sum);
  out.tuple_factor = factor(out.tuple_sum);
  return out;
}

RatPoly g_poly(const RatPoly& p, int i) {
  const int k = p.degree();
  if (i < 1 || i > k - 1) throw Error(ErrorKind::IndexOutOfRange, "G index " + std::to_string(i) + " for degree " +
                                                                      std::to_string(k));
  RatPoly d = p.derivative(i);
  return Rational(k - i) * (d * d) - Rational(k - i + 1) * (p.derivative(i - 1) * p.derivative(i + 1));
}

CriterionRecord criterion1(const RatPoly& p) {
  require_degree(p, 2, "criterion1");
  CriterionRecord r;
  auto family = phi_expand(p);
  r.all_positive = true;
  for (int i = 1; i <= p.degree() - 1 && r.all_positive; ++i) {
    r.all_positive = is_strictly_positive(family[static_cast<std::size_t>(i)]);
  }
  r.real_simple = isolate_roots(p).all_real_simple;
  return r;
}

CriterionRecord criterion2(const RatPoly& p) {
  require_degree(p, 2, "criterion2");
  CriterionRecord r;
  r.all_positive = true;
  for (int i = 1; i <= p.degree() - 1 && r.all_positive; ++i) {
    RatPoly g = g_poly(p, i);
    r.all_positive = !g.is_zero() && is_strictly_positive(g);
  }
  r.real_simple = isolate_roots(p).all_real_simple;
  return r;
}

InequalityRecord hawaiian_check(const RatPoly& p, Counting c) {
  require_degree(p, 1, "hawaiian_check");
  require_simple_real(p);
  RatPoly d = p.derivative();
  RatPoly q = d * d - p * p.derivative(2);
  InequalityRecord r;
  r.lhs = count_real(q, c);
  r.rhs = count_nonreal(p);
  r.holds = r.lhs <= r.rhs;
  r.detail = "#r[(p')^2-pp'']=" + std::to_string(r.lhs) + " #nr p=" + std::to_string(r.rhs);
  return r;
}

InequalityRecord conjweight_check(const RatPoly& p, Counting c) {
  require_degree(p, 2, "conjweight_check");
  require_simple_real(p);
  InequalityRecord r;
  r.lhs = count_real(g_poly(p, 1), c);
  r.rhs = count_nonreal(p);
  r.holds = r.lhs <= r.rhs;
  r.detail = "#r G1=" + std::to_string(r.lhs) + " #nr p=" + std::to_string(r.rhs);
  return r;
}

InequalityRecord conjwplus_check(const RatPoly& p, Counting c) {
  require_degree(p, 2, "conjwplus_check");
  if (p.degree() % 2) throw Error(ErrorKind::OddDegree, "conjecture applies to even degree only");
  InequalityRecord r;
  long g = count_real(g_poly(p, 1), c);
  long pr = count_real(p, c);
  r.lhs = g + pr;
  r.rhs = 0;
  r.holds = r.lhs > 0;
  r.detail = "#r G1=" + std::to_string(g) + " #r p=" + std::to_string(pr) + " G1=" + g_poly(p, 1).to_string();
  return r;
}

InequalityRecord conj2_check(const RatPoly& p, Counting c) {
  require_degree(p, 1, "conj2_check");
  const int k = p.degree();
  auto family = phi_expand(p);
  InequalityRecord r;
  for (int i = 1; i <= k - 1; ++i) {
    const RatPoly& pi = family[static_cast<std::size_t>(i)];
    InequalityRecord row;
    row.lhs = count_real(pi, c);
    row.rhs = std::min(pi.degree(), k);
    row.holds = row.lhs <= row.rhs;
    row.detail = "i=" + std::to_string(i);
    r.holds = r.holds && row.holds;
    r.detail += (r.detail.empty() ? "" : " ") + row.detail + ":" + std::to_string(row.lhs) + "<=" +
                std::to_string(row.rhs);
    r.rows.push_back(row);
  }
  return r;
}

InequalityRecord corollary19_check(const RatPoly& p, Counting c) {
  require_degree(p, 2, "corollary19_check");
  require_simple_real(p);
  const long nr = count_nonreal(p);
  InequalityRecord r;
  for (int i = 1; i <= p.degree() - 1; ++i) {
    RatPoly g = g_poly(p, i);
    InequalityRecord row;
    row.detail = "i=" + std::to_string(i);
    if (g.is_zero()) {
      // G_i vanishes identically exactly when p^(i-1) is a pure power; the
      // count is undefined and the row is skipped.
      row.detail += ":G=0";
    } else {
      row.lhs = count_real(g, c);
      row.rhs = std::min<long>(g.degree(), nr);
      row.holds = row.lhs <= row.rhs;
      row.detail += ":" + std::to_string(row.lhs) + "<=" + std::to_string(row.rhs);
    }
    r.holds = r.holds && row.holds;
    r.detail += (r.detail.empty() ? "" : " ") + row.detail;
    r.rows.push_back(row);
  }
  return r;
}

RatPoly random_corpus_poly(int min_degree, int max_degree, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_rng(seed, "jensen", trial);
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  const int k = deg(rng);
  for (int attempt = 0;; ++attempt) {
    RatPoly p;
    if (trial % 2 == 0) {
      std::uniform_int_distribution<int> nreal(0, k);
      int r = nreal(rng);
      if ((k - r) % 2) ++r;
      std::uniform_int_distribution<int> num(-30, 30), den(1, 5), lead(-3, 3);
      std::vector<Rational> roots;
      while (static_cast<int>(roots.size()) < r) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        if (std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
      p = RatPoly::from_roots(roots);
      for (int j = 0; j < (k - r) / 2; ++j) {
        // (x - a)^2 + b^2 with b != 0
        std::uniform_int_distribution<int> imag(1, 30);
        Rational a(num(rng), den(rng)), b(imag(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        p *= RatPoly{a * a + b * b, -2 * a, Rational(1)};
      }
      int l = lead(rng);
      p *= Rational(l == 0 ? 1 : l);
    } else {
      std::uniform_int_distribution<int> coeff(-10, 10);
      std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
      for (auto& x : c) x = coeff(rng);
      while (sgn(c.back()) == 0) c.back() = coeff(rng);
      p = RatPoly(std::move(c));
    }
    if (p.degree() == k && real_zeros_simple(p)) return p;
    if (attempt > 1000) throw std::logic_error("random_corpus_poly failed to sample");
  }
}

}  // namespace polyconj::jensen
