#include <doctest.h>

#include <random>

#include "polyconj/error.hpp"
#include "polyconj/meshops.hpp"
#include "polyconj/roots.hpp"
#include "test_support.hpp"

using namespace polyconj;
using namespace polyconj::meshops;

namespace {

const RatPoly X{0, 1};

// Direct expansion of p(x+1) - p(x) through binomials, no Taylor shift.
RatPoly diff_by_binomials(const RatPoly& p) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(p.degree(), 0)), Rational(0));
  for (int n = 1; n <= p.degree(); ++n) {
    Integer c(1);
    for (int k = 0; k < n; ++k) {
      out[static_cast<std::size_t>(k)] += p.coeff(n) * Rational(c);
      c = c * (n - k) / (k + 1);
    }
  }
  return RatPoly(out);
}

}  // namespace

TEST_CASE("difference operators") {
  CHECK(apply_diffop({{0, 1}}, X) == RatPoly{-1, 1});
  CHECK(apply_diffop({{1, -1}}, X * X) == RatPoly{-1, 2});
  RatPoly p{3, -1, 4, 1};
  CHECK(apply_diffop({{1}}, p) == p);
  CHECK(parse_diffop("1,-1/2, 3").a == std::vector<Rational>{1, Rational(-1, 2), 3});
  CHECK_THROWS_AS(parse_diffop("0,0"), Error);
}

TEST_CASE("pochhammer and forward differences") {
  CHECK(pochhammer(1) == X);
  CHECK(pochhammer(3) == RatPoly{0, 2, -3, 1});
  CHECK(mesh(pochhammer(5)).exact());
  CHECK(mesh(pochhammer(5)).lo == 1);
  CHECK(forward_diff(X) == RatPoly::constant(1));
  CHECK(forward_diff(X * X) == RatPoly{1, 2});
  for (int m = 2; m <= 6; ++m) CHECK(forward_diff(pochhammer(m)) == Rational(m) * pochhammer(m - 1));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    RatPoly q = testing::random_int_poly(rng, i % 9);
    CHECK(forward_diff(q) == diff_by_binomials(q));
  }
}

TEST_CASE("bullet product") {
  CHECK(bullet(X, X, 1) == X);
  RatPoly q{1, 2, 3};
  CHECK(bullet(RatPoly::constant(1), q, 2) == forward_diff(q, 2));
  RatPoly b = bullet(pochhammer(2), pochhammer(2), 2);
  CHECK(in_class(b));
  CHECK_THROWS_AS(bullet(pochhammer(3), X, 2), Error);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    int d = 1 + i % 5;
    RatPoly p1 = testing::random_int_poly(rng, d), p2 = testing::random_int_poly(rng, d);
    RatPoly q1 = testing::random_int_poly(rng, d), q2 = testing::random_int_poly(rng, d);
    Rational a(i + 1, 3), c(-2, i + 5);
    CHECK(bullet(a * p1 + c * p2, q1, d) == a * bullet(p1, q1, d) + c * bullet(p2, q1, d));
    CHECK(bullet(p1, a * q1 + c * q2, d) == a * bullet(p1, q1, d) + c * bullet(p1, q2, d));
  }
}

TEST_CASE("diffop commutes with shifts") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    DiffOp t{{Rational(i % 3), Rational(-1, 2), Rational(i)}};
    RatPoly p = testing::random_int_poly(rng, 1 + i % 7);
    Rational c(i - 20, 7);
    CHECK(apply_diffop(t, p.shifted(-c)) == apply_diffop(t, p).shifted(-c));
  }
}

TEST_CASE("class sampling") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    RatPoly p = random_mesh_poly(6, 1, "test", t);
    CHECK(p.degree() <= 6);
    CHECK(in_class(p));
  }
  CHECK(in_class(RatPoly{}));
  CHECK(in_class(RatPoly{5}));
  CHECK_FALSE(in_class(RatPoly{0, 0, 1}));
}

TEST_CASE("conj8 harness: sufficiency sampling") {
  auto shift = check_conj8({{0, 1}}, 5, 200, 1);
  CHECK(shift.hypothesis);
  CHECK(shift.violations.empty());
  auto id = check_conj8({{1}}, 4, 200, 1);
  CHECK(id.hypothesis);
  CHECK(id.violations.empty());
  auto sum = check_conj8({{1, 1}}, 3, 200, 1);
  CHECK(sum.trials == 200);
  if (sum.hypothesis) CHECK(sum.violations.empty());
  // p(x) - 4p(x-1) makes (x)_2 into a poly with a root gap below 1.
  auto bad = check_conj8({{1, -4}}, 3, 100, 1);
  if (!bad.hypothesis) CHECK(!bad.violations.empty());
}

TEST_CASE("conj9 harness: bullet product closure") {
  CHECK(in_class(bullet(X, X, 1)));
  auto rep = check_conj9(300, 3, 2);
  CHECK(rep.trials == 300);
  CHECK(rep.violations.empty());
  auto [p, q] = conj9_sample(3, 2, 7);
  CHECK(conj9_sample(3, 2, 7) == std::make_pair(p, q));
}
