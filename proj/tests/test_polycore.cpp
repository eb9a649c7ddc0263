#include <doctest.h>

#include <cmath>
#include <random>

#include "polyconj/error.hpp"
#include "polyconj/numeric_roots.hpp"
#include "polyconj/roots.hpp"
#include "polyconj/rng.hpp"
#include "test_support.hpp"

using namespace polyconj;

namespace {

RatPoly pochhammer_by_hand(int m) {
  RatPoly p = RatPoly::constant(1);
  for (int j = 0; j < m; ++j) p *= RatPoly{Rational(-j), Rational(1)};
  return p;
}

// Float bisection on a sign change, independent of the Sturm machinery.
double bisect_root(const RatPoly& p, double lo, double hi) {
  double flo = p.eval(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = p.eval(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("parsing and printing") {
  RatPoly p = parse_poly("1 - 3/2*x + x^3");
  CHECK(p == RatPoly{Rational(1), Rational(-3, 2), Rational(0), Rational(1)});
  CHECK(parse_poly(p.to_list_string()) == p);
  CHECK(parse_poly(p.to_string()) == p);
  CHECK(p.to_list_string() == "[1, -3/2, 0, 1]");
  CHECK(parse_poly("[0, 0, 0]").is_zero());
  CHECK(parse_poly("x^2 + x^2") == RatPoly{Rational(0), Rational(0), Rational(2)});
  CHECK_THROWS_AS(parse_poly("x +"), Error);
  CHECK_THROWS_AS(parse_poly("[1, 2/0]"), Error);
}

TEST_CASE("derivative") {
  CHECK(RatPoly{0, 0, 0, 1}.derivative() == RatPoly{0, 0, 3});
  CHECK(RatPoly{1, 0, 1}.derivative(2) == RatPoly{2});
  // term by term: d/dx (x^3 - 3x^2 + 2x) = 3x^2 - 6x + 2
  CHECK(pochhammer_by_hand(3) == RatPoly{0, 2, -3, 1});
  CHECK(pochhammer_by_hand(3).derivative() == RatPoly{2, -6, 3});
  CHECK(RatPoly{5}.derivative().is_zero());
  CHECK(RatPoly{1, 2, 3}.derivative(0) == RatPoly{1, 2, 3});
}

TEST_CASE("shift, reflect, reverse") {
  RatPoly p{1, 2, 3};
  // p(x+1) = 3x^2 + 8x + 6
  CHECK(p.shifted(1) == RatPoly{6, 8, 3});
  CHECK(p.shifted(1).shifted(-1) == p);
  CHECK(p.reflected() == RatPoly{1, -2, 3});
  CHECK(p.reversed() == RatPoly{3, 2, 1});
}

TEST_CASE("division and gcd") {
  RatPoly a = RatPoly::from_roots(std::vector<Rational>{1, 1, -2});
  RatPoly b = a.derivative();
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(gcd(a, b) == RatPoly{-1, 1});
  CHECK_THROWS_AS(divmod(a, RatPoly{}), Error);
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(RatPoly{0, 0, 1}) == RatPoly{0, 1});
  // gcd oracle: (x-1)^2(x+2) / (x-1) = (x-1)(x+2) = x^2 + x - 2
  CHECK(squarefree_part(RatPoly::from_roots(std::vector<Rational>{1, 1, -2})) == RatPoly{-2, 1, 1});
  CHECK(squarefree_part(RatPoly{1, 0, 1}) == RatPoly{1, 0, 1});
  CHECK_THROWS_AS(squarefree_part(RatPoly{}), Error);
}

TEST_CASE("sturm_count") {
  CHECK(sturm_count(RatPoly{-1, 0, 1}, Rational(-2), Rational(2)).count == 2);
  CHECK(sturm_count(RatPoly{1, 0, 1}).count == 0);
  CHECK(sturm_count(RatPoly::from_roots(std::vector<Rational>{1, 1, -2})).count == 2);
  CHECK(count_with_multiplicity(RatPoly::from_roots(std::vector<Rational>{1, 1, -2})) == 3);

  SUBCASE("endpoint roots are reported, not counted") {
    auto c = sturm_count(RatPoly{-1, 0, 1}, Rational(-1), Rational(1));
    CHECK(c.count == 0);
    CHECK(c.lo_is_root);
    CHECK(c.hi_is_root);
    auto d = sturm_count(RatPoly{-1, 0, 1}, Rational(-1), Rational(2));
    CHECK(d.count == 1);
    CHECK(d.lo_is_root);
    CHECK_FALSE(d.hi_is_root);
  }
  SUBCASE("half lines") {
    RatPoly p = RatPoly::from_roots(std::vector<Rational>{-3, 1, 2});
    CHECK(sturm_count(p, Rational(0), std::nullopt).count == 2);
    CHECK(sturm_count(p, std::nullopt, Rational(0)).count == 1);
  }
  CHECK_THROWS_AS(sturm_count(RatPoly{}), Error);
}

TEST_CASE("isolate_roots") {
  SUBCASE("x^2 - 2 refines to 1e-12 around the bisection oracle") {
    RatPoly p{-2, 0, 1};
    auto rep = isolate_roots(p);
    REQUIRE(rep.isolating.size() == 2);
    RootIsolator iso(p);
    const Rational width(Integer(1), Integer("1000000000000"));
    const double expected[2] = {bisect_root(p, -2.0, -1.0), bisect_root(p, 1.0, 2.0)};
    for (std::size_t i = 0; i < 2; ++i) {
      RatInterval iv = iso.intervals()[i];
      iso.refine(iv, width);
      CHECK(iv.width() <= width);
      CHECK(iv.lo.get_d() <= expected[i] + 1e-15);
      CHECK(iv.hi.get_d() >= expected[i] - 1e-15);
    }
    CHECK(rep.all_real_simple);
  }
  SUBCASE("no real roots") {
    auto rep = isolate_roots(RatPoly{1, 1, 1});
    CHECK(rep.isolating.empty());
    CHECK_FALSE(rep.all_real_simple);
  }
  SUBCASE("x(x-1)(x-2) ordered") {
    auto rep = isolate_roots(RatPoly::from_roots(std::vector<Rational>{0, 1, 2}));
    REQUIRE(rep.isolating.size() == 3);
    for (int i = 0; i < 3; ++i) {
      CHECK(rep.isolating[i].lo <= Rational(i));
      CHECK(rep.isolating[i].hi >= Rational(i));
    }
    CHECK(certainly_before(rep.isolating[0], rep.isolating[1]));
    CHECK(certainly_before(rep.isolating[1], rep.isolating[2]));
  }
  SUBCASE("multiple roots") {
    auto rep = isolate_roots(RatPoly::from_roots(std::vector<Rational>{1, 1, -2}));
    CHECK(rep.distinct_real == 2);
    CHECK(rep.with_multiplicity == 3);
    CHECK_FALSE(rep.all_real_simple);
  }
}

TEST_CASE("isolating intervals are disjoint and bracket a root") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    auto rng = trial_rng(7, "isolate-prop", t);
    int deg = 1 + static_cast<int>(t % 8);
    RatPoly p = testing::random_int_poly(rng, deg);
    RootIsolator iso(p);
    const auto& ivs = iso.intervals();
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(certainly_before(ivs[i], ivs[i + 1]));
    for (const auto& iv : ivs) {
      if (iv.is_point()) {
        CHECK(p.sign_at(iv.lo) == 0);
      } else {
        CHECK(iso.squarefree().sign_at(iv.lo) * iso.squarefree().sign_at(iv.hi) < 0);
      }
    }
    RatPoly s = squarefree_part(p);
    CHECK(gcd(s, s.derivative()).degree() == 0);
  }
}

TEST_CASE("mesh") {
  CHECK(mesh(RatPoly::from_roots(std::vector<Rational>{0, 1, 2})).exact());
  CHECK(mesh(RatPoly::from_roots(std::vector<Rational>{0, 1, 2})).lo == 1);
  CHECK(mesh(RatPoly::from_roots(std::vector<Rational>{0, 3})).lo == 3);
  RatPoly half = RatPoly::from_roots(std::vector<Rational>{0, 1, Rational(3, 2)});
  CHECK(mesh(half).lo == Rational(1, 2));
  CHECK_FALSE(mesh_at_least(half, 1));
  CHECK(mesh(RatPoly{1, 1}).infinite);
  CHECK_THROWS_AS(mesh(RatPoly{1, 0, 1}), Error);
  CHECK_THROWS_AS(mesh(RatPoly{0, 0, 1}), Error);

  SUBCASE("Pochhammer polynomials have mesh exactly one") {
    for (int m = 2; m <= 10; ++m) {
      RatPoly p = pochhammer_by_hand(m);
      CHECK(mesh_at_least(p, 1));
      CHECK_FALSE(mesh_at_least(p, Rational(1000000001, 1000000000)));
    }
  }
  SUBCASE("irrational roots exactly one apart") {
    // roots sqrt2, sqrt2 + 1, -sqrt2, -sqrt2 + 1
    RatPoly q{-2, 0, 1};
    RatPoly p = q * q.shifted(-1);
    CHECK(mesh_at_least(p, 1));
    CHECK_FALSE(mesh_at_least(p, Rational(1000001, 1000000)));
    auto enc = mesh(p);
    CHECK(enc.lo <= 1);
    CHECK(enc.hi >= 1);
  }
}

TEST_CASE("interlace_check") {
  CHECK(interlace_check(RatPoly{-1, 0, 1}, RatPoly{0, 1}));
  CHECK_FALSE(interlace_check(RatPoly{-1, 0, 1}, RatPoly{-5, 1}));
  // roots 1/2, 3/2 sit between 0, 1, 2
  CHECK(interlace_check(pochhammer_by_hand(3), RatPoly{Rational(3, 4), -2, 1}));
  CHECK_FALSE(interlace_check(pochhammer_by_hand(3), RatPoly{0, -1, 1}));  // shares roots 0 and 1
  CHECK_THROWS_AS(interlace_check(RatPoly{-1, 0, 1}, RatPoly{1, 0, 1}), Error);
  CHECK_THROWS_AS(interlace_check(RatPoly{1, 0, 1}, RatPoly{0, 1}), Error);

  SUBCASE("Rolle: p interlaces with p'") {
    for (std::uint64_t t = 0; t < 100; ++t) {
      auto rng = trial_rng(11, "interlace-rolle", t);
      RatPoly p = testing::random_real_rooted(rng, 2 + static_cast<int>(t % 7));
      CHECK(interlace_check(p, p.derivative()));
    }
  }
}

TEST_CASE("is_strictly_positive") {
  CHECK(is_strictly_positive(RatPoly{2, 0, 2}));
  CHECK_FALSE(is_strictly_positive(RatPoly{-4}));
  CHECK_FALSE(is_strictly_positive(RatPoly{0, 0, 1}));
  CHECK_THROWS_AS(is_strictly_positive(RatPoly{}), Error);
}

TEST_CASE("complex_roots_numeric") {
  auto r = complex_roots_numeric(RatPoly{1, 0, 1}, 1e-14);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0].z - Complex(0, -1)) < 1e-12);
  CHECK(std::abs(r[1].z - Complex(0, 1)) < 1e-12);
  auto s = complex_roots_numeric(RatPoly{-2, 0, 1}, 1e-14);
  CHECK(std::abs(s[0].z.real() + std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(s[1].z.real() - std::sqrt(2.0)) < 1e-12);
  CHECK(s[0].z.imag() == 0.0);

  SUBCASE("degree 8 residuals") {
    auto rng = trial_rng(3, "deg8", 0);
    RatPoly p = testing::random_int_poly(rng, 8);
    auto roots = complex_roots_numeric(p, 1e-14);
    CHECK(roots.size() == 8);
    for (const auto& x : roots) CHECK(x.residual < 1e-8);
  }
  SUBCASE("conjugate pairing for real input") {
    auto rng = trial_rng(3, "pairing", 0);
    RatPoly p = testing::random_int_poly(rng, 7);
    auto roots = complex_roots_numeric(p, 1e-14);
    for (const auto& x : roots) {
      if (x.z.imag() == 0.0) continue;
      bool found = false;
      for (const auto& y : roots) found = found || y.z == std::conj(x.z);
      CHECK(found);
    }
  }
  CHECK_THROWS_AS(complex_roots_numeric(RatPoly{}, 1e-14), Error);
}

TEST_CASE("sturm_count agrees with the numeric census") {
  int compared = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    auto rng = trial_rng(2024, "sturm-vs-numeric", t);
    int deg = 1 + static_cast<int>(t % 8);
    RatPoly p = testing::random_int_poly(rng, deg);
    auto census = numeric_real_census(complex_roots_numeric(p, 1e-14));
    if (census.ambiguous) continue;
    ++compared;
    CHECK(census.real == sturm_count(p).count);
  }
  CHECK(compared > 900);
}
