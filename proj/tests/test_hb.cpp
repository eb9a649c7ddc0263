#include <doctest.h>

#include <cmath>
#include <random>

#include "polyconj/error.hpp"
#include "polyconj/hb.hpp"
#include "test_support.hpp"

using namespace polyconj;
using namespace polyconj::hb;

TEST_CASE("hermite-biehler examples") {
  auto a = hb_verify(RatPoly{-1, 0, 1}, RatPoly{0, -1});
  CHECK(a.hypotheses_hold);
  CHECK(a.all_roots_upper());
  CHECK(a.min_imag == doctest::Approx(0.5).epsilon(1e-12));
  // x^2 - 1 - ix = 0 has roots (±sqrt(3) + i)/2
  for (auto& r : a.roots) CHECK(std::abs(std::abs(r.z.real()) - std::sqrt(3.0) / 2) < 1e-12);

  auto b = hb_verify(RatPoly{-1, 0, 1}, RatPoly{0, 1});
  CHECK_FALSE(b.hypotheses_hold);
  CHECK(b.placement == Placement::NotUpper);
  CHECK(b.min_imag == doctest::Approx(-0.5).epsilon(1e-12));

  CHECK_FALSE(hb_verify(RatPoly{1, 0, 1}, RatPoly{0, -1}).hypotheses_hold);
  CHECK_THROWS_AS(hb_verify(RatPoly{1, 0, 1}, RatPoly{0, 0, -1}), Error);
  CHECK(hb_verify(RatPoly{0, 1}, RatPoly{-1}).all_roots_upper());
}

TEST_CASE("wronskian") {
  CHECK(wronskian(RatPoly{-1, 0, 1}, RatPoly{0, -1}) == RatPoly{1, 0, 1});
  CHECK(wronskian(RatPoly{0, 1}, RatPoly{1}) == RatPoly{-1});
  RatPoly p{3, 1, 4, 1, 5};
  CHECK(wronskian(p, p).is_zero());
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    RatPoly f = testing::random_int_poly(rng, t % 7), g = testing::random_int_poly(rng, t % 5);
    RatPoly h = testing::random_int_poly(rng, t % 6);
    CHECK(wronskian(f, g) == -wronskian(g, f));
    CHECK(wronskian(f + h, g) == wronskian(f, g) + wronskian(h, g));
    CHECK(wronskian(Rational(3) * f, g) == Rational(3) * wronskian(f, g));
  }
}

TEST_CASE("theorem regression on interlacing pairs") {
  int upper = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    int k = 2 + static_cast<int>(t % 7);
    auto [p, q] = random_interlacing_pair(k, 5, t);
    auto r = hb_verify(p, q);
    REQUIRE(r.hypotheses_hold);
    CHECK(r.placement != Placement::NotUpper);
    if (r.all_roots_upper()) {
      ++upper;
      CHECK(r.min_imag > 0);
    }
  }
  CHECK(upper >= 990);
}

TEST_CASE("fisk corpus") {
  auto rows = fisk_scan(4, 40, 3);
  REQUIRE(rows.size() == 40);
  int degenerate = 0;
  for (const auto& row : rows) {
    CHECK(row.roots_p.size() == 4);
    if (row.degenerate) {
      ++degenerate;
      CHECK(row.law == "q=0");
      for (std::size_t i = 0; i < row.roots_p.size(); ++i) CHECK(row.roots_s[i].z == row.roots_p[i].z);
    } else {
      CHECK(row.roots_s.size() == 4);
      CHECK(row.roots_q.size() == 3);
    }
    if (row.law == "interlacing") CHECK(row.interlacing);
    if (row.interlacing) CHECK(row.placement != Placement::NotUpper);
  }
  CHECK(degenerate == 4);
  CHECK(fisk_row(4, 3, 7).p == rows[7].p);
}
