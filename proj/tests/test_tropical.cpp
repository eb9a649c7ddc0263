#include <doctest.h>

#include <cmath>
#include <vector>

#include "polyconj/error.hpp"
#include "polyconj/tropical.hpp"

using namespace polyconj;
using namespace polyconj::tropical;

namespace {

RatPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

// Corner count from the float envelope: count breakpoints of the upper hull
// by scanning slopes directly.
int float_corners(const RatPoly& f) {
  int n = f.degree();
  std::vector<double> y;
  double binom = 1;
  for (int k = 0; k <= n; ++k) {
    y.push_back(std::log(f.coeff(k).get_d()) + std::log(binom));
    binom = binom * (n - k) / (k + 1);
  }
  int corners = 0;
  int cur = 0;
  while (cur < n) {
    int best = -1;
    double slope = -1e300;
    for (int k = cur + 1; k <= n; ++k) {
      double s = (y[k] - y[cur]) / (k - cur);
      if (s > slope + 1e-9 || (std::abs(s - slope) <= 1e-9 && k > best)) {
        slope = s;
        best = k;
      }
    }
    cur = best;
    ++corners;
  }
  return corners;
}

}  // namespace

TEST_CASE("corner counts") {
  CHECK(trop_corner_count(poly({1, 2, 1})) == 2);
  CHECK(trop_corner_count(poly({1, 1})) == 1);
  CHECK(trop_corner_count(poly({1, 1000000, 1})) == 2);
  // (1, 1/10, 1): middle point log(2/10) is below the chord at 0.
  CHECK(trop_corner_count(RatPoly{1, Rational(1, 10), 1}) == 1);
  CHECK_THROWS_AS(trop_corner_count(poly({1, -1, 1})), Error);
  for (std::uint64_t t = 0; t < 300; ++t) {
    RatPoly f = random_positive_poly(2 + static_cast<int>(t % 9), 3, 5, t);
    CHECK(trop_corner_count(f) == float_corners(f));
  }
}

TEST_CASE("vtilde and vc") {
  CHECK(vtilde(poly({1, 2, 1})) == 2);
  CHECK(vtilde(RatPoly{1, Rational(1, 10), 1}) == 0);
  CHECK(vtilde(poly({1, 1})) == 1);
  CHECK(vc(poly({1, 1, 1})) == 2);
  CHECK(vc(poly({1, 2, 1})) == 2);
  CHECK(vc(poly({1, 1})) == 1);
}

TEST_CASE("check_bounds examples") {
  auto a = check_bounds(poly({1, 2, 1}));
  CHECK(a.real_zeros == 2);
  CHECK_FALSE(a.any_violation());
  auto b = check_bounds(poly({1, 3, 3, 1}));
  CHECK(b.real_zeros == 3);
  CHECK(b.corner_bound == 3);
  CHECK_FALSE(b.any_violation());
  auto c = check_bounds(RatPoly{1, Rational(1, 10), 1});
  CHECK(c.real_zeros == 0);
  CHECK(c.vtilde == 0);
}

TEST_CASE("scaling invariance and negativity") {
  for (std::uint64_t t = 0; t < 500; ++t) {
    RatPoly f = random_positive_poly(2 + static_cast<int>(t % 9), 6, 17, t);
    auto r = check_bounds(f);
    CHECK(r.all_real_negative);
    CHECK_FALSE(r.any_violation());
    Rational c(7, 3);
    RatPoly g = f * Rational(5);
    std::vector<Rational> scaled;
    Rational pw(1);
    for (int k = 0; k <= f.degree(); ++k, pw *= c) scaled.push_back(f.coeff(k) * pw);
    RatPoly h(scaled);
    CHECK(vtilde(g) == r.vtilde);
    CHECK(vc(g) == r.vc);
    CHECK(vtilde(h) == r.vtilde);
    CHECK(vc(h) == r.vc);
    CHECK(trop_corner_count(h) == r.corner_bound);
  }
}
