#include <doctest.h>

#include <cmath>
#include <random>

#include "polyconj/error.hpp"
#include "polyconj/expsum.hpp"

using namespace polyconj;
using namespace polyconj::expsum;

namespace {

ExpSum real_sum(std::vector<double> lambdas, std::vector<double> c) {
  ExpSum s;
  for (double l : lambdas) s.lambdas.push_back(l);
  for (double x : c) s.coeffs.push_back(x);
  s.realness = true;
  return s;
}

}  // namespace

TEST_CASE("characteristic roots") {
  std::vector<Complex> a{0.0, -1.0};
  auto r = char_roots(a);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] + 1.0) < 1e-14);
  CHECK(std::abs(r[1] - 1.0) < 1e-14);
  std::vector<Complex> b{0.0, 1.0};
  auto q = char_roots(b);
  CHECK(std::abs(q[0] + Complex(0, 1)) < 1e-14);
  CHECK(std::abs(q[1] - Complex(0, 1)) < 1e-14);

  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> c{{g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}};
    for (const auto& z : char_roots(c)) {
      CHECK(std::abs(z * z * z + c[0] * z * z + c[1] * z + c[2]) < 1e-10 * (1 + std::pow(std::abs(z), 3)));
    }
  }
  std::vector<Complex> dbl{-2.0, 1.0};  // (t - 1)^2
  auto cl = cluster_roots(char_roots(dbl));
  REQUIRE(cl.size() == 1);
  CHECK(cl[0].multiplicity == 2);
}

TEST_CASE("omega membership") {
  std::vector<Complex> r1{0.0, 1.0};
  CHECK(in_omega_roots(r1) == Tri::True);
  std::vector<Complex> r2{{0, 1}, {0, -1}};
  CHECK(in_omega_roots(r2) == Tri::False);
  std::vector<Complex> r3{0.0, 0.5e-9};
  CHECK(in_omega_roots(r3) == Tri::Indeterminate);
  std::vector<Complex> sin_cos{0.0, 1.0};
  CHECK(in_omega(sin_cos) == Tri::False);
  std::vector<Complex> split{0.0, -1.0};
  CHECK(in_omega(split) == Tri::True);

  // symmetric under permutation and conjugation
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    std::vector<Complex> z{{g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}};
    auto base = in_omega_roots(z, 0.05);
    std::vector<Complex> perm{z[2], z[0], z[1]};
    std::vector<Complex> conj{std::conj(z[0]), std::conj(z[1]), std::conj(z[2])};
    CHECK(in_omega_roots(perm, 0.05) == base);
    CHECK(in_omega_roots(conj, 0.05) == base);
  }
}

TEST_CASE("zero counting examples") {
  CHECK(count_real_zeros(real_sum({0, 1}, {1, 1})).count == 0);
  auto one = count_real_zeros(real_sum({0, 1}, {1, -1}));
  REQUIRE(one.count == 1);
  CHECK(std::abs(one.zeros[0]) < 1e-12);
  auto half = count_real_zeros(real_sum({1, -1}, {1, -2}));
  REQUIRE(half.count == 1);
  CHECK(half.zeros[0] == doctest::Approx(std::log(2.0) / 2).epsilon(1e-12));
  CHECK(half.certified_outside);
  CHECK(std::abs(half.zeros[0]) <= half.T);

  // (e^x - 1)(e^x - 2) e^{-x} ... as e^x - 3 + 2 e^{-x}
  auto two = count_real_zeros(real_sum({1, 0, -1}, {1, -3, 2}));
  REQUIRE(two.count == 2);
  CHECK(two.zeros[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(two.zeros[1] == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  ExpSum notreal = real_sum({0, 1}, {1, 1});
  notreal.realness = false;
  CHECK_THROWS_AS(count_real_zeros(notreal), Error);
  ExpSum osc;
  osc.lambdas = {{0, 1}, {0, -1}};
  osc.coeffs = {0.5, 0.5};
  osc.realness = true;
  CHECK_THROWS_AS(count_real_zeros(osc), Error);

  // tangency: e^x - 2 + e^{-x} = (e^{x/2} - e^{-x/2})^2 has a double zero at 0
  CHECK(count_real_zeros(real_sum({1, 0, -1}, {1, -2, 1})).indeterminate);
  const double a = 0.3137;
  CHECK(count_real_zeros(real_sum({1, 0, -1}, {std::exp(-a), -2, std::exp(a)})).indeterminate);
}

TEST_CASE("zero counts are invariant under exponent scaling") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3, 3);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    std::vector<double> l{u(rng), u(rng), u(rng)}, c{g(rng), g(rng), g(rng)};
    double s = 0.25 + 4 * std::abs(u(rng)) / 3;
    auto a = count_real_zeros(real_sum(l, c));
    std::vector<double> ls;
    for (double x : l) ls.push_back(s * x);
    auto b = count_real_zeros(real_sum(ls, c));
    if (a.indeterminate || b.indeterminate) continue;
    REQUIRE(a.count == b.count);
    for (std::size_t i = 0; i < a.zeros.size(); ++i) CHECK(std::abs(b.zeros[i] - a.zeros[i] / s) < 1e-9);
    CHECK(a.count <= 2);
  }
}

TEST_CASE("max zero search") {
  auto empty = max_zero_search(3, 0, 1);
  CHECK(empty.trials == 0);
  CHECK_FALSE(empty.witness.has_value());

  auto k2 = max_zero_search(2, 1000, 7);
  CHECK(k2.max_count == 1);
  CHECK(k2.accepted > 0);

  auto k3 = max_zero_search(3, 400, 7);
  REQUIRE(k3.witness.has_value());
  CHECK(k3.max_count == 2);
  // the witness replays from its trial index alone and its zeros are genuine
  auto again = search_trial(3, 7, k3.witness->trial);
  REQUIRE(again.has_value());
  CHECK(again->zeros == k3.witness->zeros);
  auto s = solution(again->a, again->c);
  for (double z : again->zeros) CHECK(std::abs(s.eval(z)) < 1e-9 * s.magnitude(z));
}
