#include <doctest.h>

#include "polyconj/error.hpp"
#include "polyconj/sos.hpp"

using namespace polyconj;
using namespace polyconj::sos;

TEST_CASE("grid construction examples") {
  auto one = grid_sos(1, 1, {{Rational(0)}});
  CHECK(one.axis_polys[0] == RatPoly{0, 1});
  CHECK(one.zero_count() == 1);
  CHECK(one.eval({Rational(0)}) == 0);
  CHECK(one.eval({Rational(3)}) == 9);

  auto g = grid_sos(2, 2, {{Rational(0), Rational(1)}});
  CHECK(g.axis_polys[0] == RatPoly{0, -1, 1});
  CHECK(g.zero_count() == 4);
  auto h = g.hessian_diagonal({Rational(0), Rational(0)});
  CHECK(h == std::vector<Rational>{2, 2});
  CHECK(verify_isolated(g).ok);
  CHECK(g.eval({Rational(1, 2), Rational(0)}) == Rational(1, 16));

  CHECK(grid_sos(2, 3).zero_count() == 8);
  CHECK_THROWS_AS(grid_sos(2, 2, {{Rational(1), Rational(2, 2)}}), Error);
  CHECK_THROWS_AS(grid_sos(2, 2, {{Rational(1)}}), Error);
  try {
    grid_sos(2, 1, {{Rational(1), Rational(1)}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateAxisRoots);
  }
}

TEST_CASE("every small grid verifies with exactly k^l zeros") {
  for (int k = 1; k <= 4; ++k) {
    for (int l = 1; l <= 3; ++l) {
      std::vector<std::vector<Rational>> roots;
      for (int j = 0; j < l; ++j) {
        std::vector<Rational> r;
        for (int i = 0; i < k; ++i) r.emplace_back(i * (j + 2) - 1, j + 1);
        roots.push_back(r);
      }
      auto g = grid_sos(k, l, roots);
      auto v = verify_isolated(g);
      CHECK(v.ok);
      std::size_t expect = 1;
      for (int j = 0; j < l; ++j) expect *= static_cast<std::size_t>(k);
      CHECK(v.zeros_checked == expect);
      CHECK(v.min_hessian_entry > 0);
    }
  }
}

TEST_CASE("bounds table") {
  auto a = bounds_table(2, 2);
  CHECK(a.sos_lower == 4);
  CHECK(a.plane_upper == 4);
  CHECK(a.best_upper == 4);
  auto b = bounds_table(3, 2);
  CHECK(b.sos_lower == 9);
  CHECK(b.plane_sos_exact == 9);
  CHECK(b.plane_upper == 10);
  auto c = bounds_table(1, 5);
  CHECK(c.sos_lower == 1);
  CHECK(c.general_upper == 1);
  CHECK_FALSE(c.has_plane_refinement);
  for (int k = 1; k <= 12; ++k) {
    for (int l = 1; l <= 4; ++l) {
      auto t = bounds_table(k, l);
      CHECK(t.sos_lower <= t.general_upper);
      if (l == 2 && k >= 2) CHECK(t.sos_lower <= t.plane_upper);
    }
  }
}
