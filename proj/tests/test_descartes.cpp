#include <doctest.h>

#include <random>
#include <set>

#include "polyconj/descartes.hpp"
#include "polyconj/error.hpp"
#include "polyconj/numeric_roots.hpp"
#include "polyconj/rng.hpp"
#include "polyconj/roots.hpp"
#include "test_support.hpp"

using namespace polyconj;
using namespace polyconj::descartes;

namespace {

int sign_changes(const std::vector<int>& s) {
  int v = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) v += s[i] != s[i + 1];
  return v;
}

std::vector<int> signs_of(const RatPoly& p, bool reflect) {
  std::vector<int> s;
  for (int k = 0; k <= p.degree(); ++k) {
    int x = sgn(p.coeff(k));
    if (x == 0) continue;
    s.push_back(reflect && k % 2 ? -x : x);
  }
  return s;
}

}  // namespace

TEST_CASE("pattern basics") {
  auto sp = SignPattern::parse("++-++");
  CHECK(sp.degree() == 4);
  CHECK(sp.to_string() == "++-++");
  CHECK(descartes_pair(sp) == PairPN{2, 2});
  auto pairs = admissible_pairs(sp);
  std::set<PairPN> got(pairs.begin(), pairs.end());
  CHECK(got == std::set<PairPN>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
  CHECK_FALSE(is_admissible(sp, {1, 1}));
  CHECK(SignPattern::parse("-+").normalized().to_string() == "+-");
  CHECK_THROWS_AS(SignPattern::parse("+x"), Error);
}

TEST_CASE("orbit of ++-++") {
  auto orbit = symmetry_orbit(SignPattern::parse("++-++"));
  CHECK(orbit.size() == 2);
  bool has = false;
  for (auto& e : orbit) has |= e.pattern.to_string() == "+---+";
  CHECK(has);
  for (int d = 1; d <= 6; ++d) {
    for (unsigned m = 0; m < (1u << d); ++m) {
      SignPattern sp;
      sp.signs.push_back(1);
      for (int k = 0; k < d; ++k) sp.signs.push_back((m >> k) & 1 ? -1 : 1);
      auto n = symmetry_orbit(sp).size();
      CHECK(4 % n == 0);
      // canonical representative is constant along the orbit
      for (auto& pair : admissible_pairs(sp)) {
        auto c = canonical_combination(sp, pair);
        for (auto& e : symmetry_orbit(sp)) {
          PairPN q = e.swaps_pair ? PairPN{pair.neg, pair.pos} : pair;
          CHECK(canonical_combination(e.pattern, q) == c);
        }
      }
    }
  }
}

TEST_CASE("root signature agrees with Descartes and numeric census") {
  std::mt19937_64 rng(11);
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    RatPoly p = testing::random_int_poly(rng, 1 + i % 8);
    bool zero = false;
    for (auto& c : p.coeffs()) zero |= sgn(c) == 0;
    if (zero) {
      CHECK_THROWS_AS(sign_pattern_of(p), Error);
      continue;
    }
    PairPN sig = root_signature(p);
    int vp = sign_changes(signs_of(p, false));
    int vn = sign_changes(signs_of(p, true));
    CHECK(sig.pos <= vp);
    CHECK((vp - sig.pos) % 2 == 0);
    CHECK(sig.neg <= vn);
    CHECK((vn - sig.neg) % 2 == 0);
    if (i % 10 == 0) {
      auto roots = complex_roots_numeric(p, 1e-13);
      int pos = 0, neg = 0;
      bool clear = true;
      for (auto& r : roots) {
        if (std::abs(r.z.imag()) > r.radius) continue;
        if (std::abs(r.z.real()) <= r.radius || r.radius > 1e-3) clear = false;
        (r.z.real() > 0 ? pos : neg)++;
      }
      if (clear && squarefree_part(p).degree() == p.degree()) {
        ++compared;
        CHECK(PairPN{pos, neg} == sig);
      }
    }
  }
  CHECK(compared > 500);
}

TEST_CASE("realize search certifies witnesses") {
  auto sp = SignPattern::parse("+-+-");
  auto res = realize_search(sp, {3, 0}, 1000, 1);
  REQUIRE(res.realized);
  CHECK(sign_pattern_of(*res.witness) == sp);
  CHECK(root_signature(*res.witness) == PairPN{3, 0});
  CHECK_THROWS_AS(realize_search(sp, {2, 0}, 10, 1), Error);
  // deterministic in the seed
  auto a = realize_search(SignPattern::parse("+--+-+"), {2, 1}, 5000, 9);
  auto b = realize_search(SignPattern::parse("+--+-+"), {2, 1}, 5000, 9);
  CHECK(a.realized == b.realized);
  CHECK(a.trials == b.trials);
  CHECK(a.witness == b.witness);
}

TEST_CASE("degree 3 fully realized") {
  for (auto& row : survey_degree(3, 2000, 1)) {
    INFO(row.pattern.to_string());
    CHECK(row.status == Status::Realized);
  }
}

TEST_CASE("degree 4 has a single open orbit") {
  auto rows = survey_degree(4, 20000, 1);
  int open = 0;
  for (auto& row : rows) {
    if (row.status == Status::Realized) {
      CHECK(root_signature(*row.witness) == row.pair);
      continue;
    }
    ++open;
    CHECK(row.pattern.to_string() == "++-++");
    CHECK(row.pair == PairPN{2, 0});
    CHECK_FALSE(row.conj11_candidate);
  }
  CHECK(open == 1);
}
