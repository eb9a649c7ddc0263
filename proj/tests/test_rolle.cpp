#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "polyconj/error.hpp"
#include "polyconj/meshops.hpp"
#include "polyconj/rolle.hpp"
#include "test_support.hpp"

using namespace polyconj;
using namespace polyconj::rolle;

namespace {

// Standard tableaux of the shifted staircase (n, n-1, ..., 1), counted by
// peeling removable corners; no closed form involved.
Integer shifted_tableaux(std::vector<int> rows, std::map<std::vector<int>, Integer>& memo) {
  bool empty = std::all_of(rows.begin(), rows.end(), [](int r) { return r == 0; });
  if (empty) return 1;
  auto it = memo.find(rows);
  if (it != memo.end()) return it->second;
  Integer total(0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int next = r + 1 < rows.size() ? rows[r + 1] : 0;
    if (rows[r] == 0) continue;
    if (rows[r] - 1 > next || (rows[r] == 1 && next == 0)) {
      --rows[r];
      total += shifted_tableaux(rows, memo);
      ++rows[r];
    }
  }
  memo[rows] = total;
  return total;
}

Integer shifted_staircase(int n) {
  std::vector<int> rows;
  for (int i = n; i >= 1; --i) rows.push_back(i);
  std::map<std::vector<int>, Integer> memo;
  return shifted_tableaux(rows, memo);
}

// All words with the right counts, filtered by the structural test.
std::set<std::string> brute_force(int n) {
  std::string w;
  for (int i = 0; i < n; ++i) w += std::string(static_cast<std::size_t>(n - i), static_cast<char>('0' + i));
  std::sort(w.begin(), w.end());
  std::set<std::string> out;
  do {
    if (is_valid_sequence(w, n)) out.insert(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

RatInterval pt(const Rational& x) { return {x, x}; }

}  // namespace

TEST_CASE("flat counts") {
  CHECK(flat_count(1) == 1);
  CHECK(flat_count(3) == 2);
  CHECK(flat_count(4) == 12);
  CHECK(flat_count(5) == 286);
  for (int n = 1; n <= 9; ++n) CHECK(flat_count(n) == shifted_staircase(n));
  for (int n = 1; n <= 20; ++n) CHECK(flat_count(n) > 0);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_sequences(2) == std::vector<std::string>{"010"});
  auto three = enumerate_sequences(3);
  CHECK(std::set<std::string>(three.begin(), three.end()) == std::set<std::string>{"012010", "010210"});
  auto four = enumerate_sequences(4);
  CHECK(four.size() == 12);
  // the printed n = 4 list, one entry of which appears twice
  std::vector<std::string> printed = {"0123012010", "0120312010", "0120132010", "0102312010",
                                      "0102132010", "0123010210", "0120310210", "0120130210",
                                      "0120103210", "0123010210", "0102130210", "0102103210"};
  std::set<std::string> printed_set(printed.begin(), printed.end());
  CHECK(printed_set.size() == 11);
  std::set<std::string> four_set(four.begin(), four.end());
  for (const auto& w : printed_set) CHECK(four_set.count(w) == 1);
  std::vector<std::string> missing;
  std::set_difference(four_set.begin(), four_set.end(), printed_set.begin(), printed_set.end(),
                      std::back_inserter(missing));
  CHECK(missing == std::vector<std::string>{"0102310210"});

  CHECK(enumerate_sequences(5).size() == 286);
  for (int n = 2; n <= 6; ++n) CHECK(Integer(enumerate_sequences(n).size()) == flat_count(n));
  for (int n = 1; n <= 4; ++n) {
    auto e = enumerate_sequences(n);
    CHECK(std::set<std::string>(e.begin(), e.end()) == brute_force(n));
  }
  CHECK_THROWS_AS(enumerate_sequences(7), Error);
  CHECK(count_sequences(6) == flat_count(6));
}

TEST_CASE("configurations") {
  auto a = config_of(RatPoly{-1, 0, 1});
  REQUIRE(a.n() == 2);
  CHECK(a.rows[1][0].is_point());
  CHECK(a.rows[1][0].lo == 0);
  CHECK(check_rolle(a));

  // (x)_3: the root of p'' coincides with the middle root of p
  auto b = config_of(meshops::pochhammer(3));
  CHECK(check_rolle(b));
  CHECK(b.rows[2][0].lo == 1);
  CHECK(b.rows[0][1].is_point());
  CHECK(b.rows[0][1].lo == 1);
  CHECK(b.rows[1][0].lo.get_d() < 0.42265);
  CHECK(b.rows[1][0].hi.get_d() > 0.42264);
  CHECK_THROWS_AS(symbolic_of(meshops::pochhammer(3)), Error);

  Configuration bad{{{pt(0), pt(1)}, {pt(-1)}}};
  CHECK_FALSE(check_rolle(bad));
  Configuration good{{{pt(-1), pt(1)}, {pt(0)}}};
  CHECK(check_rolle(good));
  CHECK_THROWS_AS(config_of(RatPoly{1, 0, 1}), Error);
}

TEST_CASE("symbolic sequences") {
  CHECK(symbolic_of(RatPoly{-1, 0, 1}) == "010");
  RatPoly p = RatPoly::from_roots(std::vector<Rational>{0, 1, Rational(21, 10)});
  CHECK(symbolic_of(p) == "010210");
  RatPoly q = RatPoly::from_roots(std::vector<Rational>{0, Rational(11, 10), 2});
  CHECK(symbolic_of(q) == "012010");

  std::mt19937_64 rng(12);
  int generic = 0;
  for (int t = 0; t < 120; ++t) {
    int n = 2 + t % 4;
    RatPoly r = testing::random_real_rooted(rng, n);
    auto cfg = config_of(r);
    CHECK(check_rolle(cfg));
    try {
      auto w = symbolic_of(r);
      CHECK(is_valid_sequence(w, n));
      ++generic;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CoincidentCriticalRoots);
    }
  }
  CHECK(generic > 100);
}

TEST_CASE("realized sequences") {
  auto two = realized_sequences(2, 50, 1);
  CHECK(two.counts.size() == 1);
  CHECK(two.counts.begin()->first == "010");
  auto three = realized_sequences(3, 300, 1);
  CHECK(three.counts.size() == 2);
  auto four = realized_sequences(4, 300, 1);
  auto all = enumerate_sequences(4);
  for (auto& [w, c] : four.counts) CHECK(std::find(all.begin(), all.end(), w) != all.end());
}
