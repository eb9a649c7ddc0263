#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "polyconj/error.hpp"
#include "polyconj/findings.hpp"

using namespace polyconj;
using namespace polyconj::findings;

namespace {

std::string temp_ledger(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("polyconj_test_" + name + ".jsonl");
  std::filesystem::remove(p);
  return p.string();
}

}  // namespace

TEST_CASE("degree-two weighted conjecture replays bit-identically") {
  json input{{"p", to_json(RatPoly{1, 0, 1})}};
  auto f = make_finding("jensen.wplus", input, json::object(), 0, 0);
  CHECK(f.severity == Severity::ViolationCandidate);
  CHECK(verdict_of(f.observation) == "VIOLATION");
  CHECK(f.observation.find("lhs=0") != std::string::npos);
  CHECK(f.certified);
  auto r = replay(f);
  CHECK(r.status == ReplayStatus::Confirmed);
  CHECK(r.observed == f.observation);

  auto back = finding_from_json(json::parse(to_json(f).dump()));
  CHECK(back.id == f.id);
  CHECK(back.input == f.input);
  CHECK(replay(back).status == ReplayStatus::Confirmed);
}

TEST_CASE("finding ids depend on conjecture, input and tolerances only") {
  json a{{"p", to_json(RatPoly{1, 0, 1})}};
  CHECK(finding_id("jensen.wplus", a, json::object()) == finding_id("jensen.wplus", a, json::object()));
  CHECK(finding_id("jensen.wplus", a, json::object()) != finding_id("jensen.haw", a, json::object()));
  CHECK(finding_id("jensen.wplus", a, json::object()) != finding_id("jensen.wplus", a, json{{"tol", 1}}));
  CHECK(make_finding("jensen.wplus", a, {}, 1, 2).id == make_finding("jensen.wplus", a, {}, 3, 4).id);
}

TEST_CASE("ledger append, lookup and replay") {
  auto path = temp_ledger("ledger");
  Ledger ledger(path);
  CHECK(ledger.read().empty());
  auto f = make_finding("jensen.wplus", json{{"p", to_json(RatPoly{1, 0, 1})}}, {}, 7, 3);
  ledger.append(f);
  auto g = make_finding("sos.grid", json{{"k", 2}, {"l", 2}, {"roots", json::array({json::array({"0", "1"})})}}, {}, 0, 0);
  CHECK(verdict_of(g.observation) == "HOLDS");
  ledger.append(g);
  auto all = ledger.read();
  REQUIRE(all.size() == 2);
  CHECK(all[0].trial_index == 3);
  auto size_before = std::filesystem::file_size(path);
  CHECK(replay(ledger.find(f.id)).status == ReplayStatus::Confirmed);
  CHECK(std::filesystem::file_size(path) == size_before);
  try {
    ledger.find("0000000000000000");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingFinding);
  }
  std::filesystem::remove(path);
}

TEST_CASE("ledger path precedence") {
  ::unsetenv(kLedgerEnv);
  CHECK(resolve_ledger_path(std::nullopt) == kDefaultLedger);
  ::setenv(kLedgerEnv, "/tmp/from_env.jsonl", 1);
  CHECK(resolve_ledger_path(std::nullopt) == "/tmp/from_env.jsonl");
  CHECK(resolve_ledger_path(std::string("/tmp/flag.jsonl")) == "/tmp/flag.jsonl");
  ::unsetenv(kLedgerEnv);
}

TEST_CASE("numeric findings replay by verdict and react to tolerances") {
  // p + iq with q tiny: roots sit just above the real axis
  json input{{"p", to_json(RatPoly{-1, 0, 1})}, {"q", to_json(RatPoly{0, Rational(-1, 1000000)})}};
  auto f = make_finding("hb.theorem", input, json{{"tol", 1e-9}}, 0, 0);
  CHECK_FALSE(f.certified);
  CHECK(verdict_of(f.observation) == "HOLDS UPPER");
  CHECK(replay(f).status == ReplayStatus::Confirmed);
  auto loose = replay(f, json{{"tol", 1e-3}});
  CHECK(loose.status == ReplayStatus::NotReproduced);
  CHECK(verdict_of(loose.observed) == "HOLDS INDETERMINATE");

  json psi{{"config", {{"points", {{0.0, 1.0}, {2.0, 0.5}, {-1.5, -0.7}}}, {"charges", {1.0, 1.0, 1.0}}, {"alpha", 1.0}}}};
  auto m = make_finding("psi.maxima", psi, json{{"resolution", 20}}, 0, 0);
  CHECK(replay(m).status == ReplayStatus::Confirmed);
}

TEST_CASE("every registered check evaluates") {
  CHECK(known_conjectures().size() == 21);
  CHECK(verdict_of(evaluate("tropical.corners", json{{"coeffs", {"1", "2", "1"}}}).observation) == "HOLDS");
  CHECK(verdict_of(evaluate("mesh.conj8", json{{"op", {"0", "1"}}, {"m", 5}, {"p", {"0", "1"}}}).observation) == "HOLDS");
  CHECK(verdict_of(evaluate("mesh.conj9", json{{"p", {"0", "1"}}, {"q", {"-1", "1"}}, {"d", 1}}).observation) == "HOLDS");
  CHECK(verdict_of(evaluate("jensen.crit", json{{"p", {"-1", "0", "1"}}}).observation) == "HOLDS");
  CHECK(verdict_of(evaluate("rolle.theorem", json{{"p", {"0", "-21/10", "31/10", "-1"}}}).observation) == "HOLDS");
  json two{{"config", {{"positions", {{1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}}}, {"charges", {1.0, 1.0}}}}};
  CHECK(verdict_of(evaluate("maxwell.bound", two).observation) == "HOLDS 1");
  CHECK(verdict_of(evaluate("maxwell.finiteness", two).observation) == "HOLDS");
  json e{{"a", {1.0, -6.0}}, {"c", {1.0, -1.0}}};  // t^2 + t - 6: exponents -3, 2
  CHECK(verdict_of(evaluate("expsum.record", e).observation) == "ZEROS 1");
  CHECK(verdict_of(evaluate("expsum.bound", e).observation) == "HOLDS");
  CHECK(verdict_of(evaluate("descartes.conj11", json{{"pattern", "+-+"}, {"pair", {2, 0}}, {"budget", 100}, {"seed", 0}}).observation) == "REALIZED");
  CHECK_THROWS_AS(evaluate("nope", json::object()), Error);
  CHECK_THROWS_AS(evaluate("jensen.haw", json::object()), Error);
}
