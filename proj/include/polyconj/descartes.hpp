#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyconj/ratpoly.hpp"

namespace polyconj::descartes {

/// Coefficient signs in ascending degree order, each +1 or -1.
struct SignPattern {
  std::vector<int> signs;

  int degree() const { return static_cast<int>(signs.size()) - 1; }
  /// "++-++"
  std::string to_string() const;
  static SignPattern parse(const std::string& text);
  /// Overall sign flipped so the constant term is positive.
  SignPattern normalized() const;

  auto operator<=>(const SignPattern&) const = default;
};

struct PairPN {
  int pos = 0;
  int neg = 0;

  auto operator<=>(const PairPN&) const = default;
};

/// (sign changes, sign preservations); they always sum to the degree.
PairPN descartes_pair(const SignPattern& sp);
/// Pairs satisfying pos <= p, pos = p mod 2, neg <= n, neg = n mod 2.
std::vector<PairPN> admissible_pairs(const SignPattern& sp);
bool is_admissible(const SignPattern& sp, const PairPN& pair);

/// Throws ZeroCoefficient if some coefficient vanishes.
SignPattern sign_pattern_of(const RatPoly& p);
/// Positive and negative roots counted with multiplicity.
PairPN root_signature(const RatPoly& p);

/// One element of the Z2 x Z2 orbit: x -> -x flips odd-degree signs and
/// swaps (pos, neg); x -> 1/x reverses the pattern and keeps the pair.
/// Patterns are normalized to a positive constant term.
struct OrbitElement {
  SignPattern pattern;
  bool swaps_pair = false;

  auto operator<=>(const OrbitElement&) const = default;
};

std::vector<OrbitElement> symmetry_orbit(const SignPattern& sp);

/// Canonical representative of the orbit of (pattern, pair).
std::pair<SignPattern, PairPN> canonical_combination(const SignPattern& sp, const PairPN& pair);

struct SearchLaw {
  /// Coefficient magnitudes 10^u with u uniform on [-spread, spread].
  int spread = 6;
  /// Share of the budget spent on the deterministic factor sweep.
  double sweep_fraction = 0.25;

  std::string describe() const;
};

struct SearchResult {
  bool realized = false;
  std::optional<RatPoly> witness;
  /// Trials consumed; on success the 1-based index of the winning trial.
  std::uint64_t trials = 0;
  std::string source;  // "sweep" or "random"
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::string law;
};

/// Looks for a polynomial with sign pattern sp whose root signature is
/// target. Failure is a search status, not a proof of non-realizability.
SearchResult realize_search(const SignPattern& sp, const PairPN& target, std::uint64_t budget, std::uint64_t seed,
                            const SearchLaw& law = {});

enum class Status { Realized, Open };

struct SurveyRow {
  SignPattern pattern;  // orbit representative
  PairPN pair;
  Status status = Status::Open;
  std::optional<RatPoly> witness;
  std::uint64_t trials = 0;
  std::vector<OrbitElement> orbit;
  /// OPEN with both counts positive.
  bool conj11_candidate = false;
};

/// Every orbit of (pattern, admissible pair) in degree d, each searched with
/// the given per-combination budget.
std::vector<SurveyRow> survey_degree(int d, std::uint64_t budget, std::uint64_t seed, const SearchLaw& law = {});

std::string to_string(Status s);

}  // namespace polyconj::descartes
