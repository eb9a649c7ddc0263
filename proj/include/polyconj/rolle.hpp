#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polyconj/ratpoly.hpp"
#include "polyconj/roots.hpp"

namespace polyconj::rolle {

/// rows[i][l-1] encloses x_l^(i), the l-th root of the i-th derivative.
struct Configuration {
  std::vector<std::vector<RatInterval>> rows;

  int n() const { return static_cast<int>(rows.size()); }
};

/// Certified configuration of a real-rooted polynomial with simple roots.
/// Roots of non-adjacent derivatives may coincide at a rational point; those
/// are returned as equal point intervals. An irrational coincidence, or an
/// order still unresolved after 256 refinement rounds, raises
/// CoincidentCriticalRoots.
Configuration config_of(const RatPoly& p);

/// x_l^(i) < x_l^(j) < x_{l+j-i}^(i) for all i < j <= n - l, certified on the
/// intervals.
bool check_rolle(const Configuration& cfg);

/// The word of levels read along the real line. Requires a generic input:
/// any coincidence raises CoincidentCriticalRoots.
std::string symbolic_of(const RatPoly& p);

/// Structural test of a word: occurrence counts and exactly one i+1 between
/// consecutive occurrences of i.
bool is_valid_sequence(const std::string& word, int n);

/// Calls visit on every valid word of order n, in lexicographic order.
void for_each_sequence(int n, const std::function<void(const std::string&)>& visit);
/// All valid words; TooLarge above a million words (n >= 7).
std::vector<std::string> enumerate_sequences(int n);
/// Number of valid words by exhaustive backtracking; TooLarge for n >= 8.
std::uint64_t count_sequences(int n);

/// C(n+1,2)! * (1! 2! ... (n-1)!) / (1! 3! ... (2n-1)!)
Integer flat_count(int n);

struct RealizedTable {
  std::map<std::string, std::uint64_t> counts;
  /// Samples skipped because some roots coincided across derivatives.
  std::uint64_t non_generic = 0;
  std::uint64_t trials = 0;
};

/// Random real-rooted polynomials of degree n (n <= 6), rotating through
/// three root laws: uniform rationals, exponential gaps, log-uniform gaps.
RatPoly realize_sample(int n, std::uint64_t seed, std::uint64_t trial);
RealizedTable realized_sequences(int n, std::uint64_t trials, std::uint64_t seed);

}  // namespace polyconj::rolle
