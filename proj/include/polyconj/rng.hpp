#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace polyconj {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Counter-based stream: trial i of an experiment is reproducible in
/// isolation from (seed, experiment tag, i).
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::string_view tag, std::uint64_t trial) {
  std::uint64_t s = splitmix64(seed ^ splitmix64(fnv1a(tag)));
  s = splitmix64(s ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
  return std::mt19937_64(s);
}

}  // namespace polyconj
