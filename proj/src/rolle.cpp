#include "polyconj/rolle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "polyconj/error.hpp"
#include "polyconj/parallel.hpp"
#include "polyconj/rng.hpp"
#include "polyconj/sampling.hpp"

namespace polyconj::rolle {

namespace {

constexpr std::uint64_t kMaterializeLimit = 1000000;

struct Ordered {
  std::vector<RatPoly> levels;
  std::vector<RootIsolator> isolators;
  std::vector<std::vector<TaggedRoot>> groups;
};

Ordered order_levels(const RatPoly& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "configuration needs degree >= 1");
  if (!is_real_rooted_simple(p)) throw Error(ErrorKind::NotRealRooted, p.to_string());
  Ordered out;
  for (int i = 0; i < n; ++i) out.levels.push_back(p.derivative(i));
  for (const auto& q : out.levels) out.isolators.emplace_back(q);

  std::vector<std::vector<RatInterval>> start;
  for (const auto& iso : out.isolators) start.push_back(iso.intervals());
  // Adjacent levels never share a root (simple roots); farther ones can. Pin
  // shared rational roots to points so refinement can see them.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      RatPoly g = gcd(out.levels[static_cast<std::size_t>(i)], out.levels[static_cast<std::size_t>(j)]);
      if (g.degree() < 1) continue;
      std::vector<Rational> shared;
      try {
        shared = rational_roots(g);
      } catch (const Error&) {
        throw Error(ErrorKind::CoincidentCriticalRoots,
                    "levels " + std::to_string(i) + " and " + std::to_string(j) + " share an irrational root");
      }
      for (const auto& r : shared) {
        for (int lvl : {i, j}) {
          auto& iso = out.isolators[static_cast<std::size_t>(lvl)];
          for (auto& iv : start[static_cast<std::size_t>(lvl)]) {
            if (!iv.is_point() && iv.lo < r && r < iv.hi) iso.split_at(iv, r);
          }
        }
      }
    }
  }
  std::vector<const RootIsolator*> sets;
  for (const auto& iso : out.isolators) sets.push_back(&iso);
  auto groups = order_roots(sets, std::move(start), 256);
  if (!groups) throw Error(ErrorKind::CoincidentCriticalRoots, "roots not separated after 256 rounds");
  out.groups = std::move(*groups);
  return out;
}

}  // namespace

Configuration config_of(const RatPoly& p) {
  Ordered o = order_levels(p);
  Configuration cfg;
  cfg.rows.resize(o.levels.size());
  for (std::size_t i = 0; i < o.levels.size(); ++i) cfg.rows[i].resize(o.isolators[i].size());
  for (const auto& g : o.groups)
    for (const auto& r : g) cfg.rows[static_cast<std::size_t>(r.set)][static_cast<std::size_t>(r.index)] = r.iv;
  return cfg;
}

bool check_rolle(const Configuration& cfg) {
  const int n = cfg.n();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cfg.rows[static_cast<std::size_t>(i)].size()) != n - i) {
      throw Error(ErrorKind::InvalidArgument, "configuration row " + std::to_string(i) + " must have " +
                                                  std::to_string(n - i) + " entries");
    }
  }
  auto x = [&](int i, int l) -> const RatInterval& {
    return cfg.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l - 1)];
  };
  for (int l = 1; l <= n; ++l) {
    for (int j = 1; j <= n - l; ++j) {
      for (int i = 0; i < j; ++i) {
        if (!certainly_before(x(i, l), x(j, l))) return false;
        if (!certainly_before(x(j, l), x(i, l + j - i))) return false;
      }
    }
  }
  return true;
}

std::string symbolic_of(const RatPoly& p) {
  Ordered o = order_levels(p);
  std::string word;
  for (const auto& g : o.groups) {
    if (g.size() > 1) {
      throw Error(ErrorKind::CoincidentCriticalRoots, "roots of levels " + std::to_string(g[0].set) + " and " +
                                                          std::to_string(g[1].set) + " coincide at " +
                                                          format_rational(g[0].iv.lo));
    }
    word += static_cast<char>('0' + g[0].set);
  }
  return word;
}

bool is_valid_sequence(const std::string& word, int n) {
  if (n < 1 || n > 10) return false;
  if (word.size() != static_cast<std::size_t>(n * (n + 1) / 2)) return false;
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (char c : word) {
    int s = c - '0';
    if (s < 0 || s >= n) return false;
    ++count[static_cast<std::size_t>(s)];
  }
  for (int i = 0; i < n; ++i) {
    if (count[static_cast<std::size_t>(i)] != n - i) return false;
  }
  for (int i = 0; i + 1 < n; ++i) {
    const char sym = static_cast<char>('0' + i), next = static_cast<char>('0' + i + 1);
    std::vector<std::size_t> pos;
    for (std::size_t k = 0; k < word.size(); ++k)
      if (word[k] == sym) pos.push_back(k);
    int inside = 0;
    for (std::size_t a = 0; a + 1 < pos.size(); ++a) {
      int between = static_cast<int>(std::count(word.begin() + static_cast<long>(pos[a]) + 1,
                                                 word.begin() + static_cast<long>(pos[a + 1]), next));
      if (between != 1) return false;
      inside += between;
    }
    // every i+1 must sit between two occurrences of i
    if (inside != n - i - 1) return false;
  }
  return true;
}

namespace {

/// Backtracking state: placed[i] counts symbol i so far; open[i] is set
/// once an i+1 has followed the latest i.
struct Walker {
  int n;
  std::vector<int> placed;
  std::vector<char> open;
  std::string word;

  explicit Walker(int order)
      : n(order), placed(static_cast<std::size_t>(order), 0), open(static_cast<std::size_t>(order), 0) {}

  bool can_place(int s) const {
    auto u = static_cast<std::size_t>(s);
    if (placed[u] == n - s) return false;
    // an i+1 needs a preceding i with no i+1 since, and a later i to close it
    if (s > 0 && (placed[u - 1] == 0 || open[u - 1] || placed[u - 1] == n - s + 1)) return false;
    // a repeated i needs exactly one i+1 since the previous i
    if (s + 1 < n && placed[u] > 0 && !open[u]) return false;
    return true;
  }

  template <class Leaf>
  void walk(Leaf&& leaf) {
    if (static_cast<int>(word.size()) == n * (n + 1) / 2) {
      leaf();
      return;
    }
    for (int s = 0; s < n; ++s) {
      if (!can_place(s)) continue;
      auto u = static_cast<std::size_t>(s);
      char saved_open = open[u];
      char saved_prev = s > 0 ? open[u - 1] : 0;
      ++placed[u];
      open[u] = 0;
      if (s > 0) open[u - 1] = 1;
      word.push_back(static_cast<char>('0' + s));
      walk(leaf);
      word.pop_back();
      if (s > 0) open[u - 1] = saved_prev;
      open[u] = saved_open;
      --placed[u];
    }
  }
};

}  // namespace

void for_each_sequence(int n, const std::function<void(const std::string&)>& visit) {
  if (n < 1 || n > 8) throw Error(ErrorKind::TooLarge, "sequence order must be in 1..8");
  Walker w(n);
  w.walk([&] { visit(w.word); });
}

std::vector<std::string> enumerate_sequences(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sequence order must be >= 1");
  if (n > 8 || flat_count(n) > kMaterializeLimit) {
    throw Error(ErrorKind::TooLarge, "n=" + std::to_string(n) + " has " + flat_count(n).get_str() + " sequences");
  }
  std::vector<std::string> out;
  for_each_sequence(n, [&](const std::string& w) { out.push_back(w); });
  return out;
}

std::uint64_t count_sequences(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sequence order must be >= 1");
  if (n >= 8) throw Error(ErrorKind::TooLarge, "n=" + std::to_string(n) + " has " + flat_count(n).get_str() + " sequences");
  Walker w(n);
  std::uint64_t count = 0;
  w.walk([&] { ++count; });
  return count;
}

Integer flat_count(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "flat_count needs n >= 1");
  auto fact = [](long m) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return f;
  };
  Integer num = fact(static_cast<long>(n) * (n + 1) / 2);
  Integer den(1);
  for (int i = 1; i <= n - 1; ++i) num *= fact(i);
  for (int i = 1; i <= n; ++i) den *= fact(2 * i - 1);
  if (num % den != 0) throw std::logic_error("flat_count is not an integer for n=" + std::to_string(n));
  return num / den;
}

RatPoly realize_sample(int n, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_rng(seed, "rolle", trial);
  std::vector<Rational> roots;
  switch (trial % 3) {
    case 0: {
      std::uniform_int_distribution<int> num(-200, 200);
      while (static_cast<int>(roots.size()) < n) {
        Rational r(num(rng), 7);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
      break;
    }
    case 1: {
      std::exponential_distribution<double> gap(1.0);
      Rational r(0);
      for (int i = 0; i < n; ++i) {
        r += quantize_positive(gap(rng) + 1e-3);
        roots.push_back(r);
      }
      break;
    }
    default: {
      std::uniform_real_distribution<double> u(-2, 2);
      Rational r(0);
      for (int i = 0; i < n; ++i) {
        r += quantize_positive(std::pow(10.0, u(rng)));
        roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return RatPoly::from_roots(roots);
}

RealizedTable realized_sequences(int n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1 || n > 6) throw Error(ErrorKind::TooLarge, "realized_sequences supports n in 1..6");
  std::vector<std::string> words(trials);
  parallel_for(trials, [&](std::size_t i) {
    try {
      words[i] = symbolic_of(realize_sample(n, seed, i));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CoincidentCriticalRoots) throw;
    }
  });
  RealizedTable t;
  t.trials = trials;
  for (const auto& w : words) {
    if (w.empty()) ++t.non_generic;
    else ++t.counts[w];
  }
  return t;
}

}  // namespace polyconj::rolle
