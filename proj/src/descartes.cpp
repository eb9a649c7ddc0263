#include "polyconj/descartes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "polyconj/error.hpp"
#include "polyconj/parallel.hpp"
#include "polyconj/rng.hpp"
#include "polyconj/roots.hpp"
#include "polyconj/sampling.hpp"

namespace polyconj::descartes {

std::string SignPattern::to_string() const {
  std::string s;
  for (int x : signs) s += x > 0 ? '+' : '-';
  return s;
}

SignPattern SignPattern::parse(const std::string& text) {
  SignPattern sp;
  for (char c : text) {
    if (c == '+') sp.signs.push_back(1);
    else if (c == '-') sp.signs.push_back(-1);
    else if (c == ',' || c == ' ' || c == '(' || c == ')') continue;
    else throw Error(ErrorKind::Parse, "bad sign pattern '" + text + "'");
  }
  if (sp.signs.size() < 2) throw Error(ErrorKind::Parse, "sign pattern needs length >= 2: '" + text + "'");
  return sp;
}

SignPattern SignPattern::normalized() const {
  SignPattern out = *this;
  if (!out.signs.empty() && out.signs.front() < 0) {
    for (int& x : out.signs) x = -x;
  }
  return out;
}

namespace {

void validate(const SignPattern& sp) {
  if (sp.signs.size() < 2) throw Error(ErrorKind::InvalidArgument, "sign pattern needs length >= 2");
  for (int x : sp.signs) {
    if (x != 1 && x != -1) throw Error(ErrorKind::InvalidArgument, "sign pattern entries must be +1 or -1");
  }
}

SignPattern flip_odd(const SignPattern& sp) {
  SignPattern out = sp;
  for (std::size_t k = 1; k < out.signs.size(); k += 2) out.signs[k] = -out.signs[k];
  return out.normalized();
}

SignPattern reverse(const SignPattern& sp) {
  SignPattern out = sp;
  std::reverse(out.signs.begin(), out.signs.end());
  return out.normalized();
}

}  // namespace

PairPN descartes_pair(const SignPattern& sp) {
  validate(sp);
  PairPN out;
  for (std::size_t k = 0; k + 1 < sp.signs.size(); ++k) {
    if (sp.signs[k] != sp.signs[k + 1]) ++out.pos;
    else ++out.neg;
  }
  if (out.pos + out.neg != sp.degree()) throw std::logic_error("descartes pair does not sum to the degree");
  return out;
}

bool is_admissible(const SignPattern& sp, const PairPN& pair) {
  PairPN d = descartes_pair(sp);
  return pair.pos >= 0 && pair.neg >= 0 && pair.pos <= d.pos && pair.neg <= d.neg && (d.pos - pair.pos) % 2 == 0 &&
         (d.neg - pair.neg) % 2 == 0;
}

std::vector<PairPN> admissible_pairs(const SignPattern& sp) {
  PairPN d = descartes_pair(sp);
  std::vector<PairPN> out;
  for (int pos = d.pos % 2; pos <= d.pos; pos += 2) {
    for (int neg = d.neg % 2; neg <= d.neg; neg += 2) out.push_back({pos, neg});
  }
  return out;
}

SignPattern sign_pattern_of(const RatPoly& p) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "sign pattern needs degree >= 1");
  SignPattern sp;
  for (const auto& c : p.coeffs()) {
    int s = sgn(c);
    if (s == 0) throw Error(ErrorKind::ZeroCoefficient, p.to_string());
    sp.signs.push_back(s);
  }
  return sp;
}

PairPN root_signature(const RatPoly& p) {
  SignPattern sp = sign_pattern_of(p);
  PairPN out{count_with_multiplicity(p, Rational(0), std::nullopt),
             count_with_multiplicity(p, std::nullopt, Rational(0))};
  if (!is_admissible(sp, out)) {
    throw std::logic_error("Descartes' rule violated by " + p.to_string() + ": root counting is broken");
  }
  return out;
}

std::vector<OrbitElement> symmetry_orbit(const SignPattern& sp) {
  validate(sp);
  SignPattern base = sp.normalized();
  std::vector<OrbitElement> candidates = {
      {base, false},
      {flip_odd(base), true},
      {reverse(base), false},
      {flip_odd(reverse(base)), true},
  };
  std::vector<OrbitElement> out;
  for (auto& c : candidates) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const OrbitElement& e) { return e.pattern == c.pattern; });
    if (!seen) out.push_back(c);
  }
  return out;
}

std::pair<SignPattern, PairPN> canonical_combination(const SignPattern& sp, const PairPN& pair) {
  SignPattern base = sp.normalized();
  PairPN swapped{pair.neg, pair.pos};
  std::vector<std::pair<SignPattern, PairPN>> all = {
      {base, pair},
      {flip_odd(base), swapped},
      {reverse(base), pair},
      {flip_odd(reverse(base)), swapped},
  };
  // Order by pattern string with '+' first so "++-++" precedes "+---+".
  return *std::min_element(all.begin(), all.end(), [](const auto& a, const auto& b) {
    auto sa = a.first.to_string();
    auto sb = b.first.to_string();
    if (sa != sb) return sa < sb;
    return a.second < b.second;
  });
}

std::string SearchLaw::describe() const {
  return "sweep: products of (x-r), (x+r), (x^2+s*r*x+r^2) with r=10^j, |j|<=" + std::to_string(spread) +
         ", s in {-1,0,1}, " + std::to_string(static_cast<int>(sweep_fraction * 100)) +
         "% of budget; random: alternating coefficients sign*10^u and factor products with roots 10^u, "
         "u~U[-" + std::to_string(spread) + "," + std::to_string(spread) + "], 5 significant digits";
}

namespace {

bool certify(const RatPoly& p, const SignPattern& sp, const PairPN& target) {
  if (p.degree() != sp.degree()) return false;
  for (int k = 0; k <= p.degree(); ++k) {
    if (sgn(p.coeff(k)) != sp.signs[static_cast<std::size_t>(k)]) return false;
  }
  if (squarefree_part(p).degree() != p.degree()) return false;
  return root_signature(p) == target;
}

enum class FactorKind { Pos, Neg, Complex };

RatPoly make_factor(FactorKind kind, const Rational& r, int s) {
  switch (kind) {
    case FactorKind::Pos: return RatPoly{-r, Rational(1)};
    case FactorKind::Neg: return RatPoly{r, Rational(1)};
    case FactorKind::Complex: return RatPoly{r * r, Rational(s) * r, Rational(1)};
  }
  return {};
}

/// Enumerates products with strictly increasing choice index within each kind
/// (so roots are distinct). Stops when `visit` returns false.
void sweep_products(const PairPN& target, int pairs, int spread, const std::function<bool(const RatPoly&)>& visit) {
  std::vector<FactorKind> slots;
  for (int i = 0; i < target.pos; ++i) slots.push_back(FactorKind::Pos);
  for (int i = 0; i < target.neg; ++i) slots.push_back(FactorKind::Neg);
  for (int i = 0; i < pairs; ++i) slots.push_back(FactorKind::Complex);
  const int mags = 2 * spread + 1;
  auto choices = [&](FactorKind k) { return k == FactorKind::Complex ? 3 * mags : mags; };

  std::vector<int> pick(slots.size(), 0);
  std::function<bool(std::size_t, const RatPoly&)> rec = [&](std::size_t slot, const RatPoly& acc) -> bool {
    if (slot == slots.size()) return visit(acc);
    int start = 0;
    if (slot > 0 && slots[slot - 1] == slots[slot]) start = pick[slot - 1] + 1;
    for (int c = start; c < choices(slots[slot]); ++c) {
      pick[slot] = c;
      int mag = c % mags;
      int s = slots[slot] == FactorKind::Complex ? c / mags - 1 : 0;
      RatPoly f = make_factor(slots[slot], power_of_ten(mag - spread), s);
      if (!rec(slot + 1, acc * f)) return false;
    }
    return true;
  };
  rec(0, RatPoly::constant(1));
}

RatPoly random_coefficients(const SignPattern& sp, int spread, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<Rational> c;
  for (int s : sp.signs) c.push_back(Rational(s) * quantize_positive(std::pow(10.0, u(rng))));
  return RatPoly(std::move(c));
}

RatPoly random_factors(const PairPN& target, int pairs, int spread, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::uniform_real_distribution<double> angle(0.05, 3.09);
  RatPoly p = RatPoly::constant(1);
  for (int i = 0; i < target.pos; ++i) p *= RatPoly{-quantize_positive(std::pow(10.0, u(rng))), Rational(1)};
  for (int i = 0; i < target.neg; ++i) p *= RatPoly{quantize_positive(std::pow(10.0, u(rng))), Rational(1)};
  for (int i = 0; i < pairs; ++i) {
    double rho = std::pow(10.0, u(rng));
    double b = -2.0 * rho * std::cos(angle(rng));
    Rational c = quantize_positive(rho * rho);
    Rational bq = quantize(b);
    if (bq * bq >= 4 * c) bq = 0;
    p *= RatPoly{c, bq, Rational(1)};
  }
  return p;
}

}  // namespace

SearchResult realize_search(const SignPattern& sp, const PairPN& target, std::uint64_t budget, std::uint64_t seed,
                            const SearchLaw& law) {
  validate(sp);
  if (!is_admissible(sp, target)) {
    throw Error(ErrorKind::NotAdmissible, "(" + std::to_string(target.pos) + "," + std::to_string(target.neg) +
                                              ") for " + sp.to_string());
  }
  SearchResult res;
  res.budget = budget;
  res.seed = seed;
  res.law = law.describe();
  const int pairs = (sp.degree() - target.pos - target.neg) / 2;

  const auto sweep_budget = static_cast<std::uint64_t>(static_cast<double>(budget) * law.sweep_fraction);
  std::uint64_t used = 0;
  sweep_products(target, pairs, law.spread, [&](const RatPoly& q) {
    if (used >= sweep_budget) return false;
    ++used;
    // The leading coefficient is 1; flip the whole product if sp starts negative at the top.
    RatPoly p = sp.signs.back() > 0 ? q : -q;
    if (certify(p, sp, target)) {
      res.realized = true;
      res.witness = p;
      res.source = "sweep";
      return false;
    }
    return true;
  });
  if (res.realized) {
    res.trials = used;
    return res;
  }

  const std::string tag = "descartes:" + sp.to_string() + ":" + std::to_string(target.pos) + "," +
                          std::to_string(target.neg);
  for (std::uint64_t t = 0; used < budget; ++t) {
    ++used;
    auto rng = trial_rng(seed, tag, t);
    RatPoly p = t % 2 == 0 ? random_coefficients(sp, law.spread, rng) : random_factors(target, pairs, law.spread, rng);
    if (t % 2 == 1 && sp.signs.back() < 0) p = -p;
    if (certify(p, sp, target)) {
      res.realized = true;
      res.witness = p;
      res.source = "random";
      break;
    }
  }
  res.trials = used;
  return res;
}

std::string to_string(Status s) { return s == Status::Realized ? "REALIZED" : "OPEN"; }

std::vector<SurveyRow> survey_degree(int d, std::uint64_t budget, std::uint64_t seed, const SearchLaw& law) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "survey degree must be >= 1");
  if (d > 20) throw Error(ErrorKind::TooLarge, "survey degree capped at 20");
  std::map<std::pair<std::string, PairPN>, std::pair<SignPattern, PairPN>> combos;
  for (std::uint64_t mask = 0; mask < (1ULL << d); ++mask) {
    SignPattern sp;
    sp.signs.push_back(1);
    for (int k = 0; k < d; ++k) sp.signs.push_back((mask >> k) & 1 ? -1 : 1);
    for (const auto& pair : admissible_pairs(sp)) {
      auto canon = canonical_combination(sp, pair);
      combos.emplace(std::make_pair(canon.first.to_string(), canon.second), canon);
    }
  }
  std::vector<std::pair<SignPattern, PairPN>> work;
  for (auto& [key, value] : combos) work.push_back(value);

  std::vector<SurveyRow> rows(work.size());
  parallel_for(work.size(), [&](std::size_t i) {
    const auto& [sp, pair] = work[i];
    auto res = realize_search(sp, pair, budget, seed, law);
    SurveyRow row;
    row.pattern = sp;
    row.pair = pair;
    row.status = res.realized ? Status::Realized : Status::Open;
    row.witness = res.witness;
    row.trials = res.trials;
    row.orbit = symmetry_orbit(sp);
    row.conj11_candidate = !res.realized && pair.pos > 0 && pair.neg > 0;
    rows[i] = std::move(row);
  });
  return rows;
}

}  // namespace polyconj::descartes
