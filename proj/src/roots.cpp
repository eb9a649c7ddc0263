#include "polyconj/roots.hpp"

#include <algorithm>
#include <utility>

#include "polyconj/error.hpp"

namespace polyconj {

bool certainly_before(const RatInterval& a, const RatInterval& b) {
  if (a.hi < b.lo) return true;
  return a.hi == b.lo && !(a.is_point() && b.is_point());
}

Rational simplest_rational(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_rational(hi, lo);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_rational(-hi, -lo);
  // 0 < lo <= hi: continued-fraction descent.
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational a = lo - Rational(fl);
  Rational b = hi - Rational(fl);
  // fl < lo <= hi < fl + 1: recurse on the reciprocals.
  Rational inner = simplest_rational(1 / b, 1 / a);
  Rational out = Rational(fl) + 1 / inner;
  out.canonicalize();
  return out;
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree_part");
  if (p.degree() == 0) return RatPoly::constant(1);
  RatPoly g = gcd(p, p.derivative());
  return divmod(p, g).quotient.monic();
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rational cauchy_bound_pow2(const RatPoly& p) {
  Rational m = 0;
  const Rational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(k) / lead);
    if (r > m) m = r;
  }
  Rational bound = 1 + m;
  Rational b = 1;
  while (b <= bound) b *= 2;
  return b;
}

}  // namespace

SturmSequence::SturmSequence(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "sturm sequence");
  chain_.push_back(squarefree_part(p));
  if (chain_.front().degree() == 0) return;
  chain_.push_back(chain_.front().derivative().normalized_sign());
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    RatPoly r = divmod(a, b).remainder;
    if (r.is_zero()) break;
    chain_.push_back((-r).normalized_sign());
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return variations(signs);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
  return variations(signs);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1));
  return variations(signs);
}

SturmCount SturmSequence::count(const Endpoint& lo, const Endpoint& hi) const {
  SturmCount out;
  if (lo && hi && *lo >= *hi) {
    if (*lo == *hi) out.lo_is_root = out.hi_is_root = squarefree().sign_at(*lo) == 0;
    return out;
  }
  // V(x) with zeros dropped equals V(x+) for a squarefree chain, hence
  // N(lo, hi) = V(lo) - V(hi) - [hi is a root].
  int v_lo = lo ? variations_at(*lo) : variations_at_neg_inf();
  int v_hi = hi ? variations_at(*hi) : variations_at_pos_inf();
  out.lo_is_root = lo && squarefree().sign_at(*lo) == 0;
  out.hi_is_root = hi && squarefree().sign_at(*hi) == 0;
  out.count = v_lo - v_hi - (out.hi_is_root ? 1 : 0);
  return out;
}

SturmCount sturm_count(const RatPoly& p, const Endpoint& lo, const Endpoint& hi) {
  return SturmSequence(p).count(lo, hi);
}

int count_with_multiplicity(const RatPoly& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "count_with_multiplicity");
  int total = 0;
  RatPoly g = p;
  while (g.degree() > 0) {
    total += sturm_count(g, lo, hi).count;
    g = gcd(g, g.derivative());
  }
  return total;
}

RootIsolator::RootIsolator(const RatPoly& p) : sturm_(p) {
  const RatPoly& s = squarefree();
  if (s.degree() <= 0) return;
  const Rational bound = cauchy_bound_pow2(s);

  struct Pending {
    Rational lo, hi;
    int v_lo, v_hi;
  };
  std::vector<Pending> stack;
  stack.push_back({-bound, bound, sturm_.variations_at(-bound), sturm_.variations_at(bound)});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    int n = cur.v_lo - cur.v_hi;
    if (n <= 0) continue;
    if (n == 1) {
      intervals_.push_back({cur.lo, cur.hi});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    int v_mid = sturm_.variations_at(mid);
    if (s.sign_at(mid) != 0) {
      stack.push_back({mid, cur.hi, v_mid, cur.v_hi});
      stack.push_back({cur.lo, mid, cur.v_lo, v_mid});
      continue;
    }
    intervals_.push_back({mid, mid});
    // Pull the root endpoint inward so every stored interval has non-root ends.
    if (cur.v_lo - v_mid - 1 > 0) {
      Rational step = (mid - cur.lo) / 2;
      while (true) {
        Rational m = mid - step;
        if (s.sign_at(m) != 0) {
          int v_m = sturm_.variations_at(m);
          if (v_m - v_mid - 1 == 0) {
            stack.push_back({cur.lo, m, cur.v_lo, v_m});
            break;
          }
        }
        step /= 2;
      }
    }
    if (v_mid - cur.v_hi > 0) {
      Rational step = (cur.hi - mid) / 2;
      while (true) {
        Rational m = mid + step;
        if (s.sign_at(m) != 0) {
          int v_m = sturm_.variations_at(m);
          if (v_mid - v_m == 0) {
            stack.push_back({m, cur.hi, v_m, cur.v_hi});
            break;
          }
        }
        step /= 2;
      }
    }
  }
  std::sort(intervals_.begin(), intervals_.end(),
            [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
}

void RootIsolator::bisect(RatInterval& iv) const {
  if (iv.is_point()) return;
  split_at(iv, iv.midpoint());
}

void RootIsolator::split_at(RatInterval& iv, const Rational& c) const {
  if (iv.is_point() || c <= iv.lo || c >= iv.hi) return;
  const RatPoly& s = squarefree();
  int sc = s.sign_at(c);
  if (sc == 0) {
    iv.lo = c;
    iv.hi = c;
    return;
  }
  if (sc == s.sign_at(iv.lo)) {
    iv.lo = c;
  } else {
    iv.hi = c;
  }
}

void RootIsolator::refine(RatInterval& iv, const Rational& width) const {
  while (!iv.is_point() && iv.width() > width) bisect(iv);
}

bool RootIsolator::snap_rational(RatInterval& iv) const {
  if (iv.is_point()) return true;
  Rational c = simplest_rational(iv.lo, iv.hi);
  if (squarefree().sign_at(c) != 0) return false;
  iv.lo = c;
  iv.hi = c;
  return true;
}

RootReport isolate_roots(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "isolate_roots");
  RootIsolator iso(p);
  RootReport rep;
  rep.isolating = iso.intervals();
  rep.distinct_real = static_cast<int>(rep.isolating.size());
  rep.with_multiplicity = count_with_multiplicity(p);
  bool squarefree = iso.squarefree().degree() == p.degree();
  rep.all_real_simple = squarefree && rep.with_multiplicity == p.degree();
  return rep;
}

std::optional<std::vector<std::vector<TaggedRoot>>> order_roots(const std::vector<const RootIsolator*>& sets,
                                                                int max_rounds) {
  std::vector<std::vector<RatInterval>> start;
  for (const auto* s : sets) start.push_back(s->intervals());
  return order_roots(sets, std::move(start), max_rounds);
}

std::optional<std::vector<std::vector<TaggedRoot>>> order_roots(const std::vector<const RootIsolator*>& sets,
                                                                std::vector<std::vector<RatInterval>> start,
                                                                int max_rounds) {
  if (start.size() != sets.size()) throw Error(ErrorKind::InvalidArgument, "order_roots: one interval list per set");
  std::vector<TaggedRoot> roots;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    const auto& ivs = start[s];
    for (std::size_t i = 0; i < ivs.size(); ++i) roots.push_back({static_cast<int>(s), static_cast<int>(i), ivs[i]});
  }
  auto coincident = [](const TaggedRoot& a, const TaggedRoot& b) {
    return a.iv.is_point() && b.iv.is_point() && a.iv.lo == b.iv.lo;
  };
  auto separated = [&](const TaggedRoot& a, const TaggedRoot& b) {
    return coincident(a, b) || certainly_before(a.iv, b.iv) || certainly_before(b.iv, a.iv);
  };

  for (int round = 0;; ++round) {
    bool clean = true;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        auto& a = roots[i];
        auto& b = roots[j];
        if (separated(a, b)) continue;
        clean = false;
        const RootIsolator& ia = *sets[static_cast<std::size_t>(a.set)];
        const RootIsolator& ib = *sets[static_cast<std::size_t>(b.set)];
        if (a.iv.is_point()) {
          if (b.iv.lo == a.iv.lo || b.iv.hi == a.iv.lo) continue;  // already certified by certainly_before
          ib.split_at(b.iv, a.iv.lo);
        } else if (b.iv.is_point()) {
          ia.split_at(a.iv, b.iv.lo);
        } else if (a.iv.width() >= b.iv.width()) {
          ia.bisect(a.iv);
        } else {
          ib.bisect(b.iv);
        }
      }
    }
    if (clean) break;
    if (round >= max_rounds) return std::nullopt;
  }

  std::sort(roots.begin(), roots.end(), [](const TaggedRoot& a, const TaggedRoot& b) {
    if (a.iv.lo != b.iv.lo) return a.iv.lo < b.iv.lo;
    return a.iv.hi < b.iv.hi;
  });
  std::vector<std::vector<TaggedRoot>> groups;
  for (auto& r : roots) {
    if (!groups.empty() && coincident(groups.back().front(), r)) {
      groups.back().push_back(std::move(r));
    } else {
      groups.push_back({std::move(r)});
    }
  }
  // Sorting by lo is a certified order because every pair is separated.
  return groups;
}

namespace {

void require_real_simple(const RatPoly& p, const char* what) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, what);
  if (count_with_multiplicity(p) != p.degree()) throw Error(ErrorKind::NotRealRooted, std::string(what) + ": " + p.to_string());
  if (squarefree_part(p).degree() != p.degree()) throw Error(ErrorKind::NotSimple, std::string(what) + ": " + p.to_string());
}

}  // namespace

MeshEnclosure mesh(const RatPoly& p, const Rational& width) {
  require_real_simple(p, "mesh");
  RootIsolator iso(p);
  MeshEnclosure out;
  if (iso.size() < 2) {
    out.infinite = true;
    return out;
  }
  std::vector<RatInterval> ivs = iso.intervals();
  for (auto& iv : ivs) {
    iso.refine(iv, width);
    iso.snap_rational(iv);
  }
  bool first = true;
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
    Rational glo = ivs[i + 1].lo - ivs[i].hi;
    Rational ghi = ivs[i + 1].hi - ivs[i].lo;
    if (glo < 0) glo = 0;
    if (first || glo < out.lo) out.lo = glo;
    if (first || ghi < out.hi) out.hi = ghi;
    first = false;
  }
  return out;
}

bool mesh_at_least(const RatPoly& p, const Rational& delta) {
  require_real_simple(p, "mesh_at_least");
  RootIsolator iso(p);
  if (iso.size() < 2) return true;
  const RatPoly& s = iso.squarefree();
  // Roots r with r + delta also a root.
  RatPoly shift_gcd = gcd(s, s.shifted(delta));
  std::vector<RatInterval> ivs = iso.intervals();

  auto root_of_gcd_in = [&](const RatInterval& iv) {
    if (shift_gcd.degree() <= 0) return false;
    if (iv.is_point()) return shift_gcd.sign_at(iv.lo) == 0;
    return sturm_count(shift_gcd, iv.lo, iv.hi).count > 0;
  };

  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
    auto& a = ivs[i];
    auto& b = ivs[i + 1];
    const bool exact_candidate = root_of_gcd_in(a);
    while (true) {
      Rational gap_lo = b.lo - a.hi;
      Rational gap_hi = b.hi - a.lo;
      if (gap_lo >= delta) break;
      if (gap_hi < delta) return false;
      if (exact_candidate) {
        // r_a + delta is a root of s and lies at or beyond r_b, so the gap is
        // delta exactly when r_a + delta is the root isolated by b.
        if (b.is_point()) {
          Rational c = b.lo - delta;
          bool in_a = a.is_point() ? c == a.lo : (a.lo < c && c < a.hi);
          if (in_a && s.sign_at(c) == 0) break;
          return false;
        }
        Rational lo = a.lo + delta;
        Rational hi = a.hi + delta;
        if (b.lo <= lo && hi <= b.hi && (a.is_point() ? (b.lo < lo && hi < b.hi) : true)) break;
        if (hi <= b.lo || lo >= b.hi) return false;
      }
      if (a.width() >= b.width()) {
        iso.bisect(a);
      } else {
        iso.bisect(b);
      }
    }
  }
  return true;
}

bool is_real_rooted_simple(const RatPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  if (squarefree_part(p).degree() != p.degree()) return false;
  return sturm_count(p).count == p.degree();
}

bool in_mesh_class(const RatPoly& p, const Rational& delta) {
  if (p.degree() <= 0) return true;
  if (!is_real_rooted_simple(p)) return false;
  return mesh_at_least(p, delta);
}

bool interlace_check(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero() || p.degree() != q.degree() + 1)
    throw Error(ErrorKind::DegreeMismatch, "interlace_check needs deg p = deg q + 1");
  if (!is_real_rooted_simple(p)) throw Error(ErrorKind::NotRealRooted, "interlace_check: p = " + p.to_string());
  if (!is_real_rooted_simple(q)) throw Error(ErrorKind::NotRealRooted, "interlace_check: q = " + q.to_string());
  if (gcd(p, q).degree() > 0) return false;
  RootIsolator ip(p);
  RootIsolator iq(q);
  auto order = order_roots({&ip, &iq}, 100000);
  if (!order) return false;
  const auto& groups = *order;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (groups[k].size() != 1) return false;
    if (groups[k].front().set != static_cast<int>(k % 2)) return false;
  }
  return true;
}

std::vector<Rational> rational_roots(const RatPoly& p) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "rational_roots needs degree >= 1");
  if (!is_real_rooted_simple(p)) throw Error(ErrorKind::NotRationallySplit, "not real-rooted with simple roots");
  // Scale to integer coefficients; a rational root a/b then has b | lead, and
  // two such rationals differ by at least 1/lead^2.
  Integer lcm_den(1);
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Rational lead = abs(p.leading() * Rational(lcm_den));
  Rational width = Rational(1) / (2 * lead * lead);
  RootIsolator iso(p);
  std::vector<Rational> roots;
  for (RatInterval iv : iso.intervals()) {
    if (!iv.is_point()) iso.refine(iv, width);
    Rational r = iv.is_point() ? iv.lo : simplest_rational(iv.lo, iv.hi);
    if (p.sign_at(r) != 0) throw Error(ErrorKind::NotRationallySplit, p.to_string());
    roots.push_back(r);
  }
  return roots;
}

bool is_strictly_positive(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "is_strictly_positive");
  return sturm_count(p).count == 0 && p.sign_at(Rational(0)) > 0;
}

}  // namespace polyconj
