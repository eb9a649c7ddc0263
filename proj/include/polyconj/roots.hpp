#pragma once

#include <optional>
#include <vector>

#include "polyconj/ratpoly.hpp"

namespace polyconj {

/// Closed rational interval; a point interval encodes an exactly known root.
/// A non-point isolating interval contains its root strictly inside.
struct RatInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Smallest-denominator rational in [lo, hi].
Rational simplest_rational(const Rational& lo, const Rational& hi);

/// True when the root isolated by `a` is certainly smaller than the root
/// isolated by `b`.
bool certainly_before(const RatInterval& a, const RatInterval& b);

/// An interval endpoint; `std::nullopt` is the infinite end on that side.
using Endpoint = std::optional<Rational>;

struct SturmCount {
  int count = 0;  // distinct roots strictly inside
  bool lo_is_root = false;
  bool hi_is_root = false;
};

struct RootReport {
  int distinct_real = 0;
  int with_multiplicity = 0;
  std::vector<RatInterval> isolating;
  bool all_real_simple = false;
};

/// p / gcd(p, p'), monic. Throws ZeroPolynomial.
RatPoly squarefree_part(const RatPoly& p);

/// Sturm chain of the squarefree part of a polynomial. Counting is of
/// distinct roots.
class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& p);

  const RatPoly& squarefree() const { return chain_.front(); }
  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  /// Distinct roots in the open interval (lo, hi); endpoint roots are
  /// reported in the side flags, never counted.
  SturmCount count(const Endpoint& lo, const Endpoint& hi) const;

 private:
  std::vector<RatPoly> chain_;
};

SturmCount sturm_count(const RatPoly& p, const Endpoint& lo = std::nullopt, const Endpoint& hi = std::nullopt);

/// Number of real roots in (lo, hi) counted with multiplicity, via the chain
/// p, gcd(p, p'), gcd(gcd, gcd'), ...
int count_with_multiplicity(const RatPoly& p, const Endpoint& lo = std::nullopt,
                            const Endpoint& hi = std::nullopt);

/// Sturm-based isolation of the distinct real roots of a nonzero polynomial.
class RootIsolator {
 public:
  explicit RootIsolator(const RatPoly& p);

  const RatPoly& squarefree() const { return sturm_.squarefree(); }
  const SturmSequence& sturm() const { return sturm_; }
  /// Sorted, pairwise-disjoint isolating intervals.
  const std::vector<RatInterval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }

  /// Halves an isolating interval; collapses it to a point if the midpoint
  /// is the root.
  void bisect(RatInterval& iv) const;
  /// Cuts an isolating interval at an interior rational point c.
  void split_at(RatInterval& iv, const Rational& c) const;
  void refine(RatInterval& iv, const Rational& width) const;
  /// Collapses iv to a point if the simplest rational inside it is the root.
  bool snap_rational(RatInterval& iv) const;

 private:
  SturmSequence sturm_;
  std::vector<RatInterval> intervals_;
};

RootReport isolate_roots(const RatPoly& p);

/// A root of one of several polynomials, addressed by (set, index).
struct TaggedRoot {
  int set = 0;
  int index = 0;
  RatInterval iv;
};

/// Refines the roots of several polynomials until they are totally ordered.
/// Roots that coincide at an exact rational point are grouped together.
/// Returns nullopt if some pair is still unresolved after `max_rounds`.
std::optional<std::vector<std::vector<TaggedRoot>>> order_roots(const std::vector<const RootIsolator*>& sets,
                                                                int max_rounds = 256);
/// As above, starting from caller-refined copies of each set's intervals.
std::optional<std::vector<std::vector<TaggedRoot>>> order_roots(const std::vector<const RootIsolator*>& sets,
                                                                std::vector<std::vector<RatInterval>> start,
                                                                int max_rounds = 256);

/// Enclosure of the minimal gap between consecutive roots. `infinite` is set
/// when there are fewer than two roots.
struct MeshEnclosure {
  bool infinite = false;
  Rational lo;
  Rational hi;

  bool exact() const { return !infinite && lo == hi; }
};

/// Requires all roots real and simple (NotRealRooted / NotSimple).
MeshEnclosure mesh(const RatPoly& p, const Rational& width = Rational(1, 1 << 20));
/// Exact decision of mesh(p) >= delta. Fewer than two roots counts as true.
bool mesh_at_least(const RatPoly& p, const Rational& delta);

/// True iff p is real-rooted with simple roots. The zero polynomial is not.
bool is_real_rooted_simple(const RatPoly& p);
/// Membership in the class of real-rooted polynomials with mesh >= delta.
/// Constants, the zero polynomial included, belong to the class.
bool in_mesh_class(const RatPoly& p, const Rational& delta = Rational(1));

/// deg p = deg q + 1, both real-rooted simple; strict interlacing.
bool interlace_check(const RatPoly& p, const RatPoly& q);

/// Roots of a polynomial that splits over Q with simple roots, ascending.
/// Throws NotRationallySplit otherwise.
std::vector<Rational> rational_roots(const RatPoly& p);

/// No real roots and positive everywhere.
bool is_strictly_positive(const RatPoly& p);

}  // namespace polyconj
