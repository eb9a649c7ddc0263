#include "polyconj/sos.hpp"

#include <algorithm>
#include <set>

#include "polyconj/error.hpp"
#include "polyconj/roots.hpp"

namespace polyconj::sos {

Rational GridSOS::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != l) throw Error(ErrorKind::InvalidArgument, "point has the wrong dimension");
  Rational s = 0;
  for (int j = 0; j < l; ++j) {
    Rational a = axis_polys[static_cast<std::size_t>(j)](x[static_cast<std::size_t>(j)]);
    s += a * a;
  }
  return s;
}

std::vector<Rational> GridSOS::hessian_diagonal(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != l) throw Error(ErrorKind::InvalidArgument, "point has the wrong dimension");
  std::vector<Rational> h;
  for (int j = 0; j < l; ++j) {
    const auto& a = axis_polys[static_cast<std::size_t>(j)];
    const Rational& r = x[static_cast<std::size_t>(j)];
    Rational d1 = a.derivative()(r);
    // d^2/dx^2 A^2 = 2 A'^2 + 2 A A''
    Rational v = 2 * d1 * d1 + 2 * a(r) * a.derivative(2)(r);
    v.canonicalize();
    h.push_back(v);
  }
  return h;
}

std::size_t GridSOS::zero_count() const {
  std::size_t n = 1;
  for (const auto& r : axis_roots) n *= r.size();
  return n;
}

std::vector<std::vector<Rational>> GridSOS::zeros() const {
  std::vector<std::vector<Rational>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(l), 0);
  const std::size_t total = zero_count();
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<Rational> p;
    for (int j = 0; j < l; ++j) p.push_back(axis_roots[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]]);
    out.push_back(std::move(p));
    for (int j = l - 1; j >= 0; --j) {
      auto u = static_cast<std::size_t>(j);
      if (++idx[u] < axis_roots[u].size()) break;
      idx[u] = 0;
    }
  }
  return out;
}

GridSOS grid_sos(int k, int l, const std::vector<std::vector<Rational>>& axis_roots) {
  if (k < 1 || l < 1) throw Error(ErrorKind::InvalidArgument, "need k >= 1 and l >= 1");
  if (axis_roots.size() != 1 && axis_roots.size() != static_cast<std::size_t>(l)) {
    throw Error(ErrorKind::InvalidArgument, "give one root list or one per axis");
  }
  GridSOS g;
  g.k = k;
  g.l = l;
  for (int j = 0; j < l; ++j) {
    auto roots = axis_roots[axis_roots.size() == 1 ? 0 : static_cast<std::size_t>(j)];
    if (static_cast<int>(roots.size()) != k) throw Error(ErrorKind::InvalidArgument, "each axis needs exactly k roots");
    for (auto& r : roots) r.canonicalize();
    std::set<Rational> distinct(roots.begin(), roots.end());
    if (distinct.size() != roots.size()) throw Error(ErrorKind::DuplicateAxisRoots, "axis roots must be distinct");
    std::sort(roots.begin(), roots.end());
    g.axis_polys.push_back(RatPoly::from_roots(roots));
    g.axis_roots.push_back(std::move(roots));
  }
  return g;
}

GridSOS grid_sos(int k, int l) {
  std::vector<Rational> roots;
  for (int i = 0; i < k; ++i) roots.emplace_back(i);
  return grid_sos(k, l, {roots});
}

Verification verify_isolated(const GridSOS& g) {
  Verification v;
  v.all_vanish = true;
  v.all_hessians_positive = true;
  bool first = true;
  for (const auto& z : g.zeros()) {
    ++v.zeros_checked;
    if (g.eval(z) != 0) v.all_vanish = false;
    for (const auto& h : g.hessian_diagonal(z)) {
      if (h <= 0) v.all_hessians_positive = false;
      if (first || h < v.min_hessian_entry) v.min_hessian_entry = h;
      first = false;
    }
  }
  v.zero_set_exact = std::all_of(g.axis_polys.begin(), g.axis_polys.end(), [&](const RatPoly& a) {
    return a.degree() == g.k && is_real_rooted_simple(a) && sturm_count(a).count == g.k;
  });
  v.ok = v.all_vanish && v.all_hessians_positive && v.zero_set_exact && v.zeros_checked == g.zero_count();
  return v;
}

BoundsTable bounds_table(int k, int l) {
  if (k < 1 || l < 1) throw Error(ErrorKind::InvalidArgument, "need k >= 1 and l >= 1");
  BoundsTable t;
  t.k = k;
  t.l = l;
  mpz_ui_pow_ui(t.sos_lower.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(l));
  mpz_ui_pow_ui(t.general_upper.get_mpz_t(), static_cast<unsigned long>(2 * k - 1), static_cast<unsigned long>(l));
  t.best_upper = t.general_upper;
  if (l == 2) {
    t.has_plane_refinement = true;
    t.plane_sos_exact = Integer(k) * k;
    t.plane_upper = Integer(3) * k * (k - 1) / 2 + 1;
    t.best_upper = std::min(t.best_upper, t.plane_upper);
  }
  return t;
}

}  // namespace polyconj::sos
