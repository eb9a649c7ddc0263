#include "polyconj/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "polyconj/error.hpp"
#include "polyconj/parallel.hpp"
#include "polyconj/rng.hpp"

namespace polyconj::fields {

void ChargeConfig::validate() const {
  if (charges.empty() || positions.size() != charges.size()) {
    throw Error(ErrorKind::InvalidArgument, "need one position per charge");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i].size() != positions[0].size() || positions[i].size() == 0) {
      throw Error(ErrorKind::InvalidArgument, "positions must share one dimension");
    }
    if (charges[i] == 0.0) throw Error(ErrorKind::InvalidArgument, "charges must be nonzero");
    for (std::size_t j = 0; j < i; ++j) {
      if ((positions[i] - positions[j]).norm() == 0.0) throw Error(ErrorKind::InvalidArgument, "duplicate position");
    }
  }
}

ChargeConfig square_config() {
  ChargeConfig c;
  c.positions = {Vec::Zero(3), Vec::Zero(3), Vec::Zero(3), Vec::Zero(3)};
  c.positions[0] << 1, 1, 0;
  c.positions[1] << -1, -1, 0;
  c.positions[2] << 1, -1, 0;
  c.positions[3] << -1, 1, 0;
  c.charges = {1, 1, -1, -1};
  return c;
}

Vec field_eval(const ChargeConfig& cfg, const Vec& x, double exponent) {
  Vec e = Vec::Zero(x.size());
  for (int i = 0; i < cfg.size(); ++i) {
    Vec r = x - cfg.positions[static_cast<std::size_t>(i)];
    double d = r.norm();
    if (d < 1e-12) throw Error(ErrorKind::AtChargeSingularity, "field evaluated at a charge");
    e += cfg.charges[static_cast<std::size_t>(i)] * r / std::pow(d, exponent);
  }
  return e;
}

Eigen::MatrixXd field_jacobian(const ChargeConfig& cfg, const Vec& x, double exponent) {
  const auto n = x.size();
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < cfg.size(); ++i) {
    Vec r = x - cfg.positions[static_cast<std::size_t>(i)];
    double d = r.norm();
    if (d < 1e-12) throw Error(ErrorKind::AtChargeSingularity, "jacobian evaluated at a charge");
    double xi = cfg.charges[static_cast<std::size_t>(i)];
    j += xi * (Eigen::MatrixXd::Identity(n, n) / std::pow(d, exponent) -
               exponent * (r * r.transpose()) / std::pow(d, exponent + 2));
  }
  return j;
}

double potential(const ChargeConfig& cfg, const Vec& x, double exponent) {
  double v = 0;
  for (int i = 0; i < cfg.size(); ++i) {
    double d = (x - cfg.positions[static_cast<std::size_t>(i)]).norm();
    if (d < 1e-12) throw Error(ErrorKind::AtChargeSingularity, "potential evaluated at a charge");
    v += cfg.charges[static_cast<std::size_t>(i)] * std::pow(d, 2 - exponent) / (exponent - 2);
  }
  return v;
}

double relative_residual(const ChargeConfig& cfg, const Vec& x, double exponent) {
  double scale = 0;
  for (int i = 0; i < cfg.size(); ++i) {
    double d = (x - cfg.positions[static_cast<std::size_t>(i)]).norm();
    scale += std::abs(cfg.charges[static_cast<std::size_t>(i)]) / std::pow(d, exponent - 1);
  }
  return field_eval(cfg, x, exponent).norm() / scale;
}

int EquilibriumSet::nondegenerate() const {
  return static_cast<int>(std::count_if(points.begin(), points.end(), [](const Equilibrium& e) {
    return e.jacobian == JacobianClass::Nondegenerate;
  }));
}

namespace {

struct Box {
  Vec center;
  double half = 1.0;  // half-width of the cube around the charges
};

Box bounding_box(const ChargeConfig& cfg) {
  Vec lo = cfg.positions[0], hi = cfg.positions[0];
  for (const auto& p : cfg.positions) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  Box b;
  b.center = (lo + hi) / 2;
  b.half = std::max(0.5 * (hi - lo).maxCoeff(), 1e-3);
  return b;
}

struct Outcome {
  bool converged = false;
  Vec x;
  double residual = 0;
};

double nearest_charge(const ChargeConfig& cfg, const Vec& x) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& p : cfg.positions) d = std::min(d, (x - p).norm());
  return d;
}

/// Converged points are kept within 32 box half-widths of the center.
bool inside(const Vec& x, const Box& box) { return (x - box.center).cwiseAbs().maxCoeff() <= 32 * box.half; }

Outcome accept(const ChargeConfig& cfg, const Vec& x, const EquilibriumOptions& o, const Box& box) {
  Outcome out;
  if (!inside(x, box) || nearest_charge(cfg, x) < 1e-9 * box.half) return out;
  double rel = relative_residual(cfg, x, o.exponent);
  if (rel < o.tolerance) {
    out.converged = true;
    out.x = x;
    out.residual = rel;
  }
  return out;
}

/// Merit for the line search: |E| times (1 + |x - c|^2 / h^2)^((p + 2) / 2).
/// Plain |E| decays towards infinity, which lures Newton away from the
/// charges; the weight makes infinity unattractive up to quadrupole order.
double merit(const ChargeConfig& cfg, const Vec& x, const EquilibriumOptions& o, const Box& box) {
  try {
    double r2 = (x - box.center).squaredNorm() / (box.half * box.half);
    return field_eval(cfg, x, o.exponent).norm() * std::pow(1 + r2, (o.exponent + 2) / 2);
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

/// Damped Newton with the closed-form Jacobian. Steps use the pseudo-inverse
/// so rank-deficient Jacobians (curves of zeros) still converge; they are
/// capped by half the distance to the nearest charge and backtracked on the
/// weighted merit. When Newton stalls, Levenberg-Marquardt steps on the same
/// merit take over.
Outcome damped_newton(const ChargeConfig& cfg, Vec x, const EquilibriumOptions& o, const Box& box) {
  double fx = merit(cfg, x, o, box);
  if (!std::isfinite(fx)) return {};
  double mu = 1e-3;
  for (int it = 0; it < o.max_iterations; ++it) {
    if (auto out = accept(cfg, x, o, box); out.converged) return out;
    Vec e = field_eval(cfg, x, o.exponent);
    Eigen::MatrixXd j = field_jacobian(cfg, x, o.exponent);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(j);
    cod.setThreshold(1e-10);
    Vec step = -cod.solve(e);
    double cap = 0.5 * nearest_charge(cfg, x);
    if (step.norm() > cap) step *= cap / step.norm();
    bool moved = false;
    for (int half = 0; half < 30 && !moved; ++half, step /= 2) {
      Vec y = x + step;
      double fy = merit(cfg, y, o, box);
      if (fy < fx) {
        x = y;
        fx = fy;
        moved = true;
      }
    }
    if (moved) continue;
    // fallback: minimize |E|^2 with Levenberg-Marquardt steps
    Eigen::MatrixXd a = j.transpose() * j;
    Vec g = j.transpose() * e;
    for (int tries = 0; tries < 30 && !moved; ++tries) {
      Eigen::MatrixXd damped = a;
      damped.diagonal().array() += mu * (1.0 + a.diagonal().array());
      Vec y = x + damped.ldlt().solve(-g);
      double fy = merit(cfg, y, o, box);
      if (fy < fx) {
        x = y;
        fx = fy;
        mu = std::max(mu / 10, 1e-15);
        moved = true;
      } else {
        mu *= 10;
      }
    }
    if (!moved) break;
  }
  return accept(cfg, x, o, box);
}

std::vector<Vec> start_points(const ChargeConfig& cfg, const EquilibriumOptions& o, const Box& box) {
  const int d = cfg.dim();
  std::vector<Vec> starts;
  const int g = std::max(1, o.grid_per_axis);
  long total = 1;
  for (int k = 0; k < d; ++k) total *= g;
  for (long idx = 0; idx < total; ++idx) {
    Vec x(d);
    long rest = idx;
    for (int k = 0; k < d; ++k) {
      int c = static_cast<int>(rest % g);
      rest /= g;
      // cell centers of a grid over twice the bounding box
      x[k] = box.center[k] + 2 * box.half * (-1.0 + (2.0 * c + 1.0) / g);
    }
    starts.push_back(x);
  }
  const int n = cfg.size();
  const int random = o.random_starts > 0 ? o.random_starts : 256 * n * n;
  for (int t = 0; t < random; ++t) {
    auto rng = trial_rng(o.seed, "maxwell", static_cast<std::uint64_t>(t));
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    Vec x(d);
    for (int k = 0; k < d; ++k) x[k] = box.center[k] + box.half * u(rng);
    starts.push_back(x);
  }
  return starts;
}

}  // namespace

EquilibriumSet find_equilibria(const ChargeConfig& cfg, const EquilibriumOptions& opts) {
  cfg.validate();
  const Box box = bounding_box(cfg);
  auto starts = start_points(cfg, opts, box);
  std::vector<Outcome> outcomes(starts.size());
  parallel_for(starts.size(), [&](std::size_t i) {
    try {
      outcomes[i] = damped_newton(cfg, starts[i], opts, box);
    } catch (const Error&) {
      outcomes[i] = Outcome{};
    }
  });

  EquilibriumSet set;
  set.starts = static_cast<int>(starts.size());
  std::vector<Outcome> hits;
  for (auto& o : outcomes) {
    if (o.converged) hits.push_back(o);
  }
  set.converged = static_cast<int>(hits.size());
  // Deterministic reduction: sort lexicographically, then greedy clustering.
  std::sort(hits.begin(), hits.end(), [](const Outcome& a, const Outcome& b) {
    return std::lexicographical_compare(a.x.data(), a.x.data() + a.x.size(), b.x.data(), b.x.data() + b.x.size());
  });
  const double radius = opts.dedupe_radius * box.half;
  for (const auto& h : hits) {
    auto near = std::find_if(set.points.begin(), set.points.end(),
                             [&](const Equilibrium& e) { return (e.x - h.x).norm() <= radius; });
    if (near != set.points.end()) {
      ++near->hits;
      if (h.residual < near->residual) {
        near->x = h.x;
        near->residual = h.residual;
      }
      continue;
    }
    Equilibrium e;
    e.x = h.x;
    e.residual = h.residual;
    e.hits = 1;
    set.points.push_back(e);
  }
  for (auto& e : set.points) {
    Eigen::MatrixXd j = field_jacobian(cfg, e.x, opts.exponent);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(j);
    auto s = svd.singularValues();
    e.jacobian = s.minCoeff() <= 1e-7 * s.maxCoeff() ? JacobianClass::Degenerate : JacobianClass::Nondegenerate;
  }
  const int n = cfg.size();
  set.suspected_curve = static_cast<int>(set.points.size()) > 50 * n * n;
  return set;
}

void PsiConfig::validate() const {
  if (charges.empty() || xs.size() != charges.size() || ys.size() != charges.size()) {
    throw Error(ErrorKind::InvalidArgument, "psi needs matching xs, ys, charges");
  }
  if (!(alpha >= 0.5)) throw Error(ErrorKind::InvalidArgument, "alpha must be >= 1/2");
  for (double y : ys) {
    if (y == 0.0) throw Error(ErrorKind::SingularOnLine, "some y_i = 0 puts a pole on the real line");
  }
}

double psi_eval(const PsiConfig& cfg, double x) {
  cfg.validate();
  double v = 0;
  for (int i = 0; i < cfg.size(); ++i) {
    auto u = static_cast<std::size_t>(i);
    double dx = x - cfg.xs[u];
    v += cfg.charges[u] / std::pow(dx * dx + cfg.ys[u] * cfg.ys[u], cfg.alpha);
  }
  return v;
}

double psi_derivative(const PsiConfig& cfg, double x) {
  double v = 0;
  for (int i = 0; i < cfg.size(); ++i) {
    auto u = static_cast<std::size_t>(i);
    double dx = x - cfg.xs[u];
    v += -2 * cfg.alpha * cfg.charges[u] * dx / std::pow(dx * dx + cfg.ys[u] * cfg.ys[u], cfg.alpha + 1);
  }
  return v;
}

PsiMaxima psi_local_maxima(const PsiConfig& cfg, int resolution) {
  cfg.validate();
  PsiMaxima out;
  const double xmin = *std::min_element(cfg.xs.begin(), cfg.xs.end());
  const double xmax = *std::max_element(cfg.xs.begin(), cfg.xs.end());
  double ymin = 1e300, ymax = 0;
  for (double y : cfg.ys) {
    ymin = std::min(ymin, std::abs(y));
    ymax = std::max(ymax, std::abs(y));
  }
  const bool same_sign = std::all_of(cfg.charges.begin(), cfg.charges.end(), [&](double c) {
    return (c > 0) == (cfg.charges[0] > 0);
  });
  double h = ymin / std::max(resolution, 1);
  // With one sign every term of Psi' has the sign of -(x - x_i) outside
  // [xmin, xmax], so all critical points lie inside; pad by one step.
  double pad = same_sign ? h : 50 * (xmax - xmin + ymax);
  out.window_certified = same_sign;
  out.lo = xmin - pad;
  out.hi = xmax + pad;
  const std::size_t max_points = 2000000;
  auto steps = static_cast<std::size_t>(std::ceil((out.hi - out.lo) / h));
  if (steps > max_points) {
    steps = max_points;
    h = (out.hi - out.lo) / static_cast<double>(steps);
  }
  out.grid_points = steps + 1;

  double scale = 0;
  for (int i = 0; i < cfg.size(); ++i) {
    auto u = static_cast<std::size_t>(i);
    scale = std::max(scale, 2 * cfg.alpha * std::abs(cfg.charges[u]) / std::pow(std::abs(cfg.ys[u]), 2 * cfg.alpha + 1));
  }
  const double tiny = 1e-10 * scale;

  std::vector<double> xs(steps + 1), ds(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    xs[k] = out.lo + h * static_cast<double>(k);
    ds[k] = psi_derivative(cfg, xs[k]);
  }
  for (std::size_t k = 0; k + 1 <= steps; ++k) {
    if (ds[k] > 0 && ds[k + 1] <= 0) {
      double a = xs[k], b = xs[k + 1];
      if (ds[k + 1] == 0 && k + 2 <= steps && ds[k + 2] >= 0) {
        out.indeterminate = true;  // touches zero without changing sign
        continue;
      }
      for (int it = 0; it < 100; ++it) {
        double m = 0.5 * (a + b);
        (psi_derivative(cfg, m) > 0 ? a : b) = m;
      }
      out.locations.push_back(0.5 * (a + b));
    }
    // a near-zero local minimum of |Psi'| without a sign change may hide a
    // pair of critical points below the grid resolution
    if (k >= 1 && std::abs(ds[k]) < tiny && std::abs(ds[k]) <= std::abs(ds[k - 1]) &&
        std::abs(ds[k]) <= std::abs(ds[k + 1]) && (ds[k - 1] > 0) == (ds[k + 1] > 0)) {
      out.indeterminate = true;
    }
  }
  return out;
}

PsiConfig random_psi_config(int n, double alpha, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_rng(seed, "psi", trial);
  std::uniform_real_distribution<double> ux(-3, 3), uy(0.1, 2);
  std::bernoulli_distribution flip(0.5);
  PsiConfig c;
  c.alpha = alpha;
  for (int i = 0; i < n; ++i) {
    c.xs.push_back(ux(rng));
    double y = uy(rng);
    c.ys.push_back(flip(rng) ? -y : y);
    c.charges.push_back(1.0);
  }
  return c;
}

ChargeConfig random_charge_config(int n, bool planar, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_rng(seed, "charges", trial);
  std::uniform_real_distribution<double> u(-1, 1);
  ChargeConfig c;
  for (int i = 0; i < n; ++i) {
    Vec x(3);
    x << u(rng), u(rng), planar ? 0.0 : u(rng);
    c.positions.push_back(x);
    c.charges.push_back(1.0);
  }
  return c;
}

}  // namespace polyconj::fields
