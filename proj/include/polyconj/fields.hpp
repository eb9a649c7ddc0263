#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace polyconj::fields {

using Vec = Eigen::VectorXd;

struct ChargeConfig {
  std::vector<Vec> positions;
  std::vector<double> charges;

  int dim() const { return positions.empty() ? 0 : static_cast<int>(positions.front().size()); }
  int size() const { return static_cast<int>(charges.size()); }
  /// Checks matching sizes, common dimension, nonzero charges and distinct
  /// positions (InvalidArgument).
  void validate() const;
};

/// The four-charge square in the plane z = 0: +1 at (1,1,0) and (-1,-1,0),
/// -1 at the two other corners. Its equilibria fill the z-axis.
ChargeConfig square_config();

/// sum_i xi_i (x - x_i) / |x - x_i|^exponent. AtChargeSingularity within
/// 1e-12 of a charge.
Vec field_eval(const ChargeConfig& cfg, const Vec& x, double exponent = 3.0);
Eigen::MatrixXd field_jacobian(const ChargeConfig& cfg, const Vec& x, double exponent = 3.0);
/// sum_i xi_i |x - x_i|^(2 - exponent) / (exponent - 2), whose negative
/// gradient is the field (exponent != 2); 1/r for the Coulomb case.
double potential(const ChargeConfig& cfg, const Vec& x, double exponent = 3.0);

struct EquilibriumOptions {
  double exponent = 3.0;
  int grid_per_axis = 6;
  /// Seeded random starts; 0 means 256 N^2, enough to notice a curve.
  int random_starts = 0;
  double dedupe_radius = 1e-6;  // times the configuration scale
  double tolerance = 1e-12;     // relative residual
  int max_iterations = 200;
  std::uint64_t seed = 0;
};

enum class JacobianClass { Nondegenerate, Degenerate };

struct Equilibrium {
  Vec x;
  double residual = 0.0;
  JacobianClass jacobian = JacobianClass::Nondegenerate;
  /// Starts that converged to this point.
  int hits = 0;
};

struct EquilibriumSet {
  std::vector<Equilibrium> points;
  bool suspected_curve = false;
  int starts = 0;
  int converged = 0;
  int nondegenerate() const;
};

EquilibriumSet find_equilibria(const ChargeConfig& cfg, const EquilibriumOptions& opts = {});

/// Relative residual |E(x)| / sum_i |xi_i| / |x - x_i|^(exponent-1).
double relative_residual(const ChargeConfig& cfg, const Vec& x, double exponent = 3.0);

struct PsiConfig {
  std::vector<double> xs, ys, charges;
  double alpha = 1.0;

  int size() const { return static_cast<int>(charges.size()); }
  /// SingularOnLine when some y_i = 0, InvalidArgument for alpha < 1/2 or
  /// mismatched sizes.
  void validate() const;
};

double psi_eval(const PsiConfig& cfg, double x);
double psi_derivative(const PsiConfig& cfg, double x);

struct PsiMaxima {
  std::vector<double> locations;
  int count() const { return static_cast<int>(locations.size()); }
  /// Some critical point looked tangential at grid resolution.
  bool indeterminate = false;
  /// The search window provably contains every critical point (same-sign
  /// charges); otherwise it is a wide heuristic window.
  bool window_certified = false;
  double lo = 0.0, hi = 0.0;
  std::size_t grid_points = 0;
};

/// Local maxima via sign changes of the closed-form derivative on a grid
/// finer than min |y_i| / resolution, refined by bisection.
PsiMaxima psi_local_maxima(const PsiConfig& cfg, int resolution = 20);

/// Unit charges at x_i ~ U[-3, 3], |y_i| ~ U[0.1, 2] with random sign.
PsiConfig random_psi_config(int n, double alpha, std::uint64_t seed, std::uint64_t trial);
/// Unit positive charges at random positions in [-1, 1]^3, or in the plane
/// z = 0 when planar is set.
ChargeConfig random_charge_config(int n, bool planar, std::uint64_t seed, std::uint64_t trial);

}  // namespace polyconj::fields
