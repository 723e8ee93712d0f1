#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "htype/geometry.hpp"
#include "htype/group.hpp"

namespace htype {

/// Samples of a radial function on a strictly increasing rho grid.
struct RadialProfile {
  Eigen::VectorXd grid;
  Eigen::VectorXd values;

  void validate() const;  // throws std::invalid_argument
};

double r_from_rho(double rho);
double rho_from_r(double r);

/// Closed-form radial volume density: omega(rho) = 2^{m+k} cosh(rho/2)^k sinh(rho/2)^{m+k}.
double density_omega(const Space& space, double rho);

/// The same density through the r-coordinate closed form,
/// 2^{m+k+1} (1-r^2)^{-Q-1} r^{m+k} dr/drho with r = tanh(rho/2).
double density_omega_r_form(const Space& space, double rho);

/// b(rho) = d/drho log omega = (k/2) tanh(rho/2) + ((m+k)/2) coth(rho/2).
double radial_drift(const Space& space, double rho);

/// -(f'' + b f') on the interior grid, discretized in conservative flux
/// form -(omega u')'/omega with omega evaluated at cell midpoints (exactly
/// selfadjoint and positive for the weight omega).
RadialProfile radial_laplacian(const Space& space, const RadialProfile& f);

/// -(1/sqrt(det g)) d_i(sqrt(det g) g^{ij} d_j f) by nested central
/// differences; second order in the step.
double laplace_beltrami_at(const BallMetric& metric, const BallPoint& b,
                           const std::function<double(const BallPoint&)>& f, double step = 1e-3);
double laplace_beltrami_at(const Space& space, const BallPoint& b,
                           const std::function<double(const BallPoint&)>& f, double step = 1e-3);

struct HarmonicityReport {
  double rho = 0.0;
  int n_directions = 0;
  double min_value = 0.0;
  double max_value = 0.0;
  double spread = 0.0;           // max - min over directions
  double radial_value = 0.0;     // -(f'' + b f') at rho
  double radial_deviation = 0.0; // max |value - radial_value|
  double tolerance = 0.0;
  bool pass = false;
};

/// Evaluates the full Laplace-Beltrami operator of the radial function
/// f(rho) at n_directions random points at distance rho and compares the
/// values with each other and with the radial operator.
HarmonicityReport harmonicity_check(const BallMetric& metric,
                                    const std::function<double(double)>& f, double rho,
                                    int n_directions, unsigned long seed = 12345,
                                    double tol_scale = 1e-4);

/// sqrt(det g_B) at r(rho) * dir, times the polar Jacobian r^{m+k} dr/drho.
double volume_density_numeric(const BallMetric& metric, double rho,
                              const Eigen::VectorXd& omega_dir);

enum class HeatBoundary { reflecting, absorbing };

struct HeatSolution {
  Eigen::VectorXd grid;                 // cell centers
  std::vector<double> times;
  std::vector<Eigen::VectorXd> profiles;
  std::vector<double> mass;             // sum u_j omega_j drho per stored time
  std::vector<double> second_moment;    // sum rho_j^2 u_j omega_j drho
};

/// Crank-Nicolson solve of du/dt = u'' + b(rho) u' in conservative form on
/// a uniform cell-centered grid; zero flux at rho = 0.
HeatSolution heat_solve(const Space& space, double rho_max, int n_grid, double t_end,
                        int n_steps, const RadialProfile& init,
                        HeatBoundary boundary = HeatBoundary::reflecting);

/// Normalized Gaussian bump (unit omega-weighted mass) sampled on the
/// solver grid; width is clamped to at least three cells.
RadialProfile gaussian_bump(const Space& space, double rho_max, int n_grid, double center,
                            double width);

}  // namespace htype
