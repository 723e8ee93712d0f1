#include "htype/radial.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace htype {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void RadialProfile::validate() const {
  if (grid.size() != values.size())
    throw std::invalid_argument("RadialProfile: grid/values length mismatch");
  if (grid.size() > 0 && grid(0) < 0.0)
    throw std::invalid_argument("RadialProfile: grid must be nonnegative");
  for (int i = 1; i < grid.size(); ++i)
    if (grid(i) <= grid(i - 1))
      throw std::invalid_argument("RadialProfile: grid must be strictly increasing");
}

double r_from_rho(double rho) {
  if (rho < 0.0) throw std::domain_error("r_from_rho: rho must be >= 0");
  return std::tanh(0.5 * rho);
}

double rho_from_r(double r) {
  if (r < 0.0 || r >= 1.0) throw std::domain_error("rho_from_r: r must be in [0, 1)");
  return std::log((1.0 + r) / (1.0 - r));
}

double density_omega(const Space& space, double rho) {
  int m = space.m(), k = space.k();
  return std::pow(2.0, m + k) * std::pow(std::cosh(0.5 * rho), k) *
         std::pow(std::sinh(0.5 * rho), m + k);
}

double density_omega_r_form(const Space& space, double rho) {
  int m = space.m(), k = space.k();
  double r = r_from_rho(rho);
  double drdrho = 0.5 * (1.0 - r * r);
  return std::pow(2.0, m + k + 1) * std::pow(1.0 - r * r, -space.Q() - 1.0) *
         std::pow(r, m + k) * drdrho;
}

double radial_drift(const Space& space, double rho) {
  if (rho <= 0.0) throw std::domain_error("radial_drift: rho must be > 0");
  int m = space.m(), k = space.k();
  return 0.5 * k * std::tanh(0.5 * rho) + 0.5 * (m + k) / std::tanh(0.5 * rho);
}

RadialProfile radial_laplacian(const Space& space, const RadialProfile& f) {
  f.validate();
  int n = f.grid.size();
  if (n < 3) throw std::invalid_argument("radial_laplacian: need at least 3 grid points");
  RadialProfile out;
  out.grid = f.grid.segment(1, n - 2);
  out.values.resize(n - 2);
  for (int j = 1; j < n - 1; ++j) {
    double hm = f.grid(j) - f.grid(j - 1);
    double hp = f.grid(j + 1) - f.grid(j);
    double wl = density_omega(space, 0.5 * (f.grid(j - 1) + f.grid(j)));
    double wr = density_omega(space, 0.5 * (f.grid(j) + f.grid(j + 1)));
    double wc = density_omega(space, f.grid(j));
    double flux_r = wr * (f.values(j + 1) - f.values(j)) / hp;
    double flux_l = wl * (f.values(j) - f.values(j - 1)) / hm;
    out.values(j - 1) = -(flux_r - flux_l) / (wc * 0.5 * (hm + hp));
  }
  return out;
}

double laplace_beltrami_at(const BallMetric& metric, const BallPoint& b,
                           const std::function<double(const BallPoint&)>& f, double step) {
  const Space& space = metric.space();
  int n = space.dim();
  double h = step;

  // V^i(x) = sqrt(det g) g^{ij} d_j f (central differences for d_j f).
  auto flux = [&](const VectorXd& x) {
    BallPoint p = space.unpack_ball(x);
    MatrixXd g = metric.metric_at(p);
    VectorXd grad(n);
    for (int j = 0; j < n; ++j) {
      VectorXd xp = x, xm = x;
      xp(j) += h;
      xm(j) -= h;
      grad(j) = (f(space.unpack_ball(xp)) - f(space.unpack_ball(xm))) / (2 * h);
    }
    return VectorXd(std::sqrt(g.determinant()) * (g.inverse() * grad));
  };

  VectorXd x = space.pack(b);
  double div = 0.0;
  for (int i = 0; i < n; ++i) {
    VectorXd xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    div += (flux(xp)(i) - flux(xm)(i)) / (2 * h);
  }
  return -div / metric.sqrt_det_at(b);
}

double laplace_beltrami_at(const Space& space, const BallPoint& b,
                           const std::function<double(const BallPoint&)>& f, double step) {
  return laplace_beltrami_at(BallMetric(space), b, f, step);
}

HarmonicityReport harmonicity_check(const BallMetric& metric,
                                    const std::function<double(double)>& f, double rho,
                                    int n_directions, unsigned long seed, double tol_scale) {
  if (n_directions < 1) throw std::invalid_argument("harmonicity_check: n_directions >= 1");
  const Space& space = metric.space();
  int n = space.dim();
  double r = r_from_rho(rho);

  auto field = [&](const BallPoint& p) { return f(distance_from_origin(space, p)); };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  HarmonicityReport rep;
  rep.rho = rho;
  rep.n_directions = n_directions;
  rep.min_value = std::numeric_limits<double>::infinity();
  rep.max_value = -std::numeric_limits<double>::infinity();

  for (int d = 0; d < n_directions; ++d) {
    VectorXd dir(n);
    for (int i = 0; i < n; ++i) dir(i) = gauss(rng);
    dir.normalize();
    BallPoint p = space.unpack_ball(VectorXd(r * dir));
    double v = laplace_beltrami_at(metric, p, field);
    rep.min_value = std::min(rep.min_value, v);
    rep.max_value = std::max(rep.max_value, v);
  }
  rep.spread = rep.max_value - rep.min_value;

  // Radial operator -(f'' + b f') by one-dimensional central differences.
  double h = 1e-4;
  double fpp = (f(rho + h) - 2.0 * f(rho) + f(rho - h)) / (h * h);
  double fp = (f(rho + h) - f(rho - h)) / (2 * h);
  rep.radial_value = -(fpp + radial_drift(space, rho) * fp);
  rep.radial_deviation = std::max(std::abs(rep.max_value - rep.radial_value),
                                  std::abs(rep.min_value - rep.radial_value));

  double scale = std::max(std::abs(rep.min_value), std::abs(rep.max_value));
  rep.tolerance = tol_scale * (1.0 + scale);
  rep.pass = rep.spread <= rep.tolerance;
  return rep;
}

double volume_density_numeric(const BallMetric& metric, double rho,
                              const Eigen::VectorXd& omega_dir) {
  const Space& space = metric.space();
  if (omega_dir.size() != space.dim())
    throw std::invalid_argument("volume_density_numeric: direction dimension mismatch");
  double r = r_from_rho(rho);
  double drdrho = 0.5 * (1.0 - r * r);
  VectorXd x = r * omega_dir / omega_dir.norm();
  double sd = metric.sqrt_det_at(space.unpack_ball(x));
  return sd * std::pow(r, space.m() + space.k()) * drdrho;
}

namespace {

// Linear interpolation, zero outside the sample range.
double interp(const RadialProfile& p, double x) {
  int n = p.grid.size();
  if (n == 0 || x < p.grid(0) || x > p.grid(n - 1)) return 0.0;
  int lo = 0, hi = n - 1;
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    (p.grid(mid) <= x ? lo : hi) = mid;
  }
  double w = (x - p.grid(lo)) / (p.grid(hi) - p.grid(lo));
  return (1.0 - w) * p.values(lo) + w * p.values(hi);
}

void thomas_solve(VectorXd& lower, VectorXd& diag, VectorXd& upper, VectorXd& rhs) {
  int n = diag.size();
  for (int i = 1; i < n; ++i) {
    double w = lower(i) / diag(i - 1);
    diag(i) -= w * upper(i - 1);
    rhs(i) -= w * rhs(i - 1);
  }
  rhs(n - 1) /= diag(n - 1);
  for (int i = n - 2; i >= 0; --i) rhs(i) = (rhs(i) - upper(i) * rhs(i + 1)) / diag(i);
}

}  // namespace

HeatSolution heat_solve(const Space& space, double rho_max, int n_grid, double t_end,
                        int n_steps, const RadialProfile& init, HeatBoundary boundary) {
  if (rho_max <= 0.0 || n_grid < 3 || t_end <= 0.0 || n_steps < 1)
    throw std::invalid_argument("heat_solve: bad grid or time parameters");
  init.validate();

  double drho = rho_max / n_grid;
  double dt = t_end / n_steps;

  VectorXd grid(n_grid), wc(n_grid), wface(n_grid + 1);
  for (int j = 0; j < n_grid; ++j) {
    grid(j) = (j + 0.5) * drho;
    wc(j) = density_omega(space, grid(j));
  }
  wface(0) = 0.0;  // omega(0) = 0: the zero-flux condition at the center is automatic
  for (int j = 1; j <= n_grid; ++j) wface(j) = density_omega(space, j * drho);

  // Semi-discrete operator: wc_j du_j/dt = (F_{j+1/2} - F_{j-1/2}) / drho,
  // F = wface (u_{j+1} - u_j) / drho.  Stored as a tridiagonal A with
  // du/dt = A u.  Reflecting: zero flux at the outer face.  Absorbing:
  // Dirichlet zero at the outer face (half-cell gradient).
  VectorXd Alow = VectorXd::Zero(n_grid), Adiag = VectorXd::Zero(n_grid),
           Aup = VectorXd::Zero(n_grid);
  for (int j = 0; j < n_grid; ++j) {
    double c = wc(j) * drho * drho;
    if (j > 0) {
      Alow(j) = wface(j) / c;
      Adiag(j) -= wface(j) / c;
    }
    if (j < n_grid - 1) {
      Aup(j) = wface(j + 1) / c;
      Adiag(j) -= wface(j + 1) / c;
    }
  }
  if (boundary == HeatBoundary::absorbing)
    Adiag(n_grid - 1) -= 2.0 * wface(n_grid) / (wc(n_grid - 1) * drho * drho);

  VectorXd u(n_grid);
  for (int j = 0; j < n_grid; ++j) u(j) = interp(init, grid(j));

  HeatSolution sol;
  sol.grid = grid;
  auto record = [&](double t) {
    sol.times.push_back(t);
    sol.profiles.push_back(u);
    double mass = 0.0, mom2 = 0.0;
    for (int j = 0; j < n_grid; ++j) {
      mass += u(j) * wc(j) * drho;
      mom2 += grid(j) * grid(j) * u(j) * wc(j) * drho;
    }
    sol.mass.push_back(mass);
    sol.second_moment.push_back(mom2);
  };
  record(0.0);

  for (int step = 0; step < n_steps; ++step) {
    // Crank-Nicolson: (I - dt/2 A) u^{n+1} = (I + dt/2 A) u^n.
    VectorXd rhs(n_grid);
    for (int j = 0; j < n_grid; ++j) {
      double v = (1.0 + 0.5 * dt * Adiag(j)) * u(j);
      if (j > 0) v += 0.5 * dt * Alow(j) * u(j - 1);
      if (j < n_grid - 1) v += 0.5 * dt * Aup(j) * u(j + 1);
      rhs(j) = v;
    }
    VectorXd low = -0.5 * dt * Alow;
    VectorXd diag = VectorXd::Ones(n_grid) - 0.5 * dt * Adiag;
    VectorXd up = -0.5 * dt * Aup;
    thomas_solve(low, diag, up, rhs);
    u = rhs;
    record((step + 1) * dt);
  }
  return sol;
}

RadialProfile gaussian_bump(const Space& space, double rho_max, int n_grid, double center,
                            double width) {
  double drho = rho_max / n_grid;
  width = std::max(width, 3.0 * drho);
  RadialProfile p;
  p.grid.resize(n_grid);
  p.values.resize(n_grid);
  double mass = 0.0;
  for (int j = 0; j < n_grid; ++j) {
    double rho = (j + 0.5) * drho;
    p.grid(j) = rho;
    p.values(j) = std::exp(-0.5 * std::pow((rho - center) / width, 2));
    mass += p.values(j) * density_omega(space, rho) * drho;
  }
  p.values /= mass;
  return p;
}

}  // namespace htype
