#include <doctest.h>

#include <cmath>
#include <random>

#include "htype/radial.hpp"

using namespace htype;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

std::mt19937_64 rng(5150);

VectorXd random_unit(int n) {
  std::normal_distribution<double> g;
  VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v.normalized();
}

const Space dim7 = make_space({2, 1, 0});

RadialProfile sample(const Space& s, double rho_min, double rho_max, int n,
                     const std::function<double(double)>& f) {
  (void)s;
  RadialProfile p;
  p.grid.setLinSpaced(n, rho_min, rho_max);
  p.values.resize(n);
  for (int i = 0; i < n; ++i) p.values(i) = f(p.grid(i));
  return p;
}

}  // namespace

TEST_CASE("rho <-> r conversions") {
  CHECK(r_from_rho(0.0) == 0.0);
  CHECK(rho_from_r(0.5) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  for (int i = 1; i <= 1000; ++i) {
    double rho = 8.0 * i / 1000.0;
    CHECK(std::abs(rho_from_r(r_from_rho(rho)) - rho) <= 1e-14 * (1 + rho));
  }
  CHECK_THROWS_AS(r_from_rho(-0.1), std::domain_error);
  CHECK_THROWS_AS(rho_from_r(1.0), std::domain_error);
}

TEST_CASE("the two closed density forms agree") {
  for (const Space& s : {dim7, make_space({1, 1, 0}), make_space({4, 1, 0})}) {
    for (int i = 1; i <= 200; ++i) {
      double rho = 0.01 + (8.0 - 0.01) * i / 200.0;
      double a = density_omega(s, rho), b = density_omega_r_form(s, rho);
      CHECK(std::abs(b / a - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("density value and small-rho limit") {
  // direct recomputation at k=2, m=4, rho=1
  double expect = 64.0 * std::pow(std::cosh(0.5), 2) * std::pow(std::sinh(0.5), 6);
  CHECK(density_omega(dim7, 1.0) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(expect == doctest::Approx(1.63).epsilon(0.01));

  // Euclidean sphere growth at the center
  double rho = 1e-4;
  CHECK(density_omega(dim7, rho) / std::pow(rho, 6) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("radial drift limits and finite-difference oracle") {
  int mk = dim7.m() + dim7.k();
  CHECK(radial_drift(dim7, 1e-8) * 1e-8 == doctest::Approx(mk).epsilon(1e-10));
  CHECK(radial_drift(dim7, 60.0) == doctest::Approx(dim7.Q()).epsilon(1e-12));
  CHECK_THROWS_AS(radial_drift(dim7, 0.0), std::domain_error);

  double h = 1e-6;
  for (int i = 0; i <= 50; ++i) {
    double rho = 0.1 + (5.0 - 0.1) * i / 50.0;
    double fd = (std::log(density_omega(dim7, rho + h)) -
                 std::log(density_omega(dim7, rho - h))) /
                (2 * h);
    CHECK(std::abs(radial_drift(dim7, rho) - fd) <= 1e-8 * (1 + std::abs(fd)));
  }
}

TEST_CASE("radial laplacian basics") {
  RadialProfile c = sample(dim7, 0.1, 3.0, 200, [](double) { return 2.5; });
  RadialProfile lc = radial_laplacian(dim7, c);
  CHECK(lc.values.cwiseAbs().maxCoeff() <= 1e-12);

  // f = rho^2 near the center: -(f'' + b f') -> -2(m+k+1).  Keep the grid
  // spacing tiny relative to rho so the rho^{m+k} weight is well resolved.
  RadialProfile q = sample(dim7, 1e-2, 2e-2, 200, [](double r) { return r * r; });
  RadialProfile lq = radial_laplacian(dim7, q);
  CHECK(lq.values(lq.values.size() / 2) ==
        doctest::Approx(-2.0 * (dim7.m() + dim7.k() + 1)).epsilon(1e-3));

  RadialProfile bad;
  bad.grid = (VectorXd(3) << 0.1, 0.1, 0.3).finished();
  bad.values = VectorXd::Zero(3);
  CHECK_THROWS_AS(radial_laplacian(dim7, bad), std::invalid_argument);
}

TEST_CASE("discrete selfadjointness and positivity in the omega weight") {
  int n = 400;
  RadialProfile f = sample(dim7, 0.01, 6.0, n,
                           [](double r) { return std::exp(-2.0 * (r - 2) * (r - 2)); });
  RadialProfile g = sample(dim7, 0.01, 6.0, n,
                           [](double r) { return std::exp(-3.0 * (r - 3) * (r - 3)); });
  RadialProfile lf = radial_laplacian(dim7, f), lg = radial_laplacian(dim7, g);

  double drho = f.grid(1) - f.grid(0);
  double fg = 0, gf = 0, ff = 0, scale = 0;
  for (int i = 0; i < n - 2; ++i) {
    double w = density_omega(dim7, lf.grid(i)) * drho;
    fg += lf.values(i) * g.values(i + 1) * w;
    gf += f.values(i + 1) * lg.values(i) * w;
    ff += lf.values(i) * f.values(i + 1) * w;
    scale += std::abs(lf.values(i) * g.values(i + 1)) * w;
  }
  CHECK(std::abs(fg - gf) <= 1e-6 * (1 + scale));
  CHECK(ff >= -1e-8);
}

TEST_CASE("laplace-beltrami of a constant vanishes") {
  BallMetric bm(dim7);
  BallPoint b = dim7.unpack_ball(VectorXd(0.4 * random_unit(7)));
  CHECK(std::abs(laplace_beltrami_at(bm, b, [](const BallPoint&) { return 3.0; })) <= 1e-8);
}

TEST_CASE("laplace-beltrami of radial functions is radial and matches the 1-d operator") {
  BallMetric bm(dim7);
  auto f = [](double rho) { return std::exp(-rho * rho); };
  auto field = [&](const BallPoint& p) { return f(distance_from_origin(dim7, p)); };

  for (double rho : {0.5, 1.0, 2.0}) {
    double r = r_from_rho(rho);
    double v1 = laplace_beltrami_at(bm, dim7.unpack_ball(VectorXd(r * random_unit(7))), field);
    double v2 = laplace_beltrami_at(bm, dim7.unpack_ball(VectorXd(r * random_unit(7))), field);
    CHECK(std::abs(v1 - v2) <= 1e-4 * (1 + std::abs(v1)));

    double h = 1e-4;
    double radial = -((f(rho + h) - 2 * f(rho) + f(rho - h)) / (h * h) +
                      radial_drift(dim7, rho) * (f(rho + h) - f(rho - h)) / (2 * h));
    CHECK(std::abs(v1 - radial) <= 1e-4 * (1 + std::abs(radial)));
  }
}

TEST_CASE("harmonicity check passes on the true metric") {
  BallMetric bm(dim7);
  auto f = [](double rho) { return std::exp(-rho * rho); };
  for (double rho : {0.2, 1.0, 2.0}) {
    HarmonicityReport rep = harmonicity_check(bm, f, rho, 8, 777);
    CAPTURE(rho);
    CHECK(rep.pass);
    CHECK(rep.radial_deviation <= 1e-4 * (1 + std::abs(rep.radial_value)));
  }
  CHECK_THROWS_AS(harmonicity_check(bm, f, 1.0, 0), std::invalid_argument);
}

TEST_CASE("harmonicity check fails on a perturbed metric (negative control)") {
  // Scale the center directions of the frame inner product without
  // adjusting the brackets: the space is no longer harmonic.
  MatrixXd M0 = MatrixXd::Identity(7, 7);
  M0(4, 4) = 4.0;
  M0(5, 5) = 4.0;
  BallMetric broken(dim7, M0);
  auto f = [](double rho) { return std::exp(-rho * rho); };
  HarmonicityReport rep = harmonicity_check(broken, f, 1.0, 8, 777);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("numeric volume density matches the closed form and is direction independent") {
  BallMetric bm(dim7);
  for (double rho : {0.3, 1.0, 2.0}) {
    double closed = density_omega(dim7, rho);
    double lo = 1e300, hi = -1e300;
    for (int d = 0; d < 20; ++d) {
      double v = volume_density_numeric(bm, rho, random_unit(7));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      CHECK(std::abs(v / closed - 1.0) <= 1e-5);
    }
    CHECK((hi - lo) / closed <= 1e-6);
  }

  // flat limit
  double rho = 0.05;
  double v = volume_density_numeric(bm, rho, random_unit(7));
  CHECK(v / std::pow(rho, 6) == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("heat flow conserves mass, stays positive, spreads") {
  RadialProfile init = gaussian_bump(dim7, 6.0, 300, 1.0, 0.25);
  HeatSolution sol = heat_solve(dim7, 6.0, 300, 1.0, 200, init);

  REQUIRE(sol.mass.size() == 201);
  CHECK(sol.mass.front() == doctest::Approx(1.0).epsilon(1e-12));
  for (double m : sol.mass) CHECK(std::abs(m - 1.0) <= 1e-4);
  for (const auto& u : sol.profiles) CHECK(u.minCoeff() >= -1e-10);
  for (size_t i = 1; i < sol.second_moment.size(); ++i)
    CHECK(sol.second_moment[i] > sol.second_moment[i - 1]);
}

TEST_CASE("absorbing boundary loses mass once the front arrives") {
  RadialProfile init = gaussian_bump(dim7, 2.0, 100, 1.5, 0.2);
  HeatSolution sol = heat_solve(dim7, 2.0, 100, 1.0, 200, init, HeatBoundary::absorbing);
  CHECK(sol.mass.back() < sol.mass.front() - 1e-3);
}

TEST_CASE("heat solver argument validation") {
  RadialProfile init = gaussian_bump(dim7, 6.0, 100, 1.0, 0.3);
  CHECK_THROWS_AS(heat_solve(dim7, -1.0, 100, 1.0, 10, init), std::invalid_argument);
  CHECK_THROWS_AS(heat_solve(dim7, 6.0, 2, 1.0, 10, init), std::invalid_argument);
  CHECK_THROWS_AS(heat_solve(dim7, 6.0, 100, 1.0, 0, init), std::invalid_argument);
}
