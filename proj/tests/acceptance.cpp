// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "htype/algebra.hpp"
#include "htype/catalog.hpp"
#include "htype/geometry.hpp"
#include "htype/group.hpp"
#include "htype/radial.hpp"

using namespace htype;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

std::mt19937_64 rng(20240901);
int failures = 0;

VectorXd random_unit(int n) {
  std::normal_distribution<double> g;
  VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v.normalized();
}

GroupElement random_element(const Space& s) {
  std::uniform_real_distribution<double> ua(0.1, 10.0);
  std::normal_distribution<double> g;
  GroupElement e{VectorXd(s.m()), VectorXd(s.k()), ua(rng)};
  for (int i = 0; i < s.m(); ++i) e.X(i) = g(rng);
  for (int i = 0; i < s.k(); ++i) e.Z(i) = g(rng);
  return e;
}

void criterion(int id, const char* name, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  std::printf("%s criterion %2d: %-28s %s [%.0f ms]\n", ok ? "PASS" : "FAIL", id, name,
              detail.c_str(), ms);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

}  // namespace

int main() {
  const Space dim7 = make_space({2, 1, 0});
  const BallMetric bm7(dim7);

  // 1. H-type axioms for k = 1..8, minimal multiplicity.
  criterion(1, "h-type axioms", [&](std::string& d) {
    double worst = 0;
    for (int k = 1; k <= 8; ++k) {
      HTypeAlgebra alg = make_algebra({k, 1, 0});
      for (int i = 0; i < 100; ++i) {
        VectorXd Z = random_unit(k) * std::uniform_real_distribution<double>(0.1, 3.0)(rng);
        VectorXd X = random_unit(alg.m());
        worst = std::max(
            worst, (alg.j_map(Z, alg.j_map(Z, X)) + Z.squaredNorm() * X).cwiseAbs().maxCoeff());
      }
    }
    d = fmt("max |J_Z^2 + |Z|^2 I| = %.2e", worst);
    return worst <= 1e-12;
  });

  // 2. Group laws in the dim-7 space.
  criterion(2, "group laws", [&](std::string& d) {
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      GroupElement a = random_element(dim7), b = random_element(dim7), c = random_element(dim7);
      auto lhs = multiply(dim7, multiply(dim7, a, b), c);
      auto rhs = multiply(dim7, a, multiply(dim7, b, c));
      worst = std::max(worst, (dim7.pack(lhs) - dim7.pack(rhs)).cwiseAbs().maxCoeff());
      worst = std::max(worst, (dim7.pack(multiply(dim7, a, inverse(dim7, a))) -
                               dim7.pack(dim7.identity()))
                                  .cwiseAbs()
                                  .maxCoeff());
      worst = std::max(worst, (dim7.pack(multiply(dim7, a, dim7.identity())) - dim7.pack(a))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    d = fmt("max residual = %.2e", worst);
    return worst <= 1e-12;
  });

  // 3. Haar: finite-difference Jacobian equals a^{Q+1}, base-point independent.
  criterion(3, "haar jacobian", [&](std::string& d) {
    double worst_rel = 0, worst_spread = 0;
    int n = dim7.dim();
    // left translation is affine, so central differences carry no truncation
    // error; a wide step keeps rounding noise out of the determinant
    double h = 1e-2;
    for (int trial = 0; trial < 10; ++trial) {
      GroupElement g = random_element(dim7);
      double expect = std::pow(g.a, dim7.Q() + 1.0);
      double lo = 1e300, hi = -1e300;
      for (int rep = 0; rep < 10; ++rep) {
        GroupElement s = random_element(dim7);
        VectorXd x = dim7.pack(s);
        MatrixXd J(n, n);
        for (int j = 0; j < n; ++j) {
          VectorXd xp = x, xm = x;
          xp(j) += h;
          xm(j) -= h;
          J.col(j) = (dim7.pack(multiply(dim7, g, dim7.unpack_group(xp))) -
                      dim7.pack(multiply(dim7, g, dim7.unpack_group(xm)))) /
                     (2 * h);
        }
        double det = J.determinant();
        worst_rel = std::max(worst_rel, std::abs(det / expect - 1.0));
        lo = std::min(lo, det);
        hi = std::max(hi, det);
      }
      worst_spread = std::max(worst_spread, (hi - lo) / expect);
    }
    d = fmt("rel err = %.2e", worst_rel) + fmt(", spread = %.2e", worst_spread);
    return worst_rel <= 1e-8 && worst_spread <= 1e-10;
  });

  // 4. Cayley round trips and the ball-chart differential at e.
  criterion(4, "models", [&](std::string& d) {
    std::uniform_real_distribution<double> ur(0.0, 0.98);
    double worst_rt = 0;
    for (int i = 0; i < 10000; ++i) {
      VectorXd v = random_unit(dim7.dim()) * ur(rng);
      BallPoint b = dim7.unpack_ball(v);
      worst_rt = std::max(
          worst_rt,
          (dim7.pack(cayley_inv(dim7, cayley(dim7, b))) - v).cwiseAbs().maxCoeff());
      GroupElement s = ball_to_group(dim7, b);
      worst_rt = std::max(
          worst_rt, (dim7.pack(group_to_ball(dim7, s)) - v).cwiseAbs().maxCoeff());
    }
    double worst_diff = 0;
    double h = 1e-5;
    int n = dim7.dim();
    VectorXd e = dim7.pack(dim7.identity());
    for (int j = 0; j < n; ++j) {
      VectorXd xp = e, xm = e;
      xp(j) += h;
      xm(j) -= h;
      VectorXd col = (dim7.pack(group_to_ball(dim7, dim7.unpack_group(xp))) -
                      dim7.pack(group_to_ball(dim7, dim7.unpack_group(xm)))) /
                     (2 * h);
      for (int i = 0; i < n; ++i)
        worst_diff = std::max(worst_diff, std::abs(col(i) - (i == j ? 0.5 : 0.0)));
    }
    d = fmt("round trip = %.2e", worst_rt) + fmt(", |D - I/2| = %.2e", worst_diff);
    return worst_rt <= 1e-10 && worst_diff <= 1e-6;
  });

  // 5. Radial density: closed forms and the metric-derived density.
  criterion(5, "radial density", [&](std::string& d) {
    double worst_forms = 0, worst_rel = 0, worst_spread = 0;
    for (double rho : {0.3, 1.0, 2.0}) {
      double closed = density_omega(dim7, rho);
      worst_forms =
          std::max(worst_forms, std::abs(density_omega_r_form(dim7, rho) / closed - 1.0));
      double lo = 1e300, hi = -1e300;
      for (int dir = 0; dir < 20; ++dir) {
        double v = volume_density_numeric(bm7, rho, random_unit(dim7.dim()));
        worst_rel = std::max(worst_rel, std::abs(v / closed - 1.0));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      worst_spread = std::max(worst_spread, (hi - lo) / closed);
    }
    d = fmt("forms = %.2e", worst_forms) + fmt(", numeric = %.2e", worst_rel) +
        fmt(", spread = %.2e", worst_spread);
    return worst_forms <= 1e-10 && worst_rel <= 1e-5 && worst_spread <= 1e-6;
  });

  // 6. Geodesics are diameters; distance matches the closed form.
  criterion(6, "geodesics", [&](std::string& d) {
    double worst_trans = 0, worst_dist = 0;
    for (int dir = 0; dir < 20; ++dir) {
      VectorXd w = random_unit(dim7.dim());
      GeodesicPath path = geodesic_integrate(bm7, w, 2.0, 2e-3);
      if (path.truncated) return false;
      for (const auto& [s, p] : path.points) {
        VectorXd x = dim7.pack(p);
        worst_trans = std::max(worst_trans, (x - x.dot(w) * w).norm());
        worst_dist = std::max(worst_dist, std::abs(distance_from_origin(dim7, p) - s));
      }
    }
    d = fmt("transverse = %.2e", worst_trans) + fmt(", distance = %.2e", worst_dist);
    return worst_trans <= 1e-6 && worst_dist <= 1e-5;
  });

  // 7. Harmonicity with negative control.
  criterion(7, "harmonicity", [&](std::string& d) {
    auto f = [](double rho) { return std::exp(-rho * rho); };
    double worst_spread = 0, worst_dev = 0;
    for (double rho : {0.5, 1.0, 2.0}) {
      HarmonicityReport rep = harmonicity_check(bm7, f, rho, 12, 20240901);
      if (!rep.pass) return false;
      double scale = 1.0 + std::max(std::abs(rep.min_value), std::abs(rep.max_value));
      worst_spread = std::max(worst_spread, rep.spread / scale);
      worst_dev = std::max(worst_dev,
                           rep.radial_deviation / (1.0 + std::abs(rep.radial_value)));
      if (rep.radial_deviation > 1e-4 * (1.0 + std::abs(rep.radial_value))) return false;
    }
    MatrixXd M0 = MatrixXd::Identity(dim7.dim(), dim7.dim());
    M0(4, 4) = M0(5, 5) = 4.0;  // scale z without adjusting the brackets
    HarmonicityReport broken = harmonicity_check(BallMetric(dim7, M0), f, 1.0, 12, 20240901);
    d = fmt("spread = %.2e", worst_spread) + fmt(", radial dev = %.2e", worst_dev) +
        fmt(", control spread = %.2e", broken.spread);
    return !broken.pass;
  });

  // 8. Symmetry dichotomy across the table.
  criterion(8, "symmetry dichotomy", [&](std::string& d) {
    std::vector<CliffordSpec> symmetric = {{1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {3, 1, 0}, {7, 1, 0}};
    double worst_sym = 0;
    for (const auto& s : symmetric) {
      SymmetryReport r = symmetry_report(make_space(s));
      worst_sym = std::max(worst_sym, r.ratio);
    }
    // one nonsymmetric space per table row at n = 0 (dims 7, 12, 13, 14, 15, 24, 25)
    std::vector<CliffordSpec> nonsymmetric = {{2, 1, 0}, {3, 1, 1}, {4, 1, 0}, {5, 1, 0},
                                              {6, 1, 0}, {7, 2, 0}, {8, 1, 0}};
    double worst_non = 1e300;
    for (const auto& s : nonsymmetric) {
      SymmetryReport r = symmetry_report(make_space(s));
      worst_non = std::min(worst_non, r.ratio);
    }
    d = fmt("symmetric max = %.2e", worst_sym) + fmt(", nonsymmetric min = %.2e", worst_non);
    return worst_sym <= 1e-8 && worst_non >= 1e-3;
  });

  // 9. Totally geodesic 4-dimensional slices.
  criterion(9, "totally geodesic slices", [&](std::string& d) {
    double worst_ii = 0, worst_kx = 0, worst_kz = 0;
    for (int i = 0; i < 10; ++i) {
      TotallyGeodesicReport rep =
          totally_geodesic_check(dim7, random_unit(dim7.m()), random_unit(dim7.k()));
      worst_ii = std::max(worst_ii, rep.max_second_fundamental);
      worst_kx = std::max(worst_kx, std::abs(rep.k_x_t + 0.25));
      worst_kz = std::max(worst_kz, std::abs(rep.k_z_t + 1.0));
    }
    d = fmt("II = %.2e", worst_ii) + fmt(", |K(X,T)+1/4| = %.2e", worst_kx) +
        fmt(", |K(Z,T)+1| = %.2e", worst_kz);
    return worst_ii <= 1e-12 && worst_kx <= 1e-10 && worst_kz <= 1e-10;
  });

  // 10. The dimension table.
  criterion(10, "dimension table", [&](std::string& d) {
    const char* forms[] = {"---", "7+4n", "12+4n", "13+8n", "14+8n", "15+8n", "24+8n", "25+16n"};
    for (int k = 1; k <= 8; ++k)
      if (table_row(k).closed_form() != forms[k - 1]) return false;
    if (!nonsymmetric_dims(1, 5).empty()) return false;
    int bases[] = {0, 7, 12, 13, 14, 15, 24, 25};
    int strides[] = {0, 4, 4, 8, 8, 8, 8, 16};
    for (int k = 2; k <= 8; ++k) {
      auto dims = nonsymmetric_dims(k, 5);
      if (dims.size() != 6) return false;
      for (int n = 0; n <= 5; ++n)
        if (dims[n] != bases[k - 1] + n * strides[k - 1]) return false;
    }
    d = "all rows match";
    return true;
  });

  // 11. Heat surrogate on the dim-7 space.
  criterion(11, "heat surrogate", [&](std::string& d) {
    RadialProfile init = gaussian_bump(dim7, 6.0, 300, 1.0, 0.25);
    HeatSolution sol = heat_solve(dim7, 6.0, 300, 1.0, 200, init);
    double drift = 0, min_u = 0;
    for (double mass : sol.mass) drift = std::max(drift, std::abs(mass - sol.mass.front()));
    for (const auto& u : sol.profiles) min_u = std::min(min_u, u.minCoeff());
    bool monotone = true;
    for (size_t i = 1; i < sol.second_moment.size(); ++i)
      if (sol.second_moment[i] <= sol.second_moment[i - 1]) monotone = false;
    d = fmt("mass drift = %.2e", drift / sol.mass.front()) + fmt(", min u = %.1e", min_u) +
        (monotone ? ", spreading" : ", NOT spreading");
    return drift / sol.mass.front() <= 1e-4 && min_u >= -1e-10 && monotone;
  });

  std::printf("%d/11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
