#include "htype/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace htype {

using Eigen::MatrixXd;
using Eigen::VectorXd;

Frame make_frame(const Space& space) {
  int n = space.dim();
  Frame f;
  f.n = n;
  f.c.assign((size_t)n * n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    VectorXd bi = VectorXd::Unit(n, i);
    for (int j = 0; j < n; ++j) {
      VectorXd bj = VectorXd::Unit(n, j);
      AlgebraElement w =
          lie_bracket_s(space, space.unpack_algebra(bi), space.unpack_algebra(bj));
      VectorXd wv = space.pack(w);
      for (int l = 0; l < n; ++l) f.c[((size_t)i * n + j) * n + l] = wv(l);
    }
  }
  return f;
}

std::vector<double> koszul_connection(const Space& space) {
  Frame f = make_frame(space);
  int n = f.n;
  std::vector<double> gamma((size_t)n * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        gamma[((size_t)i * n + j) * n + l] =
            0.5 * (f.bracket(i, j, l) - f.bracket(j, l, i) + f.bracket(l, i, j));
  return gamma;
}

CurvatureData compute_curvature(const Space& space) {
  Frame f = make_frame(space);
  int n = f.n;
  size_t sn = n;
  CurvatureData cd;
  cd.n = n;
  cd.gamma = koszul_connection(space);

  auto G = [&](int i, int j, int l) -> double { return cd.gamma[(sn * i + j) * n + l]; };

  // R(b_i, b_j) b_k = nabla_i nabla_j b_k - nabla_j nabla_i b_k - nabla_{[b_i,b_j]} b_k
  cd.riemann.assign(sn * n * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int q = 0; q < n; ++q) {
          double r = 0.0;
          for (int l = 0; l < n; ++l) {
            r += G(j, k, l) * G(i, l, q);
            r -= G(i, k, l) * G(j, l, q);
            r -= f.bracket(i, j, l) * G(l, k, q);
          }
          cd.riemann[((sn * i + j) * n + k) * n + q] = r;
        }

  auto R = [&](int i, int j, int k, int q) -> double {
    return cd.riemann[((sn * i + j) * n + k) * n + q];
  };

  // Components of R are constant on the frame, so the covariant derivative
  // picks up only connection terms.
  cd.nabla_r.assign(sn * n * n * n * n, 0.0);
  double nr2 = 0.0, ndr2 = 0.0;
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int q = 0; q < n; ++q) {
            double d = 0.0;
            for (int l = 0; l < n; ++l) {
              d += R(i, j, k, l) * G(p, l, q);
              d -= G(p, i, l) * R(l, j, k, q);
              d -= G(p, j, l) * R(i, l, k, q);
              d -= G(p, k, l) * R(i, j, l, q);
            }
            cd.nabla_r[(((sn * p + i) * n + j) * n + k) * n + q] = d;
            ndr2 += d * d;
          }
  for (double v : cd.riemann) nr2 += v * v;
  cd.norm_R = std::sqrt(nr2);
  cd.norm_nabla_R = std::sqrt(ndr2);
  return cd;
}

double nabla_R_norm(const Space& space) { return compute_curvature(space).norm_nabla_R; }

SymmetryReport symmetry_report(const Space& space, double rel_tol) {
  if (rel_tol <= 0.0 || rel_tol >= 1.0)
    throw std::invalid_argument("symmetry_report: rel_tol must be in (0, 1)");
  CurvatureData cd = compute_curvature(space);
  SymmetryReport rep;
  rep.norm_R = cd.norm_R;
  rep.norm_nabla_R = cd.norm_nabla_R;
  rep.ratio = cd.norm_nabla_R / cd.norm_R;
  if (rep.ratio <= rel_tol)
    rep.verdict = SymmetryVerdict::symmetric;
  else if (rep.ratio >= 1e-3)
    rep.verdict = SymmetryVerdict::nonsymmetric;
  else
    rep.verdict = SymmetryVerdict::ambiguous;
  return rep;
}

bool is_symmetric(const Space& space, double rel_tol) {
  return symmetry_report(space, rel_tol).ratio <= rel_tol;
}

double sectional_curvature(const CurvatureData& curv, const VectorXd& u, const VectorXd& v) {
  int n = curv.n;
  double denom = u.squaredNorm() * v.squaredNorm() - std::pow(u.dot(v), 2);
  if (denom <= 1e-14 * u.squaredNorm() * v.squaredNorm())
    throw std::domain_error("sectional_curvature: linearly dependent inputs");
  // <R(u, v) v, u>
  double num = 0.0;
  for (int i = 0; i < n; ++i) {
    if (u(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (v(j) == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        if (v(k) == 0.0) continue;
        for (int q = 0; q < n; ++q)
          num += curv.R(i, j, k, q) * u(i) * v(j) * v(k) * u(q);
      }
    }
  }
  return num / denom;
}

double sectional_curvature(const Space& space, const AlgebraElement& u, const AlgebraElement& v) {
  CurvatureData cd = compute_curvature(space);
  return sectional_curvature(cd, space.pack(u), space.pack(v));
}

TotallyGeodesicReport totally_geodesic_check(const Space& space, const VectorXd& X0,
                                             const VectorXd& Z0) {
  int m = space.m(), k = space.k(), n = space.dim();
  if (std::abs(X0.norm() - 1.0) > 1e-12 || std::abs(Z0.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("totally_geodesic_check: X0 and Z0 must be unit vectors");

  const auto& alg = space.algebra();
  VectorXd JX = alg.j_map(Z0, X0);

  MatrixXd U = MatrixXd::Zero(n, 4);
  U.col(0).head(m) = X0;
  U.col(1).head(m) = JX;
  U.col(2).segment(m, k) = Z0;
  U(n - 1, 3) = 1.0;

  // Orthonormal complement via the full QR of U.
  Eigen::HouseholderQR<MatrixXd> qr(U);
  MatrixXd Q = qr.householderQ();
  MatrixXd W = Q.rightCols(n - 4);

  CurvatureData cd = compute_curvature(space);
  auto nabla = [&](const VectorXd& u, const VectorXd& v) {
    VectorXd out = VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
      if (u(i) == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        if (v(j) == 0.0) continue;
        for (int l = 0; l < n; ++l) out(l) += u(i) * v(j) * cd.G(i, j, l);
      }
    }
    return out;
  };

  TotallyGeodesicReport rep;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      VectorXd nv = nabla(U.col(a), U.col(b));
      rep.max_second_fundamental =
          std::max(rep.max_second_fundamental, (W.transpose() * nv).cwiseAbs().maxCoeff());
    }

  rep.k_x_t = sectional_curvature(cd, U.col(0), U.col(3));
  rep.k_z_t = sectional_curvature(cd, U.col(2), U.col(3));
  rep.k_x_jx = sectional_curvature(cd, U.col(0), U.col(1));

  // nabla R contracted onto the subframe in all five slots.
  double s2 = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          for (int e = 0; e < 4; ++e) {
            double v = 0.0;
            for (int p = 0; p < n; ++p) {
              if (U(p, a) == 0.0) continue;
              for (int i = 0; i < n; ++i) {
                if (U(i, b) == 0.0) continue;
                for (int j = 0; j < n; ++j) {
                  if (U(j, c) == 0.0) continue;
                  for (int kk = 0; kk < n; ++kk) {
                    if (U(kk, d) == 0.0) continue;
                    for (int q = 0; q < n; ++q)
                      v += cd.DR(p, i, j, kk, q) * U(p, a) * U(i, b) * U(j, c) * U(kk, d) *
                           U(q, e);
                  }
                }
              }
            }
            s2 += v * v;
          }
  rep.nabla_r_restricted = std::sqrt(s2);

  rep.bracket_alignment = (alg.bracket(X0, JX) - X0.squaredNorm() * Z0).norm();
  return rep;
}

BallMetric::BallMetric(Space space)
    : space_(std::move(space)),
      frame_metric_(MatrixXd::Identity(space_.dim(), space_.dim())) {}

BallMetric::BallMetric(Space space, MatrixXd frame_metric)
    : space_(std::move(space)), frame_metric_(std::move(frame_metric)) {
  if (frame_metric_.rows() != space_.dim() || frame_metric_.cols() != space_.dim())
    throw std::invalid_argument("BallMetric: frame_metric has the wrong size");
}

MatrixXd BallMetric::metric_at(const BallPoint& b) const {
  double r2 = b.X.squaredNorm() + b.Z.squaredNorm() + b.t * b.t;
  if (r2 > 1.0 - 1e-9)
    throw std::runtime_error("BallMetric: point too close to the boundary");
  MatrixXd Dphi = ball_to_group_differential(space_, b);
  GroupElement s = ball_to_group(space_, b);
  MatrixXd L = left_translation_differential(space_, inverse(space_, s));
  MatrixXd A = L * Dphi;
  return A.transpose() * frame_metric_ * A;
}

double BallMetric::sqrt_det_at(const BallPoint& b) const {
  return std::sqrt(metric_at(b).determinant());
}

std::vector<MatrixXd> BallMetric::christoffels_at(const BallPoint& b) const {
  int n = space_.dim();
  double h = 1e-5;
  VectorXd x = space_.pack(b);
  MatrixXd g = metric_at(b);
  MatrixXd ginv = g.inverse();

  // dg[l] = d g / d x_l by central differences.
  std::vector<MatrixXd> dg(n);
  for (int l = 0; l < n; ++l) {
    VectorXd xp = x, xm = x;
    xp(l) += h;
    xm(l) -= h;
    dg[l] = (metric_at(space_.unpack_ball(xp)) - metric_at(space_.unpack_ball(xm))) / (2 * h);
  }

  std::vector<MatrixXd> gamma(n, MatrixXd::Zero(n, n));
  for (int j = 0; j < n; ++j)
    for (int kk = j; kk < n; ++kk) {
      VectorXd lower(n);
      for (int l = 0; l < n; ++l) lower(l) = 0.5 * (dg[j](l, kk) + dg[kk](l, j) - dg[l](j, kk));
      VectorXd up = ginv * lower;
      for (int i = 0; i < n; ++i) {
        gamma[i](j, kk) = up(i);
        gamma[i](kk, j) = up(i);
      }
    }
  return gamma;
}

GeodesicPath geodesic_integrate(const BallMetric& metric, const VectorXd& omega, double length,
                                double step) {
  const Space& space = metric.space();
  int n = space.dim();
  if (std::abs(omega.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("geodesic_integrate: direction must be a unit vector");
  if (step <= 0.0 || length < 0.0)
    throw std::invalid_argument("geodesic_integrate: bad step or length");

  auto accel = [&](const VectorXd& x, const VectorXd& v) {
    std::vector<MatrixXd> gamma = metric.christoffels_at(space.unpack_ball(x));
    VectorXd a(n);
    for (int i = 0; i < n; ++i) a(i) = -v.dot(gamma[i] * v);
    return a;
  };

  GeodesicPath path;
  VectorXd x = VectorXd::Zero(n);
  VectorXd v = 0.5 * omega;  // unit speed: g(0) = 4I
  path.points.push_back({0.0, space.unpack_ball(x)});

  int nsteps = (int)std::ceil(length / step);
  double s = 0.0;
  for (int it = 0; it < nsteps; ++it) {
    double h = std::min(step, length - s);
    VectorXd k1x = v, k1v = accel(x, v);
    VectorXd k2x = v + 0.5 * h * k1v, k2v = accel(x + 0.5 * h * k1x, v + 0.5 * h * k1v);
    VectorXd k3x = v + 0.5 * h * k2v, k3v = accel(x + 0.5 * h * k2x, v + 0.5 * h * k2v);
    VectorXd k4x = v + h * k3v, k4v = accel(x + h * k3x, v + h * k3v);
    VectorXd xn = x + (h / 6.0) * (k1x + 2 * k2x + 2 * k3x + k4x);
    if (xn.squaredNorm() >= 1.0 - 1e-9) {
      path.truncated = true;
      break;
    }
    x = xn;
    v += (h / 6.0) * (k1v + 2 * k2v + 2 * k3v + k4v);
    s += h;
    path.points.push_back({s, space.unpack_ball(x)});
  }
  return path;
}

double distance_from_origin(const Space& space, const BallPoint& b) {
  (void)space;
  double r = std::sqrt(b.X.squaredNorm() + b.Z.squaredNorm() + b.t * b.t);
  if (r >= 1.0) throw std::domain_error("distance_from_origin: point outside the ball");
  return std::log((1.0 + r) / (1.0 - r));
}

}  // namespace htype
