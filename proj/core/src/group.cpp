#include "htype/group.hpp"

#include <cmath>
#include <stdexcept>

namespace htype {

using Eigen::MatrixXd;
using Eigen::VectorXd;

GroupElement Space::identity() const {
  return {VectorXd::Zero(m()), VectorXd::Zero(k()), 1.0};
}

AlgebraElement Space::zero() const {
  return {VectorXd::Zero(m()), VectorXd::Zero(k()), 0.0};
}

BallPoint Space::origin() const {
  return {VectorXd::Zero(m()), VectorXd::Zero(k()), 0.0};
}

VectorXd Space::pack(const GroupElement& s) const {
  VectorXd v(dim());
  v << s.X, s.Z, s.a;
  return v;
}

GroupElement Space::unpack_group(const VectorXd& v) const {
  return {v.head(m()), v.segment(m(), k()), v(dim() - 1)};
}

VectorXd Space::pack(const BallPoint& b) const {
  VectorXd v(dim());
  v << b.X, b.Z, b.t;
  return v;
}

BallPoint Space::unpack_ball(const VectorXd& v) const {
  return {v.head(m()), v.segment(m(), k()), v(dim() - 1)};
}

VectorXd Space::pack(const AlgebraElement& u) const {
  VectorXd v(dim());
  v << u.X, u.Z, u.t;
  return v;
}

AlgebraElement Space::unpack_algebra(const VectorXd& v) const {
  return {v.head(m()), v.segment(m(), k()), v(dim() - 1)};
}

Space make_space(const CliffordSpec& spec) { return Space(make_algebra(spec)); }

AlgebraElement lie_bracket_s(const Space& space, const AlgebraElement& u, const AlgebraElement& v) {
  const auto& n = space.algebra();
  AlgebraElement w;
  w.X = 0.5 * (u.t * v.X - v.t * u.X);
  w.Z = u.t * v.Z - v.t * u.Z + n.bracket(u.X, v.X);
  w.t = 0.0;
  return w;
}

GroupElement multiply(const Space& space, const GroupElement& s, const GroupElement& t) {
  const auto& n = space.algebra();
  double ra = std::sqrt(s.a);
  GroupElement out;
  out.X = s.X + ra * t.X;
  out.Z = s.Z + s.a * t.Z + 0.5 * ra * n.bracket(s.X, t.X);
  out.a = s.a * t.a;
  return out;
}

GroupElement inverse(const Space& space, const GroupElement& s) {
  (void)space;
  double ia = 1.0 / s.a;
  return {-std::sqrt(ia) * s.X, -ia * s.Z, ia};
}

double haar_density(const Space& space, const GroupElement& s) {
  return std::pow(s.a, -space.Q() - 1.0);
}

MatrixXd left_translation_differential(const Space& space, const GroupElement& g) {
  int m = space.m(), k = space.k(), n = space.dim();
  double ra = std::sqrt(g.a);
  MatrixXd D = MatrixXd::Zero(n, n);
  D.topLeftCorner(m, m) = ra * MatrixXd::Identity(m, m);
  // Z'' = Z_g + a_g Z' + (1/2) sqrt(a_g) [X_g, X'], row i of the cross
  // block is (1/2) sqrt(a_g) (E_i X_g)^T.
  const auto& gens = space.algebra().module().generators;
  for (int i = 0; i < k; ++i) D.row(m + i).head(m) = 0.5 * ra * (gens[i] * g.X).transpose();
  D.block(m, m, k, k) = g.a * MatrixXd::Identity(k, k);
  D(n - 1, n - 1) = g.a;
  return D;
}

double left_translation_jacobian(const Space& space, const GroupElement& g, const GroupElement& s) {
  (void)s;  // translation is affine: the differential is base-point independent
  return left_translation_differential(space, g).determinant();
}

SiegelPoint to_siegel(const Space& space, const GroupElement& s) {
  (void)space;
  return {s.X, s.Z, s.a + 0.25 * s.X.squaredNorm()};
}

GroupElement from_siegel(const Space& space, const SiegelPoint& d) {
  (void)space;
  double a = d.t - 0.25 * d.X.squaredNorm();
  if (a <= 0.0) throw std::domain_error("from_siegel: point outside the Siegel domain");
  return {d.X, d.Z, a};
}

SiegelPoint cayley(const Space& space, const BallPoint& b) {
  const auto& n = space.algebra();
  double r2 = b.X.squaredNorm() + b.Z.squaredNorm() + b.t * b.t;
  if (r2 >= 1.0) throw std::domain_error("cayley: point outside the ball");
  double q = (1.0 - b.t) * (1.0 - b.t) + b.Z.squaredNorm();
  SiegelPoint d;
  d.X = (2.0 / q) * ((1.0 - b.t) * b.X + n.j_map(b.Z, b.X));
  d.Z = (2.0 / q) * b.Z;
  d.t = (1.0 - b.t * b.t - b.Z.squaredNorm()) / q;
  return d;
}

BallPoint cayley_inv(const Space& space, const SiegelPoint& d) {
  const auto& n = space.algebra();
  // Closed form with the (1 - t) <-> (1 + t_D) substitution pattern,
  // validated against the forward map below.
  double q = (1.0 + d.t) * (1.0 + d.t) + d.Z.squaredNorm();
  BallPoint b;
  b.X = (1.0 / q) * ((1.0 + d.t) * d.X - n.j_map(d.Z, d.X));
  b.Z = (2.0 / q) * d.Z;
  b.t = 1.0 - 2.0 * (1.0 + d.t) / q;

  int dim = space.dim();
  for (int iter = 0; iter < 25; ++iter) {
    SiegelPoint fwd = cayley(space, b);
    VectorXd res(dim);
    res << fwd.X - d.X, fwd.Z - d.Z, fwd.t - d.t;
    if (res.lpNorm<Eigen::Infinity>() <= 1e-12) return b;
    // Damped Newton fallback on the forward map.
    MatrixXd J = cayley_differential(space, b);
    VectorXd step = J.fullPivLu().solve(res);
    VectorXd bc = space.pack(b) - step;
    if (bc.squaredNorm() >= 1.0) bc *= 0.999 / bc.norm();
    b = space.unpack_ball(bc);
  }
  SiegelPoint fwd = cayley(space, b);
  VectorXd res(dim);
  res << fwd.X - d.X, fwd.Z - d.Z, fwd.t - d.t;
  if (res.lpNorm<Eigen::Infinity>() > 1e-9)
    throw std::runtime_error("cayley_inv: round-trip residual " +
                             std::to_string(res.lpNorm<Eigen::Infinity>()));
  return b;
}

BallPoint group_to_ball(const Space& space, const GroupElement& s) {
  return cayley_inv(space, to_siegel(space, s));
}

GroupElement ball_to_group(const Space& space, const BallPoint& b) {
  return from_siegel(space, cayley(space, b));
}

MatrixXd to_siegel_differential(const Space& space, const GroupElement& s) {
  int m = space.m(), n = space.dim();
  MatrixXd D = MatrixXd::Identity(n, n);
  D.row(n - 1).head(m) = 0.5 * s.X.transpose();
  return D;
}

MatrixXd from_siegel_differential(const Space& space, const SiegelPoint& d) {
  int m = space.m(), n = space.dim();
  MatrixXd D = MatrixXd::Identity(n, n);
  D.row(n - 1).head(m) = -0.5 * d.X.transpose();
  return D;
}

namespace {

// Shared rational-map differentiation: the forward and inverse Cayley maps
// both have the form N(x)/q(x) with q scalar.
MatrixXd rational_differential(const MatrixXd& DN, const VectorXd& N, const VectorXd& Dq,
                               double q) {
  return DN / q - (N / (q * q)) * Dq.transpose();
}

}  // namespace

MatrixXd cayley_differential(const Space& space, const BallPoint& b) {
  const auto& gens = space.algebra().module().generators;
  int m = space.m(), k = space.k(), n = space.dim();
  double q = (1.0 - b.t) * (1.0 - b.t) + b.Z.squaredNorm();

  VectorXd N(n);
  N.head(m) = 2.0 * ((1.0 - b.t) * b.X + space.algebra().j_map(b.Z, b.X));
  N.segment(m, k) = 2.0 * b.Z;
  N(n - 1) = 1.0 - b.t * b.t - b.Z.squaredNorm();

  MatrixXd DN = MatrixXd::Zero(n, n);
  DN.topLeftCorner(m, m) = 2.0 * (1.0 - b.t) * MatrixXd::Identity(m, m);
  for (int i = 0; i < k; ++i) {
    DN.block(0, m + i, m, 1) = 2.0 * (gens[i] * b.X);
    DN.topLeftCorner(m, m) += 2.0 * b.Z(i) * gens[i];
  }
  DN.block(0, n - 1, m, 1) = -2.0 * b.X;
  DN.block(m, m, k, k) = 2.0 * MatrixXd::Identity(k, k);
  DN.row(n - 1).segment(m, k) = -2.0 * b.Z.transpose();
  DN(n - 1, n - 1) = -2.0 * b.t;

  VectorXd Dq = VectorXd::Zero(n);
  Dq.segment(m, k) = 2.0 * b.Z;
  Dq(n - 1) = -2.0 * (1.0 - b.t);

  return rational_differential(DN, N, Dq, q);
}

MatrixXd cayley_inv_differential(const Space& space, const SiegelPoint& d) {
  const auto& gens = space.algebra().module().generators;
  int m = space.m(), k = space.k(), n = space.dim();
  double q = (1.0 + d.t) * (1.0 + d.t) + d.Z.squaredNorm();

  VectorXd N(n);
  N.head(m) = (1.0 + d.t) * d.X - space.algebra().j_map(d.Z, d.X);
  N.segment(m, k) = 2.0 * d.Z;
  N(n - 1) = q - 2.0 * (1.0 + d.t);  // so that t = N_t / q

  MatrixXd DN = MatrixXd::Zero(n, n);
  DN.topLeftCorner(m, m) = (1.0 + d.t) * MatrixXd::Identity(m, m);
  for (int i = 0; i < k; ++i) {
    DN.block(0, m + i, m, 1) = -(gens[i] * d.X);
    DN.topLeftCorner(m, m) -= d.Z(i) * gens[i];
  }
  DN.block(0, n - 1, m, 1) = d.X;
  DN.block(m, m, k, k) = 2.0 * MatrixXd::Identity(k, k);
  DN.row(n - 1).segment(m, k) = 2.0 * d.Z.transpose();
  DN(n - 1, n - 1) = 2.0 * (1.0 + d.t) - 2.0;

  VectorXd Dq = VectorXd::Zero(n);
  Dq.segment(m, k) = 2.0 * d.Z;
  Dq(n - 1) = 2.0 * (1.0 + d.t);

  return rational_differential(DN, N, Dq, q);
}

MatrixXd ball_to_group_differential(const Space& space, const BallPoint& b) {
  SiegelPoint d = cayley(space, b);
  return from_siegel_differential(space, d) * cayley_differential(space, b);
}

}  // namespace htype
