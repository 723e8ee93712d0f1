#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "htype/group.hpp"

namespace htype {

/// Orthonormal frame (e_1..e_m, f_1..f_k, T) of s and the structure
/// constants of lie_bracket_s with respect to it.
struct Frame {
  int n = 0;
  std::vector<double> c;  // c[(i*n + j)*n + l] = <[b_i, b_j], b_l>

  double bracket(int i, int j, int l) const { return c[(i * n + j) * n + l]; }
};

Frame make_frame(const Space& space);

/// Connection, curvature and its covariant derivative at the identity.
/// Everything is constant in the left-invariant frame.
struct CurvatureData {
  int n = 0;
  std::vector<double> gamma;    // n^3: <nabla_{b_i} b_j, b_l>
  std::vector<double> riemann;  // n^4: <R(b_i, b_j) b_k, b_q>
  std::vector<double> nabla_r;  // n^5: <(nabla_{b_p} R)(b_i, b_j) b_k, b_q>
  double norm_R = 0.0;          // Frobenius
  double norm_nabla_R = 0.0;    // Frobenius

  double G(int i, int j, int l) const { return gamma[(i * n + j) * n + l]; }
  double R(int i, int j, int k, int q) const {
    return riemann[((i * n + j) * n + k) * n + q];
  }
  double DR(int p, int i, int j, int k, int q) const {
    return nabla_r[(((p * n + i) * n + j) * n + k) * n + q];
  }
};

CurvatureData compute_curvature(const Space& space);

/// Connection coefficients only (Koszul formula on the frame).
std::vector<double> koszul_connection(const Space& space);

double nabla_R_norm(const Space& space);

enum class SymmetryVerdict { symmetric, nonsymmetric, ambiguous };

struct SymmetryReport {
  double norm_R = 0.0;
  double norm_nabla_R = 0.0;
  double ratio = 0.0;  // |nabla R| / |R|
  SymmetryVerdict verdict = SymmetryVerdict::ambiguous;
};

/// Verdict is "symmetric" below rel_tol, "nonsymmetric" above the 1e-3
/// separation threshold, and "ambiguous" in between.
SymmetryReport symmetry_report(const Space& space, double rel_tol = 1e-8);
bool is_symmetric(const Space& space, double rel_tol = 1e-8);

double sectional_curvature(const CurvatureData& curv, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v);
double sectional_curvature(const Space& space, const AlgebraElement& u, const AlgebraElement& v);

struct TotallyGeodesicReport {
  double max_second_fundamental = 0.0;  // max |<nabla_U V, W>|, W normal
  double k_x_t = 0.0;                   // K(X0, T)
  double k_z_t = 0.0;                   // K(Z0, T)
  double k_x_jx = 0.0;                  // K(X0, J_{Z0} X0)
  double nabla_r_restricted = 0.0;      // Frobenius of nabla R on the subframe
  double bracket_alignment = 0.0;       // | [X0, J_{Z0}X0] - |X0|^2 Z0 |
};

/// Checks that span{X0, J_{Z0}X0, Z0, T} is a totally geodesic subalgebra
/// with the curvature of the complex hyperbolic plane.
TotallyGeodesicReport totally_geodesic_check(const Space& space, const Eigen::VectorXd& X0,
                                             const Eigen::VectorXd& Z0);

/// Pullback of the left-invariant metric to the ball model.  frame_metric
/// replaces the inner product on s at the identity; anything other than
/// the identity matrix is a deliberately broken fixture for negative
/// controls.
class BallMetric {
 public:
  explicit BallMetric(Space space);
  BallMetric(Space space, Eigen::MatrixXd frame_metric);

  const Space& space() const { return space_; }

  Eigen::MatrixXd metric_at(const BallPoint& b) const;
  double sqrt_det_at(const BallPoint& b) const;

  /// Christoffel symbols in ball coordinates by central differences of the
  /// metric; christoffel[i] is the n x n matrix (Gamma^i_{jk}).
  std::vector<Eigen::MatrixXd> christoffels_at(const BallPoint& b) const;

 private:
  Space space_;
  Eigen::MatrixXd frame_metric_;
};

struct GeodesicPath {
  std::vector<std::pair<double, BallPoint>> points;  // (arc length, point)
  bool truncated = false;
};

/// Integrates the geodesic from the origin with initial velocity omega/2
/// (unit speed, since the metric at the origin is 4I).  Classical RK4.
GeodesicPath geodesic_integrate(const BallMetric& metric, const Eigen::VectorXd& omega,
                                double length, double step = 1e-3);

/// rho = log((1 + r)/(1 - r)) with r = |b|.
double distance_from_origin(const Space& space, const BallPoint& b);

}  // namespace htype
