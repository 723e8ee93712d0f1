#pragma once

#include <Eigen/Dense>

#include "htype/algebra.hpp"

namespace htype {

/// Point (X, Z, a) of S = NA, a > 0; identity is (0, 0, 1).
struct GroupElement {
  Eigen::VectorXd X;
  Eigen::VectorXd Z;
  double a = 1.0;
};

/// Element X + Z + tT of the solvable algebra s = v (+) z (+) RT.
struct AlgebraElement {
  Eigen::VectorXd X;
  Eigen::VectorXd Z;
  double t = 0.0;
};

/// Siegel domain coordinates, t > |X|^2 / 4.
struct SiegelPoint {
  Eigen::VectorXd X;
  Eigen::VectorXd Z;
  double t = 1.0;
};

/// Ball model coordinates, |X|^2 + |Z|^2 + t^2 < 1.
struct BallPoint {
  Eigen::VectorXd X;
  Eigen::VectorXd Z;
  double t = 0.0;
};

/// The solvable extension S of an H-type group, with the standard
/// left-invariant metric.  Immutable; shared by all operations.
class Space {
 public:
  explicit Space(HTypeAlgebra algebra) : algebra_(std::move(algebra)) {}

  const HTypeAlgebra& algebra() const { return algebra_; }
  int m() const { return algebra_.m(); }
  int k() const { return algebra_.k(); }
  int dim() const { return m() + k() + 1; }
  /// Homogeneous dimension Q = m/2 + k (m is even, so Q is integral).
  double Q() const { return 0.5 * m() + k(); }

  GroupElement identity() const;
  AlgebraElement zero() const;
  BallPoint origin() const;

  // Coordinate packing, order (X, Z, a) resp. (X, Z, t).
  Eigen::VectorXd pack(const GroupElement& s) const;
  GroupElement unpack_group(const Eigen::VectorXd& v) const;
  Eigen::VectorXd pack(const BallPoint& b) const;
  BallPoint unpack_ball(const Eigen::VectorXd& v) const;
  Eigen::VectorXd pack(const AlgebraElement& u) const;
  AlgebraElement unpack_algebra(const Eigen::VectorXd& v) const;

 private:
  HTypeAlgebra algebra_;
};

Space make_space(const CliffordSpec& spec);

/// [u, v] in s; the extension rule is [T, X + Z] = X/2 + Z.
AlgebraElement lie_bracket_s(const Space& space, const AlgebraElement& u, const AlgebraElement& v);

GroupElement multiply(const Space& space, const GroupElement& s, const GroupElement& t);
GroupElement inverse(const Space& space, const GroupElement& s);

/// Left Haar density a^{-Q-1} (also the Riemannian volume density).
double haar_density(const Space& space, const GroupElement& s);

/// Differential of x -> g x in (X, Z, a) coordinates; the map is affine,
/// so the matrix does not depend on the base point.
Eigen::MatrixXd left_translation_differential(const Space& space, const GroupElement& g);

/// det of the above, evaluated numerically; equals a_g^{Q+1}.
double left_translation_jacobian(const Space& space, const GroupElement& g, const GroupElement& s);

SiegelPoint to_siegel(const Space& space, const GroupElement& s);
GroupElement from_siegel(const Space& space, const SiegelPoint& d);

/// Cayley transform C : B -> D.
SiegelPoint cayley(const Space& space, const BallPoint& b);
BallPoint cayley_inv(const Space& space, const SiegelPoint& d);

BallPoint group_to_ball(const Space& space, const GroupElement& s);
GroupElement ball_to_group(const Space& space, const BallPoint& b);

// Analytic Jacobians of the model maps, in packed coordinates.
Eigen::MatrixXd to_siegel_differential(const Space& space, const GroupElement& s);
Eigen::MatrixXd from_siegel_differential(const Space& space, const SiegelPoint& d);
Eigen::MatrixXd cayley_differential(const Space& space, const BallPoint& b);
Eigen::MatrixXd cayley_inv_differential(const Space& space, const SiegelPoint& d);
/// D(ball_to_group) at b, by the chain rule through D.
Eigen::MatrixXd ball_to_group_differential(const Space& space, const BallPoint& b);

}  // namespace htype
