#include "htype/algebra.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace htype {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Quaternion coefficients ordered (1, i, j, k).
Eigen::Vector4d qmul(const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
  Eigen::Vector4d r;
  r(0) = a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
  r(1) = a(0) * b(1) + a(1) * b(0) + a(2) * b(3) - a(3) * b(2);
  r(2) = a(0) * b(2) - a(1) * b(3) + a(2) * b(0) + a(3) * b(1);
  r(3) = a(0) * b(3) + a(1) * b(2) - a(2) * b(1) + a(3) * b(0);
  return r;
}

Eigen::Vector4d qconj(const Eigen::Vector4d& a) {
  return Eigen::Vector4d(a(0), -a(1), -a(2), -a(3));
}

// Cayley-Dickson doubling of the quaternions: (a,b)(c,d) = (ac - d*b, da + bc*).
using Oct = Eigen::Matrix<double, 8, 1>;

Oct omul(const Oct& x, const Oct& y) {
  Eigen::Vector4d a = x.head<4>(), b = x.tail<4>();
  Eigen::Vector4d c = y.head<4>(), d = y.tail<4>();
  Oct r;
  r.head<4>() = qmul(a, c) - qmul(qconj(d), b);
  r.tail<4>() = qmul(d, a) + qmul(b, qconj(c));
  return r;
}

// Left multiplication by the octonion basis unit e_i (i = 1..7).
MatrixXd oct_left_mult(int i) {
  MatrixXd L(8, 8);
  Oct u = Oct::Zero();
  u(i) = 1.0;
  for (int j = 0; j < 8; ++j) {
    Oct ej = Oct::Zero();
    ej(j) = 1.0;
    L.col(j) = omul(u, ej);
  }
  return L;
}

MatrixXd quat_left_mult(int i) {
  MatrixXd L(4, 4);
  Eigen::Vector4d u = Eigen::Vector4d::Zero();
  u(i) = 1.0;
  for (int j = 0; j < 4; ++j) {
    Eigen::Vector4d ej = Eigen::Vector4d::Zero();
    ej(j) = 1.0;
    L.col(j) = qmul(u, ej);
  }
  return L;
}

// One irreducible system of k anticommuting skew-symmetric complex
// structures on R^{d(k)}, built from the division algebras for k <= 7,
// a doubling step for k = 8, and tensoring with the k = 8 system beyond.
std::vector<MatrixXd> irreducible_generators(int k) {
  if (k == 1) {
    MatrixXd J(2, 2);
    J << 0, -1, 1, 0;
    return {J};
  }
  if (k <= 3) {
    std::vector<MatrixXd> gens;
    for (int i = 1; i <= k; ++i) gens.push_back(quat_left_mult(i));
    return gens;
  }
  if (k <= 7) {
    std::vector<MatrixXd> gens;
    for (int i = 1; i <= k; ++i) gens.push_back(oct_left_mult(i));
    return gens;
  }
  if (k == 8) {
    // A_i (x) P for the seven octonionic generators, plus I (x) J.
    MatrixXd P(2, 2), J(2, 2);
    P << 1, 0, 0, -1;
    J << 0, -1, 1, 0;
    std::vector<MatrixXd> gens;
    for (int i = 1; i <= 7; ++i)
      gens.push_back(Eigen::kroneckerProduct(oct_left_mult(i), P).eval());
    gens.push_back(Eigen::kroneckerProduct(MatrixXd::Identity(8, 8), J).eval());
    return gens;
  }
  // k > 8: V_k = V_{k-8} (x) R^16.  The volume element w of the k = 8
  // system is symmetric, squares to +I and anticommutes with its
  // generators, so A_i (x) w and I (x) B_j together satisfy the relations.
  std::vector<MatrixXd> base = irreducible_generators(k - 8);
  std::vector<MatrixXd> eight = irreducible_generators(8);
  MatrixXd omega = MatrixXd::Identity(16, 16);
  for (const MatrixXd& B : eight) omega = (omega * B).eval();
  int d = base.front().rows();
  std::vector<MatrixXd> gens;
  for (const MatrixXd& A : base)
    gens.push_back(Eigen::kroneckerProduct(A, omega).eval());
  for (const MatrixXd& B : eight)
    gens.push_back(Eigen::kroneckerProduct(MatrixXd::Identity(d, d), B).eval());
  return gens;
}

// Sign of the volume element E_1...E_k on an irreducible block.  Defined
// (+-I) only when k % 4 == 3, which is the only case we query.
int chirality_sign(const std::vector<MatrixXd>& gens) {
  MatrixXd omega = MatrixXd::Identity(gens.front().rows(), gens.front().cols());
  for (const MatrixXd& E : gens) omega = (omega * E).eval();
  return omega(0, 0) > 0 ? +1 : -1;
}

}  // namespace

int min_dimension(int k) {
  if (k < 1) throw std::domain_error("min_dimension: k must be >= 1");
  static const int base[8] = {2, 4, 4, 8, 8, 8, 8, 16};
  int d = base[(k - 1) % 8];
  for (int i = 0; i < (k - 1) / 8; ++i) d *= 16;
  return d;
}

void CliffordSpec::validate() const {
  if (k < 1) throw std::invalid_argument("CliffordSpec: k must be >= 1");
  if (mult_plus < 0 || mult_minus < 0)
    throw std::invalid_argument("CliffordSpec: multiplicities must be >= 0");
  if (!chiral() && mult_minus != 0)
    throw std::invalid_argument("CliffordSpec: chirality split only meaningful for k % 4 == 3");
  if (total_multiplicity() < 1)
    throw std::invalid_argument("CliffordSpec: at least one multiplicity must be positive");
}

CliffordModule build_module(const CliffordSpec& spec) {
  spec.validate();
  std::vector<MatrixXd> block = irreducible_generators(spec.k);
  int d = block.front().rows();

  std::vector<MatrixXd> plus = block, minus = block;
  if (spec.chiral()) {
    // Flipping the sign of all generators flips the volume element (k odd),
    // giving the other irreducible.
    if (chirality_sign(block) < 0)
      for (MatrixXd& E : plus) E = -E;
    for (size_t i = 0; i < minus.size(); ++i) minus[i] = -plus[i];
  }

  int copies = spec.total_multiplicity();
  CliffordModule mod;
  mod.k = spec.k;
  mod.m = copies * d;
  for (int i = 0; i < spec.k; ++i) {
    MatrixXd E = MatrixXd::Zero(mod.m, mod.m);
    for (int c = 0; c < copies; ++c) {
      const MatrixXd& blk = (spec.chiral() && c >= spec.mult_plus) ? minus[i] : plus[i];
      E.block(c * d, c * d, d, d) = blk;
    }
    mod.generators.push_back(std::move(E));
  }
  return mod;
}

double CliffordReport::max_dev() const {
  return std::max({max_skew_dev, max_square_dev, max_anticommute_dev});
}

std::string CliffordReport::summary() const {
  std::ostringstream os;
  os << (pass() ? "PASS" : "FAIL") << " skew=" << max_skew_dev
     << " square=" << max_square_dev << " anticommute=" << max_anticommute_dev
     << " tol=" << tolerance;
  return os.str();
}

CliffordReport verify_clifford(const CliffordModule& module, double tol) {
  CliffordReport rep;
  rep.tolerance = tol;
  int m = module.m;
  MatrixXd I = MatrixXd::Identity(m, m);
  for (int i = 0; i < module.k; ++i) {
    const MatrixXd& Ei = module.generators[i];
    rep.max_skew_dev = std::max(rep.max_skew_dev, (Ei + Ei.transpose()).cwiseAbs().maxCoeff());
    rep.max_square_dev = std::max(rep.max_square_dev, (Ei * Ei + I).cwiseAbs().maxCoeff());
    for (int j = i + 1; j < module.k; ++j) {
      const MatrixXd& Ej = module.generators[j];
      rep.max_anticommute_dev =
          std::max(rep.max_anticommute_dev, (Ei * Ej + Ej * Ei).cwiseAbs().maxCoeff());
    }
  }
  return rep;
}

HTypeAlgebra::HTypeAlgebra(CliffordModule module) : module_(std::move(module)) {
  if (module_.k < 1 || (int)module_.generators.size() != module_.k)
    throw std::invalid_argument("HTypeAlgebra: malformed module");
}

Eigen::VectorXd HTypeAlgebra::j_map(const Eigen::VectorXd& Z, const Eigen::VectorXd& X) const {
  if (Z.size() != k() || X.size() != m())
    throw std::invalid_argument("j_map: dimension mismatch");
  VectorXd out = VectorXd::Zero(m());
  for (int i = 0; i < k(); ++i) out += Z(i) * (module_.generators[i] * X);
  return out;
}

Eigen::VectorXd HTypeAlgebra::bracket(const Eigen::VectorXd& X, const Eigen::VectorXd& Y) const {
  if (X.size() != m() || Y.size() != m())
    throw std::invalid_argument("bracket: dimension mismatch");
  VectorXd Z(k());
  for (int i = 0; i < k(); ++i) Z(i) = (module_.generators[i] * X).dot(Y);
  return Z;
}

HTypeAlgebra make_algebra(const CliffordSpec& spec) { return HTypeAlgebra(build_module(spec)); }

}  // namespace htype
