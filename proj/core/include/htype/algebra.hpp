#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace htype {

/// Dimension d(k) of an irreducible real Clifford module with k generators
/// squaring to -1. Satisfies d(k+8) = 16 d(k).
int min_dimension(int k);

/// Requested module: k generators acting on a direct sum of irreducibles.
/// For k % 4 == 3 the two chiralities are inequivalent and counted
/// separately; otherwise only mult_plus is used.
struct CliffordSpec {
  int k = 1;
  int mult_plus = 1;
  int mult_minus = 0;

  bool chiral() const { return k % 4 == 3; }
  int total_multiplicity() const { return mult_plus + (chiral() ? mult_minus : 0); }
  bool isotypic() const { return !chiral() || mult_plus == 0 || mult_minus == 0; }
  void validate() const;  // throws std::invalid_argument
};

/// k real skew-symmetric m x m matrices E_i with E_i^2 = -I and
/// E_i E_j = -E_j E_i for i != j.
struct CliffordModule {
  int k = 0;
  int m = 0;
  std::vector<Eigen::MatrixXd> generators;
};

struct CliffordReport {
  double max_skew_dev = 0.0;        // max |E_i + E_i^T|
  double max_square_dev = 0.0;      // max |E_i^2 + I|
  double max_anticommute_dev = 0.0; // max |E_i E_j + E_j E_i|, i != j
  double tolerance = 1e-12;

  double max_dev() const;
  bool pass() const { return max_dev() <= tolerance; }
  std::string summary() const;
};

CliffordModule build_module(const CliffordSpec& spec);
CliffordReport verify_clifford(const CliffordModule& module, double tol = 1e-12);

/// The two-step nilpotent algebra n = v (+) z.  v = R^m carries the module
/// action, z = R^k is the center, inner product is the standard one.
class HTypeAlgebra {
 public:
  explicit HTypeAlgebra(CliffordModule module);

  int m() const { return module_.m; }
  int k() const { return module_.k; }
  const CliffordModule& module() const { return module_; }

  /// J_Z X = sum_i Z_i E_i X.
  Eigen::VectorXd j_map(const Eigen::VectorXd& Z, const Eigen::VectorXd& X) const;

  /// [X, Y] in z, component i = <E_i X, Y>.
  Eigen::VectorXd bracket(const Eigen::VectorXd& X, const Eigen::VectorXd& Y) const;

 private:
  CliffordModule module_;
};

HTypeAlgebra make_algebra(const CliffordSpec& spec);

}  // namespace htype
