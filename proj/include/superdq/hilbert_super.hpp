#pragma once
#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace superdq {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

struct HilbertSuper {
  std::vector<int> grading;  // parity of each orthonormal basis vector
  CMat J;
  int parity = 0;
  int dim() const { return int(grading.size()); }
  // Throws when J is not unitary, not homogeneous, or J^2 / J* break the sign rules.
  void validate(double tol = 1e-12) const;
  // Largest violation of the J^2 and J* sign rules.
  double defj_residual() const;
};

struct SuperOp {
  CMat M;
  int degree = 0;
};

// Exterior algebra on n generators, basis indexed by subset mask, J = Hodge.
HilbertSuper grassmann_space(int n);
// points (x) exterior algebra, basis index = point * 2^n + mask.
HilbertSuper grid_space(int points, int n);
HilbertSuper tensor_superspace(const HilbertSuper& a, const HilbertSuper& b);
HilbertSuper direct_sum(const HilbertSuper& a, const HilbertSuper& b);

CMat parity_operator(const HilbertSuper& H);
// Degree of T, or -1 when T mixes parities.
int op_degree(const HilbertSuper& H, const CMat& T, double tol = 0.0);
std::pair<CMat, CMat> split_parity(const HilbertSuper& H, const CMat& T);

std::complex<double> super_pairing(const HilbertSuper& H, const CVec& x, const CVec& y);
SuperOp superadjoint(const HilbertSuper& H, const SuperOp& T);
// Applies the homogeneous rule to each parity part of T.
CMat superadjoint_any(const HilbertSuper& H, const CMat& T);
double op_norm(const CMat& T);

// Left multiplication by theta^I on the exterior algebra.
CMat mult_op(int n, unsigned long long I);

struct KreinSplit {
  CMat plus, minus;  // orthonormal columns
};
KreinSplit krein_decompose(const HilbertSuper& H);

struct AxiomViolation {
  std::string axiom;
  std::string witness;
  double error;
};
struct CstarReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};
CstarReport cstar_super_check(const HilbertSuper& H, const std::vector<SuperOp>& gens,
                              const std::vector<CMat>& declared_dagger, double tol = 1e-10);

}  // namespace superdq
