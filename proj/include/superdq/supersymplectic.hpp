#pragma once
#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "superdq/grassmann.hpp"
#include "superdq/polynomial.hpp"

namespace superdq {

struct GradedForm {
  Eigen::MatrixXd even;  // m x m, antisymmetric
  Eigen::MatrixXd odd;   // n x n, symmetric
  int m() const { return int(even.rows()); }
  int n() const { return int(odd.rows()); }
  Eigen::MatrixXd full() const;  // block diagonal (m+n) x (m+n)
  void validate(double tol = 1e-12) const;
};

// Columns of `basis` are ordered e_1..e_d, f_1..f_d, theta_1..theta_{n+}, eta_1..eta_{n-}.
struct CanonicalBasis {
  Eigen::MatrixXd basis;
  int d = 0;
  int n_plus = 0;
  int n_minus = 0;
  Eigen::MatrixXd canonical_matrix() const;
};

CanonicalBasis darboux_basis(const GradedForm& w, double rank_tol = 1e-10);
std::vector<Eigen::VectorXd> max_isotropic(const GradedForm& w, double rank_tol = 1e-10);
std::vector<Eigen::VectorXd> symp_orthogonal(const GradedForm& w, const std::vector<Eigen::VectorXd>& F,
                                             double rank_tol = 1e-10);

// Elements of the truncated supernumber algebra (exterior algebra on N sources).
using SuperNumber = Grassmann<QI>;

SuperNumber super_body(const SuperNumber& s);
SuperNumber super_even_part(const SuperNumber& s);
SuperNumber super_odd_part(const SuperNumber& s);

struct HeisenbergElement {
  std::vector<SuperNumber> x;   // even coordinates
  std::vector<SuperNumber> xi;  // odd coordinates
  SuperNumber a;                // central coordinate
  void validate() const;
};

HeisenbergElement heis_identity(int m, int n, int N);
HeisenbergElement heis_inverse(const HeisenbergElement& g);
SuperNumber super_omega(const GradedForm& w, const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement heis_mul(const HeisenbergElement& g, const HeisenbergElement& h, const GradedForm& w);

struct DualElement {
  std::vector<SuperNumber> y;
  std::vector<SuperNumber> eta;
  SuperNumber b;
};
DualElement coadjoint(const HeisenbergElement& g, const DualElement& z);

SuperNumber taylor_extend(const Poly<QI>& f, const std::vector<SuperNumber>& x);

}  // namespace superdq
