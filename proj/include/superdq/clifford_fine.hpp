#pragma once
#include <optional>
#include <string>
#include <vector>

#include "superdq/grassmann.hpp"
#include "superdq/params.hpp"
#include "superdq/structure_constants.hpp"

namespace superdq {

// Map (Z_2)^k x (Z_2)^k -> C*, group elements as bit masks; entries indexed a * 2^k + b.
struct FactorSet {
  int k = 0;
  std::vector<cplx> sigma;
  std::size_t order() const { return std::size_t(1) << k; }
  cplx operator()(Mask a, Mask b) const { return sigma[a * order() + b]; }
  cplx& at(Mask a, Mask b) { return sigma[a * order() + b]; }
  static FactorSet constant(int k, cplx v = 1.0);
};

struct CocycleCheck {
  bool ok = true;
  Mask a = 0, b = 0, c = 0;  // first violating triple
  double error = 0;
};
CocycleCheck is_factor_set(const FactorSet& s, double tol = 1e-12);

// (-1)^{#{(p in a, q in b) : p > q}}: e_p e_q = -e_q e_p, e_p^2 = 1
FactorSet sigma_clifford(int n);
// The literal product prod_{p<q} (-1)^{a_p b_q}; also a Clifford factor set, with the opposite orientation.
FactorSet sigma_clifford_upper(int n);

using Rho = std::vector<cplx>;
struct EquivCheck {
  bool ok = true;
  Mask a = 0, b = 0;
  double error = 0;
};
// s2(a,b) = s1(a,b) rho(a+b) / (rho(a) rho(b)) for all pairs
EquivCheck check_equivalence(const FactorSet& s1, const FactorSet& s2, const Rho& rho, double tol = 1e-12);
// Exact decision: rho is forced on generators up to a character, so one candidate settles it.
std::optional<Rho> search_equivalence(const FactorSet& s1, const FactorSet& s2, double tol = 1e-12);
bool is_symmetric(const FactorSet& s, double tol = 1e-12);

// rho(I) = (ic)^{|I|/2 - n} (-1)^{n(n+1)/2}; branch = -1 takes the other square root of ic.
Rho rho_star(int n, cplx c, int branch = 1);

struct StarFactorReport {
  FactorSet sigma_star;  // Lambda(I,J) read as a factor set
  CocycleCheck cocycle;
  EquivCheck coeff_vs_clifford;  // c_IJ = Lambda / kappa_odd against sigma_Cl with rho
  EquivCheck star_vs_clifford;   // Lambda against sigma_Cl with rho / rho(empty)
};
StarFactorReport factor_set_from_star(const StructureConstants<cplx>& L, const OddParams<cplx>& p, int branch = 1,
                                      const FactorSet* clifford = nullptr);

// Normalized generators xi_i (a0 (1+alpha)^2 / (i alpha))^{1/2}: exact relation check.
struct CliffordRelations {
  bool squares_one = true;
  bool anticommute = true;
  bool scale_matches_formula = true;  // 1/Lambda({i},{i}) equals a0 (1+alpha)^2 / (i alpha)
};
CliffordRelations clifford_relations_exact(int n, const OddParams<QI>& p);

}  // namespace superdq
