#pragma once
#include <map>
#include <vector>

#include "superdq/hilbert_super.hpp"
#include "superdq/params.hpp"
#include "superdq/structure_constants.hpp"
#include "superdq/superfunction.hpp"

namespace superdq {

// Lattice model with one position axis x and one momentum axis w (m = 2).
// x_i = -L + i h, h = 2L/N, periodic. Symbols live on w_l = (l - N/2) dw with dw = pi/(2 a0 L):
// on this lattice the Moyal phase is exp(2 pi i (a1 b2 - a2 b1)/N), so products are exact.
struct GridModel {
  int m = 2;
  int n = 1;
  int N = 64;
  double L = 8;
  double a0 = 1;
  cplx alpha = 1;

  void validate() const;
  DeformParams params() const { return {m, n, a0, alpha}; }
  int S() const { return 1 << n; }
  int dim() const { return S() * N; }
  int idx(int i, Mask K) const { return i * S() + int(K); }
  double h() const { return 2 * L / N; }
  double dw() const { return M_PI / (2 * a0 * L); }
  double x(int i) const { return -L + i * h(); }
  double w(int l) const { return (l - N / 2) * dw(); }
  // coherent-state momenta live on the coarser lattice pi/(a0 L) Z
  double dwc() const { return M_PI / (a0 * L); }
  double wc(int l) const { return (l - N / 2) * dwc(); }
  Grid2 symbol_grid() const;
  GridSuperFunction zero_symbol() const { return GridSuperFunction(n, symbol_grid()); }
  HilbertSuper space() const { return grid_space(N, n); }
};

using GridOperator = SuperOp;

// Theta(I,J,K): coefficient of xi0^K in int dxi [xi^I int dxi1 E (xi + xi1)^J],
// E = exp(i a0 (xi.xi0 - alpha xi1.xi0 - (alpha+1) xi.xi1)); indexed (I * S + J) * S + K.
std::vector<cplx> omega_odd_table(int n, double a0, cplx alpha);

CMat omega_fn(const GridSuperFunction& f, const GridModel& g);
// Direct quadrature of the w-integral, single thread.
CMat omega_fn_serial(const GridSuperFunction& f, const GridModel& g);
// Omega(x, w) for x in -L + hZ and w in dw Z.
CMat omega_point(double x, double w, const GridModel& g);
CMat sigma_op(const GridModel& g);
// Translation by s lattice steps, momentum w in dwc Z, central coordinate a.
CMat induced_rep(int s, double w, double a, const GridModel& g);
// U(x, w, a - xw/2) Sigma U(-x, -w, -a - xw/2)
CMat omega_from_group(int s, double w, double a, const GridModel& g);
// Odd Fourier transform F_beta acting on each lattice point.
CMat odd_fourier_op(cplx beta, const GridModel& g);

// Moyal product matching Omega on the symbol lattice.
GridSuperFunction symbol_star(const GridSuperFunction& f, const GridSuperFunction& h, const GridModel& g);
GridSuperFunction symbol_constant(cplx c, const GridModel& g);

// Grassmann-valued lattice field over banks xi (0..n-1) and xi0 (n..2n-1).
using GField = std::map<Mask, CVec>;
GField coherent_state(const CVec& phi, int k, int l, const GridModel& g);
// <A, B> = h sum_x0 int dxi0 conj(A) B, a Grassmann number in xi.
std::map<Mask, cplx> field_pairing(const GField& A, const GField& B, const GridModel& g);
GField apply_op(const CMat& T, int degree, const GField& F, const GridModel& g);

// ||phi||^{-2} int dz <phi_z, T phi_z>
cplx supertrace_op(const CMat& T, int degree, const CVec& phi, const GridModel& g);
// C sum_K (-1)^{|K|} T_KK, the kernel form of the same trace.
cplx supertrace_kernel(const CMat& T, const GridModel& g);

struct ResolutionResult {
  GField lhs, rhs;
  cplx C_expected;
  cplx C_measured;
  double rel_error;
};
// psi is a field on the xi0 bank only (keys K << n).
ResolutionResult resolution_check(const CVec& phi, const GField& psi, const GridModel& g);

struct BerezinResult {
  cplx trace;
  cplx nominal_prefactor;  // r1 ((alpha-beta)/(1+alpha))^n (-1)^{n|f|}
  cplx lattice_factor;     // 2^{m/2} (-1)^n, measured relative to the nominal prefactor
  cplx f_value;            // f_empty(z1)
  bool degenerate;         // beta = alpha
};
BerezinResult berezin_transform(const GridSuperFunction& f, int k1, int l1, cplx beta, const CVec& phi,
                                const GridModel& g);

// Rel. deviation of Omega(1) phi from a continuum Gaussian of width sigma, tail outside the box included.
double unit_truncation_error(const GridModel& g, double sigma);

}  // namespace superdq
