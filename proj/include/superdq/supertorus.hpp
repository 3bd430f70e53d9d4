#pragma once
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "superdq/grassmann.hpp"
#include "superdq/structure_constants.hpp"

namespace superdq {

struct Mode {
  long k = 0, l = 0;
  auto operator<=>(const Mode&) const = default;
  Mode operator+(const Mode& o) const { return {k + o.k, l + o.l}; }
};

// Finite sum of e^{2 pi i (k x + l y)} xi^I zeta^P. The first n odd generators are deformed;
// the next `aux` ones are supercommuting odd parameters used for odd translations.
template <class T>
struct TorusElement {
  int n = 0;
  int aux = 0;
  std::map<Mode, Grassmann<T>> coeffs;

  TorusElement() = default;
  TorusElement(int n_, int aux_ = 0) : n(n_), aux(aux_) {}
  int total() const { return n + aux; }
  void add(Mode md, Mask m, const T& v);
  void add(Mode md, const Grassmann<T>& g);
  T coeff(Mode md, Mask m) const;
  bool is_zero() const { return coeffs.empty(); }
  TorusElement conj() const;  // (k,l,I) -> (-k,-l,I)
  TorusElement scaled(const T& s) const;
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.n == b.n && a.aux == b.aux && a.coeffs == b.coeffs;
  }
};

template <class T> TorusElement<T> torus_mode(int n, Mode md, Mask m, const T& v, int aux = 0) {
  TorusElement<T> e(n, aux);
  e.add(md, m, v);
  return e;
}

template <class T>
struct TorusAlgebra {
  int n = 0;
  StructureConstants<T> lambda;
  std::function<T(Mode, Mode)> phase;
};

// theta = 1/a0; theta = 0 gives the supercommutative product (the a0 -> infinity limit of Lambda).
TorusAlgebra<cplx> torus_algebra(int n, double theta, cplx alpha = 1.0);
// Exact odd sector; mode pairs with omega(k,k') != 0 are rejected.
TorusAlgebra<QI> torus_algebra_exact(int n, const QI& a0, const QI& alpha);
TorusAlgebra<QI> torus_algebra_exact_undeformed(int n);

template <class T> TorusElement<T> torus_star(const TorusElement<T>& f, const TorusElement<T>& g, const TorusAlgebra<T>& A);
// Undeformed product: pointwise modes, Grassmann odd part.
template <class T> TorusElement<T> torus_mul(const TorusElement<T>& f, const TorusElement<T>& g);

struct TorusAction {
  double y1 = 0, y2 = 0;
  std::vector<Grassmann<cplx>> odd;  // odd[i] is the shift of the i-th generator, over the total generator set
};
// rho_z(f)(u) = f(u - z)
TorusElement<cplx> torus_rho(const TorusAction& z, const TorusElement<cplx>& f);
TorusAction compose(const TorusAction& a, const TorusAction& b);

// sum over odd monomials of sup |f_I| on the torus: 512^2 samples then Newton refinement
double sup_norm(const TorusElement<cplx>& f, int samples = 512);

std::string torus_to_json(const TorusElement<cplx>& f);
TorusElement<cplx> torus_from_json(const std::string& s);

// V * U = factor * U * V, read off the mode coefficients
cplx commutation_factor(const TorusAlgebra<cplx>& A);

double max_abs_diff(const TorusElement<cplx>& a, const TorusElement<cplx>& b);

}  // namespace superdq
