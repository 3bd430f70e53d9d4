#pragma once
#include <functional>
#include <vector>

#include "superdq/exact.hpp"
#include "superdq/polynomial.hpp"

namespace superdq {

// Weyl-ordered product on polynomials for the standard form sum_p dx_{2p} ^ dx_{2p+1}:
// f * g = exp((i theta/2) sum_p (dL_{2p} dR_{2p+1} - dL_{2p+1} dR_{2p})) f g
template <class T> Poly<T> moyal_poly(const Poly<T>& f, const Poly<T>& g, const T& theta) {
  int m = f.vars();
  if (m % 2) throw std::invalid_argument("moyal_poly needs an even number of variables");
  if (g.vars() != m) throw std::invalid_argument("polynomial arity mismatch");
  // h(x, y) = f(x) g(y) on 2m variables
  Poly<T> h(2 * m);
  for (auto& [ef, cf] : f.terms())
    for (auto& [eg, cg] : g.terms()) {
      std::vector<int> e(ef);
      e.insert(e.end(), eg.begin(), eg.end());
      h.add_term(e, cf * cg);
    }
  auto P = [&](const Poly<T>& q) {
    Poly<T> r(2 * m);
    for (int p = 0; p < m / 2; ++p) {
      r += q.derivative(2 * p).derivative(m + 2 * p + 1);
      r -= q.derivative(2 * p + 1).derivative(m + 2 * p);
    }
    return r;
  };
  T half_i_theta = Scalar<T>::imag_unit() * theta * Scalar<T>::inv_int(2);
  Poly<T> acc = h, term = h;
  for (int k = 1; !term.is_zero(); ++k) {
    term = (half_i_theta * Scalar<T>::inv_int(k)) * P(term);
    acc += term;
  }
  Poly<T> out(m);
  for (auto& [e, c] : acc.terms()) {
    std::vector<int> d(m);
    for (int i = 0; i < m; ++i) d[i] = e[i] + e[m + i];
    out.add_term(d, c);
  }
  return out;
}

// Complex samples on a two-dimensional lattice, row-major (axis 0 slow).
struct Grid2 {
  int N = 0;
  double h0 = 0, h1 = 0;       // spacings
  double o0 = 0, o1 = 0;       // coordinates of sample (0,0)
  std::vector<cplx> v;

  static Grid2 centered(int N, double L);  // spacing 2L/N, first node at -L
  Grid2 like() const;                      // same lattice, zero data
  double x0(int i) const { return o0 + i * h0; }
  double x1(int j) const { return o1 + j * h1; }
  cplx& at(int i, int j) { return v[std::size_t(i) * N + j]; }
  const cplx& at(int i, int j) const { return v[std::size_t(i) * N + j]; }
  void fill(const std::function<cplx(double, double)>& f);
  cplx integral() const;
  // largest boundary sample relative to the largest sample
  double boundary_ratio() const;
  // integral of |f| over the outer ring of width `ring` nodes
  double tail_mass(int ring = 2) const;
};

Grid2 operator+(const Grid2& a, const Grid2& b);
Grid2 operator-(const Grid2& a, const Grid2& b);
Grid2 operator*(cplx s, const Grid2& a);
Grid2 pointwise(const Grid2& a, const Grid2& b);
Grid2 conj(const Grid2& a);
double max_abs_diff(const Grid2& a, const Grid2& b);

enum class MoyalMode {
  Linear,  // zero-padded twisted convolution of the trigonometric interpolants
  Cyclic   // exact N-periodic twisted convolution; needs theta kappa0 kappa1 N / (4 pi) integral
};

struct MoyalDiagnostics {
  double boundary_ratio = 0;
  double tail_mass = 0;
  bool decay_ok = true;
};

// f * g with e_a * e_b = exp(-(i theta/2) omega(a,b)) e_{a+b}, omega(a,b) = a0 b1 - a1 b0.
Grid2 moyal_grid(const Grid2& f, const Grid2& g, double theta, MoyalMode mode = MoyalMode::Linear,
                 MoyalDiagnostics* diag = nullptr, double decay_tol = 1e-8);
// Same product by direct summation over frequency pairs; O(N^4), single thread.
Grid2 moyal_grid_serial(const Grid2& f, const Grid2& g, double theta, MoyalMode mode = MoyalMode::Linear);

// Phase of e^{2 pi i k.x} * e^{2 pi i k'.x} for integer modes.
cplx torus_mode_phase(long k, long l, long kp, long lp, double theta);

}  // namespace superdq
