#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "superdq/grassmann.hpp"
#include "superdq/moyal.hpp"
#include "superdq/polynomial.hpp"
#include "superdq/structure_constants.hpp"

namespace superdq {

// f = sum_I f_I xi^I with every component on one even backend (polynomial or grid).
template <class C>
struct SuperFunction {
  int n = 0;
  std::vector<C> comp;  // indexed by subset mask

  SuperFunction() = default;
  SuperFunction(int n_, const C& zero) : n(n_), comp(std::size_t(1) << n_, zero) {}
  C& operator[](Mask I) { return comp.at(I); }
  const C& operator[](Mask I) const { return comp.at(I); }
  std::size_t size() const { return comp.size(); }
};

inline bool comp_is_zero(const Grid2& g) {
  for (auto& z : g.v)
    if (z != 0.0) return false;
  return true;
}
template <class T> bool comp_is_zero(const Poly<T>& p) { return p.is_zero(); }

// Parity of a homogeneous super function, -1 when mixed.
template <class C> int sf_parity(const SuperFunction<C>& f) {
  int p = -2;
  for (Mask I = 0; I < f.size(); ++I) {
    if (comp_is_zero(f[I])) continue;
    int q = popcount(I) & 1;
    if (p == -2) p = q;
    else if (p != q) return -1;
  }
  return p == -2 ? 0 : p;
}

// (f * g)_{I xor J} += Lambda(I,J) (f_I *_theta g_J)
template <class C, class T, class Prod>
SuperFunction<C> super_star(const SuperFunction<C>& f, const SuperFunction<C>& g, const StructureConstants<T>& L,
                            Prod&& even_product) {
  if (f.n != g.n || f.n != L.n) throw std::invalid_argument("odd dimension mismatch");
  SuperFunction<C> out = f;
  for (auto& c : out.comp) c = c - c;
  for (Mask I = 0; I < f.size(); ++I) {
    if (comp_is_zero(f[I])) continue;
    for (Mask J = 0; J < g.size(); ++J) {
      if (comp_is_zero(g[J]) || Scalar<T>::is_zero(L(I, J))) continue;
      out[I ^ J] = out[I ^ J] + L(I, J) * even_product(f[I], g[J]);
    }
  }
  return out;
}

// Undeformed product: Grassmann signs with the commutative even product.
template <class C, class Prod>
SuperFunction<C> super_mul(const SuperFunction<C>& f, const SuperFunction<C>& g, Prod&& even_product) {
  if (f.n != g.n) throw std::invalid_argument("odd dimension mismatch");
  SuperFunction<C> out = f;
  for (auto& c : out.comp) c = c - c;
  for (Mask I = 0; I < f.size(); ++I)
    for (Mask J = 0; J < g.size(); ++J) {
      int s = eps(I, J);
      if (!s || comp_is_zero(f[I]) || comp_is_zero(g[J])) continue;
      out[I | J] = s > 0 ? out[I | J] + even_product(f[I], g[J]) : out[I | J] - even_product(f[I], g[J]);
    }
  return out;
}

template <class T> Poly<T> conj_poly(const Poly<T>& p) {
  Poly<T> r(p.vars());
  for (auto& [e, c] : p.terms()) r.add_term(e, Scalar<T>::conj(c));
  return r;
}

template <class C, class Conj> SuperFunction<C> sf_conj(const SuperFunction<C>& f, Conj&& cj) {
  SuperFunction<C> r = f;
  for (auto& c : r.comp) c = cj(c);
  return r;
}

using GridSuperFunction = SuperFunction<Grid2>;

// str f = int f_top ; tr f = int f_empty
cplx supertrace_fn(const GridSuperFunction& f);
cplx twisted_trace(const GridSuperFunction& f);
GridSuperFunction grid_super_star(const GridSuperFunction& f, const GridSuperFunction& g,
                                  const StructureConstants<cplx>& L, double theta,
                                  MoyalMode mode = MoyalMode::Linear);
GridSuperFunction grid_super_mul(const GridSuperFunction& f, const GridSuperFunction& g);

// Binary layout: m, n, N (int64), extents and spacings (float64), origin (float64),
// then per subset mask the complex samples (float64 pairs), little-endian.
void write_grid_binary(std::ostream& os, const GridSuperFunction& f);
GridSuperFunction read_grid_binary(std::istream& is);

}  // namespace superdq
