#include "superdq/clifford_fine.hpp"

#include <cmath>

namespace superdq {

FactorSet FactorSet::constant(int k, cplx v) {
  FactorSet s;
  s.k = k;
  s.sigma.assign(s.order() * s.order(), v);
  return s;
}

CocycleCheck is_factor_set(const FactorSet& s, double tol) {
  CocycleCheck r;
  Mask G = s.order();
  for (Mask a = 0; a < G; ++a)
    for (Mask b = 0; b < G; ++b)
      for (Mask c = 0; c < G; ++c) {
        cplx lhs = s(a, b ^ c) * s(b, c), rhs = s(a, b) * s(a ^ b, c);
        double e = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
        if (e > r.error) r.error = e;
        if (e > tol && r.ok) {
          r.ok = false;
          r.a = a, r.b = b, r.c = c;
        }
      }
  return r;
}

namespace {

FactorSet pair_sign(int n, bool lower) {
  FactorSet s = FactorSet::constant(n);
  for (Mask a = 0; a < s.order(); ++a)
    for (Mask b = 0; b < s.order(); ++b) {
      int cnt = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if ((a >> p & 1) && (b >> q & 1) && (lower ? p > q : p < q)) ++cnt;
      s.at(a, b) = (cnt & 1) ? -1.0 : 1.0;
    }
  return s;
}

}  // namespace

FactorSet sigma_clifford(int n) { return pair_sign(n, true); }
FactorSet sigma_clifford_upper(int n) { return pair_sign(n, false); }

EquivCheck check_equivalence(const FactorSet& s1, const FactorSet& s2, const Rho& rho, double tol) {
  if (s1.k != s2.k || rho.size() != s1.order()) throw std::invalid_argument("group mismatch");
  EquivCheck r;
  for (Mask a = 0; a < s1.order(); ++a)
    for (Mask b = 0; b < s1.order(); ++b) {
      cplx want = s1(a, b) * rho[a ^ b] / (rho[a] * rho[b]);
      double e = std::abs(s2(a, b) - want) / std::max(1.0, std::abs(want));
      if (e > r.error) r.error = e;
      if (e > tol && r.ok) {
        r.ok = false;
        r.a = a, r.b = b;
      }
    }
  return r;
}

std::optional<Rho> search_equivalence(const FactorSet& s1, const FactorSet& s2, double tol) {
  if (s1.k != s2.k) throw std::invalid_argument("group mismatch");
  std::size_t G = s1.order();
  auto q = [&](Mask a, Mask b) { return s2(a, b) / s1(a, b); };
  Rho rho(G, 0.0);
  // q(0,0) = 1 / rho(0); q(e,e) rho(e)^2 = rho(0)
  rho[0] = 1.0 / q(0, 0);
  for (int i = 0; i < s1.k; ++i) rho[Mask(1) << i] = std::sqrt(rho[0] / q(Mask(1) << i, Mask(1) << i));
  for (Mask a = 1; a < G; ++a) {
    if (popcount(a) == 1) continue;
    Mask hi = Mask(1) << (63 - std::countl_zero(a));
    Mask rest = a ^ hi;
    rho[a] = q(rest, hi) * rho[rest] * rho[hi];
  }
  if (!check_equivalence(s1, s2, rho, tol).ok) return std::nullopt;
  return rho;
}

bool is_symmetric(const FactorSet& s, double tol) {
  for (Mask a = 0; a < s.order(); ++a)
    for (Mask b = 0; b < a; ++b)
      if (std::abs(s(a, b) - s(b, a)) > tol * std::max(1.0, std::abs(s(a, b)))) return false;
  return true;
}

Rho rho_star(int n, cplx c, int branch) {
  cplx ic = cplx(0, 1) * c;
  cplx root = std::sqrt(ic) * double(branch < 0 ? -1 : 1);
  double sgn = neg1pow(n * (n + 1) / 2);
  Rho rho(std::size_t(1) << n);
  for (Mask I = 0; I < rho.size(); ++I) rho[I] = sgn * ipow(root, popcount(I)) * ipow(ic, -n);
  return rho;
}

StarFactorReport factor_set_from_star(const StructureConstants<cplx>& L, const OddParams<cplx>& p, int branch,
                                      const FactorSet* clifford) {
  int n = L.n;
  StarFactorReport r;
  r.sigma_star = FactorSet::constant(n);
  FactorSet coeff = FactorSet::constant(n);
  cplx k = p.kappa_odd(n);
  for (Mask I = 0; I < L.size(); ++I)
    for (Mask J = 0; J < L.size(); ++J) {
      r.sigma_star.at(I, J) = L(I, J);
      coeff.at(I, J) = L(I, J) / k;
    }
  r.cocycle = is_factor_set(r.sigma_star);
  if (!r.cocycle.ok) throw std::logic_error("structure constants are not a factor set");
  FactorSet cl = clifford ? *clifford : sigma_clifford(n);
  Rho rho = rho_star(n, p.c(), branch);
  r.coeff_vs_clifford = check_equivalence(cl, coeff, rho);
  Rho rho1 = rho;
  for (auto& v : rho1) v /= rho[0];
  r.star_vs_clifford = check_equivalence(cl, r.sigma_star, rho1);
  return r;
}

CliffordRelations clifford_relations_exact(int n, const OddParams<QI>& p) {
  CliffordRelations r;
  StructureConstants<QI> L = lambda_closedform<QI>(n, p);
  QI one(1);
  QI ap = p.alpha + one;
  QI nominal = p.a0 * ap * ap / (QI::i() * p.alpha);
  for (int i = 0; i < n; ++i) {
    Mask e = Mask(1) << i;
    QI s2 = one / L(e, e);
    if (!(s2 * L(e, e) == one)) r.squares_one = false;
    if (!(s2 == nominal)) r.scale_matches_formula = false;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Mask f = Mask(1) << j;
      if (!(L(e, f) + L(f, e)).is_zero()) r.anticommute = false;
    }
  }
  return r;
}

}  // namespace superdq
