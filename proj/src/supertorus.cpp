#include "superdq/supertorus.hpp"

#include <cmath>
#include "json.hpp"

#include "superdq/moyal.hpp"

namespace superdq {

template <class T> void TorusElement<T>::add(Mode md, Mask m, const T& v) {
  if (Scalar<T>::is_zero(v)) return;
  auto it = coeffs.try_emplace(md, Grassmann<T>(total())).first;
  it->second.add_term(m, v);
  if (it->second.is_zero()) coeffs.erase(it);
}

template <class T> void TorusElement<T>::add(Mode md, const Grassmann<T>& g) {
  for (auto& [m, v] : g.terms()) add(md, m, v);
}

template <class T> T TorusElement<T>::coeff(Mode md, Mask m) const {
  auto it = coeffs.find(md);
  return it == coeffs.end() ? Scalar<T>::from_int(0) : it->second.coeff(m);
}

template <class T> TorusElement<T> TorusElement<T>::conj() const {
  TorusElement r(n, aux);
  for (auto& [md, g] : coeffs) r.add({-md.k, -md.l}, g.conj());
  return r;
}

template <class T> TorusElement<T> TorusElement<T>::scaled(const T& s) const {
  TorusElement r(n, aux);
  for (auto& [md, g] : coeffs) r.add(md, s * g);
  return r;
}

template <class T> TorusElement<T>& TorusElement<T>::operator+=(const TorusElement& o) {
  if (o.n != n || o.aux != aux) throw std::invalid_argument("torus element shape mismatch");
  for (auto& [md, g] : o.coeffs) add(md, g);
  return *this;
}

template <class T> TorusElement<T>& TorusElement<T>::operator-=(const TorusElement& o) {
  if (o.n != n || o.aux != aux) throw std::invalid_argument("torus element shape mismatch");
  for (auto& [md, g] : o.coeffs)
    for (auto& [m, v] : g.terms()) add(md, m, -v);
  return *this;
}

namespace {

template <class T> StructureConstants<T> grassmann_table(int n) {
  StructureConstants<T> L;
  L.n = n;
  L.table.resize(L.size() * L.size());
  for (Mask I = 0; I < L.size(); ++I)
    for (Mask J = 0; J < L.size(); ++J) L.table[I * L.size() + J] = Scalar<T>::from_int(eps(I, J));
  return L;
}

long omega_int(Mode a, Mode b) { return a.k * b.l - a.l * b.k; }

}  // namespace

TorusAlgebra<cplx> torus_algebra(int n, double theta, cplx alpha) {
  TorusAlgebra<cplx> A;
  A.n = n;
  if (theta == 0.0) {
    A.lambda = grassmann_table<cplx>(n);
  } else {
    OddParams<cplx> p{1.0 / theta, alpha};
    p.validate();
    A.lambda = lambda_closedform<cplx>(n, p);
  }
  A.phase = [theta](Mode a, Mode b) { return torus_mode_phase(a.k, a.l, b.k, b.l, theta); };
  return A;
}

TorusAlgebra<QI> torus_algebra_exact(int n, const QI& a0, const QI& alpha) {
  OddParams<QI> p{a0, alpha};
  p.validate();
  TorusAlgebra<QI> A;
  A.n = n;
  A.lambda = lambda_closedform<QI>(n, p);
  A.phase = [](Mode a, Mode b) {
    if (omega_int(a, b) != 0) throw std::domain_error("transcendental phase in exact torus product");
    return QI(1);
  };
  return A;
}

TorusAlgebra<QI> torus_algebra_exact_undeformed(int n) {
  TorusAlgebra<QI> A;
  A.n = n;
  A.lambda = grassmann_table<QI>(n);
  A.phase = [](Mode, Mode) { return QI(1); };
  return A;
}

template <class T>
TorusElement<T> torus_star(const TorusElement<T>& f, const TorusElement<T>& g, const TorusAlgebra<T>& A) {
  if (f.n != A.n || g.n != A.n || f.aux != g.aux) throw std::invalid_argument("torus element shape mismatch");
  int n = A.n;
  Mask phys = full_mask(n);
  TorusElement<T> r(n, f.aux);
  for (auto& [ma, ga] : f.coeffs)
    for (auto& [mb, gb] : g.coeffs) {
      T ph = A.phase(ma, mb);
      Mode md = ma + mb;
      for (auto& [a, va] : ga.terms())
        for (auto& [b, vb] : gb.terms()) {
          Mask I = a & phys, J = b & phys, P = a >> n, Q = b >> n;
          int s = eps(P, Q);
          if (s == 0) continue;
          if ((popcount(P) * popcount(J)) & 1) s = -s;
          T v = ph * A.lambda(I, J) * va * vb;
          if (Scalar<T>::is_zero(v)) continue;
          r.add(md, (I ^ J) | ((P | Q) << n), s > 0 ? v : -v);
        }
    }
  return r;
}

template <class T> TorusElement<T> torus_mul(const TorusElement<T>& f, const TorusElement<T>& g) {
  if (f.n != g.n || f.aux != g.aux) throw std::invalid_argument("torus element shape mismatch");
  TorusElement<T> r(f.n, f.aux);
  for (auto& [ma, ga] : f.coeffs)
    for (auto& [mb, gb] : g.coeffs) r.add(ma + mb, ga * gb);
  return r;
}

template struct TorusElement<cplx>;
template struct TorusElement<QI>;
template TorusElement<cplx> torus_star(const TorusElement<cplx>&, const TorusElement<cplx>&, const TorusAlgebra<cplx>&);
template TorusElement<QI> torus_star(const TorusElement<QI>&, const TorusElement<QI>&, const TorusAlgebra<QI>&);
template TorusElement<cplx> torus_mul(const TorusElement<cplx>&, const TorusElement<cplx>&);
template TorusElement<QI> torus_mul(const TorusElement<QI>&, const TorusElement<QI>&);

TorusElement<cplx> torus_rho(const TorusAction& z, const TorusElement<cplx>& f) {
  int N = f.total();
  if (!z.odd.empty() && (int)z.odd.size() != f.n) throw std::invalid_argument("odd shift size mismatch");
  std::vector<Grassmann<cplx>> sub;
  for (int i = 0; i < f.n; ++i) {
    Grassmann<cplx> s = Grassmann<cplx>::generator(N, i);
    if (!z.odd.empty()) {
      if (z.odd[i].n() != N) throw std::invalid_argument("odd shift generator count mismatch");
      s -= z.odd[i];
    }
    sub.push_back(std::move(s));
  }
  TorusElement<cplx> r(f.n, f.aux);
  for (auto& [md, g] : f.coeffs) {
    cplx ph = std::polar(1.0, -2 * M_PI * (md.k * z.y1 + md.l * z.y2));
    for (auto& [m, v] : g.terms()) {
      Grassmann<cplx> t = Grassmann<cplx>::scalar(N, ph * v);
      for (Mask mm = m & full_mask(f.n); mm; mm &= mm - 1) t = t * sub[std::countr_zero(mm)];
      t = t * Grassmann<cplx>::monomial(N, m & ~full_mask(f.n), 1.0);
      r.add(md, t);
    }
  }
  return r;
}

TorusAction compose(const TorusAction& a, const TorusAction& b) {
  TorusAction r{a.y1 + b.y1, a.y2 + b.y2, {}};
  if (a.odd.empty()) r.odd = b.odd;
  else if (b.odd.empty()) r.odd = a.odd;
  else
    for (std::size_t i = 0; i < a.odd.size(); ++i) r.odd.push_back(a.odd[i] + b.odd[i]);
  return r;
}

namespace {

struct TrigPoly {
  std::vector<std::pair<Mode, cplx>> t;
  // value, gradient, hessian of |p|^2
  void eval(double x, double y, double& g, double grad[2], double H[2][2]) const {
    cplx p = 0, px = 0, py = 0, pxx = 0, pxy = 0, pyy = 0;
    for (auto& [md, c] : t) {
      cplx e = c * std::polar(1.0, 2 * M_PI * (md.k * x + md.l * y));
      cplx ik = cplx(0, 2 * M_PI * md.k), il = cplx(0, 2 * M_PI * md.l);
      p += e;
      px += ik * e;
      py += il * e;
      pxx += ik * ik * e;
      pxy += ik * il * e;
      pyy += il * il * e;
    }
    g = std::norm(p);
    grad[0] = 2 * std::real(std::conj(p) * px);
    grad[1] = 2 * std::real(std::conj(p) * py);
    H[0][0] = 2 * std::real(std::conj(px) * px + std::conj(p) * pxx);
    H[0][1] = H[1][0] = 2 * std::real(std::conj(px) * py + std::conj(p) * pxy);
    H[1][1] = 2 * std::real(std::conj(py) * py + std::conj(p) * pyy);
  }
};

double trig_sup(const TrigPoly& P, int S) {
  std::vector<cplx> row(S);
  double best = -1, bx = 0, by = 0;
  // e^{2 pi i k x} tables per distinct k and l
  std::map<long, std::vector<cplx>> ek, el;
  for (auto& [md, c] : P.t) {
    for (auto [key, tab] : {std::pair{md.k, &ek}, std::pair{md.l, &el}}) {
      auto& v = (*tab)[key];
      if (!v.empty()) continue;
      v.resize(S);
      for (int j = 0; j < S; ++j) v[j] = std::polar(1.0, 2 * M_PI * double(key) * j / S);
    }
  }
  for (int i = 0; i < S; ++i) {
    std::fill(row.begin(), row.end(), cplx(0));
    for (auto& [md, c] : P.t) {
      cplx a = c * ek[md.k][i];
      auto& b = el[md.l];
      for (int j = 0; j < S; ++j) row[j] += a * b[j];
    }
    for (int j = 0; j < S; ++j) {
      double v = std::norm(row[j]);
      if (v > best) best = v, bx = double(i) / S, by = double(j) / S;
    }
  }
  for (int it = 0; it < 8; ++it) {
    double g, gr[2], H[2][2];
    P.eval(bx, by, g, gr, H);
    double det = H[0][0] * H[1][1] - H[0][1] * H[1][0];
    if (std::abs(det) < 1e-300) break;
    double dx = -(H[1][1] * gr[0] - H[0][1] * gr[1]) / det;
    double dy = -(-H[1][0] * gr[0] + H[0][0] * gr[1]) / det;
    double g2, gr2[2], H2[2][2];
    P.eval(bx + dx, by + dy, g2, gr2, H2);
    if (!(g2 > g)) break;
    bx += dx, by += dy, best = std::max(best, g2);
  }
  return std::sqrt(best);
}

}  // namespace

double sup_norm(const TorusElement<cplx>& f, int samples) {
  std::map<Mask, TrigPoly> comps;
  for (auto& [md, g] : f.coeffs)
    for (auto& [m, v] : g.terms()) comps[m].t.push_back({md, v});
  double s = 0;
  for (auto& [m, P] : comps) s += trig_sup(P, samples);
  return s;
}

std::string torus_to_json(const TorusElement<cplx>& f) {
  nlohmann::json j;
  j["n"] = f.n;
  j["aux"] = f.aux;
  j["modes"] = nlohmann::json::array();
  for (auto& [md, g] : f.coeffs)
    for (auto& [m, v] : g.terms())
      j["modes"].push_back({{"k", md.k}, {"l", md.l}, {"mask", m}, {"re", v.real()}, {"im", v.imag()}});
  return j.dump();
}

TorusElement<cplx> torus_from_json(const std::string& s) {
  auto j = nlohmann::json::parse(s);
  TorusElement<cplx> f(j.at("n").get<int>(), j.value("aux", 0));
  for (auto& e : j.at("modes"))
    f.add({e.at("k").get<long>(), e.at("l").get<long>()}, e.at("mask").get<Mask>(),
          cplx(e.at("re").get<double>(), e.at("im").get<double>()));
  return f;
}

cplx commutation_factor(const TorusAlgebra<cplx>& A) {
  auto U = torus_mode<cplx>(A.n, {1, 0}, 0, 1.0);
  auto V = torus_mode<cplx>(A.n, {0, 1}, 0, 1.0);
  return torus_star(V, U, A).coeff({1, 1}, 0) / torus_star(U, V, A).coeff({1, 1}, 0);
}

double max_abs_diff(const TorusElement<cplx>& a, const TorusElement<cplx>& b) {
  TorusElement<cplx> d = a;
  d -= b;
  double m = 0;
  for (auto& [md, g] : d.coeffs)
    for (auto& [k, v] : g.terms()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace superdq
