#include "superdq/quantization.hpp"

#include <cmath>
#include <stdexcept>

#include "fft_util.hpp"

namespace superdq {

using detail::Buf;
using detail::Plan;

void GridModel::validate() const {
  if (m != 2) throw std::invalid_argument("the lattice model has m = 2");
  if (n < 0 || n > 4) throw std::invalid_argument("lattice model supports 0 <= n <= 4");
  if (N < 4 || (N & (N - 1))) throw std::invalid_argument("grid size must be a power of two >= 4");
  if (!(L > 0)) throw std::invalid_argument("extent must be positive");
  params().validate();
}

Grid2 GridModel::symbol_grid() const {
  Grid2 g;
  g.N = N;
  g.h0 = h();
  g.h1 = dw();
  g.o0 = -L;
  g.o1 = -(N / 2) * dw();
  g.v.assign(std::size_t(N) * N, 0.0);
  return g;
}

std::vector<cplx> omega_odd_table(int n, double a0, cplx alpha) {
  using G = Grassmann<cplx>;
  int S = 1 << n, tot = 3 * n;
  cplx ia0(0, a0);
  // banks: xi at 0, xi1 at n, xi0 at 2n
  G q = bank_dot<cplx>(tot, n, 0, 2 * n) - alpha * bank_dot<cplx>(tot, n, n, 2 * n) -
        (alpha + 1.0) * bank_dot<cplx>(tot, n, 0, n);
  G E = gexp(ia0 * q);
  Mask full = full_mask(n);
  std::vector<cplx> T(std::size_t(S) * S * S, 0.0);
  for (int J = 0; J < S; ++J) {
    G sh = G::scalar(tot, 1.0);
    for (int j = 0; j < n; ++j)
      if (J >> j & 1) sh = sh * (G::generator(tot, j) + G::generator(tot, n + j));
    G inner = berezin_bank(E * sh, full << n);
    for (int I = 0; I < S; ++I) {
      G outer = berezin_bank(G::monomial(tot, Mask(I), 1.0) * inner, full);
      for (auto& [k, v] : outer.terms()) {
        if (k & ~(full << (2 * n))) throw std::logic_error("odd kernel left a non-xi0 generator");
        T[(std::size_t(I) * S + J) * S + (k >> (2 * n))] += v;
      }
    }
  }
  return T;
}

namespace {

void check_symbol(const GridSuperFunction& f, const GridModel& g) {
  if (f.n != g.n) throw std::invalid_argument("symbol has the wrong odd dimension");
  Grid2 ref = g.symbol_grid();
  for (auto& c : f.comp)
    if (c.N != ref.N || std::abs(c.h0 - ref.h0) > 1e-14 || std::abs(c.h1 - ref.h1) > 1e-14)
      throw std::invalid_argument("symbol is not sampled on the model lattice");
}

// M[(K,i),(J,(2k-i) mod N)] += gamma h Theta(I,J,K) G_I(k, (k-i) mod N)
CMat assemble_omega(const std::vector<std::vector<cplx>>& Gtab, const std::vector<int>& active, const GridModel& g) {
  const int N = g.N, S = g.S();
  std::vector<cplx> Th = omega_odd_table(g.n, g.a0, g.alpha);
  cplx pre = g.params().gamma() * g.h();
  CMat M = CMat::Zero(g.dim(), g.dim());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i)
    for (int I : active) {
      const std::vector<cplx>& GI = Gtab[I];
      for (int k = 0; k < N; ++k) {
        cplx gv = pre * GI[std::size_t(k) * N + ((k - i) % N + N) % N];
        if (gv == 0.0) continue;
        int j = ((2 * k - i) % N + N) % N;
        for (int J = 0; J < S; ++J)
          for (int K = 0; K < S; ++K) {
            cplx t = Th[(std::size_t(I) * S + J) * S + K];
            if (t != 0.0) M(g.idx(i, K), g.idx(j, J)) += t * gv;
          }
      }
    }
  return M;
}

std::vector<int> active_components(const GridSuperFunction& f) {
  std::vector<int> a;
  for (Mask I = 0; I < f.size(); ++I)
    if (!comp_is_zero(f[I])) a.push_back(int(I));
  return a;
}

}  // namespace

CMat omega_fn(const GridSuperFunction& f, const GridModel& g) {
  g.validate();
  check_symbol(f, g);
  const int N = g.N;
  std::vector<int> act = active_components(f);
  std::vector<std::vector<cplx>> Gtab(f.size());
  int dims[1] = {N};
  Plan bw(1, dims, FFTW_BACKWARD);
  const double dw = g.dw();
  // G_I(k, d) = dw sum_l f_I(k,l) exp(2 i a0 d h w_l) = dw (-1)^d sum_l f_I(k,l) exp(2 pi i d l / N)
  for (int I : act) {
    Gtab[I].assign(std::size_t(N) * N, 0.0);
#pragma omp parallel
    {
      Buf b(N);
#pragma omp for schedule(static)
      for (int k = 0; k < N; ++k) {
        for (int l = 0; l < N; ++l) b.p[l] = f[I].at(k, l);
        bw.run(b.p);
        for (int d = 0; d < N; ++d) Gtab[I][std::size_t(k) * N + d] = (d & 1 ? -dw : dw) * b.p[d];
      }
    }
  }
  return assemble_omega(Gtab, act, g);
}

CMat omega_fn_serial(const GridSuperFunction& f, const GridModel& g) {
  g.validate();
  check_symbol(f, g);
  const int N = g.N, S = g.S();
  std::vector<cplx> Th = omega_odd_table(g.n, g.a0, g.alpha);
  cplx pre = g.params().gamma() * g.h();
  CMat M = CMat::Zero(g.dim(), g.dim());
  for (int I : active_components(f))
    for (int k = 0; k < N; ++k)
      for (int i = 0; i < N; ++i) {
        cplx G = 0;
        for (int l = 0; l < N; ++l) G += f[I].at(k, l) * std::polar(1.0, 2 * g.a0 * (g.x(k) - g.x(i)) * g.w(l));
        G *= g.dw();
        int j = ((2 * k - i) % N + N) % N;
        for (int J = 0; J < S; ++J)
          for (int K = 0; K < S; ++K) M(g.idx(i, K), g.idx(j, J)) += pre * Th[(std::size_t(I) * S + J) * S + K] * G;
      }
  return M;
}

namespace {

int lattice_index(double v, double step, const char* what) {
  double q = v / step;
  long r = std::lround(q);
  if (std::abs(q - r) > 1e-9) throw std::invalid_argument(std::string(what) + " is not on the lattice");
  return int(r);
}

}  // namespace

CMat omega_point(double x, double w, const GridModel& g) {
  g.validate();
  const int N = g.N, S = g.S();
  int k = lattice_index(x + g.L, g.h(), "x");
  lattice_index(w, g.dw(), "w");
  std::vector<cplx> Th = omega_odd_table(g.n, g.a0, g.alpha);
  cplx gam = g.params().gamma();
  Mask top = full_mask(g.n);
  CMat M = CMat::Zero(g.dim(), g.dim());
  for (int i = 0; i < N; ++i) {
    int j = ((2 * k - i) % N + N) % N;
    cplx ph = gam * std::polar(1.0, 2 * g.a0 * (x - g.x(i)) * w);
    for (int J = 0; J < S; ++J)
      for (int K = 0; K < S; ++K) {
        cplx t = Th[(std::size_t(top) * S + J) * S + K];
        if (t != 0.0) M(g.idx(i, K), g.idx(j, J)) += t * ph;
      }
  }
  return M;
}

CMat sigma_op(const GridModel& g) {
  g.validate();
  using G = Grassmann<cplx>;
  const int N = g.N, S = g.S(), n = g.n;
  // xi0 at 0, xi1 at n
  G E = gexp(cplx(0, -g.a0) * g.alpha * bank_dot<cplx>(2 * n, n, n, 0));
  cplx gam = g.params().gamma();
  CMat M = CMat::Zero(g.dim(), g.dim());
  for (int J = 0; J < S; ++J) {
    G F = berezin_bank(E * G::monomial(2 * n, Mask(J) << n, 1.0), full_mask(n) << n);
    for (auto& [K, v] : F.terms())
      for (int i = 0; i < N; ++i) M(g.idx(i, K), g.idx((N - i) % N, J)) += gam * v;
  }
  return M;
}

CMat induced_rep(int s, double w, double a, const GridModel& g) {
  g.validate();
  lattice_index(w, g.dwc(), "translation momentum");
  const int N = g.N, S = g.S();
  if (std::abs(s) >= N) throw std::invalid_argument("shift exceeds the extent");
  CMat M = CMat::Zero(g.dim(), g.dim());
  for (int i = 0; i < N; ++i) {
    cplx ph = std::polar(1.0, g.a0 * (a + (s * g.h() - g.x(i)) * w));
    int j = ((i - s) % N + N) % N;
    for (int K = 0; K < S; ++K) M(g.idx(i, K), g.idx(j, K)) = ph;
  }
  return M;
}

CMat omega_from_group(int s, double w, double a, const GridModel& g) {
  double xw = s * g.h() * w;
  return induced_rep(s, w, a - 0.5 * xw, g) * sigma_op(g) * induced_rep(-s, -w, -a - 0.5 * xw, g);
}

CMat odd_fourier_op(cplx beta, const GridModel& g) {
  g.validate();
  using G = Grassmann<cplx>;
  const int N = g.N, S = g.S(), n = g.n;
  G E = odd_exp<cplx>(-(g.a0 * beta), n);
  CMat M = CMat::Zero(g.dim(), g.dim());
  for (int J = 0; J < S; ++J) {
    G F = berezin_bank(E * G::monomial(2 * n, Mask(J), 1.0), full_mask(n));
    for (auto& [K, v] : F.terms())
      for (int i = 0; i < N; ++i) M(g.idx(i, K >> n), g.idx(i, J)) += v;
  }
  return M;
}

GridSuperFunction symbol_star(const GridSuperFunction& f, const GridSuperFunction& h, const GridModel& g) {
  auto L = lambda_closedform<cplx>(g.n, {cplx(g.a0), g.alpha});
  return grid_super_star(f, h, L, -1.0 / g.a0, MoyalMode::Cyclic);
}

GridSuperFunction symbol_constant(cplx c, const GridModel& g) {
  GridSuperFunction f = g.zero_symbol();
  for (auto& z : f[0].v) z = c;
  return f;
}

GField coherent_state(const CVec& phi, int k, int l, const GridModel& g) {
  const int N = g.N;
  int s = k - N / 2;
  CVec ev(N);
  for (int i = 0; i < N; ++i)
    ev(i) = std::polar(1.0, g.a0 * (g.x(k) - g.x(i)) * g.wc(l)) * phi(((i - s) % N + N) % N);
  GField F;
  Grassmann<cplx> E = odd_exp<cplx>(cplx(g.a0), g.n);
  for (auto& [m, c] : E.terms()) F[m] = c * ev;
  return F;
}

namespace {

GField gmul(const GField& A, const GField& B) {
  GField r;
  for (auto& [a, va] : A)
    for (auto& [b, vb] : B) {
      int s = eps(a, b);
      if (!s) continue;
      CVec p = double(s) * va.cwiseProduct(vb);
      auto it = r.find(a | b);
      if (it == r.end()) r.emplace(a | b, p);
      else it->second += p;
    }
  return r;
}

GField berezin_field(const GField& F, Mask bank) {
  GField r;
  for (auto& [a, v] : F) {
    if ((a & bank) != bank) continue;
    Mask rest = a & ~bank;
    CVec p = double(eps(bank, rest)) * v;
    auto it = r.find(rest);
    if (it == r.end()) r.emplace(rest, p);
    else it->second += p;
  }
  return r;
}

double norm2(const CVec& phi, const GridModel& g) { return g.h() * phi.squaredNorm(); }

}  // namespace

std::map<Mask, cplx> field_pairing(const GField& A, const GField& B, const GridModel& g) {
  GField cA;
  for (auto& [m, v] : A) cA[m] = v.conjugate();
  GField R = berezin_field(gmul(cA, B), full_mask(g.n) << g.n);
  std::map<Mask, cplx> out;
  for (auto& [m, v] : R) out[m] = g.h() * v.sum();
  return out;
}

GField apply_op(const CMat& T, int degree, const GField& F, const GridModel& g) {
  const int N = g.N, S = g.S(), n = g.n;
  GField r;
  for (Mask Lm = 0; Lm < Mask(S); ++Lm) {
    CVec v = CVec::Zero(g.dim());
    bool any = false;
    for (int K = 0; K < S; ++K) {
      auto it = F.find(Lm | (Mask(K) << n));
      if (it == F.end()) continue;
      any = true;
      for (int i = 0; i < N; ++i) v(g.idx(i, K)) = it->second(i);
    }
    if (!any) continue;
    CVec w = T * v;
    double s = (degree * popcount(Lm)) & 1 ? -1.0 : 1.0;
    for (int K = 0; K < S; ++K) {
      CVec c(N);
      for (int i = 0; i < N; ++i) c(i) = s * w(g.idx(i, K));
      r[Lm | (Mask(K) << n)] = c;
    }
  }
  return r;
}

cplx supertrace_op(const CMat& T, int degree, const CVec& phi, const GridModel& g) {
  const int N = g.N;
  Mask top = full_mask(g.n);
  double re = 0, im = 0;
#pragma omp parallel for reduction(+ : re, im) schedule(dynamic)
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) {
      GField pz = coherent_state(phi, k, l, g);
      auto p = field_pairing(pz, apply_op(T, degree, pz, g), g);
      auto it = p.find(top);
      if (it == p.end()) continue;
      re += it->second.real();
      im += it->second.imag();
    }
  // the xi integral picks the top coefficient of the xi bank
  return cplx(re, im) * g.h() * g.dwc() / norm2(phi, g);
}

cplx supertrace_kernel(const CMat& T, const GridModel& g) {
  cplx s = 0;
  for (int i = 0; i < g.N; ++i)
    for (int K = 0; K < g.S(); ++K) s += (popcount(K) & 1 ? -1.0 : 1.0) * T(g.idx(i, K), g.idx(i, K));
  return g.params().resolution_constant() * s;
}

ResolutionResult resolution_check(const CVec& phi, const GField& psi, const GridModel& g) {
  const int N = g.N, n = g.n;
  double nphi = norm2(phi, g);
  if (nphi == 0) throw std::invalid_argument("reference function has zero norm");
  for (auto& [m, v] : psi)
    if (m & full_mask(n)) throw std::invalid_argument("psi must depend on xi0 only");
  ResolutionResult res;
  res.C_expected = g.params().resolution_constant();
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) {
      GField pz = coherent_state(phi, k, l, g);
      GField gz;
      for (auto& [m, c] : field_pairing(pz, psi, g)) gz[m] = CVec::Constant(N, c);
      for (auto& [m, v] : berezin_field(gmul(gz, pz), full_mask(n))) {
        auto it = res.lhs.find(m);
        if (it == res.lhs.end()) res.lhs.emplace(m, g.h() * g.dwc() * v);
        else it->second += g.h() * g.dwc() * v;
      }
    }
  cplx num = 0;
  double den = 0, err = 0, nr = 0;
  for (auto& [m, v] : psi) {
    res.rhs[m] = res.C_expected * nphi * v;
    den += v.squaredNorm();
  }
  for (auto& [m, v] : res.lhs) {
    auto it = psi.find(m);
    if (it != psi.end()) num += it->second.dot(v);
    auto r = res.rhs.find(m);
    err += (r == res.rhs.end() ? v : CVec(v - r->second)).squaredNorm();
  }
  for (auto& [m, v] : res.rhs) {
    nr += v.squaredNorm();
    if (!res.lhs.count(m)) err += v.squaredNorm();
  }
  res.C_measured = num / (nphi * den);
  res.rel_error = std::sqrt(err / nr);
  return res;
}

BerezinResult berezin_transform(const GridSuperFunction& f, int k1, int l1, cplx beta, const CVec& phi,
                                const GridModel& g) {
  int deg = sf_parity(f);
  if (deg < 0) throw std::invalid_argument("Berezin transform needs a homogeneous symbol");
  DeformParams p = g.params();
  BerezinResult r;
  r.degenerate = std::abs(beta - g.alpha) < 1e-14;
  r.nominal_prefactor = p.r1() * ipow((g.alpha - beta) / (1.0 + g.alpha), g.n) * double(neg1pow(g.n * deg));
  r.lattice_factor = std::pow(2.0, g.m / 2.0) * double(neg1pow(g.n));
  r.f_value = f[0].at(k1, l1);
  if (r.degenerate) {
    r.trace = 0;
    return r;
  }
  CMat T = omega_fn(f, g) * omega_point(g.x(k1), g.w(l1), g) * odd_fourier_op(beta, g);
  r.trace = supertrace_op(T, deg, phi, g);
  return r;
}

double unit_truncation_error(const GridModel& g, double sigma) {
  const int N = g.N;
  CMat U = omega_fn(symbol_constant(1.0, g), g);
  CVec v = CVec::Zero(g.dim());
  for (int i = 0; i < N; ++i) v(g.idx(i, 0)) = std::exp(-g.x(i) * g.x(i) / (2 * sigma * sigma));
  CVec d = U * v - v;
  double err2 = g.h() * d.squaredNorm();
  double norm2 = sigma * std::sqrt(M_PI);
  double tail = norm2 * std::erfc(g.L / sigma);
  return std::sqrt((err2 + tail) / norm2);
}

}  // namespace superdq
