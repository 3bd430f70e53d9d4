#include "superdq/moyal.hpp"

#include <cmath>
#include <stdexcept>

#include "fft_util.hpp"

namespace superdq {

Grid2 Grid2::centered(int N, double L) {
  if (N <= 0 || (N & (N - 1))) throw std::invalid_argument("grid size must be a power of two");
  if (!(L > 0)) throw std::invalid_argument("extent must be positive");
  Grid2 g;
  g.N = N;
  g.h0 = g.h1 = 2 * L / N;
  g.o0 = g.o1 = -L;
  g.v.assign(std::size_t(N) * N, 0.0);
  return g;
}

Grid2 Grid2::like() const {
  Grid2 g = *this;
  std::fill(g.v.begin(), g.v.end(), cplx(0));
  return g;
}

void Grid2::fill(const std::function<cplx(double, double)>& f) {
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) at(i, j) = f(x0(i), x1(j));
}

cplx Grid2::integral() const {
  cplx s = 0;
  for (auto& z : v) s += z;
  return s * h0 * h1;
}

double Grid2::boundary_ratio() const {
  double mx = 0, bd = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double a = std::abs(at(i, j));
      mx = std::max(mx, a);
      if (i == 0 || j == 0 || i == N - 1 || j == N - 1) bd = std::max(bd, a);
    }
  return mx > 0 ? bd / mx : 0.0;
}

double Grid2::tail_mass(int ring) const {
  double s = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i < ring || j < ring || i >= N - ring || j >= N - ring) s += std::abs(at(i, j));
  return s * h0 * h1;
}

namespace {

void check_same(const Grid2& a, const Grid2& b) {
  if (a.N != b.N || a.h0 != b.h0 || a.h1 != b.h1 || a.o0 != b.o0 || a.o1 != b.o1)
    throw std::invalid_argument("grids live on different lattices");
}

using detail::Buf;
using detail::Plan;

std::vector<cplx> fft2(const Grid2& f, int sign) {
  int dims[2] = {f.N, f.N};
  Plan pl(2, dims, sign);
  Buf b(f.v.size());
  std::copy(f.v.begin(), f.v.end(), b.p);
  pl.run(b.p);
  return std::vector<cplx>(b.p, b.p + f.v.size());
}

double phase_const(const Grid2& f, double theta) {
  double k0 = 2 * M_PI / (f.N * f.h0), k1 = 2 * M_PI / (f.N * f.h1);
  return -0.5 * theta * k0 * k1;
}

int signed_freq(int k, int N) { return k < N / 2 ? k : k - N; }

void check_cyclic(double c, int N) {
  double q = c * N / (2 * M_PI);
  if (std::abs(q - std::round(q)) > 1e-9)
    throw std::invalid_argument("cyclic product needs a lattice commensurate with theta");
}

Grid2 from_spectrum(const Grid2& like, std::vector<cplx> H) {
  int N = like.N;
  int dims[2] = {N, N};
  Plan pl(2, dims, FFTW_BACKWARD);
  Buf b(H.size());
  std::copy(H.begin(), H.end(), b.p);
  pl.run(b.p);
  Grid2 out = like.like();
  double s = 1.0 / (double(N) * N * N * N);
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] = b.p[i] * s;
  return out;
}

}  // namespace

Grid2 operator+(const Grid2& a, const Grid2& b) {
  check_same(a, b);
  Grid2 r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
  return r;
}

Grid2 operator-(const Grid2& a, const Grid2& b) {
  check_same(a, b);
  Grid2 r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] -= b.v[i];
  return r;
}

Grid2 operator*(cplx s, const Grid2& a) {
  Grid2 r = a;
  for (auto& z : r.v) z *= s;
  return r;
}

Grid2 pointwise(const Grid2& a, const Grid2& b) {
  check_same(a, b);
  Grid2 r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] *= b.v[i];
  return r;
}

Grid2 conj(const Grid2& a) {
  Grid2 r = a;
  for (auto& z : r.v) z = std::conj(z);
  return r;
}

double max_abs_diff(const Grid2& a, const Grid2& b) {
  check_same(a, b);
  double m = 0;
  for (std::size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
  return m;
}

Grid2 moyal_grid(const Grid2& f, const Grid2& g, double theta, MoyalMode mode, MoyalDiagnostics* diag,
                 double decay_tol) {
  check_same(f, g);
  const int N = f.N;
  if (diag) {
    diag->boundary_ratio = std::max(f.boundary_ratio(), g.boundary_ratio());
    diag->tail_mass = f.tail_mass() + g.tail_mass();
    diag->decay_ok = mode == MoyalMode::Cyclic || diag->boundary_ratio < decay_tol;
  }
  std::vector<cplx> F = fft2(f, FFTW_FORWARD), G = fft2(g, FFTW_FORWARD);
  const double c = phase_const(f, theta);
  std::vector<cplx> H(std::size_t(N) * N, 0.0);

  // Storage index (p, q) is (axis 0, axis 1). For a fixed output row kp and source row ap the
  // phase exp(ic(ap kq - aq kp)) splits into a factor on the source and one on the output,
  // leaving a one-dimensional convolution along axis 1.
  if (mode == MoyalMode::Cyclic) {
    check_cyclic(c, N);
    int dims[1] = {N};
    Plan fw(1, dims, FFTW_FORWARD), bw(1, dims, FFTW_BACKWARD);
    std::vector<cplx> Gt(G);
    for (int r = 0; r < N; ++r) fw.run(Gt.data() + std::size_t(r) * N);
    const long Nl = N;
#pragma omp parallel
    {
      Buf u(N);
#pragma omp for schedule(dynamic)
      for (int kp = 0; kp < N; ++kp) {
        cplx* out = H.data() + std::size_t(kp) * N;
        for (int ap = 0; ap < N; ++ap) {
          int bp = (kp - ap + N) % N;
          for (int aq = 0; aq < N; ++aq)
            u.p[aq] = F[std::size_t(ap) * N + aq] * std::polar(1.0, -c * double((long(aq) * kp) % Nl));
          fw.run(u.p);
          const cplx* gr = Gt.data() + std::size_t(bp) * N;
          for (int q = 0; q < N; ++q) u.p[q] *= gr[q];
          bw.run(u.p);
          for (int kq = 0; kq < N; ++kq) out[kq] += u.p[kq] * std::polar(1.0 / N, c * double((long(ap) * kq) % Nl));
        }
      }
    }
    return from_spectrum(f, std::move(H));
  }

  // linear mode: signed frequencies in [-N/2, N/2), products in [-N, N-2], convolution length 2N
  const int M = 2 * N;
  int dims[1] = {M};
  Plan fw(1, dims, FFTW_FORWARD), bw(1, dims, FFTW_BACKWARD);
  auto S = [&](const std::vector<cplx>& X, int sp, int sq) {
    return X[std::size_t((sp + N) % N) * N + (sq + N) % N];
  };
  std::vector<cplx> Gt(std::size_t(N) * M, 0.0);
  for (int bp = -N / 2; bp < N / 2; ++bp) {
    cplx* r = Gt.data() + std::size_t(bp + N / 2) * M;
    for (int bq = -N / 2; bq < N / 2; ++bq) r[bq + N / 2] = S(G, bp, bq);
    fw.run(r);
  }
  std::vector<cplx> Hs(std::size_t(M) * M, 0.0);  // [kp + N][kq + N]
  // exp(i c j) for the integer products j = aq kp, ap kq in [-N^2/2, N^2/2]
  const long J = long(N) * N / 2;
  std::vector<cplx> E(2 * J + 1);
  for (long j = -J; j <= J; ++j) E[j + J] = std::polar(1.0, c * double(j));
  const cplx* e = E.data() + J;
#pragma omp parallel
  {
    Buf u(M);
#pragma omp for schedule(dynamic)
    for (int kp = -N; kp < N - 1; ++kp) {
      cplx* out = Hs.data() + std::size_t(kp + N) * M;
      for (int ap = -N / 2; ap < N / 2; ++ap) {
        int bp = kp - ap;
        if (bp < -N / 2 || bp >= N / 2) continue;
        std::fill(u.p, u.p + M, cplx(0));
        for (int aq = -N / 2; aq < N / 2; ++aq) u.p[aq + N / 2] = S(F, ap, aq) * e[-long(aq) * kp];
        fw.run(u.p);
        const cplx* gr = Gt.data() + std::size_t(bp + N / 2) * M;
        for (int q = 0; q < M; ++q) u.p[q] *= gr[q];
        bw.run(u.p);
        for (int kq = -N; kq < N - 1; ++kq) out[kq + N] += u.p[kq + N] * e[long(ap) * kq] / double(M);
      }
    }
  }
  for (int kp = -N; kp < N; ++kp)
    for (int kq = -N; kq < N; ++kq) {
      cplx z = Hs[std::size_t(kp + N) * M + (kq + N)];
      if (z != 0.0) H[std::size_t((kp + M) % N) * N + (kq + M) % N] += z;
    }
  return from_spectrum(f, std::move(H));
}

Grid2 moyal_grid_serial(const Grid2& f, const Grid2& g, double theta, MoyalMode mode) {
  check_same(f, g);
  const int N = f.N;
  std::vector<cplx> F = fft2(f, FFTW_FORWARD), G = fft2(g, FFTW_FORWARD);
  const double c = phase_const(f, theta);
  if (mode == MoyalMode::Cyclic) check_cyclic(c, N);
  std::vector<cplx> H(std::size_t(N) * N, 0.0);
  for (int a0 = 0; a0 < N; ++a0)
    for (int a1 = 0; a1 < N; ++a1)
      for (int b0 = 0; b0 < N; ++b0)
        for (int b1 = 0; b1 < N; ++b1) {
          int s0 = signed_freq(a0, N), s1 = signed_freq(a1, N);
          int t0 = signed_freq(b0, N), t1 = signed_freq(b1, N);
          double ph = c * (double(s0) * t1 - double(s1) * t0);
          H[std::size_t((a0 + b0) % N) * N + (a1 + b1) % N] +=
              F[std::size_t(a0) * N + a1] * G[std::size_t(b0) * N + b1] * std::polar(1.0, ph);
        }
  return from_spectrum(f, std::move(H));
}

cplx torus_mode_phase(long k, long l, long kp, long lp, double theta) {
  double w = double(k) * lp - double(l) * kp;
  return std::polar(1.0, -0.5 * theta * 4 * M_PI * M_PI * w);
}

}  // namespace superdq
