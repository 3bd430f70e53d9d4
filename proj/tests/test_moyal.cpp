#include "doctest.h"

#include <random>

#include "superdq/moyal.hpp"

using namespace superdq;

namespace {

struct Gauss {
  cplx amp;
  double c0, c1, s;
  cplx operator()(double x, double y) const {
    return amp * std::exp(-((x - c0) * (x - c0) + (y - c1) * (y - c1)) / (s * s));
  }
};

// (f*g)(x) = (pi theta)^{-2} int dy dz f(x+y) g(x+z) exp((2i/theta)(y0 z1 - y1 z0)), trapezoid on [-R, R]^4
cplx quadrature(const Gauss& f, const Gauss& g, double x0, double x1, double theta, int K = 96, double R = 7) {
  double h = 2 * R / K;
  std::vector<double> t(K);
  for (int i = 0; i < K; ++i) t[i] = -R + (i + 0.5) * h;
  std::vector<cplx> F(K * K), G(K * K), P(K * K);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      F[i * K + j] = f(x0 + t[i], x1 + t[j]);
      G[i * K + j] = g(x0 + t[i], x1 + t[j]);
      P[i * K + j] = std::polar(1.0, 2.0 / theta * t[i] * t[j]);
    }
  cplx s = 0;
  // sum over y0, y1, z0, z1 of F[y0,y1] G[z0,z1] P[y0,z1] conj(P[y1,z0])
  for (int z0 = 0; z0 < K; ++z0)
    for (int z1 = 0; z1 < K; ++z1) {
      cplx gz = G[z0 * K + z1];
      if (std::abs(gz) < 1e-18) continue;
      cplx inner = 0;
      for (int y0 = 0; y0 < K; ++y0) {
        cplx row = 0;
        for (int y1 = 0; y1 < K; ++y1) row += F[y0 * K + y1] * std::conj(P[y1 * K + z0]);
        inner += row * P[y0 * K + z1];
      }
      s += gz * inner;
    }
  return s * h * h * h * h / (M_PI * M_PI * theta * theta);
}

}  // namespace

TEST_CASE("polynomial Moyal product: canonical commutator and associativity") {
  QI th(mpq_class(3, 7));
  auto x = Poly<QI>::variable(2, 0), y = Poly<QI>::variable(2, 1);
  CHECK(moyal_poly(x, y, th) - moyal_poly(y, x, th) == Poly<QI>::constant(2, QI::i() * th));
  auto p = x * x * y + Poly<QI>::constant(2, QI(1, 1)) * y, q = y * y * x - x, r = x * y * y * y;
  CHECK(moyal_poly(moyal_poly(p, q, th), r, th) == moyal_poly(p, moyal_poly(q, r, th), th));
  CHECK(moyal_poly(p, q, QI(0)) == p * q);
}

TEST_CASE("grid product agrees with direct 4D quadrature") {
  const double theta = 0.7;
  Gauss f{cplx(1.0, 0.5), 0.3, -0.2, 1.0}, g{cplx(-0.4, 1.0), -0.5, 0.4, 1.2};
  Grid2 F = Grid2::centered(64, 8), G = F.like();
  F.fill(f);
  G.fill(g);
  Grid2 H = moyal_grid(F, G, theta);
  for (auto [i, j] : {std::pair{32, 32}, {30, 35}, {36, 28}}) {
    cplx q = quadrature(f, g, H.x0(i), H.x1(j), theta);
    CHECK(std::abs(H.at(i, j) - q) < 1e-9);
  }
}

TEST_CASE("FFT and serial kernels agree in both modes") {
  std::mt19937 rng(3);
  std::normal_distribution<double> nd;
  Grid2 F = Grid2::centered(8, 4), G = F.like();
  for (auto& v : F.v) v = cplx(nd(rng), nd(rng));
  for (auto& v : G.v) v = cplx(nd(rng), nd(rng));
  CHECK(max_abs_diff(moyal_grid(F, G, 1.3), moyal_grid_serial(F, G, 1.3)) < 1e-11);
  // cyclic mode needs theta k0 k1 N / (4 pi) integral: k = 2 pi / (N h) = pi / 4, so theta = 8 / pi
  double tc = 8.0 / M_PI;
  CHECK(max_abs_diff(moyal_grid(F, G, tc, MoyalMode::Cyclic), moyal_grid_serial(F, G, tc, MoyalMode::Cyclic)) < 1e-11);
  CHECK_THROWS(moyal_grid(F, G, 1.0, MoyalMode::Cyclic));
}

TEST_CASE("Gaussian closed form and decay diagnostics") {
  for (double th : {0.5, 1.0, 2.0}) {
    Grid2 g = Grid2::centered(64, 8);
    g.fill([](double x, double y) { return cplx(std::exp(-x * x - y * y)); });
    Grid2 want = g.like();
    double k = 1 + th * th;
    want.fill([&](double x, double y) { return cplx(std::exp(-2 * (x * x + y * y) / k) / k); });
    MoyalDiagnostics d;
    // the product still has exp(-2 L^2 / (1 + theta^2)) ~ 1e-11 at the box edge for theta = 2
    CHECK(max_abs_diff(moyal_grid(g, g, th, MoyalMode::Linear, &d), want) < 1e-10);
    CHECK(d.decay_ok);
  }
  Grid2 wide = Grid2::centered(16, 2);
  wide.fill([](double x, double y) { return cplx(std::exp(-(x * x + y * y) / 4)); });
  MoyalDiagnostics d;
  moyal_grid(wide, wide, 1.0, MoyalMode::Linear, &d);
  CHECK_FALSE(d.decay_ok);
}

TEST_CASE("torus mode phase") {
  // e_{2 pi k} * e_{2 pi k'} = exp(-(i theta/2)(2 pi)^2 (k l' - l k'))
  double th = 0.3;
  CHECK(std::abs(torus_mode_phase(1, 0, 0, 1, th) - std::polar(1.0, -0.5 * th * 4 * M_PI * M_PI)) < 1e-14);
  CHECK(std::abs(torus_mode_phase(2, 1, 4, 2, th) - 1.0) < 1e-14);
}
