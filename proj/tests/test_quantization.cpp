#include "doctest.h"

#include <random>

#include "superdq/quantization.hpp"

using namespace superdq;

namespace {

GridModel model(int n, int N = 16, double L = 6) {
  GridModel g;
  g.n = n;
  g.N = N;
  g.L = L;
  return g;
}

GridSuperFunction gaussian_symbol(const GridModel& g, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  auto f = g.zero_symbol();
  for (auto& c : f.comp) {
    double cx = 0.5 * nd(rng), cw = 0.5 * nd(rng);
    cplx a(nd(rng), nd(rng));
    c.fill([&](double x, double w) { return a * std::exp(-(x - cx) * (x - cx) - (w - cw) * (w - cw)); });
  }
  return f;
}

CVec gaussian_state(const GridModel& g) {
  CVec phi(g.N);
  for (int i = 0; i < g.N; ++i) phi(i) = std::exp(-g.x(i) * g.x(i) / 2);
  return phi;
}

}  // namespace

TEST_CASE("Omega is a homomorphism and matches the serial quadrature") {
  std::mt19937 rng(1);
  for (int n : {0, 1, 2}) {
    auto g = model(n);
    auto f = gaussian_symbol(g, rng), h = gaussian_symbol(g, rng);
    CMat B = omega_fn(f, g) * omega_fn(h, g);
    CHECK(op_norm(omega_fn(symbol_star(f, h, g), g) - B) < 1e-10 * op_norm(B));
    CHECK((omega_fn_serial(f, g) - omega_fn(f, g)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Omega(1) = id, Sigma^2 = r, Sigma^+ = Sigma") {
  for (int n : {0, 1, 2}) {
    auto g = model(n);
    CMat I = CMat::Identity(g.dim(), g.dim());
    CHECK((omega_fn(symbol_constant(1, g), g) - I).cwiseAbs().maxCoeff() < 1e-12);
    CMat S = sigma_op(g);
    CHECK((S * S - g.params().r() * I).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((superadjoint(g.space(), {S, n & 1}).M - S).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("r from the constants") {
  // r = gamma^2 r1 alpha^n, gamma = (-1)^n / (r0 r1 (1+alpha)^n), at m = 2, n = 1, a0 = alpha = 1
  DeformParams p{2, 1, 1.0, 1.0};
  cplx r0 = M_PI, r1 = cplx(0, -1);  // (i a0)^1 (-1)^1
  cplx gamma = -1.0 / (r0 * r1 * 2.0);
  CHECK(std::abs(p.r() - gamma * gamma * r1) < 1e-15);
  CHECK(std::abs(p.resolution_constant() - cplx(0, 2 * M_PI)) < 1e-14);
}

TEST_CASE("group factorization and symmetric-space law") {
  auto g = model(1);
  CMat A = omega_point(g.x(11), g.w(10), g), B = omega_point(g.x(6), g.w(7), g);
  CHECK((omega_from_group(3, g.w(10), 0.7, g) - A).cwiseAbs().maxCoeff() < 1e-12);
  CMat C = omega_point(2 * g.x(11) - g.x(6), 2 * g.w(10) - g.w(7), g);
  CHECK((A * B * A - g.params().r() * C).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("resolution of identity constant is 2 pi i at n = 1") {
  auto g = model(1, 32, 8);
  auto phi = gaussian_state(g);
  GField psi;
  psi[Mask(1) << 1] = phi.cwiseProduct(phi) * cplx(1, 0.3);
  psi[0] = 0.5 * phi;
  auto r = resolution_check(phi, psi, g);
  CHECK(std::abs(r.C_measured - cplx(0, 2 * M_PI)) < 1e-10);
  CHECK(r.rel_error < 1e-10);
}

TEST_CASE("Berezin transform: trace / prefactor = 2 (-1)^n f(z1)") {
  std::mt19937 rng(2);
  for (int n : {0, 1, 2}) {
    auto g = model(n, 32, 8);
    auto s = gaussian_symbol(g, rng);
    auto f = g.zero_symbol();
    f[0] = s[0];
    for (cplx beta : {cplx(0), g.alpha / 2.0}) {
      auto b = berezin_transform(f, 17, 15, beta, gaussian_state(g), g);
      cplx ratio = b.trace / (b.nominal_prefactor * b.f_value);
      CHECK(std::abs(ratio - 2.0 * double(n % 2 ? -1 : 1)) < 1e-8);
    }
  }
  auto g = model(1);
  CHECK(berezin_transform(g.zero_symbol(), 8, 8, g.alpha, gaussian_state(g), g).degenerate);
}

TEST_CASE("supertrace: coherent-state and kernel forms agree") {
  std::mt19937 rng(3);
  std::normal_distribution<double> nd;
  for (int n : {0, 1, 2}) {
    auto g = model(n);
    auto H = g.space();
    CMat T = CMat::Zero(g.dim(), g.dim());
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j)
        if (H.grading[i] == H.grading[j]) T(i, j) = cplx(nd(rng), nd(rng));
    cplx a = supertrace_op(T, 0, gaussian_state(g), g), b = supertrace_kernel(T, g);
    CHECK(std::abs(a - b) < 1e-10 * std::abs(b));
  }
}

TEST_CASE("unit truncation error decreases with the box") {
  double prev = 1e300;
  for (double L : {6.0, 8.0, 10.0}) {
    auto g = model(1, 64, L);
    double e = unit_truncation_error(g, 1.5);
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("model validation") {
  GridModel g;
  g.N = 12;
  CHECK_THROWS(g.validate());
  g.N = 16;
  g.alpha = -1.0;
  CHECK_THROWS(g.validate());
}
