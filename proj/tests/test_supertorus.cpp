#include "doctest.h"

#include <Eigen/Dense>
#include <random>

#include "superdq/moyal.hpp"
#include "superdq/supertorus.hpp"

using namespace superdq;

namespace {

// e^{i a.x} * e^{i b.x} / e^{i(a+b).x} from the integral formula
// (pi theta)^{-2} int dy dz e^{i a.y + i b.z + (2i/theta)(y0 z1 - y1 z0) - eps(|y|^2 + |z|^2)},
// evaluated as a complex Gaussian integral and extrapolated to eps = 0.
cplx integral_phase(Eigen::Vector2d a, Eigen::Vector2d b, double theta) {
  auto at = [&](double eps) {
    Eigen::Matrix4cd A = Eigen::Matrix4cd::Identity() * (2 * eps);
    // -(1/2) v^T A v with v = (y0, y1, z0, z1) carries the phase term (2i/theta)(y0 z1 - y1 z0)
    cplx k(0, 2.0 / theta);
    A(0, 3) -= k, A(3, 0) -= k;
    A(1, 2) += k, A(2, 1) += k;
    Eigen::Vector4cd beta(cplx(0, a(0)), cplx(0, a(1)), cplx(0, b(0)), cplx(0, b(1)));
    cplx det = A.determinant();
    cplx expo = 0.5 * cplx(beta.transpose() * A.inverse() * beta);
    return 4 * M_PI * M_PI / std::sqrt(det) * std::exp(expo) / (M_PI * M_PI * theta * theta);
  };
  double e = 1e-5;
  return 2.0 * at(e / 2) - at(e);
}

TorusElement<cplx> random_element(int n, int aux, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  TorusElement<cplx> f(n, aux);
  for (int t = 0; t < 4; ++t)
    f.add({long(rng() % 5) - 2, long(rng() % 5) - 2}, rng() % (Mask(1) << (n + aux)), cplx(nd(rng), nd(rng)));
  return f;
}

}  // namespace

TEST_CASE("mode phase agrees with the regularized Gaussian integral") {
  for (double th : {0.25, 1.0 / 3.0, 0.7}) {
    for (auto [k, l, kp, lp] : {std::tuple{1, 0, 0, 1}, {0, 1, 1, 0}, {2, -1, 1, 3}}) {
      Eigen::Vector2d a(2 * M_PI * k, 2 * M_PI * l), b(2 * M_PI * kp, 2 * M_PI * lp);
      cplx want = integral_phase(a, b, th);
      CHECK(std::abs(torus_mode_phase(k, l, kp, lp, th) - want) < 1e-6);
    }
  }
}

TEST_CASE("commutation factor is exp(4 pi^2 i theta)") {
  for (double th : {0.0, 0.25, 1.0 / 3.0, (std::sqrt(5.0) - 1) / 2}) {
    cplx q = commutation_factor(torus_algebra(1, th));
    CHECK(std::abs(q - std::polar(1.0, 4 * M_PI * M_PI * th)) < 1e-12);
  }
  // the two coincide only where 2 pi theta is a multiple of 1, e.g. theta = 0
  cplx q = commutation_factor(torus_algebra(1, 0.25));
  CHECK(std::abs(q - cplx(0, 1)) > 0.5);
}

TEST_CASE("exact odd relations") {
  for (int n = 1; n <= 3; ++n) {
    auto A = torus_algebra_exact(n, QI(mpq_class(3, 2)), QI(2));
    QI s2 = QI(1) / A.lambda(1, 1);
    auto one = torus_mode<QI>(n, {0, 0}, 0, 1);
    for (int i = 0; i < n; ++i) {
      auto xi = torus_mode<QI>(n, {0, 0}, Mask(1) << i, 1);
      CHECK(torus_star(xi, xi, A).scaled(s2) == one);
      for (int j = i + 1; j < n; ++j) {
        auto eta = torus_mode<QI>(n, {0, 0}, Mask(1) << j, 1);
        auto ac = torus_star(xi, eta, A);
        ac += torus_star(eta, xi, A);
        CHECK(ac.is_zero());
      }
      auto U = torus_mode<QI>(n, {1, 0}, 0, 1), V = torus_mode<QI>(n, {0, 1}, 0, 1);
      CHECK(torus_star(U, xi, A) == torus_star(xi, U, A));
      CHECK(torus_star(V, xi, A) == torus_star(xi, V, A));
    }
    auto U = torus_mode<QI>(n, {1, 0}, 0, 1), V = torus_mode<QI>(n, {0, 1}, 0, 1);
    CHECK_THROWS_AS(torus_star(U, V, A), std::domain_error);
  }
}

TEST_CASE("theta = 0 is the supercommutative product") {
  std::mt19937 rng(8);
  auto A = torus_algebra(2, 0.0);
  for (int t = 0; t < 10; ++t) {
    auto f = random_element(2, 0, rng), g = random_element(2, 0, rng);
    CHECK(max_abs_diff(torus_star(f, g, A), torus_mul(f, g)) == 0.0);
  }
}

TEST_CASE("associativity, equivariance and action law") {
  std::mt19937 rng(9);
  auto A = torus_algebra(2, 0.31, cplx(1.5, 0.2));
  for (int t = 0; t < 10; ++t) {
    auto f = random_element(2, 2, rng), g = random_element(2, 2, rng), h = random_element(2, 2, rng);
    CHECK(max_abs_diff(torus_star(torus_star(f, g, A), h, A), torus_star(f, torus_star(g, h, A), A)) < 1e-12);
    TorusAction z{0.2 * t, -0.3, {}}, w{0.7, 0.05 * t, {}};
    for (int i = 0; i < 2; ++i) {
      Grassmann<cplx> s(4), r(4);
      s.add_term(Mask(1) << (2 + i), cplx(0.5, -0.1 * i));
      r.add_term(Mask(1) << (3 - i), cplx(0.2, 0.3));
      z.odd.push_back(s);
      w.odd.push_back(r);
    }
    CHECK(max_abs_diff(torus_rho(z, torus_star(f, g, A)), torus_star(torus_rho(z, f), torus_rho(z, g), A)) < 1e-12);
    CHECK(max_abs_diff(torus_rho(compose(z, w), f), torus_rho(z, torus_rho(w, f))) < 1e-12);
  }
}

TEST_CASE("sup norm") {
  auto U = torus_mode<cplx>(1, {1, 0}, 0, 1.0), V = torus_mode<cplx>(1, {0, 1}, 0, 1.0);
  CHECK(sup_norm(U) == doctest::Approx(1.0).epsilon(1e-12));
  auto s = U;
  s += V;
  CHECK(sup_norm(s) == doctest::Approx(2.0).epsilon(1e-9));
  // |1 + e^{2 pi i x} / 2| peaks at 3/2
  auto t = torus_mode<cplx>(1, {0, 0}, 0, 1.0);
  t += torus_mode<cplx>(1, {1, 0}, 0, 0.5);
  CHECK(sup_norm(t) == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("JSON round trip") {
  std::mt19937 rng(10);
  auto f = random_element(3, 0, rng);
  CHECK(torus_from_json(torus_to_json(f)) == f);
  CHECK_THROWS(torus_from_json("{\"n\": 1}"));
}
