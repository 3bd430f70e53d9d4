#include "doctest.h"

#include <random>

#include "superdq/supersymplectic.hpp"

using namespace superdq;

namespace {

GradedForm random_form(int m, int n, int npos, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXd Q = Eigen::MatrixXd::NullaryExpr(m, m, [&] { return nd(rng); });
  Eigen::MatrixXd J0 = Eigen::MatrixXd::Zero(m, m);
  for (int p = 0; p < m / 2; ++p) J0(2 * p, 2 * p + 1) = 1, J0(2 * p + 1, 2 * p) = -1;
  Eigen::MatrixXd R = Eigen::MatrixXd::NullaryExpr(n, n, [&] { return nd(rng); });
  Eigen::VectorXd D(n);
  for (int i = 0; i < n; ++i) D(i) = i < npos ? 1.0 : -2.0;
  return {Q.transpose() * J0 * Q, R.transpose() * D.asDiagonal() * R};
}

// inertia by counting eigenvalue signs of the symmetric block
std::pair<int, int> inertia(const Eigen::MatrixXd& S) {
  if (S.rows() == 0) return {0, 0};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  int p = 0, q = 0;
  for (int i = 0; i < S.rows(); ++i) (es.eigenvalues()(i) > 0 ? p : q)++;
  return {p, q};
}

SuperNumber num(int N, std::initializer_list<std::pair<Mask, long>> t) {
  SuperNumber s(N);
  for (auto [m, v] : t) s.add_term(m, QI(v));
  return s;
}

}  // namespace

TEST_CASE("canonical basis reconstructs the block matrix") {
  std::mt19937 rng(1);
  for (int m : {0, 2, 4, 6})
    for (int n : {0, 1, 3, 4}) {
      int npos = n / 2 + (n % 2);
      auto w = random_form(m, n, npos, rng);
      auto cb = darboux_basis(w);
      Eigen::MatrixXd R = cb.basis.transpose() * w.full() * cb.basis - cb.canonical_matrix();
      CHECK(R.norm() < 1e-10 * std::max(1.0, w.full().norm() * cb.basis.squaredNorm()));
      CHECK(cb.d == m / 2);
      auto [p, q] = inertia(w.odd);
      CHECK(cb.n_plus == p);
      CHECK(cb.n_minus == q);
    }
}

TEST_CASE("validation rejects malformed forms") {
  GradedForm w{Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd::Identity(1, 1)};
  CHECK_THROWS(w.validate());
  GradedForm d{Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Identity(1, 1)};
  CHECK_THROWS(darboux_basis(d));
}

TEST_CASE("maximal isotropic subspace and symplectic complement") {
  std::mt19937 rng(2);
  auto w = random_form(4, 4, 2, rng);
  auto F = max_isotropic(w);
  CHECK(F.size() == 4u);
  for (auto& u : F)
    for (auto& v : F) CHECK(std::abs(u.dot(w.full() * v)) < 1e-10);
  auto P = symp_orthogonal(w, F);
  for (auto& u : P)
    for (auto& v : F) CHECK(std::abs(u.dot(w.full() * v)) < 1e-10);
}

TEST_CASE("Heisenberg group law over supernumbers") {
  const int N = 4;
  GradedForm w{Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Identity(1, 1)};
  w.even(0, 1) = 1, w.even(1, 0) = -1;
  HeisenbergElement g{{num(N, {{0, 2}, {0b0011, 1}}), num(N, {{0, -1}})}, {num(N, {{0b0001, 1}})}, num(N, {{0, 3}})};
  HeisenbergElement h{{num(N, {{0, 1}}), num(N, {{0b0110, 2}})}, {num(N, {{0b0100, 1}, {0b1000, -1}})}, num(N, {})};
  auto gh = heis_mul(g, h, w);
  // central part: a + b + omega(g, h) / 2 with omega summing both blocks
  SuperNumber want = g.a + h.a + QI(mpq_class(1, 2)) * super_omega(w, g, h);
  CHECK(gh.a == want);
  auto id = heis_identity(2, 1, N);
  auto back = heis_mul(gh, heis_inverse(h), w);
  CHECK(back.x == g.x);
  CHECK(back.xi == g.xi);
  CHECK(back.a == g.a);
  auto e = heis_mul(g, heis_inverse(g), w);
  CHECK(e.a == id.a);
}

TEST_CASE("supernumber parts") {
  auto s = num(3, {{0, 5}, {0b001, 1}, {0b011, 2}});
  CHECK(super_body(s) == num(3, {{0, 5}}));
  CHECK(super_even_part(s) == num(3, {{0, 5}, {0b011, 2}}));
  CHECK(super_odd_part(s) == num(3, {{0b001, 1}}));
}
