#include "doctest.h"

#include <random>

#include "superdq/hilbert_super.hpp"

using cplx = std::complex<double>;

using namespace superdq;

namespace {

CMat random_homogeneous(const HilbertSuper& H, int degree, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  CMat T = CMat::Zero(H.dim(), H.dim());
  for (int i = 0; i < H.dim(); ++i)
    for (int j = 0; j < H.dim(); ++j)
      if ((H.grading[i] ^ H.grading[j]) == degree) T(i, j) = cplx(nd(rng), nd(rng));
  return T;
}

}  // namespace

TEST_CASE("J sign rules hold on the standard spaces") {
  for (int n = 0; n <= 6; ++n) {
    auto H = grassmann_space(n);
    CHECK(H.defj_residual() < 1e-12);
    CHECK_NOTHROW(H.validate());
    CHECK(H.parity == n % 2);
  }
  CHECK(tensor_superspace(grassmann_space(2), grassmann_space(3)).defj_residual() < 1e-12);
  CHECK(direct_sum(grassmann_space(1), grassmann_space(3)).defj_residual() < 1e-12);
  CHECK(grid_space(4, 2).defj_residual() < 1e-12);
}

TEST_CASE("superadjoint defining property on random homogeneous operators") {
  std::mt19937 rng(4);
  for (int n : {1, 2, 3}) {
    auto H = grassmann_space(n);
    for (int t = 0; t < 50; ++t) {
      int deg = t & 1;
      CMat T = random_homogeneous(H, deg, rng);
      CHECK(op_degree(H, T) == deg);
      SuperOp Td = superadjoint(H, {T, deg});
      double err = 0;
      for (int i = 0; i < H.dim(); ++i)
        for (int j = 0; j < H.dim(); ++j) {
          CVec x = CVec::Unit(H.dim(), i), y = CVec::Unit(H.dim(), j);
          cplx l = super_pairing(H, Td.M * x, y);
          cplx r = double(H.grading[i] * deg % 2 ? -1 : 1) * super_pairing(H, x, T * y);
          err = std::max(err, std::abs(l - r));
        }
      CHECK(err < 1e-12);
      CHECK(std::abs(op_norm(Td.M) - op_norm(T)) < 1e-10 * op_norm(T));
    }
  }
}

TEST_CASE("superadjoint is involutive up to the parity sign") {
  std::mt19937 rng(5);
  auto H = grassmann_space(3);
  CMat T = random_homogeneous(H, 1, rng);
  CMat Tdd = superadjoint(H, superadjoint(H, {T, 1})).M;
  CHECK(((Tdd - T).norm() < 1e-12 || (Tdd + T).norm() < 1e-12));
}

TEST_CASE("mixed operators and splitting") {
  std::mt19937 rng(6);
  auto H = grassmann_space(2);
  CMat T = random_homogeneous(H, 0, rng) + random_homogeneous(H, 1, rng);
  CHECK(op_degree(H, T) == -1);
  auto [e, o] = split_parity(H, T);
  CHECK((e + o - T).norm() < 1e-14);
  CHECK(op_degree(H, e) == 0);
  CHECK((superadjoint_any(H, T) - superadjoint(H, {e, 0}).M - superadjoint(H, {o, 1}).M).norm() < 1e-12);
}

TEST_CASE("Krein split for odd parity") {
  auto H = grassmann_space(3);
  auto K = krein_decompose(H);
  CHECK(K.plus.cols() + K.minus.cols() == H.dim());
  for (int i = 0; i < K.plus.cols(); ++i) CHECK(super_pairing(H, K.plus.col(i), K.plus.col(i)).real() > 0.5);
  for (int i = 0; i < K.minus.cols(); ++i) CHECK(super_pairing(H, K.minus.col(i), K.minus.col(i)).real() < -0.5);
}

TEST_CASE("C*-superalgebra check on the exterior algebra") {
  int n = 2;
  auto G = grassmann_space(n);
  std::vector<SuperOp> gens;
  std::vector<CMat> dag;
  for (unsigned I = 1; I < (1u << n); ++I) {
    gens.push_back({mult_op(n, I), __builtin_popcount(I) & 1});
    dag.push_back(mult_op(n, I));
  }
  CHECK(cstar_super_check(G, gens, dag).ok());
  // a wrong declared adjoint is reported
  dag[0] = 2.0 * dag[0];
  CHECK_FALSE(cstar_super_check(G, gens, dag).ok());
}
