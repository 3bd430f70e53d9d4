#include "doctest.h"

#include <random>

#include "superdq/clifford_fine.hpp"

using namespace superdq;

namespace {

// Clifford basis products e_a e_b = sign e_{a^b}, computed by moving generators one at a time
cplx clifford_word_sign(Mask a, Mask b, int n) {
  std::vector<int> w;
  for (int i = 0; i < n; ++i)
    if (a >> i & 1) w.push_back(i);
  for (int i = 0; i < n; ++i)
    if (b >> i & 1) w.push_back(i);
  double s = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j] == w[j + 1]) {
        w.erase(w.begin() + j, w.begin() + j + 2);  // e_i^2 = 1
        changed = true;
        break;
      }
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        s = -s;
        changed = true;
        break;
      }
    }
  }
  return s;
}

}  // namespace

TEST_CASE("sigma_Cl is the Clifford basis multiplication sign") {
  for (int n = 1; n <= 5; ++n) {
    auto s = sigma_clifford(n);
    for (Mask a = 0; a < s.order(); ++a)
      for (Mask b = 0; b < s.order(); ++b) CHECK(s(a, b) == clifford_word_sign(a, b, n));
    CHECK(is_factor_set(s).ok);
    CHECK(is_factor_set(sigma_clifford_upper(n)).ok);
  }
}

TEST_CASE("cocycle check reports violations") {
  auto s = sigma_clifford(2);
  s.at(1, 2) = 2.0;
  auto c = is_factor_set(s);
  CHECK_FALSE(c.ok);
  CHECK(c.error > 0.5);
}

TEST_CASE("equivalence: rho_star relates Lambda to sigma_Cl, both branches") {
  for (int n = 1; n <= 4; ++n)
    for (cplx al : {cplx(1), cplx(2), cplx(1, 1)})
      for (int br : {1, -1}) {
        OddParams<cplx> p{0.5, al};
        auto r = factor_set_from_star(lambda_closedform<cplx>(n, p), p, br);
        CHECK(r.cocycle.ok);
        CHECK(r.star_vs_clifford.ok);
        CHECK(r.coeff_vs_clifford.ok);
      }
}

TEST_CASE("upper-triangle convention fails the same rho for n >= 2") {
  OddParams<cplx> p{1.0, 1.0};
  auto up = sigma_clifford_upper(1);
  CHECK(factor_set_from_star(lambda_closedform<cplx>(1, p), p, 1, &up).star_vs_clifford.ok);
  for (int n = 2; n <= 4; ++n) {
    auto u = sigma_clifford_upper(n);
    CHECK_FALSE(factor_set_from_star(lambda_closedform<cplx>(n, p), p, 1, &u).star_vs_clifford.ok);
  }
}

TEST_CASE("equivalence search decides correctly") {
  // Cl(2) is the quaternion-type class, not a coboundary
  CHECK_FALSE(search_equivalence(sigma_clifford(2), FactorSet::constant(2)).has_value());
  // Cl(1) has e^2 = 1, the same table as the trivial factor set
  CHECK(search_equivalence(FactorSet::constant(1), sigma_clifford(1)).has_value());
  for (int n = 1; n <= 4; ++n) {
    auto rho = search_equivalence(sigma_clifford(n), sigma_clifford_upper(n));
    REQUIRE(rho.has_value());
    CHECK(check_equivalence(sigma_clifford(n), sigma_clifford_upper(n), *rho).ok);
  }
  // random coboundaries are trivial
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int t = 0; t < 5; ++t) {
    Rho r(16);
    for (auto& v : r) v = std::polar(u(rng), u(rng));
    FactorSet s = FactorSet::constant(4);
    for (Mask a = 0; a < 16; ++a)
      for (Mask b = 0; b < 16; ++b) s.at(a, b) = r[a ^ b] / (r[a] * r[b]);
    CHECK(is_symmetric(s));
    CHECK(search_equivalence(FactorSet::constant(4), s).has_value());
  }
}

TEST_CASE("normalized generators satisfy the Clifford relations exactly") {
  for (int n = 1; n <= 5; ++n)
    for (auto al : {QI(1), QI(2), QI(1, 1)}) {
      auto c = clifford_relations_exact(n, OddParams<QI>{QI(mpq_class(3, 2)), al});
      CHECK(c.squares_one);
      CHECK(c.anticommute);
      CHECK(c.scale_matches_formula);
    }
}
