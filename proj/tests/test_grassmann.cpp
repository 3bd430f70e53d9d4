#include "doctest.h"

#include <algorithm>
#include <random>

#include "superdq/grassmann.hpp"

using namespace superdq;

namespace {

// sign of the permutation sorting the concatenated index list, by counting inversions
int inversion_sign(const std::vector<int>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

int eps_oracle(Mask I, Mask J) {
  if (I & J) return 0;
  auto a = subset_members(I), b = subset_members(J);
  a.insert(a.end(), b.begin(), b.end());
  return inversion_sign(a);
}

// product of monomials as words: theta_{i1} ... theta_{ik} reduced by adjacent swaps
std::pair<int, std::vector<int>> reduce_word(std::vector<int> w) {
  int s = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) std::swap(w[j], w[j + 1]), s = -s;
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] == w[j + 1]) return {0, {}};
  return {s, w};
}

}  // namespace

TEST_CASE("merge sign matches the inversion count") {
  for (int n = 0; n <= 6; ++n)
    for (Mask I = 0; I <= full_mask(n); ++I)
      for (Mask J = 0; J <= full_mask(n); ++J) CHECK(eps(I, J) == eps_oracle(I, J));
}

TEST_CASE("subset members round trip") {
  for (Mask m = 0; m < 64; ++m) CHECK(subset_mask(subset_members(m), 6) == m);
  CHECK(subset_members(0b1011) == std::vector<int>{1, 2, 4});
  CHECK_THROWS(subset_mask({7}, 6));
}

TEST_CASE("products agree with word reduction") {
  const int n = 4;
  for (Mask I = 0; I <= full_mask(n); ++I)
    for (Mask J = 0; J <= full_mask(n); ++J) {
      auto a = subset_members(I), b = subset_members(J);
      a.insert(a.end(), b.begin(), b.end());
      auto [s, w] = reduce_word(a);
      auto p = Grassmann<QI>::monomial(n, I, 1) * Grassmann<QI>::monomial(n, J, 1);
      if (s == 0) {
        CHECK(p.is_zero());
      } else {
        CHECK(p == Grassmann<QI>::monomial(n, subset_mask(w, n), QI(s)));
      }
    }
}

TEST_CASE("generators anticommute and square to zero") {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto a = Grassmann<QI>::generator(3, i), b = Grassmann<QI>::generator(3, j);
      CHECK((a * b + b * a).is_zero());
    }
}

TEST_CASE("parity and conjugation") {
  Grassmann<QI> x(3);
  x.add_term(0b001, QI(1, 2));
  x.add_term(0b111, QI(3));
  CHECK(x.parity() == 1);
  x.add_term(0b011, QI(1));
  CHECK(x.parity() == -1);
  CHECK(x.conj().coeff(0b001) == QI(1, -2));
}

TEST_CASE("hodge, pairings and berezin") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int n = 0; n <= 4; ++n) {
    for (Mask I = 0; I <= full_mask(n); ++I) {
      Mask C = full_mask(n) & ~I;
      auto hh = hodge(hodge(Grassmann<QI>::monomial(n, I, 1)));
      CHECK(hh == Grassmann<QI>::monomial(n, I, QI(eps_oracle(I, C) * eps_oracle(C, I))));
    }
    Grassmann<QI> a(n), b(n);
    for (Mask I = 0; I <= full_mask(n); ++I) a.add_term(I, QI(d(rng), d(rng))), b.add_term(I, QI(d(rng), d(rng)));
    CHECK(pos_scal(a, b) == super_scal(a, hodge(b)));
    CHECK(pos_scal(a, a).im() == 0);
    CHECK(berezin(Grassmann<QI>::monomial(n, full_mask(n), QI(7))) == QI(7));
  }
}

TEST_CASE("odd exponential: closed form equals the power series") {
  for (int n = 0; n <= 4; ++n) {
    QI c(mpq_class(2, 3), mpq_class(1, 5));
    auto series = gexp(QI::i() * c * bank_dot<QI>(2 * n, n, 0, n));
    CHECK(odd_exp<QI>(c, n) == series);
  }
}

TEST_CASE("odd Fourier transform of 1") {
  for (int n = 1; n <= 4; ++n) {
    QI a0(mpq_class(3, 2)), al(2, 1);
    // integral of exp(-i a0 al xi.xi0): only the top xi term survives
    QI v = pow(QI(0, -1) * a0 * al, n);
    if (n * (n - 1) / 2 % 2) v = -v;
    CHECK(odd_fourier(Grassmann<QI>::scalar(n, 1), al, a0) == Grassmann<QI>::monomial(n, full_mask(n), v));
  }
}

TEST_CASE("gexp rejects a nonzero body") {
  CHECK_THROWS_AS(gexp(Grassmann<QI>::scalar(2, 1)), std::invalid_argument);
}
