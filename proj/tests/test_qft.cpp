#include "doctest.h"

#include <random>

#include "superdq/moyal.hpp"
#include "superdq/qft.hpp"

using namespace superdq;
using namespace superdq::qft;

TEST_CASE("coefficient ring normal form") {
  Coeff a = Coeff::var(A), ai = Coeff::var(AI), al = Coeff::var(ALPHA), w = Coeff::var(W);
  CHECK(a * ai == Coeff(1));
  CHECK(Coeff::var(THETA) * Coeff::var(TI) == Coeff(1));
  CHECK((Coeff(1) + al) * w == Coeff(1));
  CHECK(al * w * w + w * w == w);
  CHECK((a * a * ai - a).is_zero());
  CHECK(Coeff(QI(0, 1)).conj() == Coeff(QI(0, -1)));
  std::map<Var, double> v{{A, 2.0}, {B, 1.0}, {THETA, 0.5}, {ALPHA, 3.0}, {M2, 1.0}, {LAM, 1.0}};
  CHECK(std::abs(lambda11().eval(v) - cplx(0, 3.0 * 0.5 / 16.0)) < 1e-15);
  CHECK(std::abs((ai * w).eval(v) - 0.125) < 1e-15);
}

TEST_CASE("rewrite rules agree with the polynomial Moyal product") {
  // x~_1 = -(2/theta) x^2, x~_2 = (2/theta) x^1 on a polynomial field
  QI th(mpq_class(2, 5));
  auto x1 = Poly<QI>::variable(2, 0), x2 = Poly<QI>::variable(2, 1);
  Poly<QI> phi = x1 * x1 * x2 + QI(3) * x2 * x2 - x1 + Poly<QI>::constant(2, QI(1, 1));
  Poly<QI> xt[2] = {QI(-2) / th * x2, QI(2) / th * x1};
  for (int mu = 0; mu < 2; ++mu) {
    Poly<QI> d = phi.derivative(mu);
    CHECK(moyal_poly(xt[mu], phi, th) == xt[mu] * phi + QI::i() * d);
    CHECK(moyal_poly(phi, xt[mu], th) == xt[mu] * phi - QI::i() * d);
  }
}

TEST_CASE("formal rewriting") {
  StarWord w{{Tok::X, 1}, {Tok::Phi, 0}};
  auto r = rewrite_linear_star(term(w, 0, Coeff(1)));
  FormalExpr want = term({{Tok::XPhi, 1}}, 0, Coeff(1));
  want += term({{Tok::DPhi, 1}}, 0, Coeff(QI::i()));
  CHECK(r == want);
  StarWord u{{Tok::One, 0}, {Tok::Phi, 0}, {Tok::One, 0}};
  CHECK(rewrite_linear_star(term(u, 1, Coeff(2))) == term({{Tok::Phi, 0}}, 1, Coeff(2)));
  CHECK(confluence_failures(100, 4, 3) == 0);
}

TEST_CASE("super expansion and graded commutator") {
  FormalExpr x = term({{Tok::Phi, 0}}, 1, Coeff(1));
  // (phi xi) * (phi xi) = lambda11 phi*phi
  CHECK(super_expand(x, x) == term({{Tok::Phi, 0}, {Tok::Phi, 0}}, 0, lambda11()));
  // odd elements: the graded commutator is the anticommutator
  FormalExpr g = commutator(x, x, true), p = commutator(x, x, false);
  CHECK(p.terms.empty());
  CHECK(g == term({{Tok::Phi, 0}, {Tok::Phi, 0}}, 0, Coeff(2) * lambda11()));
}

TEST_CASE("identities") {
  CHECK(verify_inner_derivation().ok);
  CHECK(verify_bracket_identity(true).ok);
  CHECK_FALSE(verify_bracket_identity(false).ok);
  CHECK(verify_square_identity().ok);
  auto a = verify_action_identity(true, false);
  CHECK(a.ok);
  CHECK(a.notes.count("overall"));
  CHECK_FALSE(verify_action_identity(true, true).ok);
  CHECK(a.json().find("\"status\":\"pass\"") != std::string::npos);
}

TEST_CASE("numeric cross-check on a Gaussian field") {
  NumericParams p;
  p.N = 64;
  p.L = 9;
  auto r = numeric_crosscheck(p);
  CHECK(r.rel_dev < 1e-8);
  CHECK(r.quadratic_rel_dev < 1e-8);
  CHECK(std::abs(r.ibp_integral) < 1e-10);
  p.a = 0.7, p.b = 1.3, p.alpha = 2.0, p.theta = 0.6, p.sigma = 0.8;
  r = numeric_crosscheck(p);
  CHECK(r.rel_dev < 1e-8);
}
