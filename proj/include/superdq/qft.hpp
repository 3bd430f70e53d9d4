#pragma once
#include <map>
#include <random>
#include <string>
#include <vector>

#include "superdq/exact.hpp"
#include "superdq/polynomial.hpp"

namespace superdq::qft {

// Polynomials over Q(i) in the real indeterminates below, modulo
// a*ai = 1, theta*ti = 1, (1+alpha)*w = 1. The three leading monomials are coprime,
// so reducing each relation to exhaustion gives a canonical form.
enum Var : int { A, AI, B, THETA, TI, ALPHA, W, M2, LAM, NVARS };
const char* var_name(int v);

class Coeff {
public:
  Coeff() : p_(NVARS) {}
  Coeff(const QI& c) : p_(Poly<QI>::constant(NVARS, c)) { }
  Coeff(long c) : Coeff(QI(c)) {}
  static Coeff var(Var v, int power = 1);

  bool is_zero() const { return p_.is_zero(); }
  const Poly<QI>& poly() const { return p_; }
  Coeff conj() const;
  Coeff subst(Var v, const QI& value) const;
  cplx eval(const std::map<Var, double>& values) const;
  std::string str() const;

  friend Coeff operator+(const Coeff& a, const Coeff& b) { return Coeff(a.p_ + b.p_); }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return Coeff(a.p_ - b.p_); }
  friend Coeff operator-(const Coeff& a) { return Coeff(QI(-1)) * a; }
  friend Coeff operator*(const Coeff& a, const Coeff& b) { return Coeff(a.p_ * b.p_); }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.p_ == b.p_; }

private:
  explicit Coeff(Poly<QI> p);
  Poly<QI> p_;
};

enum class Tok { One, Phi, DPhi, XPhi, X };
struct Token {
  Tok t = Tok::One;
  int mu = 0;  // direction 1 or 2 for DPhi, XPhi, X
  auto operator<=>(const Token&) const = default;
};
std::string token_str(const Token& t);

// Tokens joined by the even Moyal product; the empty word is 1.
using StarWord = std::vector<Token>;
std::string word_str(const StarWord& w);

// Linear combination of StarWord xi^s over n = 1 (s in {0,1}).
struct FormalExpr {
  std::map<std::pair<StarWord, int>, Coeff> terms;
  void add(const StarWord& w, int s, const Coeff& c);
  FormalExpr& operator+=(const FormalExpr& o);
  FormalExpr& operator-=(const FormalExpr& o);
  FormalExpr scaled(const Coeff& c) const;
  FormalExpr odd_part() const;
  FormalExpr even_part() const;
  std::string str() const;
  friend bool operator==(const FormalExpr& a, const FormalExpr& b) { return a.terms == b.terms; }
};
FormalExpr term(const StarWord& w, int s, const Coeff& c);

// Units are dropped; x_mu * phi -> x_mu phi + i d_mu phi; phi * x_mu -> x_mu phi - i d_mu phi.
// With an rng, redexes are picked at random (for confluence testing).
FormalExpr rewrite_linear_star(const FormalExpr& e, std::mt19937* rng = nullptr);

// Random combination of words whose rewrites do not overlap except through units.
FormalExpr random_rewritable(std::mt19937& rng);
// Normal forms under `schedules` random rule orders that differ from the first-redex order.
int confluence_failures(int trials, int schedules, unsigned seed);

// Lambda({1},{1}) = i alpha / (a0 (1+alpha)^2) with a0 = 1/theta.
Coeff lambda11();
// (A + B xi) * (C + D xi) = A*C + lambda11 B*D + (A*D + B*C) xi
FormalExpr super_expand(const FormalExpr& e1, const FormalExpr& e2);
FormalExpr commutator(const FormalExpr& x, const FormalExpr& y, bool graded);

struct ProofReport {
  std::string identity;
  bool ok = false;
  std::string lhs, rhs, diff;
  std::map<std::string, std::string> notes;
  std::string json() const;
};

ProofReport verify_inner_derivation();
ProofReport verify_bracket_identity(bool graded = true);
ProofReport verify_square_identity();
// |X|^2 read as conj(X) X (pointwise) or, with star_modulus, conj(X) * X
ProofReport verify_action_identity(bool graded = true, bool star_modulus = false);

// Integrated pointwise products of two words; keys are ordered pairs.
using IntegralExpr = std::map<std::pair<StarWord, StarWord>, Coeff>;
std::string integral_str(const IntegralExpr& e);
IntegralExpr action_lhs(bool graded, bool star_modulus);
IntegralExpr action_rhs();

struct NumericParams {
  double a = 1, b = 1, alpha = 1, theta = 1, M2 = 1, lam = 1;
  double sigma = 1;  // phi = exp(-|x|^2 / (2 sigma^2))
  int N = 128;
  double L = 10;
};
struct NumericReport {
  double lhs = 0, rhs = 0, rel_dev = 0;
  double quadratic_rel_dev = 0;
  double ibp_integral = 0;  // sum_mu int phi x_mu d_mu phi
  double boundary_ratio = 0;
};
NumericReport numeric_crosscheck(const NumericParams& p);

}  // namespace superdq::qft
