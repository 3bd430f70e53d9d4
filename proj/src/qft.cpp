#include "superdq/qft.hpp"

#include <sstream>

#include "fft_util.hpp"
#include "json.hpp"
#include "superdq/moyal.hpp"
#include "superdq/structure_constants.hpp"

namespace superdq::qft {

const char* var_name(int v) {
  static const char* names[] = {"a", "1/a", "b", "theta", "1/theta", "alpha", "1/(1+alpha)", "M^2", "lambda"};
  return names[v];
}

namespace {

Poly<QI> reduce(const Poly<QI>& in) {
  Poly<QI> out(NVARS);
  std::vector<std::pair<Poly<QI>::Exp, QI>> work(in.terms().begin(), in.terms().end());
  while (!work.empty()) {
    auto [e, c] = work.back();
    work.pop_back();
    for (auto [x, xi] : {std::pair{A, AI}, std::pair{THETA, TI}}) {
      int k = std::min(e[x], e[xi]);
      e[x] -= k, e[xi] -= k;
    }
    if (e[ALPHA] > 0 && e[W] > 0) {
      // alpha w = 1 - w
      auto e1 = e;
      e1[ALPHA]--, e1[W]--;
      auto e2 = e;
      e2[ALPHA]--;
      work.push_back({e1, c});
      work.push_back({e2, -c});
      continue;
    }
    out.add_term(e, c);
  }
  return out;
}

}  // namespace

Coeff::Coeff(Poly<QI> p) : p_(reduce(p)) {}

Coeff Coeff::var(Var v, int power) {
  Poly<QI>::Exp e(NVARS, 0);
  e[v] = power;
  Poly<QI> p(NVARS);
  p.add_term(e, QI(1));
  return Coeff(p);
}

Coeff Coeff::conj() const {
  Poly<QI> r(NVARS);
  for (auto& [e, c] : p_.terms()) r.add_term(e, c.conj());
  return Coeff(r);
}

Coeff Coeff::subst(Var v, const QI& value) const {
  Poly<QI> r(NVARS);
  for (auto& [e, c] : p_.terms()) {
    auto d = e;
    d[v] = 0;
    r.add_term(d, c * pow(value, e[v]));
  }
  return Coeff(r);
}

cplx Coeff::eval(const std::map<Var, double>& values) const {
  std::vector<cplx> x(NVARS, 0.0);
  for (auto& [v, d] : values) x[v] = d;
  if (values.count(A)) x[AI] = 1.0 / values.at(A);
  if (values.count(THETA)) x[TI] = 1.0 / values.at(THETA);
  if (values.count(ALPHA)) x[W] = 1.0 / (1.0 + values.at(ALPHA));
  cplx s = 0;
  for (auto& [e, c] : p_.terms()) {
    cplx m = c.to_cplx();
    for (int i = 0; i < NVARS; ++i) m *= std::pow(x[i], e[i]);
    s += m;
  }
  return s;
}

std::string Coeff::str() const {
  if (p_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : p_.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < NVARS; ++i)
      if (e[i]) os << "*" << var_name(i) << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

std::string token_str(const Token& t) {
  std::string mu = std::to_string(t.mu);
  switch (t.t) {
    case Tok::One: return "1";
    case Tok::Phi: return "phi";
    case Tok::DPhi: return "d" + mu + "phi";
    case Tok::XPhi: return "x" + mu + "phi";
    case Tok::X: return "x" + mu;
  }
  throw std::invalid_argument("unknown token");
}

std::string word_str(const StarWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + token_str(w[i]);
  return s;
}

void FormalExpr::add(const StarWord& w, int s, const Coeff& c) {
  if (s != 0 && s != 1) throw std::invalid_argument("odd degree must be 0 or 1");
  if (c.is_zero()) return;
  auto key = std::make_pair(w, s);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms.erase(it);
}

FormalExpr& FormalExpr::operator+=(const FormalExpr& o) {
  for (auto& [k, c] : o.terms) add(k.first, k.second, c);
  return *this;
}

FormalExpr& FormalExpr::operator-=(const FormalExpr& o) {
  for (auto& [k, c] : o.terms) add(k.first, k.second, -c);
  return *this;
}

FormalExpr FormalExpr::scaled(const Coeff& c) const {
  FormalExpr r;
  for (auto& [k, v] : terms) r.add(k.first, k.second, c * v);
  return r;
}

FormalExpr FormalExpr::odd_part() const {
  FormalExpr r;
  for (auto& [k, v] : terms)
    if (k.second) r.add(k.first, 1, v);
  return r;
}

FormalExpr FormalExpr::even_part() const {
  FormalExpr r;
  for (auto& [k, v] : terms)
    if (!k.second) r.add(k.first, 0, v);
  return r;
}

std::string FormalExpr::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "] " << word_str(k.first) << (k.second ? " xi" : "");
  }
  return os.str();
}

FormalExpr term(const StarWord& w, int s, const Coeff& c) {
  FormalExpr e;
  e.add(w, s, c);
  return e;
}

namespace {

void check_tokens(const StarWord& w) {
  for (auto& t : w) {
    if (t.t < Tok::One || t.t > Tok::X) throw std::invalid_argument("unknown token");
    bool indexed = t.t == Tok::DPhi || t.t == Tok::XPhi || t.t == Tok::X;
    if (indexed && t.mu < 1) throw std::invalid_argument("token needs a direction index");
  }
}

// redex kinds: 0 unit at i, 1 x*phi at (i,i+1), 2 phi*x at (i,i+1)
std::vector<std::pair<int, std::size_t>> redexes(const StarWord& w) {
  std::vector<std::pair<int, std::size_t>> r;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].t == Tok::One) r.push_back({0, i});
    if (i + 1 < w.size()) {
      if (w[i].t == Tok::X && w[i + 1].t == Tok::Phi) r.push_back({1, i});
      if (w[i].t == Tok::Phi && w[i + 1].t == Tok::X) r.push_back({2, i});
    }
  }
  return r;
}

}  // namespace

FormalExpr rewrite_linear_star(const FormalExpr& e, std::mt19937* rng) {
  FormalExpr out;
  std::vector<std::tuple<StarWord, int, Coeff>> work;
  for (auto& [k, c] : e.terms) {
    check_tokens(k.first);
    work.emplace_back(k.first, k.second, c);
  }
  const Coeff I(QI::i());
  while (!work.empty()) {
    auto [w, s, c] = work.back();
    work.pop_back();
    auto rs = redexes(w);
    if (rs.empty()) {
      out.add(w, s, c);
      continue;
    }
    auto [kind, i] = rng ? rs[(*rng)() % rs.size()] : rs.front();
    if (kind == 0) {
      w.erase(w.begin() + i);
      work.emplace_back(w, s, c);
      continue;
    }
    int mu = w[kind == 1 ? i : i + 1].mu;
    StarWord wx = w, wd = w;
    wx.erase(wx.begin() + i + 1);
    wx[i] = {Tok::XPhi, mu};
    wd.erase(wd.begin() + i + 1);
    wd[i] = {Tok::DPhi, mu};
    work.emplace_back(wx, s, c);
    work.emplace_back(wd, s, kind == 1 ? I * c : -(I * c));
  }
  return out;
}

FormalExpr random_rewritable(std::mt19937& rng) {
  int mu = 1 + int(rng() % 2);
  Token x{Tok::X, mu}, f{Tok::Phi}, one{Tok::One};
  const std::vector<StarWord> cores = {
      {x, f}, {f, x}, {f}, {x}, {f, f}, {Token{Tok::DPhi, mu}}, {x, f, f}, {f, f, x}, {}};
  FormalExpr e;
  int nterms = 1 + int(rng() % 4);
  for (int t = 0; t < nterms; ++t) {
    StarWord w = cores[rng() % cores.size()];
    for (int k = int(rng() % 4); k > 0; --k) w.insert(w.begin() + rng() % (w.size() + 1), one);
    e.add(w, int(rng() % 2), Coeff(QI(long(rng() % 7) - 3, long(rng() % 5) - 2)));
  }
  return e;
}

int confluence_failures(int trials, int schedules, unsigned seed) {
  std::mt19937 rng(seed);
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    FormalExpr e = random_rewritable(rng);
    FormalExpr ref = rewrite_linear_star(e);
    for (int s = 0; s < schedules; ++s)
      if (!(rewrite_linear_star(e, &rng) == ref)) {
        ++bad;
        break;
      }
  }
  return bad;
}

Coeff lambda11() { return Coeff(QI::i()) * Coeff::var(ALPHA) * Coeff::var(THETA) * Coeff::var(W, 2); }

FormalExpr super_expand(const FormalExpr& e1, const FormalExpr& e2) {
  FormalExpr r;
  Coeff lam = lambda11();
  for (auto& [k1, c1] : e1.terms)
    for (auto& [k2, c2] : e2.terms) {
      StarWord w = k1.first;
      w.insert(w.end(), k2.first.begin(), k2.first.end());
      if (k1.second && k2.second) r.add(w, 0, lam * c1 * c2);
      else r.add(w, k1.second | k2.second, c1 * c2);
    }
  return r;
}

FormalExpr commutator(const FormalExpr& x, const FormalExpr& y, bool graded) {
  FormalExpr r = super_expand(x, y);
  r -= super_expand(y, x);
  if (graded) r += super_expand(y.odd_part(), x.odd_part()).scaled(Coeff(2));
  return r;
}

std::string ProofReport::json() const {
  nlohmann::json j{{"identity", identity}, {"status", ok ? "pass" : "fail"},
                   {"lhs_normal_form", lhs}, {"rhs_normal_form", rhs}, {"diff", diff}};
  for (auto& [k, v] : notes) j["notes"][k] = v;
  return j.dump();
}

namespace {

Coeff cv(Var v, int p = 1) { return Coeff::var(v, p); }
StarWord W1(Tok t, int mu = 0) { return {Token{t, mu}}; }

ProofReport compare(const std::string& name, const FormalExpr& lhs, const FormalExpr& rhs) {
  ProofReport r;
  r.identity = name;
  FormalExpr d = lhs;
  d -= rhs;
  r.ok = d.terms.empty();
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.diff = d.str();
  return r;
}

FormalExpr eta_times(const StarWord& w, const Coeff& c) {
  // w (a + b xi)
  FormalExpr e = term(w, 0, c * cv(A));
  e += term(w, 1, c * cv(B));
  return e;
}

FormalExpr bracket_lhs(int mu, bool graded) {
  Coeff mhalf_i = Coeff(QI(0, mpq_class(-1, 2)));
  return rewrite_linear_star(commutator(eta_times(W1(Tok::X, mu), mhalf_i), eta_times(W1(Tok::Phi), 1), graded));
}

FormalExpr bracket_rhs(int mu) {
  FormalExpr e = term(W1(Tok::DPhi, mu), 0, cv(A, 2));
  e += term(W1(Tok::DPhi, mu), 1, Coeff(2) * cv(A) * cv(B));
  e += term(W1(Tok::XPhi, mu), 0, cv(ALPHA) * cv(THETA) * cv(B, 2) * cv(W, 2));
  return e;
}

FormalExpr conj(const FormalExpr& e) {
  FormalExpr r;
  for (auto& [k, c] : e.terms) r.add(StarWord(k.first.rbegin(), k.first.rend()), k.second, c.conj());
  return r;
}

void add_pair(IntegralExpr& I, StarWord u, StarWord v, const Coeff& c) {
  if (c.is_zero()) return;
  if (v < u) std::swap(u, v);
  // int phi x_mu d_mu phi = 0 for real phi
  if (u.size() == 1 && v.size() == 1 && u[0].t == Tok::DPhi && v[0].t == Tok::XPhi && u[0].mu == v[0].mu) return;
  auto key = std::make_pair(u, v);
  auto it = I.find(key);
  if (it == I.end()) {
    I.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) I.erase(it);
}

// tr(conj(X) X): xi xi = 0 pointwise, so only even parts pair up
void add_modulus(IntegralExpr& I, const FormalExpr& X, const Coeff& w) {
  FormalExpr cx = conj(X);
  for (auto& [k1, c1] : cx.terms)
    for (auto& [k2, c2] : X.terms)
      if (!k1.second && !k2.second) add_pair(I, k1.first, k2.first, w * c1 * c2);
}

// tr(F) for a star word: int (u * v) = int u v
void add_traced_word(IntegralExpr& I, const StarWord& w, const Coeff& c) {
  if (w.size() < 2) throw std::invalid_argument("trace of a single token is not reduced");
  std::size_t k = w.size() / 2;
  add_pair(I, StarWord(w.begin(), w.begin() + k), StarWord(w.begin() + k, w.end()), c);
}

void add_star_modulus(IntegralExpr& I, const FormalExpr& X, const Coeff& w) {
  FormalExpr p = rewrite_linear_star(super_expand(conj(X), X));
  for (auto& [k, c] : p.terms)
    if (!k.second) add_traced_word(I, k.first, w * c);
}

}  // namespace

ProofReport verify_inner_derivation() {
  ProofReport r;
  r.identity = "d_mu phi = [-(i/2) x_mu, phi]";
  r.ok = true;
  for (int mu = 1; mu <= 2; ++mu) {
    auto lhs = rewrite_linear_star(
        commutator(term(W1(Tok::X, mu), 0, Coeff(QI(0, mpq_class(-1, 2)))), term(W1(Tok::Phi), 0, 1), false));
    auto rep = compare(r.identity, lhs, term(W1(Tok::DPhi, mu), 0, 1));
    r.ok = r.ok && rep.ok;
    r.lhs += (mu > 1 ? "; " : "") + rep.lhs;
    r.rhs += (mu > 1 ? "; " : "") + rep.rhs;
    r.diff += (mu > 1 ? "; " : "") + rep.diff;
  }
  return r;
}

ProofReport verify_bracket_identity(bool graded) {
  ProofReport r;
  r.identity = std::string("[-(i/2) x_mu eta, phi eta] (") + (graded ? "graded" : "plain") + " commutator)";
  r.ok = true;
  for (int mu = 1; mu <= 2; ++mu) {
    auto rep = compare(r.identity, bracket_lhs(mu, graded), bracket_rhs(mu));
    r.ok = r.ok && rep.ok;
    r.lhs += (mu > 1 ? "; " : "") + rep.lhs;
    r.rhs += (mu > 1 ? "; " : "") + rep.rhs;
    r.diff += (mu > 1 ? "; " : "") + rep.diff;
  }
  return r;
}

ProofReport verify_square_identity() {
  FormalExpr R = eta_times(W1(Tok::Phi), 1);
  StarWord pp = {Token{Tok::Phi}, Token{Tok::Phi}};
  FormalExpr rhs = term(pp, 0, cv(A, 2) + Coeff(QI::i()) * cv(ALPHA) * cv(THETA) * cv(B, 2) * cv(W, 2));
  rhs += term(pp, 1, Coeff(2) * cv(A) * cv(B));
  return compare("(phi eta) * (phi eta)", rewrite_linear_star(super_expand(R, R)), rhs);
}

IntegralExpr action_lhs(bool graded, bool star_modulus) {
  IntegralExpr I;
  auto add = star_modulus ? add_star_modulus : add_modulus;
  Coeff half(QI(mpq_class(1, 2)));
  for (int mu = 1; mu <= 2; ++mu) add(I, bracket_lhs(mu, graded), half);
  FormalExpr R = eta_times(W1(Tok::Phi), 1);
  add(I, R, half * cv(M2));
  add(I, rewrite_linear_star(super_expand(R, R)), cv(LAM));
  return I;
}

IntegralExpr action_rhs() {
  IntegralExpr I;
  Coeff half(QI(mpq_class(1, 2)));
  Coeff a4 = cv(A, 4);
  Coeff omega2 = cv(ALPHA, 2) * cv(THETA, 2) * cv(B, 4) * cv(AI, 4) * cv(W, 4);
  for (int mu = 1; mu <= 2; ++mu) {
    add_traced_word(I, {Token{Tok::DPhi, mu}, Token{Tok::DPhi, mu}}, a4 * half);
    add_traced_word(I, {Token{Tok::XPhi, mu}, Token{Tok::XPhi, mu}}, a4 * half * omega2);
  }
  add_traced_word(I, {Token{Tok::Phi}, Token{Tok::Phi}}, a4 * half * cv(M2) * cv(AI, 2));
  add_traced_word(I, StarWord(4, Token{Tok::Phi}), a4 * cv(LAM) * (Coeff(1) + omega2));
  return I;
}

std::string integral_str(const IntegralExpr& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : e) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "] int(" << word_str(k.first) << ")(" << word_str(k.second) << ")";
  }
  return os.str();
}

ProofReport verify_action_identity(bool graded, bool star_modulus) {
  ProofReport r;
  r.identity = std::string("action on the deformed superspace (") + (graded ? "graded" : "plain") + " bracket, " +
               (star_modulus ? "star" : "pointwise") + " modulus)";
  IntegralExpr lhs = action_lhs(graded, star_modulus), rhs = action_rhs(), d = lhs;
  for (auto& [k, c] : rhs) add_pair(d, k.first, k.second, -c);
  r.ok = d.empty();
  r.lhs = integral_str(lhs);
  r.rhs = integral_str(rhs);
  r.diff = integral_str(d);
  r.notes["overall"] = "a^4";
  r.notes["Omega^2"] = (cv(ALPHA, 2) * cv(THETA, 2) * cv(B, 4) * cv(AI, 4) * cv(W, 4)).str();
  r.notes["mass^2"] = (cv(M2) * cv(AI, 2)).str();
  r.notes["coupling"] = (cv(LAM) * (Coeff(1) + cv(ALPHA, 2) * cv(THETA, 2) * cv(B, 4) * cv(AI, 4) * cv(W, 4))).str();
  return r;
}

namespace {

Grid2 spectral_derivative(const Grid2& f, int axis) {
  using detail::Buf;
  using detail::Plan;
  int N = f.N;
  int dims[2] = {N, N};
  Plan fwd(2, dims, FFTW_FORWARD), bwd(2, dims, FFTW_BACKWARD);
  Buf b(std::size_t(N) * N);
  std::copy(f.v.begin(), f.v.end(), b.p);
  fwd.run(b.p);
  double h = axis == 0 ? f.h0 : f.h1;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int q = axis == 0 ? i : j;
      int s = q < N / 2 ? q : q - N;
      double k = (q == N / 2) ? 0.0 : 2 * M_PI * s / (N * h);
      b.p[std::size_t(i) * N + j] *= cplx(0, k) / double(N) / double(N);
    }
  bwd.run(b.p);
  Grid2 r = f.like();
  std::copy(b.p, b.p + r.v.size(), r.v.begin());
  return r;
}

// x_1 = -(2/theta) x^2, x_2 = (2/theta) x^1; grad[mu-1] = (d_0 x_mu, d_1 x_mu)
struct LinearSymbol {
  Grid2 v;
  double d0, d1;
};

LinearSymbol xtilde(const Grid2& like, int mu, double theta) {
  LinearSymbol s{like.like(), 0, 0};
  if (mu == 1) {
    s.v.fill([&](double, double y) { return cplx(-2 / theta * y); });
    s.d1 = -2 / theta;
  } else {
    s.v.fill([&](double x, double) { return cplx(2 / theta * x); });
    s.d0 = 2 / theta;
  }
  return s;
}

// the Moyal expansion stops at first order when one factor is linear
Grid2 star_left(const LinearSymbol& s, const Grid2& F, const Grid2& F0, const Grid2& F1, double theta) {
  return pointwise(s.v, F) + cplx(0, theta / 2) * (s.d0 * F1 - s.d1 * F0);
}
Grid2 star_right(const Grid2& F, const Grid2& F0, const Grid2& F1, const LinearSymbol& s, double theta) {
  return pointwise(s.v, F) + cplx(0, theta / 2) * (s.d1 * F0 - s.d0 * F1);
}

double re_integral(const Grid2& g) { return g.integral().real(); }

}  // namespace

NumericReport numeric_crosscheck(const NumericParams& p) {
  NumericReport rep;
  Grid2 phi = Grid2::centered(p.N, p.L);
  double s2 = p.sigma * p.sigma;
  phi.fill([&](double x, double y) { return cplx(std::exp(-(x * x + y * y) / (2 * s2))); });
  rep.boundary_ratio = phi.boundary_ratio();
  cplx lam = lambda_closedform<cplx>(1, OddParams<cplx>{1.0 / p.theta, p.alpha})(1, 1);
  Grid2 d0 = spectral_derivative(phi, 0), d1 = spectral_derivative(phi, 1);
  Grid2 P = moyal_grid(phi, phi, p.theta);

  // left side: trace of the superfield action
  double kin = 0;
  for (int mu = 1; mu <= 2; ++mu) {
    LinearSymbol x = xtilde(phi, mu, p.theta);
    Grid2 xp = star_left(x, phi, d0, d1, p.theta), px = star_right(phi, d0, d1, x, p.theta);
    // even part of the graded bracket [-(i/2) x eta, phi eta]
    Grid2 X = cplx(0, -0.5) * (p.a * p.a * (xp - px) + lam * p.b * p.b * (xp + px));
    kin += 0.5 * re_integral(pointwise(conj(X), X));
    rep.ibp_integral += re_integral(pointwise(phi, pointwise(x.v, mu == 1 ? d0 : d1)));
  }
  double mass = 0.5 * p.M2 * p.a * p.a * re_integral(pointwise(phi, phi));
  Grid2 Y = (p.a * p.a + lam * p.b * p.b) * P;
  double quart = p.lam * re_integral(pointwise(conj(Y), Y));
  rep.lhs = kin + mass + quart;

  // right side: harmonic action with analytic derivatives and grid Moyal products
  double om2 = std::pow(p.alpha * p.theta * p.b * p.b / (p.a * p.a * (1 + p.alpha) * (1 + p.alpha)), 2);
  double rk = 0, rh = 0;
  for (int mu = 1; mu <= 2; ++mu) {
    Grid2 dphi = phi.like(), xphi = phi.like();
    dphi.fill([&](double x, double y) { return -(mu == 1 ? x : y) / s2 * std::exp(-(x * x + y * y) / (2 * s2)); });
    xphi.fill([&](double x, double y) {
      double xt = mu == 1 ? -2 / p.theta * y : 2 / p.theta * x;
      return xt * std::exp(-(x * x + y * y) / (2 * s2));
    });
    rk += 0.5 * re_integral(moyal_grid(dphi, dphi, p.theta));
    rh += 0.5 * om2 * re_integral(moyal_grid(xphi, xphi, p.theta));
  }
  double rm = p.M2 / (2 * p.a * p.a) * re_integral(P);
  double rq = p.lam * (1 + om2) * re_integral(moyal_grid(P, P, p.theta));
  double a4 = std::pow(p.a, 4);
  rep.rhs = a4 * (rk + rh + rm + rq);
  rep.rel_dev = std::abs(rep.lhs - rep.rhs) / std::abs(rep.rhs);
  double lq = kin + mass, rqd = a4 * (rk + rh + rm);
  rep.quadratic_rel_dev = std::abs(lq - rqd) / std::abs(rqd);
  return rep;
}

}  // namespace superdq::qft
