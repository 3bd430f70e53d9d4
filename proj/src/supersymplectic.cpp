#include "superdq/supersymplectic.hpp"

#include <cmath>
#include <stdexcept>

namespace superdq {

namespace {

double max_abs(const Eigen::MatrixXd& A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

Eigen::MatrixXd GradedForm::full() const {
  int mm = m(), nn = n();
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(mm + nn, mm + nn);
  F.topLeftCorner(mm, mm) = even;
  F.bottomRightCorner(nn, nn) = odd;
  return F;
}

void GradedForm::validate(double tol) const {
  if (even.rows() != even.cols() || odd.rows() != odd.cols()) throw std::invalid_argument("blocks must be square");
  if (m() % 2 != 0) throw std::invalid_argument("even dimension must be even");
  double se = std::max(1.0, max_abs(even));
  double so = std::max(1.0, max_abs(odd));
  if (max_abs(even + even.transpose()) > tol * se) throw std::invalid_argument("even block not antisymmetric");
  if (max_abs(odd - odd.transpose()) > tol * so) throw std::invalid_argument("odd block not symmetric");
}

Eigen::MatrixXd CanonicalBasis::canonical_matrix() const {
  int m = 2 * d, n = n_plus + n_minus;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m + n, m + n);
  for (int i = 0; i < d; ++i) {
    C(i, d + i) = 1;
    C(d + i, i) = -1;
  }
  for (int k = 0; k < n_plus; ++k) C(m + k, m + k) = 2;
  for (int l = 0; l < n_minus; ++l) C(m + n_plus + l, m + n_plus + l) = -2;
  return C;
}

CanonicalBasis darboux_basis(const GradedForm& w, double rank_tol) {
  if (w.m() % 2 != 0) throw std::invalid_argument("odd even-dimension: a symplectic form needs m even");
  w.validate();
  int m = w.m(), n = w.n();
  CanonicalBasis out;
  out.d = m / 2;
  out.basis = Eigen::MatrixXd::Zero(m + n, m + n);

  // skew Gram-Schmidt on the even block
  const Eigen::MatrixXd& E = w.even;
  double scale = std::max(max_abs(E), 1e-300);
  std::vector<Eigen::VectorXd> pool;
  for (int i = 0; i < m; ++i) pool.push_back(Eigen::VectorXd::Unit(m, i));
  auto om = [&](const Eigen::VectorXd& u, const Eigen::VectorXd& v) { return u.dot(E * v); };
  for (int p = 0; p < out.d; ++p) {
    int bi = -1, bj = -1;
    double best = 0;
    for (int i = 0; i < (int)pool.size(); ++i)
      for (int j = i + 1; j < (int)pool.size(); ++j) {
        double v = std::abs(om(pool[i], pool[j]));
        if (v > best) { best = v; bi = i; bj = j; }
      }
    if (bi < 0 || best <= rank_tol * scale) throw std::runtime_error("degenerate form");
    Eigen::VectorXd e = pool[bi];
    Eigen::VectorXd f = pool[bj] / om(pool[bi], pool[bj]);
    pool.erase(pool.begin() + bj);
    pool.erase(pool.begin() + bi);
    for (auto& v : pool) v = v - om(v, f) * e + om(v, e) * f;
    out.basis.block(0, p, m, 1) = e;
    out.basis.block(0, out.d + p, m, 1) = f;
  }

  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w.odd);
    const auto& lam = es.eigenvalues();
    double oscale = std::max(lam.cwiseAbs().maxCoeff(), 1e-300);
    std::vector<int> pos, neg;
    for (int k = n - 1; k >= 0; --k) {
      if (std::abs(lam(k)) <= rank_tol * oscale) throw std::runtime_error("degenerate form");
      (lam(k) > 0 ? pos : neg).push_back(k);
    }
    out.n_plus = int(pos.size());
    out.n_minus = int(neg.size());
    int col = m;
    for (int k : pos) out.basis.block(m, col++, n, 1) = es.eigenvectors().col(k) * std::sqrt(2.0 / lam(k));
    for (int k : neg) out.basis.block(m, col++, n, 1) = es.eigenvectors().col(k) * std::sqrt(-2.0 / lam(k));
  }
  return out;
}

std::vector<Eigen::VectorXd> max_isotropic(const GradedForm& w, double rank_tol) {
  CanonicalBasis B = darboux_basis(w, rank_tol);
  std::vector<Eigen::VectorXd> out;
  for (int i = 0; i < B.d; ++i) out.push_back(B.basis.col(i));
  int m = 2 * B.d;
  for (int k = 0; k < std::min(B.n_plus, B.n_minus); ++k)
    out.push_back(B.basis.col(m + k) + B.basis.col(m + B.n_plus + k));
  return out;
}

std::vector<Eigen::VectorXd> symp_orthogonal(const GradedForm& w, const std::vector<Eigen::VectorXd>& F,
                                             double rank_tol) {
  w.validate();
  int m = w.m(), n = w.n();
  std::vector<Eigen::VectorXd> Fe, Fo;
  for (auto& v : F) {
    if (v.size() != m + n) throw std::invalid_argument("vector dimension mismatch");
    bool has_e = m && v.head(m).cwiseAbs().maxCoeff() > 0;
    bool has_o = n && v.tail(n).cwiseAbs().maxCoeff() > 0;
    if (has_e && has_o) throw std::invalid_argument("inhomogeneous vector in F");
    if (has_e) Fe.push_back(v.head(m));
    else if (has_o) Fo.push_back(v.tail(n));
    else throw std::invalid_argument("dependent F");
  }
  auto kernel = [&](const std::vector<Eigen::VectorXd>& rows, const Eigen::MatrixXd& W, int dim) {
    std::vector<Eigen::VectorXd> out;
    if (dim == 0) return out;
    if (rows.empty()) {
      for (int i = 0; i < dim; ++i) out.push_back(Eigen::VectorXd::Unit(dim, i));
      return out;
    }
    Eigen::MatrixXd R(rows.size(), dim), Y(rows.size(), dim);
    for (size_t r = 0; r < rows.size(); ++r) Y.row(r) = rows[r].transpose();
    R = Y * W;  // rows y^T W: omega(y, x) = y^T W x
    Eigen::JacobiSVD<Eigen::MatrixXd> svY(Y);
    double sy = std::max(svY.singularValues()(0), 1e-300);
    int rankY = 0;
    for (int i = 0; i < svY.singularValues().size(); ++i)
      if (svY.singularValues()(i) > rank_tol * sy) ++rankY;
    if (rankY < (int)rows.size()) throw std::invalid_argument("dependent F");
    Eigen::JacobiSVD<Eigen::MatrixXd> sv(R, Eigen::ComputeFullV);
    double s0 = sv.singularValues().size() ? sv.singularValues()(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.singularValues().size(); ++i)
      if (sv.singularValues()(i) > rank_tol * std::max(s0, 1e-300)) ++rank;
    for (int i = rank; i < dim; ++i) out.push_back(sv.matrixV().col(i));
    return out;
  };
  std::vector<Eigen::VectorXd> out;
  for (auto& v : kernel(Fe, w.even, m)) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(m + n);
    x.head(m) = v;
    out.push_back(x);
  }
  for (auto& v : kernel(Fo, w.odd, n)) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(m + n);
    x.tail(n) = v;
    out.push_back(x);
  }
  return out;
}

SuperNumber super_body(const SuperNumber& s) { return SuperNumber::scalar(s.n(), s.coeff(0)); }

SuperNumber super_even_part(const SuperNumber& s) {
  SuperNumber r(s.n());
  for (auto& [m, v] : s.terms())
    if (popcount(m) % 2 == 0) r.add_term(m, v);
  return r;
}

SuperNumber super_odd_part(const SuperNumber& s) {
  SuperNumber r(s.n());
  for (auto& [m, v] : s.terms())
    if (popcount(m) % 2 == 1) r.add_term(m, v);
  return r;
}

void HeisenbergElement::validate() const {
  for (auto& v : x)
    if (v.parity() == 1 || v.parity() < 0) throw std::invalid_argument("even slot holds a non-even supernumber");
  for (auto& v : xi)
    if (v.parity() == 0 && !v.is_zero()) throw std::invalid_argument("odd slot holds a non-odd supernumber");
  for (auto& v : xi)
    if (v.parity() < 0) throw std::invalid_argument("odd slot holds a non-odd supernumber");
  if (a.parity() != 0) throw std::invalid_argument("central slot holds a non-even supernumber");
}

HeisenbergElement heis_identity(int m, int n, int N) {
  HeisenbergElement g;
  g.x.assign(m, SuperNumber(N));
  g.xi.assign(n, SuperNumber(N));
  g.a = SuperNumber(N);
  return g;
}

HeisenbergElement heis_inverse(const HeisenbergElement& g) {
  HeisenbergElement r = g;
  QI minus1(-1);
  for (auto& v : r.x) v = minus1 * v;
  for (auto& v : r.xi) v = minus1 * v;
  r.a = minus1 * r.a;
  return r;
}

SuperNumber super_omega(const GradedForm& w, const HeisenbergElement& g, const HeisenbergElement& h) {
  int N = g.a.n();
  SuperNumber s(N);
  for (int i = 0; i < w.m(); ++i)
    for (int j = 0; j < w.m(); ++j)
      if (w.even(i, j) != 0.0) s += QI::from_double(w.even(i, j)) * (g.x[i] * h.x[j]);
  // odd coefficients pass an odd basis vector: one sign flip
  for (int k = 0; k < w.n(); ++k)
    for (int l = 0; l < w.n(); ++l)
      if (w.odd(k, l) != 0.0) s -= QI::from_double(w.odd(k, l)) * (g.xi[k] * h.xi[l]);
  return s;
}

HeisenbergElement heis_mul(const HeisenbergElement& g, const HeisenbergElement& h, const GradedForm& w) {
  if ((int)g.x.size() != w.m() || (int)h.x.size() != w.m() || (int)g.xi.size() != w.n() ||
      (int)h.xi.size() != w.n())
    throw std::invalid_argument("dimension mismatch");
  g.validate();
  h.validate();
  HeisenbergElement r = g;
  for (size_t i = 0; i < r.x.size(); ++i) r.x[i] += h.x[i];
  for (size_t k = 0; k < r.xi.size(); ++k) r.xi[k] += h.xi[k];
  r.a = g.a + h.a + QI(mpq_class(1, 2)) * super_omega(w, g, h);
  return r;
}

DualElement coadjoint(const HeisenbergElement& g, const DualElement& z) {
  DualElement r = z;
  for (size_t i = 0; i < r.y.size(); ++i) r.y[i] -= z.b * g.x[i];
  for (size_t k = 0; k < r.eta.size(); ++k) r.eta[k] -= z.b * g.xi[k];
  return r;
}

SuperNumber taylor_extend(const Poly<QI>& f, const std::vector<SuperNumber>& x) {
  int m = f.vars();
  if ((int)x.size() != m) throw std::invalid_argument("arity mismatch");
  int N = m ? x[0].n() : 0;
  std::vector<QI> body(m);
  std::vector<SuperNumber> nil(m);
  for (int i = 0; i < m; ++i) {
    body[i] = x[i].coeff(0);
    nil[i] = x[i] - super_body(x[i]);
  }
  // the multi-index sum stops once the total order exceeds the nilpotency bound
  int maxord = std::min(f.degree(), N);
  SuperNumber out(N);
  std::vector<int> alpha(m, 0);
  auto rec = [&](auto&& self, int var, int left, const Poly<QI>& deriv, QI fact, SuperNumber mon) -> void {
    if (var == m) {
      QI val = deriv.template eval<QI>(body, QI(1));
      out += (val / fact) * mon;
      return;
    }
    Poly<QI> d = deriv;
    SuperNumber mm = mon;
    QI fc = fact;
    for (int k = 0; k <= left; ++k) {
      if (d.is_zero() || mm.is_zero()) break;
      self(self, var + 1, left - k, d, fc, mm);
      d = d.derivative(var);
      mm = mm * nil[var];
      fc = fc * QI(k + 1);
    }
  };
  if (m == 0) return SuperNumber::scalar(N, f.eval<QI>({}, QI(1)));
  rec(rec, 0, maxord, f, QI(1), SuperNumber::scalar(N, QI(1)));
  return out;
}

}  // namespace superdq
