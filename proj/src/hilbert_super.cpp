#include "superdq/hilbert_super.hpp"

#include <sstream>
#include <stdexcept>

#include "superdq/grassmann.hpp"

namespace superdq {

namespace {

double max_abs(const CMat& A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }

int sgn_pow(int e) { return (e & 1) ? -1 : 1; }

}  // namespace

double HilbertSuper::defj_residual() const {
  int d = dim();
  double r = 0;
  CMat J2 = J * J;
  CMat Jh = J.adjoint();
  for (int c = 0; c < d; ++c) {
    double s = sgn_pow((parity + 1) * grading[c]);
    CVec e = CVec::Zero(d);
    e(c) = 1;
    r = std::max(r, (J2.col(c) - s * e).cwiseAbs().maxCoeff());
    r = std::max(r, (Jh.col(c) - s * J.col(c)).cwiseAbs().maxCoeff());
  }
  return r;
}

void HilbertSuper::validate(double tol) const {
  int d = dim();
  if (J.rows() != d || J.cols() != d) throw std::invalid_argument("J has wrong shape");
  if (max_abs(J.adjoint() * J - CMat::Identity(d, d)) > tol) throw std::invalid_argument("J not unitary");
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (std::abs(J(r, c)) > tol && ((grading[c] + parity) & 1) != grading[r])
        throw std::invalid_argument("J not homogeneous of the declared parity");
  if (defj_residual() > tol) throw std::invalid_argument("J violates the sign rules");
}

HilbertSuper grassmann_space(int n) {
  HilbertSuper H;
  int d = 1 << n;
  H.parity = n & 1;
  H.grading.resize(d);
  H.J = CMat::Zero(d, d);
  Mask full = full_mask(n);
  for (int I = 0; I < d; ++I) {
    H.grading[I] = popcount(I) & 1;
    Mask c = full & ~Mask(I);
    H.J(c, I) = eps(I, c);
  }
  return H;
}

HilbertSuper grid_space(int points, int n) {
  HilbertSuper g = grassmann_space(n);
  HilbertSuper H;
  int b = g.dim();
  H.parity = g.parity;
  H.grading.resize(points * b);
  H.J = CMat::Zero(points * b, points * b);
  for (int p = 0; p < points; ++p) {
    H.J.block(p * b, p * b, b, b) = g.J;
    for (int k = 0; k < b; ++k) H.grading[p * b + k] = g.grading[k];
  }
  return H;
}

HilbertSuper tensor_superspace(const HilbertSuper& a, const HilbertSuper& b) {
  HilbertSuper H;
  int da = a.dim(), db = b.dim();
  H.parity = (a.parity + b.parity) & 1;
  H.grading.resize(da * db);
  H.J = CMat::Zero(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      int c = i * db + j;
      H.grading[c] = (a.grading[i] + b.grading[j]) & 1;
      double s = sgn_pow((a.parity + a.grading[i]) * b.grading[j]);
      for (int r1 = 0; r1 < da; ++r1) {
        if (a.J(r1, i) == 0.0) continue;
        for (int r2 = 0; r2 < db; ++r2) H.J(r1 * db + r2, c) = s * a.J(r1, i) * b.J(r2, j);
      }
    }
  return H;
}

HilbertSuper direct_sum(const HilbertSuper& a, const HilbertSuper& b) {
  if (a.parity != b.parity) throw std::invalid_argument("direct sum needs equal parity");
  HilbertSuper H;
  int da = a.dim(), db = b.dim();
  H.parity = a.parity;
  H.grading = a.grading;
  H.grading.insert(H.grading.end(), b.grading.begin(), b.grading.end());
  H.J = CMat::Zero(da + db, da + db);
  H.J.topLeftCorner(da, da) = a.J;
  H.J.bottomRightCorner(db, db) = b.J;
  return H;
}

CMat parity_operator(const HilbertSuper& H) {
  CMat P = CMat::Zero(H.dim(), H.dim());
  for (int i = 0; i < H.dim(); ++i) P(i, i) = H.grading[i] ? -1.0 : 1.0;
  return P;
}

int op_degree(const HilbertSuper& H, const CMat& T, double tol) {
  bool e = false, o = false;
  for (int r = 0; r < T.rows(); ++r)
    for (int c = 0; c < T.cols(); ++c)
      if (std::abs(T(r, c)) > tol) (H.grading[r] == H.grading[c] ? e : o) = true;
  if (e && o) return -1;
  return o ? 1 : 0;
}

std::pair<CMat, CMat> split_parity(const HilbertSuper& H, const CMat& T) {
  CMat P = parity_operator(H);
  CMat PTP = P * T * P;
  return {(T + PTP) / 2.0, (T - PTP) / 2.0};
}

std::complex<double> super_pairing(const HilbertSuper& H, const CVec& x, const CVec& y) {
  if (x.size() != H.dim() || y.size() != H.dim()) throw std::invalid_argument("dimension mismatch");
  return (H.J * x).dot(y);
}

SuperOp superadjoint(const HilbertSuper& H, const SuperOp& T) {
  if (T.M.rows() != H.dim() || T.M.cols() != H.dim()) throw std::invalid_argument("dimension mismatch");
  if (op_degree(H, T.M) < 0) throw std::invalid_argument("inhomogeneous operator: split it first");
  CMat R = H.J * T.M.adjoint() * H.J;
  int n = H.parity, t = T.degree;
  for (int c = 0; c < H.dim(); ++c) {
    int x = H.grading[c];
    if (sgn_pow((n + 1) * (t + x) + t * x) < 0) R.col(c) = -R.col(c);
  }
  return {R, t};
}

CMat superadjoint_any(const HilbertSuper& H, const CMat& T) {
  auto [T0, T1] = split_parity(H, T);
  return superadjoint(H, {T0, 0}).M + superadjoint(H, {T1, 1}).M;
}

double op_norm(const CMat& T) {
  if (T.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> sv(T);
  return sv.singularValues()(0);
}

CMat mult_op(int n, unsigned long long I) {
  int d = 1 << n;
  CMat M = CMat::Zero(d, d);
  for (int K = 0; K < d; ++K) {
    int s = eps(I, K);
    if (s) M(I | K, K) = s;
  }
  return M;
}

KreinSplit krein_decompose(const HilbertSuper& H) {
  if (H.parity != 1) throw std::invalid_argument("Krein decomposition needs parity 1");
  CMat Jh = (H.J + H.J.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(Jh);
  std::vector<int> p, m;
  for (int i = 0; i < H.dim(); ++i) (es.eigenvalues()(i) > 0 ? p : m).push_back(i);
  KreinSplit k;
  k.plus = CMat(H.dim(), p.size());
  k.minus = CMat(H.dim(), m.size());
  for (size_t i = 0; i < p.size(); ++i) k.plus.col(i) = es.eigenvectors().col(p[i]);
  for (size_t i = 0; i < m.size(); ++i) k.minus.col(i) = es.eigenvectors().col(m[i]);
  return k;
}

CstarReport cstar_super_check(const HilbertSuper& H, const std::vector<SuperOp>& gens,
                              const std::vector<CMat>& declared, double tol) {
  if (declared.size() != gens.size()) throw std::invalid_argument("one declared adjoint per generator");
  CstarReport rep;
  auto add = [&](const std::string& ax, const std::string& w, double e) {
    if (e > tol) rep.violations.push_back({ax, w, e});
  };
  int d = H.dim();
  for (size_t g = 0; g < gens.size(); ++g) {
    const SuperOp& a = gens[g];
    SuperOp ad = superadjoint(H, a);
    std::ostringstream id;
    id << "generator " << g;
    // the declared image must satisfy the pairing identity on basis vectors
    double pe = 0;
    std::string pw;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        CVec x = CVec::Unit(d, i), y = CVec::Unit(d, j);
        std::complex<double> lhs = super_pairing(H, declared[g] * x, y);
        std::complex<double> rhs = double(sgn_pow(a.degree * H.grading[i])) * super_pairing(H, x, a.M * y);
        double e = std::abs(lhs - rhs);
        if (e > pe) {
          pe = e;
          std::ostringstream w;
          w << id.str() << ", basis pair (" << i << "," << j << "): <a'x,y>=" << lhs << " vs " << rhs;
          pw = w.str();
        }
      }
    add("pairing", pw, pe);
    add("representation", id.str() + ": declared adjoint differs from the operator superadjoint",
        max_abs(declared[g] - ad.M));
    add("involutive", id.str() + ": (a+)+ != a", max_abs(superadjoint(H, ad).M - a.M));
    double na = op_norm(a.M);
    add("isometric", id.str() + ": |a+| != |a|", std::abs(op_norm(ad.M) - na) / std::max(1.0, na));
    double nstar = op_norm(a.M.adjoint() * a.M);
    add("cstar", id.str() + ": |a* a| != |a|^2", std::abs(nstar - na * na) / std::max(1.0, na * na));
  }
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t h = 0; h < gens.size(); ++h) {
      const SuperOp& a = gens[g];
      const SuperOp& b = gens[h];
      SuperOp ab{a.M * b.M, (a.degree + b.degree) & 1};
      CMat lhs = superadjoint(H, ab).M;
      CMat rhs = double(sgn_pow(a.degree * b.degree)) * declared[h] * declared[g];
      std::ostringstream w;
      w << "generators (" << g << "," << h << ")";
      add("antimultiplicative", w.str(), max_abs(lhs - rhs));
    }
  return rep;
}

}  // namespace superdq
