#pragma once
#include <complex>
#include <gmpxx.h>
#include <string>

namespace superdq {

using cplx = std::complex<double>;

// Gaussian rational p + q i with p, q in Q.
class QI {
public:
  QI() = default;
  QI(long v) : re_(v), im_(0) {}
  QI(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) { canon(); }
  static QI from_double(double re, double im = 0.0);
  static QI i() { return QI(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  QI conj() const { return QI(re_, -im_); }
  cplx to_cplx() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

  QI operator-() const { return QI(-re_, -im_); }
  QI& operator+=(const QI& o);
  QI& operator-=(const QI& o);
  QI& operator*=(const QI& o);
  QI& operator/=(const QI& o);
  friend QI operator+(QI a, const QI& b) { return a += b; }
  friend QI operator-(QI a, const QI& b) { return a -= b; }
  friend QI operator*(QI a, const QI& b) { return a *= b; }
  friend QI operator/(QI a, const QI& b) { return a /= b; }
  friend bool operator==(const QI& a, const QI& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const QI& a, const QI& b) { return !(a == b); }

private:
  void canon() { re_.canonicalize(); im_.canonicalize(); }
  mpq_class re_{0}, im_{0};
};

QI pow(const QI& base, int e);

// Uniform scalar interface used by the generic algebra code.
template <class T> struct Scalar;

template <> struct Scalar<cplx> {
  static bool is_zero(const cplx& v) { return v == cplx(0.0, 0.0); }
  static cplx conj(const cplx& v) { return std::conj(v); }
  static cplx from_int(long v) { return cplx(double(v), 0.0); }
  static cplx imag_unit() { return cplx(0.0, 1.0); }
  static cplx to_cplx(const cplx& v) { return v; }
  static cplx inv_int(long v) { return cplx(1.0 / double(v), 0.0); }
};

template <> struct Scalar<QI> {
  static bool is_zero(const QI& v) { return v.is_zero(); }
  static QI conj(const QI& v) { return v.conj(); }
  static QI from_int(long v) { return QI(v); }
  static QI imag_unit() { return QI::i(); }
  static cplx to_cplx(const QI& v) { return v.to_cplx(); }
  static QI inv_int(long v) { return QI(mpq_class(1, v)); }
};

template <class T> T ipow(const T& base, int e) {
  T r = Scalar<T>::from_int(1);
  if (e < 0) {
    T inv = Scalar<T>::from_int(1) / base;
    for (int k = 0; k < -e; ++k) r = r * inv;
    return r;
  }
  for (int k = 0; k < e; ++k) r = r * base;
  return r;
}

inline int neg1pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace superdq
