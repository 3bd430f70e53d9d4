#pragma once
#include <cmath>
#include <stdexcept>

#include "superdq/exact.hpp"

namespace superdq {

// Deformation parameters over a scalar type (exact or floating).
template <class T>
struct OddParams {
  T a0;
  T alpha;

  void validate() const {
    if (Scalar<T>::is_zero(a0)) throw std::invalid_argument("a0 must be nonzero");
    if (Scalar<T>::is_zero(alpha) || Scalar<T>::is_zero(alpha + Scalar<T>::from_int(1)))
      throw std::invalid_argument("alpha must avoid 0 and -1");
  }
  T one() const { return Scalar<T>::from_int(1); }
  // lambda = -(alpha+1)^2 / (4 alpha)
  T lambda() const {
    T ap = alpha + one();
    return -(ap * ap) / (Scalar<T>::from_int(4) * alpha);
  }
  T c() const { return Scalar<T>::from_int(4) * a0 * lambda(); }
  // r1 = (i a0)^n (-1)^{n(n+1)/2}
  T r1(int n) const {
    T v = ipow(Scalar<T>::imag_unit() * a0, n);
    return neg1pow(n * (n + 1) / 2) < 0 ? -v : v;
  }
  // odd part of the product normalization: (-1)^n alpha^n / (r1 (1+alpha)^{2n})
  T kappa_odd(int n) const {
    T v = ipow(alpha, n) / (r1(n) * ipow(alpha + one(), 2 * n));
    return neg1pow(n) < 0 ? -v : v;
  }
};

struct DeformParams {
  int m = 2;
  int n = 1;
  double a0 = 1.0;
  cplx alpha = 1.0;

  void validate() const {
    if (m < 0 || m % 2) throw std::invalid_argument("m must be even and nonnegative");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    odd().validate();
  }
  OddParams<cplx> odd() const { return {cplx(a0), alpha}; }
  double theta() const { return 1.0 / a0; }
  cplx lambda() const { return odd().lambda(); }
  cplx c() const { return odd().c(); }
  double r0() const { return std::pow(M_PI / a0, m / 2.0); }
  cplx r1() const { return odd().r1(n); }
  // gamma = (-1)^n / (r0 r1 (1+alpha)^n)
  cplx gamma() const { return double(neg1pow(n)) / (r0() * r1() * ipow(alpha + 1.0, n)); }
  // Sigma^2 = r id
  cplx r() const { return gamma() * gamma() * r1() * ipow(alpha, n); }
  cplx kappa_odd() const { return odd().kappa_odd(n); }
  // resolution constant r0 r1 2^{m/2} (-1)^n
  cplx resolution_constant() const { return r0() * r1() * std::pow(2.0, m / 2.0) * double(neg1pow(n)); }
};

}  // namespace superdq
