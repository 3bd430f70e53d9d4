#pragma once
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "superdq/exact.hpp"

namespace superdq {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask(0) : ((Mask(1) << n) - 1); }

// Sign of the merge permutation of xi^I xi^J, 0 when I and J overlap.
inline int eps(Mask I, Mask J) {
  if (I & J) return 0;
  int s = 0;
  for (Mask jj = J; jj; jj &= jj - 1) {
    int j = std::countr_zero(jj);
    s += popcount(I >> (j + 1));
  }
  return (s & 1) ? -1 : 1;
}

// 1-based sorted index lists <-> masks.
std::vector<int> subset_members(Mask m);
Mask subset_mask(const std::vector<int>& members, int n);

template <class T>
class Grassmann {
public:
  using Map = std::map<Mask, T>;

  Grassmann() = default;
  explicit Grassmann(int n) : n_(n) {
    if (n < 0 || n > 62) throw std::invalid_argument("generator count out of range");
  }
  static Grassmann scalar(int n, const T& c) { return monomial(n, 0, c); }
  static Grassmann monomial(int n, Mask m, const T& c) {
    Grassmann g(n);
    if (m & ~full_mask(n)) throw std::invalid_argument("subset outside generator range");
    g.add_term(m, c);
    return g;
  }
  static Grassmann generator(int n, int i) {
    return monomial(n, Mask(1) << i, Scalar<T>::from_int(1));
  }

  int n() const { return n_; }
  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  T coeff(Mask m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Scalar<T>::from_int(0) : it->second;
  }

  void add_term(Mask m, const T& v) {
    if (Scalar<T>::is_zero(v)) return;
    auto it = c_.find(m);
    if (it == c_.end()) {
      c_.emplace(m, v);
    } else {
      it->second = it->second + v;
      if (Scalar<T>::is_zero(it->second)) c_.erase(it);
    }
  }

  // -1 when inhomogeneous, 0 for the zero element
  int parity() const {
    int p = -2;
    for (auto& [m, v] : c_) {
      int q = popcount(m) & 1;
      if (p == -2) p = q;
      else if (p != q) return -1;
    }
    return p == -2 ? 0 : p;
  }

  Grassmann conj() const {
    Grassmann r(n_);
    for (auto& [m, v] : c_) r.c_.emplace(m, Scalar<T>::conj(v));
    return r;
  }

  Grassmann& operator+=(const Grassmann& o) {
    check(o);
    for (auto& [m, v] : o.c_) add_term(m, v);
    return *this;
  }
  Grassmann& operator-=(const Grassmann& o) {
    check(o);
    for (auto& [m, v] : o.c_) add_term(m, -v);
    return *this;
  }
  friend Grassmann operator+(Grassmann a, const Grassmann& b) { return a += b; }
  friend Grassmann operator-(Grassmann a, const Grassmann& b) { return a -= b; }
  friend Grassmann operator*(const T& s, const Grassmann& a) {
    Grassmann r(a.n_);
    for (auto& [m, v] : a.c_) r.add_term(m, s * v);
    return r;
  }
  friend Grassmann operator*(const Grassmann& a, const Grassmann& b) {
    a.check(b);
    Grassmann r(a.n_);
    for (auto& [ma, va] : a.c_)
      for (auto& [mb, vb] : b.c_) {
        int s = eps(ma, mb);
        if (s == 0) continue;
        T p = va * vb;
        r.add_term(ma | mb, s > 0 ? p : -p);
      }
    return r;
  }
  friend bool operator==(const Grassmann& a, const Grassmann& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  // Re-embed into a larger generator set, shifting indices by `offset`.
  Grassmann embed(int n_new, int offset) const {
    Grassmann r(n_new);
    for (auto& [m, v] : c_) r.add_term(m << offset, v);
    return r;
  }

private:
  void check(const Grassmann& o) const {
    if (o.n_ != n_) throw std::invalid_argument("mismatched generator count");
  }
  int n_ = 0;
  Map c_;
};

// Hodge operation: *theta^I = eps(I, complement I) theta^{complement I}
template <class T> Grassmann<T> hodge(const Grassmann<T>& a) {
  Grassmann<T> r(a.n());
  Mask full = full_mask(a.n());
  for (auto& [m, v] : a.terms()) {
    Mask c = full & ~m;
    r.add_term(c, eps(m, c) > 0 ? v : -v);
  }
  return r;
}

// <a,b> = sum_I eps(I, cI) conj(a_I) b_cI
template <class T> T super_scal(const Grassmann<T>& a, const Grassmann<T>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mismatched generator count");
  Mask full = full_mask(a.n());
  T s = Scalar<T>::from_int(0);
  for (auto& [m, v] : a.terms()) {
    Mask c = full & ~m;
    T p = Scalar<T>::conj(v) * b.coeff(c);
    s = s + (eps(m, c) > 0 ? p : -p);
  }
  return s;
}

// (a,b) = sum_I conj(a_I) b_I
template <class T> T pos_scal(const Grassmann<T>& a, const Grassmann<T>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mismatched generator count");
  T s = Scalar<T>::from_int(0);
  for (auto& [m, v] : a.terms()) s = s + Scalar<T>::conj(v) * b.coeff(m);
  return s;
}

template <class T> T berezin(const Grassmann<T>& a) { return a.coeff(full_mask(a.n())); }

// Left Berezin integration over the generators in `bank`:
// xi^a = eps(bank, rest) xi^bank xi^rest  ->  eps(bank, rest) xi^rest.
template <class T> Grassmann<T> berezin_bank(const Grassmann<T>& a, Mask bank) {
  Grassmann<T> r(a.n());
  for (auto& [m, v] : a.terms()) {
    if ((m & bank) != bank) continue;
    Mask rest = m & ~bank;
    r.add_term(rest, eps(bank, rest) > 0 ? v : -v);
  }
  return r;
}

// exp of an even nilpotent element by the terminating power series
template <class T> Grassmann<T> gexp(const Grassmann<T>& x) {
  if (!Scalar<T>::is_zero(x.coeff(0))) throw std::invalid_argument("gexp needs zero body");
  Grassmann<T> r = Grassmann<T>::scalar(x.n(), Scalar<T>::from_int(1));
  Grassmann<T> term = r;
  for (int k = 1; k <= x.n() / 2 + 1; ++k) {
    term = Scalar<T>::inv_int(k) * (term * x);
    if (term.is_zero()) break;
    r += term;
  }
  return r;
}

// sum_i xi_{o1+i} xi_{o2+i} over total generator count `total`
template <class T> Grassmann<T> bank_dot(int total, int n, int o1, int o2) {
  Grassmann<T> r(total);
  for (int i = 0; i < n; ++i)
    r += Grassmann<T>::generator(total, o1 + i) * Grassmann<T>::generator(total, o2 + i);
  return r;
}

// exp(i c xi.xi0) over 2n generators (xi: 0..n-1, xi0: n..2n-1), closed form
template <class T> Grassmann<T> odd_exp(const T& c, int n) {
  Grassmann<T> r(2 * n);
  T ic = Scalar<T>::imag_unit() * c;
  for (Mask J = 0; J <= full_mask(n); ++J) {
    int k = popcount(J);
    T v = ipow(ic, k);
    if (neg1pow(k * (k - 1) / 2) < 0) v = -v;
    r.add_term(J | (J << n), v);
  }
  return r;
}

// F_beta f(xi0) = int dxi exp(-i a0 beta xi.xi0) f(xi)
template <class T> Grassmann<T> odd_fourier(const Grassmann<T>& f, const T& beta, const T& a0) {
  int n = f.n();
  Grassmann<T> e = odd_exp<T>(-(a0 * beta), n);
  Grassmann<T> g = berezin_bank(e * f.embed(2 * n, 0), full_mask(n));
  Grassmann<T> r(n);
  for (auto& [m, v] : g.terms()) r.add_term(m >> n, v);
  return r;
}

}  // namespace superdq
