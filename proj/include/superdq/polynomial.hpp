#pragma once
#include <map>
#include <stdexcept>
#include <vector>

#include "superdq/exact.hpp"

namespace superdq {

// Multivariate polynomial with coefficients in T; keys are exponent vectors.
template <class T>
class Poly {
public:
  using Exp = std::vector<int>;
  Poly() = default;
  explicit Poly(int vars) : vars_(vars) {}
  static Poly constant(int vars, const T& c) {
    Poly p(vars);
    p.add_term(Exp(vars, 0), c);
    return p;
  }
  static Poly variable(int vars, int i) {
    Poly p(vars);
    Exp e(vars, 0);
    e.at(i) = 1;
    p.add_term(e, Scalar<T>::from_int(1));
    return p;
  }

  int vars() const { return vars_; }
  const std::map<Exp, T>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Exp& e, const T& c) {
    if ((int)e.size() != vars_) throw std::invalid_argument("exponent arity mismatch");
    if (Scalar<T>::is_zero(c)) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (Scalar<T>::is_zero(it->second)) t_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const T& s, const Poly& a) {
    Poly r(a.vars_);
    for (auto& [e, c] : a.t_) r.add_term(e, s * c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.vars_);
    for (auto& [ea, ca] : a.t_)
      for (auto& [eb, cb] : b.t_) {
        Exp e(a.vars_);
        for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.vars_ == b.vars_ && a.t_ == b.t_; }

  Poly derivative(int i) const {
    Poly r(vars_);
    for (auto& [e, c] : t_) {
      if (e[i] == 0) continue;
      Exp d = e;
      d[i] -= 1;
      r.add_term(d, Scalar<T>::from_int(e[i]) * c);
    }
    return r;
  }

  template <class V> V eval(const std::vector<V>& x, const V& one) const {
    V s = Scalar<T>::from_int(0) * one;
    for (auto& [e, c] : t_) {
      V m = c * one;
      for (int i = 0; i < vars_; ++i)
        for (int k = 0; k < e[i]; ++k) m = m * x[i];
      s = s + m;
    }
    return s;
  }

  int degree() const {
    int d = 0;
    for (auto& [e, c] : t_) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

private:
  void check(const Poly& o) const {
    if (o.vars_ != vars_) throw std::invalid_argument("polynomial arity mismatch");
  }
  int vars_ = 0;
  std::map<Exp, T> t_;
};

}  // namespace superdq
