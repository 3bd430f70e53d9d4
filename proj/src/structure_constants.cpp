#include "superdq/structure_constants.hpp"

namespace superdq {

template <class T> StructureConstants<T> lambda_bruteforce(int n, const OddParams<T>& p) {
  p.validate();
  StructureConstants<T> out;
  out.n = n;
  out.table.assign(out.size() * out.size(), Scalar<T>::from_int(0));
  int tot = 3 * n;
  T ic = Scalar<T>::imag_unit() * p.c();
  // banks: xi at 0, xi1 at n, xi2 at 2n
  Grassmann<T> q = bank_dot<T>(tot, n, 0, n) + bank_dot<T>(tot, n, n, 2 * n) + bank_dot<T>(tot, n, 2 * n, 0);
  Grassmann<T> E = gexp(ic * q);
  Mask b1 = full_mask(n) << n, b2 = full_mask(n) << (2 * n);
  T k = p.kappa_odd(n);
  for (Mask I = 0; I < out.size(); ++I)
    for (Mask J = 0; J < out.size(); ++J) {
      Grassmann<T> mon = Grassmann<T>::monomial(tot, (I << n), Scalar<T>::from_int(1)) *
                         Grassmann<T>::monomial(tot, (J << (2 * n)), Scalar<T>::from_int(1));
      Grassmann<T> r = berezin_bank(berezin_bank(mon * E, b2), b1);
      for (auto& [mk, v] : r.terms())
        if (mk != (I ^ J)) throw std::logic_error("structure constant outside the symmetric difference");
      out.table[I * out.size() + J] = k * r.coeff(I ^ J);
    }
  return out;
}

template <class T> T closedform_coeff(int n, Mask I, Mask J, const T& c) {
  Mask C = I & J;
  int d = popcount(C);
  Mask D = I ^ J;
  T ic = Scalar<T>::imag_unit() * c;
  T v = ipow(ic, n - d);
  int s = neg1pow(d * (d + 1) / 2 + n * (n + 1) / 2 + popcount(I) * d) * eps(I & ~C, J & ~C) * eps(C, D);
  return s < 0 ? -v : v;
}

template <class T> StructureConstants<T> lambda_closedform(int n, const OddParams<T>& p) {
  p.validate();
  StructureConstants<T> out;
  out.n = n;
  out.table.resize(out.size() * out.size());
  T c = p.c();
  T k = p.kappa_odd(n);
  for (Mask I = 0; I < out.size(); ++I)
    for (Mask J = 0; J < out.size(); ++J) out.table[I * out.size() + J] = k * closedform_coeff<T>(n, I, J, c);
  return out;
}

template StructureConstants<cplx> lambda_bruteforce(int, const OddParams<cplx>&);
template StructureConstants<QI> lambda_bruteforce(int, const OddParams<QI>&);
template StructureConstants<cplx> lambda_closedform(int, const OddParams<cplx>&);
template StructureConstants<QI> lambda_closedform(int, const OddParams<QI>&);
template cplx closedform_coeff(int, Mask, Mask, const cplx&);
template QI closedform_coeff(int, Mask, Mask, const QI&);

}  // namespace superdq
