#pragma once
#include <vector>

#include "superdq/grassmann.hpp"
#include "superdq/params.hpp"

namespace superdq {

// Lambda(I,J) with target I xor J; entries indexed I * 2^n + J.
template <class T>
struct StructureConstants {
  int n = 0;
  std::vector<T> table;

  std::size_t size() const { return std::size_t(1) << n; }
  const T& operator()(Mask I, Mask J) const { return table[I * size() + J]; }
  static Mask target(Mask I, Mask J) { return I ^ J; }
};

// kappa_odd * int dxi1 dxi2 xi1^I xi2^J exp(ic(xi.xi1 + xi1.xi2 + xi2.xi)), expanded in full.
template <class T> StructureConstants<T> lambda_bruteforce(int n, const OddParams<T>& p);
// Closed-form coefficient table.
template <class T> StructureConstants<T> lambda_closedform(int n, const OddParams<T>& p);
// Coefficient c_IJ of the closed form, without the kappa_odd factor.
template <class T> T closedform_coeff(int n, Mask I, Mask J, const T& c);

}  // namespace superdq
