#include "superdq/grassmann.hpp"

namespace superdq {

std::vector<int> subset_members(Mask m) {
  std::vector<int> out;
  for (Mask mm = m; mm; mm &= mm - 1) out.push_back(std::countr_zero(mm) + 1);
  return out;
}

Mask subset_mask(const std::vector<int>& members, int n) {
  Mask m = 0;
  int prev = 0;
  for (int i : members) {
    if (i <= prev || i > n) throw std::invalid_argument("index subset must be strictly increasing within 1..n");
    m |= Mask(1) << (i - 1);
    prev = i;
  }
  return m;
}

}  // namespace superdq
