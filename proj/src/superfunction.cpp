#include "superdq/superfunction.hpp"

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>

namespace superdq {

cplx supertrace_fn(const GridSuperFunction& f) { return f[full_mask(f.n)].integral(); }

cplx twisted_trace(const GridSuperFunction& f) { return f[0].integral(); }

GridSuperFunction grid_super_star(const GridSuperFunction& f, const GridSuperFunction& g,
                                  const StructureConstants<cplx>& L, double theta, MoyalMode mode) {
  return super_star(f, g, L, [&](const Grid2& a, const Grid2& b) { return moyal_grid(a, b, theta, mode); });
}

GridSuperFunction grid_super_mul(const GridSuperFunction& f, const GridSuperFunction& g) {
  return super_mul(f, g, [](const Grid2& a, const Grid2& b) { return pointwise(a, b); });
}

namespace {

static_assert(std::endian::native == std::endian::little, "binary layout assumes a little-endian host");

template <class T> void put(std::ostream& os, T v) { os.write(reinterpret_cast<const char*>(&v), sizeof v); }
template <class T> T get(std::istream& is) {
  T v;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) throw std::runtime_error("truncated grid file");
  return v;
}

}  // namespace

void write_grid_binary(std::ostream& os, const GridSuperFunction& f) {
  const Grid2& g0 = f[0];
  put<std::int64_t>(os, 2);
  put<std::int64_t>(os, f.n);
  put<std::int64_t>(os, g0.N);
  put<double>(os, g0.N * g0.h0 / 2);
  put<double>(os, g0.N * g0.h1 / 2);
  put<double>(os, g0.h0);
  put<double>(os, g0.h1);
  put<double>(os, g0.o0);
  put<double>(os, g0.o1);
  for (auto& c : f.comp)
    for (auto& z : c.v) {
      put<double>(os, z.real());
      put<double>(os, z.imag());
    }
}

GridSuperFunction read_grid_binary(std::istream& is) {
  auto m = get<std::int64_t>(is);
  if (m != 2) throw std::runtime_error("only two even dimensions are supported");
  int n = int(get<std::int64_t>(is));
  int N = int(get<std::int64_t>(is));
  get<double>(is);
  get<double>(is);
  Grid2 z;
  z.N = N;
  z.h0 = get<double>(is);
  z.h1 = get<double>(is);
  z.o0 = get<double>(is);
  z.o1 = get<double>(is);
  z.v.assign(std::size_t(N) * N, 0.0);
  GridSuperFunction f(n, z);
  for (auto& c : f.comp)
    for (auto& s : c.v) {
      double re = get<double>(is);
      double im = get<double>(is);
      s = {re, im};
    }
  return f;
}

}  // namespace superdq
