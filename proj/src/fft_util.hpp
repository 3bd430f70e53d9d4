#pragma once
#include <fftw3.h>

#include <complex>
#include <mutex>

namespace superdq::detail {

// FFTW planning is not thread-safe; execution on separate arrays is.
inline std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

struct Plan {
  fftw_plan p = nullptr;
  Plan(int rank, const int* dims, int sign) {
    std::lock_guard<std::mutex> lk(plan_mutex());
    int tot = 1;
    for (int i = 0; i < rank; ++i) tot *= dims[i];
    auto* buf = fftw_alloc_complex(tot);
    p = fftw_plan_dft(rank, dims, buf, buf, sign, FFTW_ESTIMATE);
    fftw_free(buf);
  }
  ~Plan() {
    std::lock_guard<std::mutex> lk(plan_mutex());
    fftw_destroy_plan(p);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void run(std::complex<double>* data) const {
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data), reinterpret_cast<fftw_complex*>(data));
  }
};

// fftw_malloc'd scratch so every execution sees the planner's alignment
struct Buf {
  std::complex<double>* p;
  explicit Buf(std::size_t n) : p(reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(n))) {}
  ~Buf() { fftw_free(p); }
  Buf(const Buf&) = delete;
  Buf& operator=(const Buf&) = delete;
};

}  // namespace superdq::detail
