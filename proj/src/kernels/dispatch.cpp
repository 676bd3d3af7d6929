#include <cstdlib>

#include "klr/kernels/modp.hpp"

namespace klr::kernels {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return avx2_compiled() && __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() {
  static const Backend chosen = [] {
    if (std::getenv("KLR_FORCE_SCALAR") != nullptr) return Backend::Scalar;
    return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
  }();
  return chosen;
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p,
              std::size_t n) {
  if (active_backend() == Backend::Avx2 && p < kAvx2MaxModulus)
    axpy_mod_avx2(y, x, a, p, n);
  else
    axpy_mod_scalar(y, x, a, p, n);
}

void scale_mod(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n) {
  if (active_backend() == Backend::Avx2 && p < kAvx2MaxModulus)
    scale_mod_avx2(y, a, p, n);
  else
    scale_mod_scalar(y, a, p, n);
}

}  // namespace klr::kernels
