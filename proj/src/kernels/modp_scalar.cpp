#include "klr/kernels/modp.hpp"

namespace klr::kernels {

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p,
                     std::size_t n) {
  const std::uint64_t aa = a, pp = p;
  for (std::size_t j = 0; j < n; ++j)
    y[j] = static_cast<std::uint32_t>((y[j] + aa * x[j]) % pp);
}

void scale_mod_scalar(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n) {
  const std::uint64_t aa = a, pp = p;
  for (std::size_t j = 0; j < n; ++j) y[j] = static_cast<std::uint32_t>((aa * y[j]) % pp);
}

}  // namespace klr::kernels
