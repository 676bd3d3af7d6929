#pragma once

#include <cstddef>
#include <cstdint>

// Row kernels for elimination over F_p. Entries are kept in [0, p).
namespace klr::kernels {

enum class Backend { Scalar, Avx2 };

// y[j] = (y[j] + a * x[j]) mod p
void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p,
                     std::size_t n);
// y[j] = (a * y[j]) mod p
void scale_mod_scalar(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n);

// Only valid when avx2_compiled() and the CPU supports AVX2, and p < 2^15.
void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p,
                   std::size_t n);
void scale_mod_avx2(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n);

bool avx2_compiled();
bool avx2_supported();

// Chosen once per process: AVX2 when available unless KLR_FORCE_SCALAR is set.
Backend active_backend();
const char* backend_name(Backend b);

// Largest modulus the vector path accepts; bigger primes use the scalar path.
inline constexpr std::uint32_t kAvx2MaxModulus = 1u << 15;

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p,
              std::size_t n);
void scale_mod(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n);

}  // namespace klr::kernels
