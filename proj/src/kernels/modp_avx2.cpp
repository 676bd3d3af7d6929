#include "klr/kernels/modp.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace klr::kernels {

#if defined(__AVX2__)

namespace {

// Barrett reduction of eight 32-bit lanes with m = floor(2^32 / p); the
// estimate is off by at most one multiple of p, fixed by a min trick.
inline __m256i reduce(__m256i v, __m256i m, __m256i p) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(v, m), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), m);
  __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

}  // namespace

void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p,
                   std::size_t n) {
  const auto m32 = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m32));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j));
    __m256i v = _mm256_add_epi32(vy, _mm256_mullo_epi32(va, vx));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + j), reduce(v, vm, vp));
  }
  axpy_mod_scalar(y + j, x + j, a, p, n - j);
}

void scale_mod_avx2(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n) {
  const auto m32 = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m32));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + j), reduce(_mm256_mullo_epi32(va, vy), vm, vp));
  }
  scale_mod_scalar(y + j, a, p, n - j);
}

bool avx2_compiled() { return true; }

#else

void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p,
                   std::size_t n) {
  axpy_mod_scalar(y, x, a, p, n);
}

void scale_mod_avx2(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n) {
  scale_mod_scalar(y, a, p, n);
}

bool avx2_compiled() { return false; }

#endif

}  // namespace klr::kernels
