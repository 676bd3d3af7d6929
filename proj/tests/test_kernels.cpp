#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "klr/kernels/modp.hpp"

using namespace klr::kernels;

namespace {

std::vector<std::uint32_t> random_row(std::mt19937& rng, std::size_t n, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

const std::uint32_t kPrimes[] = {2, 3, 5, 7, 251, 4093, 32749};

}  // namespace

TEST_CASE("scalar kernels match the plain formula") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 32749u, 65521u}) {
    auto y = random_row(rng, 37, p);
    const auto x = random_row(rng, 37, p);
    const std::uint32_t a = p - 1;
    auto expect = y;
    for (std::size_t j = 0; j < y.size(); ++j) expect[j] = static_cast<std::uint32_t>((std::uint64_t{y[j]} + std::uint64_t{a} * x[j]) % p);
    axpy_mod_scalar(y.data(), x.data(), a, p, y.size());
    CHECK(y == expect);
    for (auto& e : expect) e = static_cast<std::uint32_t>(std::uint64_t{e} * 2 % p);
    scale_mod_scalar(y.data(), 2 % p, p, y.size());
    CHECK(y == expect);
  }
}

TEST_CASE("AVX2 kernels equal the scalar reference") {
  if (!avx2_compiled() || !avx2_supported()) {
    MESSAGE("AVX2 unavailable, skipping vector comparison");
    return;
  }
  std::mt19937 rng(11);
  for (std::uint32_t p : kPrimes)
    for (std::size_t n = 0; n <= 70; ++n)
      for (int rep = 0; rep < 3; ++rep) {
        const auto x = random_row(rng, n, p);
        const auto y0 = random_row(rng, n, p);
        const std::uint32_t a = random_row(rng, 1, p)[0];
        auto ys = y0, yv = y0;
        axpy_mod_scalar(ys.data(), x.data(), a, p, n);
        axpy_mod_avx2(yv.data(), x.data(), a, p, n);
        CHECK(ys == yv);
        scale_mod_scalar(ys.data(), a, p, n);
        scale_mod_avx2(yv.data(), a, p, n);
        CHECK(ys == yv);
      }
}

TEST_CASE("dispatch agrees with scalar, including primes above the vector bound") {
  std::mt19937 rng(3);
  INFO("backend " << backend_name(active_backend()));
  for (std::uint32_t p : {3u, 32749u, 65521u}) {
    const auto x = random_row(rng, 45, p);
    const auto y0 = random_row(rng, 45, p);
    auto ys = y0, yd = y0;
    axpy_mod_scalar(ys.data(), x.data(), 5 % p, p, 45);
    axpy_mod(yd.data(), x.data(), 5 % p, p, 45);
    CHECK(ys == yd);
  }
}
