#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "klr/multiplicity.hpp"

using namespace klr;

namespace {

// Partition numbers by Euler's recurrence on parts.
Int partitions(int n) {
  std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
  return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("finite root systems") {
  const auto a2 = root_mults(finite_type('A', 2), 3);
  CHECK(a2.roots().size() == 3);
  CHECK(a2.mult({{1, 1}}) == 1);
  CHECK(a2.mult({{2, 1}}) == 0);
  // B_2, G_2: 4 and 6 positive roots.
  CHECK(root_mults(finite_type('B', 2), 6).roots().size() == 4);
  CHECK(root_mults(finite_type('G', 2), 6).roots().size() == 6);
  CHECK(root_mults(finite_type('G', 2), 6).mult({{1, 3}}) + root_mults(finite_type('G', 2), 6).mult({{3, 1}}) == 1);
  const auto r1 = root_mults(rank_one(), 4);
  CHECK(r1.roots().size() == 1);
  CHECK(r1.mult({{2}}) == 0);
}

TEST_CASE("affine imaginary roots") {
  const auto t = root_mults(affine_type_a(3), 6);
  CHECK(t.mult({{1, 1, 1}}) == 2);
  CHECK(t.mult({{2, 2, 2}}) == 2);
  CHECK(t.mult({{2, 1, 0}}) == 0);
  CHECK(t.mult({{2, 1, 1}}) == 1);
  const auto s = root_mults(affine_type_a(2), 6);
  for (int k = 1; k <= 3; ++k) CHECK(s.mult({{Int(k), Int(k)}}) == 1);
}

TEST_CASE("basic representation of affine sl_2") {
  // mult(Lambda_0 - n delta) = p(n).
  const auto D = affine_type_a(2);
  WeightMultiplicities w(D, {{1, 0}}, 10);
  for (int n = 0; n <= 5; ++n) CHECK(w.mult({{Int(n), Int(n)}}) == partitions(n));
}

TEST_CASE("Freudenthal examples") {
  CHECK(freudenthal_mult(finite_type('A', 2), {{1, 1}}, {{0, 0}}) == 1);
  CHECK(freudenthal_mult(finite_type('A', 2), {{1, 1}}, {{1, 1}}) == 2);
  CHECK(freudenthal_mult(affine_type_a(3), {{4, 0, 0}}, {{1, 2, 0}}) == 0);
  // Weyl dimension of the B_2 rep with highest weight Lambda_1 + Lambda_2 is 16.
  const auto D = finite_type('B', 2);
  WeightMultiplicities w(D, {{1, 1}}, 12);
  Int total = 0;
  for (const auto& alpha : roots_up_to_height(2, 12)) total += w.mult(alpha);
  CHECK(total == 16);
}

TEST_CASE("cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "klr_mult_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "cache.jsonl").string();
  std::remove(path.c_str());
  const auto D = finite_type('A', 2);
  {
    WeightMultiplicities w(D, {{1, 1}}, 4);
    CHECK(w.mult({{1, 1}}) == 2);
    w.save_cache(path);
  }
  WeightMultiplicities fresh(D, {{1, 1}}, 4);
  fresh.load_cache(path);
  CHECK(fresh.mult({{1, 1}}) == 2);
  CHECK(fresh.cache_key({{1, 1}}).find(D.fingerprint()) != std::string::npos);
  std::filesystem::remove_all(dir);
}
