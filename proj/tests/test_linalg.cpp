#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "klr/linalg.hpp"

using namespace klr;

namespace {

std::vector<Rational> rat(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rational echelon keeps pivots cleared") {
  RationalEchelon e(4);
  CHECK(e.insert(rat({2, 4, 0, 6})));
  CHECK(e.insert(rat({1, 3, 1, 0})));
  CHECK_FALSE(e.insert(rat({3, 7, 1, 6})));  // sum of the two
  CHECK(e.rank() == 2);
  for (std::size_t r = 0; r < e.rank(); ++r)
    for (std::size_t s = 0; s < e.rank(); ++s) {
      const auto row = e.row(r);
      std::size_t pivot = 0;
      while (e.row(s)[pivot] == 0) ++pivot;
      if (r != s) CHECK(row[pivot] == 0);
    }
  CHECK(all_zero(e.reduce(rat({4, 10, 2, 6}))));
  const auto rem = e.reduce(rat({0, 0, 0, 1}));
  CHECK_FALSE(all_zero(rem));
  for (std::size_t c = 0; c < 4; ++c)
    if (e.is_pivot(c)) CHECK(rem[c] == 0);
  CHECK(e.free_cols().size() == 2);
}

TEST_CASE("sparse and dense insertion give the same row space") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3), coin(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    RationalEchelon dense(9), sparse(9);
    for (int r = 0; r < 8; ++r) {
      std::vector<Rational> row(9);
      std::vector<std::pair<std::size_t, Rational>> pairs;
      for (std::size_t c = 0; c < 9; ++c)
        if (coin(rng) == 0) {
          row[c] = Rational(entry(rng), 1 + coin(rng));
          row[c].canonicalize();
          if (row[c] != 0) pairs.emplace_back(c, row[c]);
        }
      CHECK(dense.insert(row) == sparse.insert_sparse(pairs));
    }
    REQUIRE(dense.rank() == sparse.rank());
    for (std::size_t r = 0; r < dense.rank(); ++r) CHECK(all_zero(sparse.reduce(dense.row(r))));
  }
}

TEST_CASE("mod p rank equals rational rank for small 0/1 matrices") {
  // Minors of a 6x6 0/1 matrix are at most 6^3 = 216 < 32749 (Hadamard), so
  // reduction mod 32749 cannot drop the rank.
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    RationalEchelon q(6);
    ModpEchelon m(6, 32749);
    for (int r = 0; r < 6; ++r) {
      std::vector<Rational> a(6);
      std::vector<std::uint32_t> b(6);
      for (int c = 0; c < 6; ++c) a[c] = b[c] = static_cast<std::uint32_t>(bit(rng));
      q.insert(a);
      m.insert(b);
    }
    CHECK(q.rank() == m.rank());
  }
}

TEST_CASE("mod p echelon") {
  ModpEchelon e(3, 2);
  CHECK(e.insert({1, 1, 0}));
  CHECK(e.insert({0, 1, 1}));
  CHECK_FALSE(e.insert({1, 0, 1}));  // dependent over F_2 only
  RationalEchelon q(3);
  q.insert(rat({1, 1, 0}));
  q.insert(rat({0, 1, 1}));
  CHECK(q.insert(rat({1, 0, 1})));
  CHECK(e.insert_sparse({{2, 1}}));
  CHECK(e.rank() == 3);
}

TEST_CASE("prime field conversions") {
  const PrimeField f(3);
  CHECK(f.from_rational(Rational(1, 2)) == 2);
  CHECK(f.from_rational(Rational(-1)) == 2);
  CHECK_THROWS_AS(f.from_rational(Rational(1, 3)), std::domain_error);
  CHECK_THROWS(PrimeField(4));
  CHECK(is_prime(32749));
  CHECK_FALSE(is_prime(32751));
}
