#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klr/error.hpp"
#include "klr/gdim.hpp"

using namespace klr;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long, int>> terms) {
  LaurentPoly p;
  for (auto [d, c] : terms) p.add_term(d, c);
  return p;
}

// Gaussian binomial [l choose n] in t = q^2 by Pascal's rule.
LaurentPoly gaussian(int l, int n) {
  if (n < 0 || n > l) return {};
  if (n == 0 || n == l) return LaurentPoly::monomial(0);
  return gaussian(l - 1, n - 1) + LaurentPoly::monomial(2L * n) * gaussian(l - 1, n);
}

// NH_n^l is a matrix algebra of size [n]! over the cohomology of Gr(n, l).
LaurentPoly nilhecke_oracle(int n, int l) {
  LaurentPoly fact = LaurentPoly::monomial(0);
  for (int k = 1; k <= n; ++k) fact = fact * quantum_integer(k, 1);
  return fact * fact * gaussian(l, n);
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(0, 1).is_zero());
  CHECK(quantum_integer(1, 1) == LaurentPoly::monomial(0));
  CHECK(quantum_integer(3, 1) == poly({{-2, 1}, {0, 1}, {2, 1}}));
  CHECK(quantum_integer(2, 2) == poly({{-2, 1}, {2, 1}}));
  CHECK(quantum_integer(-2, 1) == -quantum_integer(2, 1));
}

TEST_CASE("orbit transporters") {
  CHECK(orbit_transporters({{0, 0, 1}}, {{0, 1, 0}}).size() == 2);
  CHECK(orbit_transporters({{0, 1}}, {{0, 0}}).empty());
  for (const auto& w : orbit_transporters({{0, 1, 1}}, {{1, 0, 1}}))
    CHECK(w.act({{0, 1, 1}}) == Sequence{{1, 0, 1}});
}

TEST_CASE("nilHecke graded dimensions") {
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l <= 5; ++l) {
      const auto p = graded_dim_algebra(rank_one(), {{Int(l)}}, {{Int(n)}});
      CHECK(p == nilhecke_oracle(n, l));
    }
  CHECK(graded_dim_algebra(rank_one(), {{3}}, {{2}}) == poly({{-2, 1}, {0, 3}, {2, 4}, {4, 3}, {6, 1}}));
}

TEST_CASE("transpose symmetry, nonnegativity, palindromic around d/2") {
  for (const auto& D : {finite_type('A', 2), finite_type('B', 2), affine_type_a(2), affine_type_a(3)})
    for (const auto& alpha : roots_up_to_height(D.rank(), 3)) {
      DominantWeight lambda = DominantWeight::zero(D.rank());
      lambda.coords[0] = 1;
      lambda.coords[1] = 1;
      const auto seqs = sequences_of_content(alpha);
      for (const auto& a : seqs)
        for (const auto& b : seqs) {
          const auto p = graded_dim_pair(D, lambda, a, b);
          CHECK(p == graded_dim_pair(D, lambda, b, a));
          for (const auto& [deg, c] : p.terms()) CHECK(c > 0);
        }
      // A symmetric algebra with a form of degree d has dim_j = dim_{d-j}.
      const auto total = graded_dim_algebra(D, lambda, alpha);
      const long d = defect_degree(D, lambda, alpha).get_si();
      for (const auto& [deg, c] : total.terms()) CHECK(total.coefficient(d - deg) == c);
    }
}

TEST_CASE("A_2 adjoint, alpha_1 + alpha_2 by hand") {
  // Diagonal pairs: [1] * [2] q = 1 + q^2. Cross pairs: [1][1] q = q.
  const auto D = finite_type('A', 2);
  const DominantWeight lambda{{1, 1}};
  const Sequence a{{0, 1}}, b{{1, 0}};
  CHECK(graded_dim_pair(D, lambda, a, a) == poly({{0, 1}, {2, 1}}));
  CHECK(graded_dim_pair(D, lambda, b, b) == poly({{0, 1}, {2, 1}}));
  CHECK(graded_dim_pair(D, lambda, a, b) == poly({{1, 1}}));
  CHECK(graded_dim_algebra(D, lambda, {{1, 1}}) == poly({{0, 2}, {1, 2}, {2, 2}}));
  CHECK(graded_dim_algebra(affine_type_a(3), {{4, 0, 0}}, {{1, 2, 0}}).is_zero());
}

TEST_CASE("permutation bound") {
  CHECK_THROWS_AS(graded_dim_algebra(rank_one(), {{9}}, {{9}}), UsageError);
}
