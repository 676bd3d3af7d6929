#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klr/engine/cocenter.hpp"
#include "klr/error.hpp"

using namespace klr;
using namespace klr::engine;

namespace {

std::shared_ptr<KlrAlgebra> nilhecke(int n) {
  return std::make_shared<KlrAlgebra>(rank_one(), QChoice::standard(rank_one()), RootVector{{Int(n)}});
}

}  // namespace

TEST_CASE("NH_2^3 over the rationals") {
  auto A = nilhecke(2);
  const auto q = cyclotomic_quotient(A, {{3}}, RationalField{});
  const Cocenter<RationalField> c(q);
  CHECK(c.defect() == 4);
  CHECK(c.tr_support() == std::vector<int>{0, 2, 4});
  for (int d : {0, 2, 4}) CHECK(c.dim_tr(d) == 1);
  CHECK(c.duality_holds());

  const auto one = c.class_of(A->one());
  const auto two_x1_tau1 = c.class_of(Rational(2) * A->evaluate({Letter::x(0), Letter::tau(0)}, 0));
  REQUIRE(one.size() == 1);
  CHECK(one[0] != 0);
  // Under tau x_1 = x_2 tau - e the two classes are negatives of each other.
  CHECK(two_x1_tau1[0] == -one[0]);
  CHECK(c.in_commutator(A->evaluate({Letter::x(0), Letter::tau(0)}, 0) - A->evaluate({Letter::tau(0), Letter::x(0)}, 0)));
}

TEST_CASE("NH_2^3 over F_2 loses the class of 1") {
  auto A = nilhecke(2);
  const auto q = cyclotomic_quotient(A, {{3}}, PrimeField(2));
  const Cocenter<PrimeField> c(q);
  CHECK(c.in_commutator(A->one()));
  CHECK(c.duality_holds());
}

TEST_CASE("class_of rejects inhomogeneous input") {
  auto A = nilhecke(2);
  const auto q = cyclotomic_quotient(A, {{3}}, RationalField{});
  const Cocenter<RationalField> c(q);
  CHECK_THROWS_AS(c.class_of(A->one() + A->evaluate({Letter::x(0)}, 0)), UsageError);
  CHECK(c.in_commutator(A->evaluate({Letter::x(0), Letter::x(0), Letter::x(0), Letter::x(0)}, 0)));
}

TEST_CASE("center and cocenter dimensions are dual") {
  for (int ell = 1; ell <= 4; ++ell) {
    auto A = nilhecke(1);
    const auto q = cyclotomic_quotient(A, {{Int(ell)}}, RationalField{});
    const Cocenter<RationalField> c(q);
    // NH_1^l = K[x]/(x^l): commutative, so Tr = Z = A in every degree.
    for (int d = 0; d <= 2 * (ell - 1); d += 2) {
      CHECK(c.dim_tr(d) == 1);
      CHECK(c.dim_z(d) == 1);
    }
    CHECK(c.duality_holds());
  }
}

TEST_CASE("matrix algebra NH_2^2 has a one dimensional cocenter") {
  // NH_2^2 is Mat_2(K) up to grading.
  auto A = nilhecke(2);
  const auto q = cyclotomic_quotient(A, {{2}}, RationalField{});
  const Cocenter<RationalField> c(q);
  CHECK(q.graded_dim().at_one() == 4);
  CHECK(c.tr_support() == std::vector<int>{0});
  CHECK(c.dim_tr(0) == 1);
  CHECK(c.dim_z(0) == 1);
}
