#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klr/engine/verify.hpp"
#include "klr/error.hpp"
#include "klr/gdim.hpp"

using namespace klr;
using namespace klr::engine;

namespace {

std::shared_ptr<KlrAlgebra> algebra(const CartanDatum& D, RootVector beta) {
  return std::make_shared<KlrAlgebra>(D, QChoice::standard(D), std::move(beta));
}

QChoice skewed_sl2() {
  const auto D = affine_type_a(2);
  QChoice q = QChoice::standard(D);
  q.set(0, 1, {{2, 0, 1}, {1, 1, 3}, {0, 2, 1}});
  return q;
}

}  // namespace

TEST_CASE("nilHecke relations on two strands") {
  auto A = algebra(rank_one(), {{2}});
  const Element e = A->idempotent(0);
  const Element t = A->tau(0, 0);
  CHECK(A->multiply(t, t).is_zero());
  const Element lhs = A->evaluate({Letter::tau(0), Letter::x(0)}, 0);
  CHECK(lhs == A->evaluate({Letter::x(1), Letter::tau(0)}, 0) - e);
  CHECK(A->evaluate({Letter::tau(0), Letter::x(1)}, 0) == A->evaluate({Letter::x(0), Letter::tau(0)}, 0) + e);
  CHECK(A->degree(A->mono(A->identity_perm(), 0)) == 0);
}

TEST_CASE("defining relations hold") {
  for (const auto& [D, beta] : {std::pair{rank_one(), RootVector{{3}}}, std::pair{finite_type('A', 2), RootVector{{2, 1}}},
                                std::pair{finite_type('B', 2), RootVector{{1, 2}}}, std::pair{finite_type('G', 2), RootVector{{2, 1}}},
                                std::pair{affine_type_a(2), RootVector{{2, 2}}}, std::pair{affine_type_a(3), RootVector{{1, 1, 1}}}}) {
    KlrAlgebra A(D, QChoice::standard(D), beta);
    const auto t = check_defining_relations(A);
    CHECK(t.checked > 0);
    CHECK_MESSAGE(t.passed(), t.to_json().dump());
  }
}

TEST_CASE("defining relations with a non-default Q") {
  const auto D = affine_type_a(2);
  const auto q = skewed_sl2();
  CHECK_NOTHROW(q.validate(D, 0));
  KlrAlgebra A(D, q, {{2, 1}});
  CHECK(check_defining_relations(A).passed());
  CHECK(check_associativity(A, 300, 2).passed());
}

TEST_CASE("Q validation") {
  const auto D = affine_type_a(2);
  QChoice q = QChoice::standard(D);
  q.set(0, 1, {{1, 0, 1}});
  CHECK_THROWS_AS(q.validate(D, 0), UsageError);
  q.set(0, 1, {{2, 0, 2}, {0, 2, 1}});
  CHECK_NOTHROW(q.validate(D, 0));
  CHECK_THROWS_AS(q.validate(D, 2), UsageError);
}

TEST_CASE("associativity on random triples") {
  for (const auto& [D, beta] : {std::pair{rank_one(), RootVector{{3}}}, std::pair{finite_type('B', 2), RootVector{{1, 2}}},
                                std::pair{affine_type_a(3), RootVector{{1, 1, 1}}}}) {
    KlrAlgebra A(D, QChoice::standard(D), beta);
    const auto t = check_associativity(A, 300, 17);
    CHECK(t.checked == 300);
    CHECK(t.passed());
  }
}

TEST_CASE("quotient dimensions match the formula over several fields") {
  const auto D = finite_type('A', 2);
  for (const auto& beta : {RootVector{{1, 1}}, RootVector{{2, 1}}}) {
    auto A = algebra(D, beta);
    const auto oracle = graded_dim_algebra(D, {{1, 1}}, beta);
    CHECK(cyclotomic_quotient(A, {{1, 1}}, RationalField{}).graded_dim() == oracle);
    CHECK(cyclotomic_quotient(A, {{1, 1}}, PrimeField(2)).graded_dim() == oracle);
    CHECK(cyclotomic_quotient(A, {{1, 1}}, PrimeField(5)).graded_dim() == oracle);
  }
  auto A = std::make_shared<KlrAlgebra>(affine_type_a(2), skewed_sl2(), RootVector{{2, 1}});
  CHECK(cyclotomic_quotient(A, {{2, 1}}, RationalField{}).graded_dim() ==
        graded_dim_algebra(affine_type_a(2), {{2, 1}}, {{2, 1}}));
}

TEST_CASE("a wrong oracle is reported") {
  auto A = algebra(rank_one(), {{2}});
  auto wrong = graded_dim_algebra(rank_one(), {{2}}, {{2}});
  wrong.add_term(0, 1);
  CHECK_THROWS_AS(GradedQuotient<RationalField>(A, {{2}}, RationalField{}, wrong), OracleMismatch);
}

TEST_CASE("the cyclotomic relation") {
  auto A = algebra(rank_one(), {{2}});
  const auto q = cyclotomic_quotient(A, {{3}}, RationalField{});
  CHECK(q.is_zero(A->evaluate({Letter::x(0), Letter::x(0), Letter::x(0)}, 0)));
  CHECK_FALSE(q.is_zero(A->evaluate({Letter::x(0), Letter::x(0)}, 0)));
  // x_1^2 x_2 sits in the top degree 6.
  CHECK_FALSE(q.is_zero(A->evaluate({Letter::x(0), Letter::x(0), Letter::x(1)}, 0)));
  CHECK(q.graded_dim().at_one() == 12);
  CHECK(q.coords(A->one(), 7).empty());
}
