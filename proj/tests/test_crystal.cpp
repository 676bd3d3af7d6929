#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klr/crystal.hpp"
#include "klr/multiplicity.hpp"
#include "klr/pdseq.hpp"

using namespace klr;

TEST_CASE("highest weight vertex") {
  const PathCrystal c(finite_type('A', 2), {{1, 1}});
  const auto v = c.highest();
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(c.eps(i, v) == 0);
    CHECK(c.phi(i, v) == 1);
    CHECK_FALSE(c.root_e(i, v).has_value());
  }
  CHECK(c.generate(0) == std::vector<CrystalVertex>{v});
  const PathCrystal r(rank_one(), {{3}});
  CHECK(r.phi(0, r.highest()) == 3);
  CHECK_FALSE(PathCrystal(rank_one(), {{0}}).root_f(0, PathCrystal(rank_one(), {{0}}).highest()).has_value());
}

TEST_CASE("A_2 adjoint crystal") {
  const PathCrystal c(finite_type('A', 2), {{1, 1}});
  const auto all = c.generate(6);
  CHECK(all.size() == 8);
  CHECK(c.generate(4).size() == 8);
  CHECK(weight_multiplicity(c, all, {{1, 1}}) == 2);
  const auto f1 = c.root_f(0, c.highest());
  REQUIRE(f1.has_value());
  CHECK(c.root_f(1, *f1).has_value());
  CHECK(c.depth(c.pd_path({{0, 1}})) == RootVector{{1, 1}});
}

TEST_CASE("root operators are partial inverses and respect wt") {
  for (const auto& [D, lambda] : {std::pair{finite_type('B', 2), DominantWeight{{1, 1}}},
                                  std::pair{finite_type('G', 2), DominantWeight{{1, 0}}},
                                  std::pair{affine_type_a(3), DominantWeight{{2, 0, 1}}}}) {
    const PathCrystal c(D, lambda);
    for (const auto& b : c.generate(5))
      for (std::size_t i = 0; i < D.rank(); ++i) {
        CHECK(Int(c.phi(i, b) - c.eps(i, b)) == c.wt_pairing(i, b));
        if (auto f = c.root_f(i, b)) {
          CHECK(c.root_e(i, *f) == b);
          CHECK(c.depth(*f) == c.depth(b) + RootVector::simple(D.rank(), i));
        }
        if (auto e = c.root_e(i, b)) CHECK(c.root_f(i, *e) == b);
      }
  }
}

TEST_CASE("extract_pd round trip") {
  const PathCrystal c(finite_type('A', 2), {{1, 1}});
  for (const auto& b : c.generate(6))
    for (auto tie : {TieBreak::Smallest, TieBreak::Largest}) {
      const auto nu = c.extract_pd(b, tie);
      CHECK(is_piecewise_dominant(c.datum(), c.lambda(), nu));
      CHECK(c.pd_path(nu) == b);
    }
  CHECK(c.extract_pd(c.highest()).empty());

  const PathCrystal r(rank_one(), {{3}});
  const auto b = *r.root_f(0, *r.root_f(0, r.highest()));
  CHECK(r.extract_pd(b) == Sequence{{0, 0}});
}

TEST_CASE("the tie-break changes the representative") {
  const PathCrystal c(finite_type('A', 2), {{1, 1}});
  const auto lowest = c.pd_path({{0, 1, 1, 0}});
  CHECK(c.extract_pd(lowest, TieBreak::Smallest) != c.extract_pd(lowest, TieBreak::Largest));
}

TEST_CASE("weight multiplicities agree with Freudenthal") {
  for (const auto& [D, lambda] : {std::pair{finite_type('A', 2), DominantWeight{{2, 1}}},
                                  std::pair{finite_type('B', 2), DominantWeight{{0, 2}}},
                                  std::pair{affine_type_a(2), DominantWeight{{1, 0}}}}) {
    const PathCrystal c(D, lambda);
    const auto all = c.generate(5);
    for (const auto& alpha : roots_up_to_height(D.rank(), 5))
      CHECK(weight_multiplicity(c, all, alpha) == freudenthal_mult(D, lambda, alpha));
  }
  CHECK(weight_multiplicity(affine_type_a(3), {{4, 0, 0}}, {{1, 2, 0}}) == 0);
}

TEST_CASE("PD classes") {
  const auto D = finite_type('A', 2);
  const auto top = pd_classes(D, {{1, 1}}, {{2, 2}});
  CHECK(top.classes.size() == 1);
  CHECK(top.classes[0].size() == 2);
  CHECK(top.weight_mult == 1);
  const auto zero = pd_classes(D, {{1, 1}}, {{0, 0}});
  REQUIRE(zero.classes.size() == 1);
  CHECK(zero.classes[0] == std::vector<Sequence>{Sequence{}});
  CHECK(pd_classes(D, {{1, 1}}, {{3, 0}}).classes.empty());
}
