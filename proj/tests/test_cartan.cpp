#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klr/cartan.hpp"
#include "klr/error.hpp"

using namespace klr;

namespace {

std::vector<std::vector<Int>> matrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Int>> out;
  for (auto r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

std::string failure(std::vector<std::vector<Int>> a, std::vector<Int> d) {
  try {
    validate_datum(std::move(a), std::move(d));
  } catch (const UsageError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("validate reports the first failing axiom") {
  CHECK(failure(matrix({{2, -1}, {-1, 2}}), {1, 1}).empty());
  CHECK(failure(matrix({{3, -1}, {-1, 2}}), {1, 1}).find("a_ii = 2") != std::string::npos);
  CHECK(failure(matrix({{2, 1}, {-1, 2}}), {1, 1}).find("a_ij <= 0") != std::string::npos);
  CHECK(failure(matrix({{2, 0}, {-1, 2}}), {1, 1}).find("a_ij = 0 <=> a_ji = 0") != std::string::npos);
  CHECK(failure(matrix({{2, -2}, {-1, 2}}), {1, 1}).find("d_i a_ij = d_j a_ji") != std::string::npos);
  CHECK_NOTHROW(validate_datum(matrix({{2, -2}, {-1, 2}}), {1, 2}));
}

TEST_CASE("built-in data") {
  const auto b2 = finite_type('B', 2);
  CHECK(b2.a(0, 1) == -1);
  CHECK(b2.a(1, 0) == -2);
  CHECK(b2.d(0) * b2.a(0, 1) == b2.d(1) * b2.a(1, 0));
  const auto g2 = finite_type('G', 2);
  CHECK(g2.d(0) * g2.a(0, 1) == g2.d(1) * g2.a(1, 0));

  const auto sl2hat = affine_type_a(2);
  CHECK(sl2hat.a(0, 1) == -2);
  CHECK(sl2hat.labels() == std::vector<std::string>{"0", "1"});
  const auto sl3hat = affine_type_a(3);
  CHECK(sl3hat.a(0, 2) == -1);
  CHECK(builtin_datum("affine-a", 3) == sl3hat);
  CHECK(builtin_datum("rank1", 1) == rank_one());
  CHECK(builtin_datum("A", 2) == finite_type('A', 2));
  CHECK_THROWS_AS(builtin_datum("q", 2), UsageError);
}

TEST_CASE("pairings and the defect") {
  const auto D = affine_type_a(3);
  const DominantWeight lambda{{4, 0, 0}};
  const RootVector alpha{{1, 2, 0}};
  // <h_0, Lambda - alpha> = 4 - 2 + 2, <h_1, .> = 0 + 1 - 4.
  CHECK(pairing(D, 0, lambda, alpha) == 4);
  CHECK(pairing(D, 1, lambda, alpha) == -3);
  CHECK(bilinear(D, alpha, alpha) == 2 - 4 + 8);
  CHECK(defect_degree(D, lambda, alpha) == 2);

  // Defect by hand for rank one: 2 l n - 2 n^2.
  for (int ell = 0; ell <= 5; ++ell)
    for (int n = 0; n <= 5; ++n)
      CHECK(defect_degree(rank_one(), {{Int(ell)}}, {{Int(n)}}) == 2 * ell * n - 2 * n * n);
}

TEST_CASE("parsing labels") {
  const auto D = affine_type_a(3);
  CHECK(parse_weight(D, "0:4").coords == std::vector<Int>{4, 0, 0});
  CHECK(parse_root(D, "0:1,1:2").coeffs == std::vector<Int>{1, 2, 0});
  CHECK(parse_sequence(D, "1,0,2").entries == std::vector<int>{1, 0, 2});
  CHECK_THROWS_AS(parse_root(D, "3:1"), UsageError);
  CHECK_THROWS_AS(parse_weight(D, "0=1"), UsageError);
  CHECK(format_sequence(D, parse_sequence(D, "1,0")) == "(1,0)");
}

TEST_CASE("content enumeration counts") {
  // Multinomial coefficients.
  CHECK(sequences_of_content({{2, 1}}).size() == 3);
  CHECK(sequences_of_content({{2, 1, 1}}).size() == 12);
  CHECK(sequences_of_content({{0, 0}}).size() == 1);
  // Compositions of h into r parts: C(h + r - 1, r - 1), summed over h <= 3.
  CHECK(roots_up_to_height(2, 3).size() == 1 + 2 + 3 + 4);
  CHECK(roots_up_to_height(3, 2).size() == 1 + 3 + 6);
  const auto seqs = sequences_of_content({{1, 2}});
  CHECK(std::is_sorted(seqs.begin(), seqs.end()));
  for (const auto& nu : seqs) CHECK(content(finite_type('A', 2), nu) == RootVector{{1, 2}});
}
