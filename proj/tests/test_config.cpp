#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klr/config.hpp"
#include "klr/error.hpp"

using namespace klr;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config(text).datum();
  } catch (const UsageError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("explicit datum") {
  const auto c = parse_config(R"(
# affine sl_2
labels = 0 1
cartan_matrix = 2 -2; -2 2
symmetrizers = 1 1
Lambda = 0:1,1:1
alpha: 0:2,1:2
char = 3
)");
  const auto D = c.datum();
  CHECK(D == affine_type_a(2));
  CHECK(c.weight(D).coords == std::vector<Int>{1, 1});
  CHECK(c.root(D).coeffs == std::vector<Int>{2, 2});
  CHECK(c.characteristic == 3);
}

TEST_CASE("built-in family") {
  const auto c = parse_config("family = affine-a\nrank = 3\nLambda = 0:4\n");
  CHECK(c.datum() == affine_type_a(3));
  CHECK(c.root(c.datum()).is_zero());
}

TEST_CASE("errors carry context") {
  CHECK(error_of("Lambda = 0:1\n").find("missing cartan_matrix") != std::string::npos);
  CHECK(error_of("cartan_matrix = 2 -1 -1\n").find("square") != std::string::npos);
  CHECK(error_of("family = a\nrank = 2\ncartan_matrix = 2\n").find("not both") != std::string::npos);
  CHECK(error_of("cartan_matrix = 2 1; -1 2\n").find("a_ij <= 0") != std::string::npos);
  CHECK_THROWS_WITH_AS(parse_config("labels = 0\nbogus = 1\n"), doctest::Contains("line 2"), UsageError);
  CHECK_THROWS_WITH_AS(parse_config("just words\n"), doctest::Contains("line 1"), UsageError);
  CHECK_THROWS_AS(parse_config("char = 4\n"), UsageError);
  CHECK_THROWS_AS(parse_config("rank = two\n"), UsageError);
  CHECK_THROWS_AS(load_config("/nonexistent/klr.conf"), UsageError);
}

TEST_CASE("characteristic") {
  CHECK(parse_characteristic("0") == 0);
  CHECK(parse_characteristic("65521") == 65521);
  CHECK_THROWS_AS(parse_characteristic("1"), UsageError);
  CHECK_THROWS_AS(parse_characteristic("65537"), UsageError);
}

TEST_CASE("Q entries") {
  const auto c = parse_config("family = affine-a\nrank = 2\nQ.0.1 = 2,0,1; 1,1,3; 0,2,1\n");
  const auto D = c.datum();
  const auto q = c.qchoice(D);
  CHECK(q.poly(0, 1).size() == 3);
  CHECK(q.poly(1, 0).size() == 3);
  CHECK_NOTHROW(q.validate(D, 0));
  CHECK_THROWS_AS(parse_config("family = affine-a\nrank = 2\nQ.0.0 = 1,0,1\n").qchoice(D), UsageError);
  CHECK_THROWS_AS(parse_config("family = affine-a\nrank = 2\nQ.0.1 = 2,0\n").qchoice(D), UsageError);
}

TEST_CASE("integer lists") {
  CHECK(parse_int_list("[2, -1], [-1, 2]") == std::vector<Int>{2, -1, -1, 2});
  CHECK(parse_int_list("").empty());
}
