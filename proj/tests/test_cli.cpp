#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "klr/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;

  std::vector<json> lines() const {
    std::vector<json> v;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) v.push_back(json::parse(line));
    return v;
  }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = klr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pd nonzero on the affine example") {
  const auto r = run({"pd", "nonzero", "--family", "affine-a", "--rank", "3", "--Lambda", "0:4", "--alpha", "0:1,1:2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"nonzero\":false}\n");
}

TEST_CASE("usage errors exit 2") {
  const auto missing = run({"pd", "nonzero", "--Lambda", "0:4"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("missing cartan_matrix") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"pd", "frobnicate", "--family", "rank1"}).code == 2);
  CHECK(run({"pd", "check", "--family", "rank1"}).code == 2);
  CHECK(run({"engine", "build", "--family", "rank1", "--char", "4"}).code == 2);
  CHECK(run({"pd", "nonzero", "--config", "/nonexistent.conf"}).code == 2);
  CHECK(run({"engine", "class", "--family", "rank1", "--Lambda", "0:3", "--alpha", "0:2", "--element", "x9"}).code == 2);
}

TEST_CASE("config file and echo") {
  const auto path = (std::filesystem::temp_directory_path() / "klr_cli_test.conf").string();
  std::ofstream(path) << "cartan_matrix = 2 -1; -1 2\nLambda = 1:1,2:1\nalpha = 1:1,2:1\n";
  const auto r = run({"pd", "enumerate", "--config", path, "--echo-datum"});
  CHECK(r.code == 0);
  const auto lines = r.lines();
  REQUIRE(lines.size() == 3);
  CHECK(lines[0]["datum"]["labels"] == json({"1", "2"}));
  CHECK(lines[1]["sequence"] == json({"1", "2"}));
  CHECK(lines[2]["sequence"] == json({"2", "1"}));
  // Flags override the file.
  const auto z = run({"pd", "nonzero", "--config", path, "--alpha", "1:3"});
  CHECK(z.lines()[0]["nonzero"] == false);
  std::filesystem::remove(path);
}

TEST_CASE("engine subcommands") {
  const std::vector<std::string> nh = {"--family", "rank1", "--Lambda", "0:3", "--alpha", "0:2"};
  auto with = [&](std::vector<std::string> head) {
    head.insert(head.end(), nh.begin(), nh.end());
    return run(head);
  };
  const auto build = with({"engine", "build"});
  CHECK(build.code == 0);
  CHECK(build.lines().back()["gdim"].size() == 5);

  const auto cc = with({"engine", "cocenter"});
  CHECK(cc.code == 0);
  CHECK(cc.lines().back()["support"] == json({0, 2, 4}));

  const auto one = with({"engine", "class", "--element", "1"});
  const auto two = with({"engine", "class", "--element", "2*x1*t1"});
  CHECK(one.lines()[0]["class"] == json({"1"}));
  CHECK(two.lines()[0]["class"] == json({"-1"}));
  CHECK(with({"engine", "class", "--element", "1", "--char", "2"}).lines()[0]["zero"] == true);

  CHECK(with({"engine", "verify", "--mode", "principle1"}).code == 0);
  CHECK(with({"engine", "verify", "--mode", "relations"}).code == 0);
  // A failure outside the hypothesis is a finding, not a mismatch.
  const auto p3 = with({"engine", "verify", "--mode", "principle3", "--char", "2"});
  CHECK(p3.code == 0);
  CHECK(p3.lines()[0]["passed"] == false);
}

TEST_CASE("crystal and mult subcommands") {
  const std::vector<std::string> a2 = {"--family", "a", "--rank", "2", "--Lambda", "1:1,2:1"};
  auto with = [&](std::vector<std::string> head) {
    head.insert(head.end(), a2.begin(), a2.end());
    return run(head);
  };
  CHECK(with({"crystal", "generate", "--max-height", "6"}).lines().size() == 8);
  CHECK(with({"crystal", "mult", "--alpha", "1:1,2:1"}).lines()[0]["mult"] == 2);
  const auto ex = with({"crystal", "extract", "--seq", "1,2,2,1"});
  CHECK(ex.lines()[0]["round_trip"] == true);
  CHECK(with({"crystal", "extract", "--seq", "1,1"}).code == 2);
  CHECK(with({"crystal", "classes", "--alpha", "1:2,2:2"}).lines()[0]["classes"].size() == 1);
  CHECK(with({"mult", "roots", "--max-height", "3"}).lines().size() == 3);

  const auto dir = (std::filesystem::temp_directory_path() / "klr_cli_cache").string();
  std::filesystem::remove_all(dir);
  const auto w = with({"mult", "weight", "--alpha", "1:1,2:1", "--cache-dir", dir});
  CHECK(w.lines()[0]["mult"] == 2);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "freudenthal.jsonl"));
  CHECK(with({"mult", "weight", "--alpha", "1:1,2:1", "--cache-dir", dir}).out == w.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("identical inputs give identical output") {
  const std::vector<std::string> args = {"gdim", "algebra", "--family", "affine-a", "--rank", "3", "--Lambda", "0:1,1:1",
                                         "--alpha", "0:1,1:1,2:1"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"gdim", "pair", "--family", "rank1", "--Lambda", "0:3", "--seq", "0,0", "--seq2", "0,0"}).lines()[0]["gdim"].size() == 5);
}
