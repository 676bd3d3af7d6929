#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "klr/suite.hpp"

using namespace klr;

TEST_CASE("pool results keep job order") {
  std::vector<std::function<int()>> jobs;
  for (int k = 0; k < 40; ++k)
    jobs.push_back([k] {
      std::this_thread::sleep_for(std::chrono::microseconds((40 - k) * 50));
      return k * k;
    });
  for (unsigned threads : {1u, 3u, 8u}) {
    const auto r = run_pool<int>(jobs, threads);
    REQUIRE(r.size() == 40);
    for (int k = 0; k < 40; ++k) CHECK(r[static_cast<std::size_t>(k)] == k * k);
  }
}

TEST_CASE("pool rethrows the first failure") {
  std::vector<std::function<int()>> jobs{[] { return 1; }, [] () -> int { throw std::runtime_error("boom"); }};
  CHECK_THROWS_WITH(run_pool<int>(jobs, 2), "boom");
}

TEST_CASE("empty pool") {
  CHECK(run_pool<int>({}, 4).empty());
}
