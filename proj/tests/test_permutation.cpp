#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "klr/permutation.hpp"

using namespace klr;

namespace {

// All reduced words by brute force: words of length l(w) that multiply to w.
std::vector<std::vector<int>> reduced_words(const Permutation& w) {
  const int n = w.size();
  std::vector<std::vector<int>> out, frontier{{}};
  for (int len = 0; len < w.length(); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& word : frontier)
      for (int s = 0; s + 1 < n; ++s) {
        auto longer = word;
        longer.push_back(s);
        if (Permutation::from_word(n, longer).length() == len + 1) next.push_back(longer);
      }
    frontier = std::move(next);
  }
  for (const auto& word : frontier)
    if (Permutation::from_word(n, word) == w) out.push_back(word);
  return out;
}

}  // namespace

TEST_CASE("canonical word is the smallest reduced word") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto words = reduced_words(w);
      REQUIRE_FALSE(words.empty());
      CHECK(w.canonical_word() == *std::min_element(words.begin(), words.end()));
      CHECK(Permutation::from_word(n, w.canonical_word()) == w);
    }
}

TEST_CASE("braid transport connects all reduced words") {
  const auto w0 = all_permutations(4).back();
  CHECK(w0.length() == 6);
  const auto words = reduced_words(w0);
  CHECK(words.size() == 16);
  for (const auto& from : words) {
    auto word = from;
    for (const auto& m : transport_moves(4, from, w0.canonical_word())) apply_move(word, m);
    CHECK(word == w0.canonical_word());
  }
}

TEST_CASE("action on sequences") {
  const auto s = Permutation::simple(3, 0);
  CHECK(s.act({{0, 1, 2}}) == Sequence{{1, 0, 2}});
  const auto w = Permutation({1, 2, 0});
  CHECK((w * w.inverse()) == Permutation::identity(3));
  CHECK(w.act(w.inverse().act({{0, 1, 2}})) == Sequence{{0, 1, 2}});
}
