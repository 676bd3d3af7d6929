#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "klr/cartan.hpp"

namespace klr {

// A permutation of {0..n-1} in one-line notation. Letters of reduced words
// are 0-based: letter i is the transposition of positions i and i+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation simple(int n, int i);
  // Product of the letters, leftmost first.
  static Permutation from_word(int n, const std::vector<int>& word);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // (u * v)(j) = u(v(j)).
  friend Permutation operator*(const Permutation& u, const Permutation& v);

  int length() const;
  // Lexicographically smallest reduced word.
  std::vector<int> canonical_word() const;
  // (w nu)_k = nu_{w^{-1}(k)}.
  Sequence act(const Sequence& nu) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

// One step of a braid path between reduced words. A commutation swaps the
// letters at pos, pos+1; a braid replaces (a,b,a) at pos..pos+2 by (b,a,b).
struct BraidMove {
  enum class Kind { Commute, Braid };
  Kind kind;
  int pos;
};

// A sequence of moves carrying reduced word `from` to reduced word `to` of the
// same permutation (Matsumoto's theorem, built recursively on first letters).
std::vector<BraidMove> transport_moves(int n, const std::vector<int>& from,
                                       const std::vector<int>& to);
void apply_move(std::vector<int>& word, const BraidMove& move);

}  // namespace klr
