#include "klr/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace klr {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::simple(int n, int i) {
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(i + 1)]);
  return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  auto p = identity(n);
  for (int s : word) p = p * simple(n, s);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) inv[static_cast<std::size_t>(images_[j])] = static_cast<int>(j);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  std::vector<int> im(v.images_.size());
  for (std::size_t j = 0; j < im.size(); ++j) im[j] = u(v(static_cast<int>(j)));
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++inv;
  return inv;
}

std::vector<int> Permutation::canonical_word() const {
  // The first letter of a reduced word is a left descent; the smallest one
  // gives the lexicographically smallest word.
  std::vector<int> word;
  Permutation w = *this;
  const int n = size();
  while (true) {
    auto inv = w.inverse();
    int letter = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (inv(i) > inv(i + 1)) {
        letter = i;
        break;
      }
    if (letter < 0) break;
    word.push_back(letter);
    w = simple(n, letter) * w;
  }
  return word;
}

Sequence Permutation::act(const Sequence& nu) const {
  Sequence out;
  out.entries.resize(nu.size());
  for (std::size_t j = 0; j < nu.size(); ++j) out.entries[static_cast<std::size_t>(images_[j])] = nu.entries[j];
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

void apply_move(std::vector<int>& word, const BraidMove& move) {
  auto p = static_cast<std::size_t>(move.pos);
  if (move.kind == BraidMove::Kind::Commute) {
    std::swap(word[p], word[p + 1]);
  } else {
    int a = word[p], b = word[p + 1];
    word[p] = b;
    word[p + 1] = a;
    word[p + 2] = b;
  }
}

std::vector<BraidMove> transport_moves(int n, const std::vector<int>& from,
                                       const std::vector<int>& to) {
  std::vector<BraidMove> moves;
  if (from.empty()) return moves;
  if (from.front() == to.front()) {
    std::vector<int> a(from.begin() + 1, from.end()), b(to.begin() + 1, to.end());
    for (auto m : transport_moves(n, a, b)) {
      m.pos += 1;
      moves.push_back(m);
    }
    return moves;
  }
  // Both first letters are left descents, so the word can be routed through
  // the longest element of the parabolic generated by them.
  const int a = from.front(), b = to.front();
  std::vector<int> u, v;
  BraidMove pivot{};
  if (std::abs(a - b) >= 2) {
    u = {a, b};
    v = {b, a};
    pivot = {BraidMove::Kind::Commute, 0};
  } else {
    u = {a, b, a};
    v = {b, a, b};
    pivot = {BraidMove::Kind::Braid, 0};
  }
  auto w = Permutation::from_word(n, from);
  auto rest = (Permutation::from_word(n, u).inverse() * w).canonical_word();
  std::vector<int> mid_from = u, mid_to = v;
  mid_from.insert(mid_from.end(), rest.begin(), rest.end());
  mid_to.insert(mid_to.end(), rest.begin(), rest.end());
  moves = transport_moves(n, from, mid_from);
  moves.push_back(pivot);
  for (const auto& m : transport_moves(n, mid_to, to)) moves.push_back(m);
  return moves;
}

}  // namespace klr
