#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "klr/integer.hpp"

namespace klr {

// Symmetrizable generalized Cartan matrix with symmetrizers. Labels are opaque
// strings; everything else addresses residues by dense index.
class CartanDatum {
 public:
  CartanDatum() = default;

  // Checks the four axioms in order (a_ii = 2, a_ij <= 0, zero pattern,
  // symmetrizability) and throws UsageError naming the first failure.
  static CartanDatum validate(std::vector<std::string> labels,
                              std::vector<std::vector<Int>> a, std::vector<Int> d);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index_of(std::string_view label) const;

  const Int& a(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const Int& d(std::size_t i) const { return d_[i]; }

  nlohmann::json to_json() const;
  // Compact canonical JSON, used as a cache key.
  std::string fingerprint() const;

  bool operator==(const CartanDatum&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Int>> a_;
  std::vector<Int> d_;
};

// Labels default to "1".."n".
CartanDatum validate_datum(std::vector<std::vector<Int>> a, std::vector<Int> d);

// Finite types A..G with Bourbaki numbering, labels "1".."n".
CartanDatum finite_type(char type, int rank);
// A^{(1)}_{e-1}: e nodes labelled "0".."e-1". e = 2 gives the 2/-2 matrix.
CartanDatum affine_type_a(int e);
// The single node "0" with a = (2); its cyclotomic quotients are nilHecke algebras.
CartanDatum rank_one();
// family: a..g (any case), "affine-a", "rank1".
CartanDatum builtin_datum(std::string_view family, int rank);

struct DominantWeight {
  std::vector<Int> coords;

  static DominantWeight zero(std::size_t rank) { return {std::vector<Int>(rank, 0)}; }
  bool operator==(const DominantWeight&) const = default;
};

struct RootVector {
  std::vector<Int> coeffs;

  static RootVector zero(std::size_t rank) { return {std::vector<Int>(rank, 0)}; }
  static RootVector simple(std::size_t rank, std::size_t i);
  Int height() const;
  bool is_zero() const;
  // Componentwise a <= b.
  bool leq(const RootVector& other) const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  bool operator==(const RootVector&) const = default;
  friend bool operator<(const RootVector& a, const RootVector& b) { return a.coeffs < b.coeffs; }
};

// A sequence of residue indices.
struct Sequence {
  std::vector<int> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  int operator[](std::size_t k) const { return entries[k]; }
  bool operator==(const Sequence&) const = default;
  auto operator<=>(const Sequence&) const = default;
};

// <h_i, Lambda - beta> = Lambda_i - sum_j a_ij beta_j.
Int pairing(const CartanDatum& datum, std::size_t i, const DominantWeight& lambda,
            const RootVector& beta);
// (alpha, beta) = sum_ij alpha_i beta_j d_i a_ij.
Int bilinear(const CartanDatum& datum, const RootVector& alpha, const RootVector& beta);
// (Lambda, alpha) with (Lambda, alpha_i) = d_i Lambda_i.
Int weight_root_form(const CartanDatum& datum, const DominantWeight& lambda,
                     const RootVector& alpha);
// d_{Lambda,alpha} = 2(Lambda, alpha) - (alpha, alpha).
Int defect_degree(const CartanDatum& datum, const DominantWeight& lambda,
                  const RootVector& alpha);
RootVector content(const CartanDatum& datum, const Sequence& nu);
// (alpha_i, alpha_i) = 2 d_i as a machine integer.
int root_norm(const CartanDatum& datum, std::size_t i);

// "0:4,1:2" style label maps; missing labels are zero.
DominantWeight parse_weight(const CartanDatum& datum, std::string_view text);
RootVector parse_root(const CartanDatum& datum, std::string_view text);
Sequence parse_sequence(const CartanDatum& datum, std::string_view text);

nlohmann::json to_json(const Int& v);
nlohmann::json to_json(const CartanDatum& datum, const Sequence& nu);
nlohmann::json to_json(const CartanDatum& datum, const RootVector& beta);
nlohmann::json to_json(const CartanDatum& datum, const DominantWeight& lambda);
std::string format_sequence(const CartanDatum& datum, const Sequence& nu);

// All sequences with content alpha, lexicographic in label index.
std::vector<Sequence> sequences_of_content(const RootVector& alpha);
// All alpha in Q^+ with height <= bound, ordered by height then lexicographically.
std::vector<RootVector> roots_up_to_height(std::size_t rank, int bound);

}  // namespace klr
