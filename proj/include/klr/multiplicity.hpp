#pragma once

#include <map>
#include <string>

#include "klr/cartan.hpp"

namespace klr {

// Positive-root multiplicities up to a height bound from the Peterson
// recurrence (beta | beta - 2 rho) c_beta = sum_{beta'+beta''=beta} (beta'|beta'') c_beta' c_beta''.
class RootMultTable {
 public:
  RootMultTable(const CartanDatum& datum, int height_bound);

  int height_bound() const { return bound_; }
  // Zero for non-roots and for vectors above the bound.
  Int mult(const RootVector& beta) const;
  // Roots with nonzero multiplicity, ordered by height.
  const std::map<RootVector, Int>& roots() const { return roots_; }

 private:
  int bound_;
  std::map<RootVector, Int> roots_;
};

RootMultTable root_mults(const CartanDatum& datum, int height_bound);

// dim L(Lambda)_{Lambda - alpha} by Freudenthal's recursion with
// denominator 2(Lambda + rho, alpha) - (alpha, alpha) and <h_i, rho> = 1.
class WeightMultiplicities {
 public:
  WeightMultiplicities(CartanDatum datum, DominantWeight lambda, int height_bound);

  Int mult(const RootVector& alpha);
  const RootMultTable& root_table() const { return table_; }

  // JSON-lines cache {key, value}; keys carry the datum fingerprint and Lambda.
  void load_cache(const std::string& path);
  void save_cache(const std::string& path) const;
  std::string cache_key(const RootVector& alpha) const;

 private:
  CartanDatum datum_;
  DominantWeight lambda_;
  RootMultTable table_;
  std::map<RootVector, Int> memo_;
  std::map<std::string, Int> loaded_;
};

Int freudenthal_mult(const CartanDatum& datum, const DominantWeight& lambda, const RootVector& alpha);

// Directory from KLR_CACHE_DIR, or empty when unset.
std::string default_cache_dir();

}  // namespace klr
