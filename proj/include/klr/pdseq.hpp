#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "klr/cartan.hpp"

namespace klr {

struct Run {
  int residue = 0;
  int length = 0;
};

struct RunDecomposition {
  std::vector<Run> runs;
  std::vector<int> cuts;   // c_0 = 0 < c_1 < ... < c_p = n
  std::vector<Int> ells;   // l_i = <h_{nu^i}, Lambda - sum_{j <= c_{i-1}} alpha_{nu_j}>
};

// Maximal witness positions k_1..k_p, 1-based as positions in the sequence.
struct PDWitness {
  std::vector<int> k;
};

struct ZMonomial {
  std::vector<int> exponents;
  Int degree;
};

// tau_word holds 1-based simple transpositions, leftmost first. The element is
// tau_word * x^exponents * e(nu).
struct SWord {
  std::vector<int> tau_word;
  std::vector<int> exponents;
  Int degree;
};

RunDecomposition run_decompose(const CartanDatum& datum, const DominantWeight& lambda,
                               const Sequence& nu);

bool is_piecewise_dominant(const CartanDatum& datum, const DominantWeight& lambda,
                           const Sequence& nu);

// Scans every position of every run for the pairing inequality. The witness is
// filled from the closed form for the largest valid position.
std::pair<bool, std::optional<PDWitness>> check_via_criterion(const CartanDatum& datum,
                                                              const DominantWeight& lambda,
                                                              const Sequence& nu);

// Visits the piecewise dominant sequences of content alpha in lexicographic
// order. Returning false from the visitor stops the search.
void for_each_pd(const CartanDatum& datum, const DominantWeight& lambda, const RootVector& alpha,
                 const std::function<bool(const Sequence&)>& visit);
std::vector<Sequence> enumerate_pd(const CartanDatum& datum, const DominantWeight& lambda,
                                   const RootVector& alpha);

struct NonzeroResult {
  bool nonzero = false;
  std::optional<Sequence> witness;
};
NonzeroResult weight_nonzero(const CartanDatum& datum, const DominantWeight& lambda,
                             const RootVector& alpha);

// Throws UsageError on non-PD input and OracleMismatch if the degree differs
// from defect_degree.
ZMonomial z_monomial(const CartanDatum& datum, const DominantWeight& lambda, const Sequence& nu);
SWord s_word(const CartanDatum& datum, const DominantWeight& lambda, const Sequence& nu);

}  // namespace klr
