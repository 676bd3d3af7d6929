#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "klr/engine/cocenter.hpp"

namespace klr::engine {

enum class SpanMode { Generator, Principle3, Principle1, Principle2 };

SpanMode parse_span_mode(const std::string& text);
std::string to_string(SpanMode mode);

struct SpanComponent {
  int degree = 0;
  std::size_t rank = 0;
  std::size_t dim = 0;
};

struct SpanReport {
  SpanMode mode = SpanMode::Generator;
  int characteristic = 0;
  // The principle modes assume characteristic 0; elsewhere the result is a finding.
  bool hypothesis_met = true;
  std::size_t family_size = 0;
  std::vector<SpanComponent> components;
  bool passed = true;

  nlohmann::json to_json() const;
};

struct RelationCheck {
  std::string claim;  // "part1", "part2", "k=0" or "corollary"
  Sequence nu;
  std::vector<int> blocks;
  int t = 0;
  int k = 0;
};

struct RelationsReport {
  struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
  };
  int characteristic = 0;
  std::map<std::string, Tally> claims;
  std::vector<RelationCheck> failures;  // the first few per claim

  bool passed() const;
  bool passed(const std::string& claim) const;
  nlohmann::json to_json(const CartanDatum& datum) const;
};

struct PropertyTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // the first few

  bool passed() const { return failed == 0; }
  void record(bool ok, const std::string& what);
  nlohmann::json to_json() const;
};

// Every defining relation of R_beta as an identity between products of
// generators, with the right-hand sides built directly from the Q polynomials.
PropertyTally check_defining_relations(KlrAlgebra& algebra);

// (ab)c == a(bc) on random basis monomials with compatible idempotents.
PropertyTally check_associativity(KlrAlgebra& algebra, int triples, std::uint64_t seed);

// Compositions of nu into blocks of equal residues (the set C(nu)).
std::vector<std::vector<int>> equal_residue_compositions(const Sequence& nu);

// Z(nu) = x^exponents e(nu) and S(nu) = tau_word x^exponents e(nu) for PD nu.
Element z_element(KlrAlgebra& algebra, const DominantWeight& lambda, const Sequence& nu);
Element s_element(KlrAlgebra& algebra, const DominantWeight& lambda, const Sequence& nu);

// The spanning set R^Lambda_{nu,1} of the generator theorem.
std::vector<Element> generator_family(KlrAlgebra& algebra, const DominantWeight& lambda, const Sequence& nu);

template <class Field>
SpanReport verify_spanning(const Cocenter<Field>& cocenter, SpanMode mode);

// Samples y = y_1 x^k tau_{c+1}..tau_{c'-1} y_2 e(nu) over every block with at
// least two strands and checks the lemma's combinations, the k = 0 case and,
// in characteristic 0, the corollary for k < b - 1.
template <class Field>
RelationsReport verify_relations_lemma(const Cocenter<Field>& cocenter, int max_k, int samples,
                                       std::uint64_t seed);

}  // namespace klr::engine
