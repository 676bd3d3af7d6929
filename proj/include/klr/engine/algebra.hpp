#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "klr/cartan.hpp"
#include "klr/permutation.hpp"

namespace klr::engine {

struct QTerm {
  int p = 0;  // power of u
  int q = 0;  // power of v
  Rational coeff;
};

// Q_ij(u, v) for every ordered pair; Q_ii = 0 and Q_ji(u, v) = Q_ij(v, u).
class QChoice {
 public:
  QChoice() = default;
  explicit QChoice(std::size_t rank);

  // u^{-a_ij} + v^{-a_ji} on edges; the constant 1 between unlinked residues.
  static QChoice standard(const CartanDatum& datum);

  // Sets Q_ij and the transposed Q_ji.
  void set(std::size_t i, std::size_t j, std::vector<QTerm> terms);
  const std::vector<QTerm>& poly(std::size_t i, std::size_t j) const { return polys_[i][j]; }

  // Homogeneity, transpose symmetry, Q_ii = 0 and invertibility of
  // c_{i,j,-a_ij,0} in characteristic p (0 for the rationals).
  void validate(const CartanDatum& datum, int characteristic) const;

  nlohmann::json to_json(const CartanDatum& datum) const;

 private:
  std::vector<std::vector<std::vector<QTerm>>> polys_;
};

inline constexpr int kMaxStrands = 8;

// x^c tau_{w} e(nu) with w read through its canonical word. nu is the right
// idempotent; the left one is w.nu.
struct Mono {
  std::array<std::uint8_t, kMaxStrands> x{};
  std::uint16_t perm = 0;
  std::uint16_t nu = 0;

  auto operator<=>(const Mono&) const = default;
};

struct Element {
  std::map<Mono, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Mono& m, const Rational& c);
  void add(const Element& e, const Rational& c = 1);
  Element& operator+=(const Element& e) { add(e, 1); return *this; }
  Element& operator-=(const Element& e) { add(e, -1); return *this; }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a);
  bool operator==(const Element&) const = default;
};

// A generator letter of a word; indices are 0-based strand positions.
struct Letter {
  enum class Kind { X, Tau };
  Kind kind;
  int index;

  static Letter x(int k) { return {Kind::X, k}; }
  static Letter tau(int l) { return {Kind::Tau, l}; }
};

// The free KLR algebra R_beta with normal forms x^c tau_w e(nu). Structure
// constants are computed over Q and memoized; fields only enter at the
// quotient stage. Not thread-safe (memo tables).
class KlrAlgebra {
 public:
  KlrAlgebra(CartanDatum datum, QChoice q, RootVector beta);

  const CartanDatum& datum() const { return datum_; }
  const QChoice& qchoice() const { return q_; }
  const RootVector& beta() const { return beta_; }
  int strands() const { return n_; }

  const std::vector<Sequence>& sequences() const { return seqs_; }
  int sequence_index(const Sequence& nu) const;
  const std::vector<Permutation>& perms() const { return perms_; }
  int perm_index(const Permutation& w) const;
  int identity_perm() const { return id_; }
  const std::vector<int>& word(int perm) const { return words_[static_cast<std::size_t>(perm)]; }
  int length(int perm) const { return static_cast<int>(words_[static_cast<std::size_t>(perm)].size()); }
  int act(int perm, int nu) const { return act_[idx(perm, nu)]; }
  int left_idempotent(const Mono& m) const { return act(m.perm, m.nu); }

  // deg tau_w e(nu) = -sum over inversions a<b of (alpha_{nu_a}, alpha_{nu_b}).
  int tau_degree(int perm, int nu) const { return tau_deg_[idx(perm, nu)]; }
  int degree(const Mono& m) const;
  // Smallest degree of any monomial.
  int min_degree() const;
  // (alpha_i, alpha_i) at strand k of sequence nu.
  int norm_at(int nu, int k) const;

  Mono mono(int perm, int nu) const;
  Element idempotent(int nu) const;
  Element one() const;
  Element x(int k, int nu) const;
  Element tau(int l, int nu) const;

  Element multiply(const Element& a, const Element& b);
  Element multiply(const Mono& a, const Mono& b);
  // Right multiplication by the generic generators x_k = sum x_k e(nu) and
  // tau_l = sum tau_l e(nu).
  Element right_x(const Element& e, int k);
  Element right_tau(const Element& e, int l);
  Element right_letters(Element e, const std::vector<Letter>& letters);
  // letters[0] * ... * letters[m-1] * e(nu).
  Element evaluate(const std::vector<Letter>& letters, int nu);

  // All monomials of the given degree.
  std::vector<Mono> basis_in_degree(int degree) const;

  nlohmann::json to_json(const Element& e) const;

 private:
  std::size_t idx(int perm, int nu) const {
    return static_cast<std::size_t>(perm) * seqs_.size() + static_cast<std::size_t>(nu);
  }
  // Normal form of tau_{c(w)} tau_s e(nu).
  const Element& tau_right(int w, int s, int nu);
  // Normal form of tau_{c(w)} x_k e(nu).
  const Element& x_right(int w, int k, int nu);
  Element compute_tau_right(int w, int s, int nu);
  Element compute_x_right(int w, int k, int nu);
  // Adds shift x^c to every term of src, scaled.
  static void add_shifted(Element& dst, const Element& src, const std::array<std::uint8_t, kMaxStrands>& c,
                          const Rational& scale);
  int apply_simple(int s, int nu) const { return act(simple_[static_cast<std::size_t>(s)], nu); }

  CartanDatum datum_;
  QChoice q_;
  RootVector beta_;
  int n_ = 0;
  std::vector<Sequence> seqs_;
  std::map<Sequence, int> seq_index_;
  std::vector<Permutation> perms_;
  std::map<std::vector<int>, int> perm_index_;
  std::vector<std::vector<int>> words_;
  std::vector<int> right_simple_;  // perm * s_l
  std::vector<int> simple_;
  int id_ = 0;
  std::vector<int> act_;
  std::vector<int> tau_deg_;
  std::vector<std::vector<int>> norms_;  // per sequence, per strand
  std::vector<std::optional<Element>> tau_memo_;
  std::vector<std::optional<Element>> x_memo_;
};

}  // namespace klr::engine
