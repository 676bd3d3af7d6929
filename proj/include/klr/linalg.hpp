#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "klr/integer.hpp"

namespace klr {

// Row space kept in reduced echelon form: every pivot column is zero outside
// its own row, so reduce() is a single pass and its result is supported on
// non-pivot columns only. Rows are stored sparse as primitive integer vectors
// (fraction-free elimination); vectors being reduced stay rational.
class RationalEchelon {
 public:
  using value_type = Rational;
  using SparseRow = std::vector<std::pair<std::size_t, Int>>;

  explicit RationalEchelon(std::size_t ncols = 0);

  // Returns true when the rank grew.
  bool insert(const std::vector<Rational>& row);
  // Same, from (column, value) pairs with distinct columns.
  bool insert_sparse(std::vector<std::pair<std::size_t, Rational>> entries);
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::vector<Rational> row(std::size_t r) const;
  std::size_t cols() const { return ncols_; }
  bool is_pivot(std::size_t c) const { return row_of_col_[c] >= 0; }
  std::vector<std::size_t> free_cols() const;

 private:
  std::size_t ncols_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> row_of_col_;
};

// Same contract over F_p; pivots are normalized to 1. Row updates go through
// the dispatched axpy/scale kernels.
class ModpEchelon {
 public:
  using value_type = std::uint32_t;

  ModpEchelon(std::size_t ncols, std::uint32_t p);

  bool insert(std::vector<std::uint32_t> row);
  bool insert_sparse(const std::vector<std::pair<std::size_t, std::uint32_t>>& entries);
  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const;

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::uint32_t>& row(std::size_t r) const { return rows_[r]; }
  std::size_t cols() const { return ncols_; }
  bool is_pivot(std::size_t c) const { return row_of_col_[c] >= 0; }
  std::vector<std::size_t> free_cols() const;

 private:
  std::size_t ncols_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> row_of_col_;
};

struct RationalField {
  using value_type = Rational;
  using Echelon = RationalEchelon;

  int characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  value_type from_rational(const Rational& q) const { return q; }
  Rational to_rational(const value_type& v) const { return v; }
  bool is_zero(const value_type& v) const { return v == 0; }
  value_type zero() const { return 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  Echelon make_echelon(std::size_t ncols) const { return Echelon(ncols); }
};

struct PrimeField {
  using value_type = std::uint32_t;
  using Echelon = ModpEchelon;

  explicit PrimeField(std::uint32_t prime);

  std::uint32_t p;

  int characteristic() const { return static_cast<int>(p); }
  std::string name() const { return "F_" + std::to_string(p); }
  // Throws std::domain_error when the denominator vanishes mod p.
  value_type from_rational(const Rational& q) const;
  Rational to_rational(const value_type& v) const { return Rational(v); }
  bool is_zero(const value_type& v) const { return v == 0; }
  value_type zero() const { return 0; }
  value_type add(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} + b) % p); }
  value_type sub(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} + p - b) % p); }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} * b) % p); }
  Echelon make_echelon(std::size_t ncols) const { return Echelon(ncols, p); }
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t n);

}  // namespace klr
