#include "klr/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "klr/kernels/modp.hpp"

namespace klr {

namespace {

using SparseRow = RationalEchelon::SparseRow;

void make_primitive(SparseRow& row) {
  Int g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

const Int* entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// a * x - b * y, dropping zeros.
SparseRow combine(const Int& a, const SparseRow& x, const Int& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      Int v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RationalEchelon::RationalEchelon(std::size_t ncols) : ncols_(ncols), row_of_col_(ncols, -1) {}

bool RationalEchelon::insert(const std::vector<Rational>& row) {
  if (row.size() != ncols_) throw std::invalid_argument("row length mismatch");
  std::vector<std::pair<std::size_t, Rational>> entries;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (row[c] != 0) entries.emplace_back(c, row[c]);
  return insert_sparse(std::move(entries));
}

bool RationalEchelon::insert_sparse(std::vector<std::pair<std::size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Int lcm = 1;
  for (const auto& [c, q] : entries)
    if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  SparseRow sv;
  std::vector<std::size_t> hits;
  for (const auto& [c, q] : entries) {
    if (c >= ncols_) throw std::invalid_argument("column out of range");
    if (q == 0) continue;
    sv.emplace_back(c, q.get_num() * (lcm / q.get_den()));
    if (row_of_col_[c] >= 0) hits.push_back(c);
  }
  // Clearing one pivot never touches another pivot column, so the pivots hit
  // by the input are exactly the ones to clear.
  for (std::size_t pc : hits) {
    const Int* hit = entry(sv, pc);
    if (!hit) continue;
    const SparseRow& r = rows_[static_cast<std::size_t>(row_of_col_[pc])];
    const Int factor = *hit;
    sv = combine(r.front().second, sv, factor, r);
    make_primitive(sv);
  }
  if (sv.empty()) return false;
  if (sv.front().second < 0)
    for (auto& [c, x] : sv) x = -x;
  make_primitive(sv);
  const std::size_t pc = sv.front().first;
  const Int piv = sv.front().second;
  for (auto& other : rows_) {
    const Int* hit = entry(other, pc);
    if (!hit) continue;
    const Int factor = *hit;
    other = combine(piv, other, factor, sv);
    make_primitive(other);
  }
  row_of_col_[pc] = static_cast<long>(rows_.size());
  pivots_.push_back(pc);
  rows_.push_back(std::move(sv));
  return true;
}

std::vector<Rational> RationalEchelon::reduce(std::vector<Rational> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t pc = pivots_[r];
    if (v[pc] == 0) continue;
    const auto& row = rows_[r];
    const Rational factor = v[pc] / Rational(row.front().second);
    for (const auto& [c, x] : row) v[c] -= factor * x;
  }
  return v;
}

std::vector<Rational> RationalEchelon::row(std::size_t r) const {
  std::vector<Rational> out(ncols_);
  for (const auto& [c, x] : rows_[r]) out[c] = x;
  return out;
}

std::vector<std::size_t> RationalEchelon::free_cols() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (row_of_col_[c] < 0) out.push_back(c);
  return out;
}

ModpEchelon::ModpEchelon(std::size_t ncols, std::uint32_t p)
    : ncols_(ncols), p_(p), row_of_col_(ncols, -1) {}

bool ModpEchelon::insert(std::vector<std::uint32_t> v) {
  if (v.size() != ncols_) throw std::invalid_argument("row length mismatch");
  v = reduce(std::move(v));
  std::size_t pc = ncols_;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (v[c] != 0) {
      pc = c;
      break;
    }
  if (pc == ncols_) return false;
  kernels::scale_mod(v.data(), inverse_mod(v[pc], p_), p_, ncols_);
  for (auto& other : rows_) {
    if (other[pc] == 0) continue;
    kernels::axpy_mod(other.data(), v.data(), p_ - other[pc], p_, ncols_);
  }
  row_of_col_[pc] = static_cast<long>(rows_.size());
  pivots_.push_back(pc);
  rows_.push_back(std::move(v));
  return true;
}

bool ModpEchelon::insert_sparse(const std::vector<std::pair<std::size_t, std::uint32_t>>& entries) {
  std::vector<std::uint32_t> v(ncols_, 0);
  for (const auto& [c, x] : entries) {
    if (c >= ncols_) throw std::invalid_argument("column out of range");
    v[c] = static_cast<std::uint32_t>((std::uint64_t{v[c]} + x) % p_);
  }
  return insert(std::move(v));
}

std::vector<std::uint32_t> ModpEchelon::reduce(std::vector<std::uint32_t> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t pc = pivots_[r];
    if (v[pc] == 0) continue;
    kernels::axpy_mod(v.data(), rows_[r].data(), p_ - v[pc], p_, ncols_);
  }
  return v;
}

std::vector<std::size_t> ModpEchelon::free_cols() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (row_of_col_[c] < 0) out.push_back(c);
  return out;
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (!is_prime(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
}

PrimeField::value_type PrimeField::from_rational(const Rational& q) const {
  Int num = q.get_num() % p;
  if (num < 0) num += p;
  Int den = q.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes in " + name());
  return mul(static_cast<value_type>(num.get_ui()),
             inverse_mod(static_cast<value_type>(den.get_ui()), p));
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace klr
