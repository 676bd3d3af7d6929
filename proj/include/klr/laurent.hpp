#pragma once

#include <map>

#include <json.hpp>

#include "klr/integer.hpp"

namespace klr {

// Integer Laurent polynomial in q; only nonzero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(long degree, const Int& coeff = 1);

  void add_term(long degree, const Int& coeff);
  const std::map<long, Int>& terms() const { return terms_; }
  Int coefficient(long degree) const;
  bool is_zero() const { return terms_.empty(); }
  long min_degree() const { return terms_.begin()->first; }
  long max_degree() const { return terms_.rbegin()->first; }
  Int at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly&) const = default;

  // Sorted [{"degree": d, "coeff": c}, ...].
  nlohmann::json to_json() const;

 private:
  std::map<long, Int> terms_;
};

}  // namespace klr
