#include "klr/laurent.hpp"

#include "klr/cartan.hpp"

namespace klr {

LaurentPoly LaurentPoly::monomial(long degree, const Int& coeff) {
  LaurentPoly p;
  p.add_term(degree, coeff);
  return p;
}

void LaurentPoly::add_term(long degree, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Int LaurentPoly::coefficient(long degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::at_one() const {
  Int s = 0;
  for (const auto& [d, c] : terms_) s += c;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
  return out;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [d, c] : terms_) arr.push_back({{"degree", d}, {"coeff", klr::to_json(c)}});
  return arr;
}

}  // namespace klr
