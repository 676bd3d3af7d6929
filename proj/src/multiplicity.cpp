#include "klr/multiplicity.hpp"

#include <cstdlib>
#include <fstream>

#include "klr/error.hpp"

namespace klr {

namespace {

// Every gamma with 0 <= gamma <= beta componentwise.
std::vector<RootVector> below(const RootVector& beta) {
  std::vector<RootVector> out;
  RootVector cur = RootVector::zero(beta.coeffs.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == beta.coeffs.size()) {
      out.push_back(cur);
      return;
    }
    for (Int v = 0; v <= beta.coeffs[i]; ++v) {
      cur.coeffs[i] = v;
      self(self, i + 1);
    }
    cur.coeffs[i] = 0;
  };
  rec(rec, 0);
  return out;
}

Int rho_form(const CartanDatum& datum, const RootVector& beta) {
  Int v = 0;
  for (std::size_t i = 0; i < datum.rank(); ++i) v += datum.d(i) * beta.coeffs[i];
  return v;
}

}  // namespace

RootMultTable::RootMultTable(const CartanDatum& datum, int height_bound) : bound_(height_bound) {
  std::map<RootVector, Rational> c;
  for (const auto& beta : roots_up_to_height(datum.rank(), height_bound)) {
    if (beta.is_zero()) continue;
    const Int h = beta.height();
    // c_beta = sum_{k >= 1, beta/k integral} mult(beta/k) / k; `multiples`
    // is the k >= 2 part.
    Rational multiples = 0;
    for (long k = 2; k <= to_long(h); ++k) {
      RootVector part = beta;
      bool divisible = true;
      for (auto& v : part.coeffs) {
        if (v % k != 0) {
          divisible = false;
          break;
        }
        v /= k;
      }
      if (divisible) multiples += Rational(mult(part)) / k;
    }
    Rational cb;
    if (h == 1) {
      cb = 1;
    } else {
      Rational rhs = 0;
      for (const auto& part : below(beta)) {
        if (part.is_zero() || part == beta) continue;
        auto it1 = c.find(part);
        auto it2 = c.find(beta - part);
        if (it1->second == 0 || it2->second == 0) continue;
        rhs += Rational(bilinear(datum, part, beta - part)) * it1->second * it2->second;
      }
      const Int denom = bilinear(datum, beta, beta) - 2 * rho_form(datum, beta);
      if (denom != 0) {
        cb = rhs / Rational(denom);
      } else {
        // Only non-roots reach this: a positive root other than a simple one
        // has (beta, beta) < 2 (rho, beta). The equation then reads 0 = rhs.
        if (rhs != 0)
          throw OracleMismatch("Peterson recurrence: (beta, beta - 2 rho) = 0 with a nonzero right-hand side");
        cb = multiples;
      }
    }
    c[beta] = cb;
    const Rational m = cb - multiples;
    if (m.get_den() != 1 || m < 0)
      throw OracleMismatch("Peterson recurrence produced a non-integral multiplicity");
    if (m != 0) roots_.emplace(beta, m.get_num());
  }
}

Int RootMultTable::mult(const RootVector& beta) const {
  auto it = roots_.find(beta);
  return it == roots_.end() ? Int(0) : it->second;
}

RootMultTable root_mults(const CartanDatum& datum, int height_bound) {
  if (height_bound < 1) throw UsageError("height bound must be at least 1");
  return RootMultTable(datum, height_bound);
}

WeightMultiplicities::WeightMultiplicities(CartanDatum datum, DominantWeight lambda, int height_bound)
    : datum_(std::move(datum)), lambda_(std::move(lambda)), table_(datum_, std::max(height_bound, 1)) {}

std::string WeightMultiplicities::cache_key(const RootVector& alpha) const {
  nlohmann::json key;
  key["datum"] = datum_.to_json();
  nlohmann::json lam = nlohmann::json::array(), al = nlohmann::json::array();
  for (const auto& v : lambda_.coords) lam.push_back(to_json(v));
  for (const auto& v : alpha.coeffs) al.push_back(to_json(v));
  key["Lambda"] = lam;
  key["alpha"] = al;
  return key.dump();
}

Int WeightMultiplicities::mult(const RootVector& alpha) {
  if (alpha.is_zero()) return 1;
  for (const auto& v : alpha.coeffs)
    if (v < 0) return 0;
  if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;
  if (!loaded_.empty()) {
    if (auto it = loaded_.find(cache_key(alpha)); it != loaded_.end()) {
      memo_.emplace(alpha, it->second);
      return it->second;
    }
  }
  if (alpha.height() > table_.height_bound())
    throw UsageError("|alpha| exceeds the multiplicity height bound");
  const Int denom = 2 * (weight_root_form(datum_, lambda_, alpha) + rho_form(datum_, alpha)) -
                    bilinear(datum_, alpha, alpha);
  // (lambda + k gamma | gamma) with lambda = Lambda - alpha.
  Int numer = 0;
  for (const auto& [gamma, gm] : table_.roots()) {
    const Int base = weight_root_form(datum_, lambda_, gamma) - bilinear(datum_, alpha, gamma);
    const Int gg = bilinear(datum_, gamma, gamma);
    RootVector rest = alpha - gamma;
    for (long k = 1;; ++k) {
      bool nonneg = true;
      for (const auto& v : rest.coeffs)
        if (v < 0) nonneg = false;
      if (!nonneg) break;
      Int m = mult(rest);
      if (m != 0) numer += gm * (base + k * gg) * m;
      rest -= gamma;
    }
  }
  numer *= 2;
  Int result;
  if (denom == 0) {
    // Weights other than Lambda have positive denominator.
    if (numer != 0) throw OracleMismatch("Freudenthal: zero denominator with nonzero numerator");
    result = 0;
  } else {
    if (numer % denom != 0) throw OracleMismatch("Freudenthal: inexact division");
    result = numer / denom;
  }
  memo_.emplace(alpha, result);
  return result;
}

void WeightMultiplicities::load_cache(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.contains("key") || !rec.contains("value")) continue;
    Int v;
    const auto& val = rec["value"];
    if (val.is_number_integer())
      v = static_cast<long>(val.get<long long>());
    else if (v.set_str(val.get<std::string>(), 10) != 0)
      continue;
    loaded_[rec["key"].get<std::string>()] = v;
  }
}

void WeightMultiplicities::save_cache(const std::string& path) const {
  std::map<std::string, Int> all = loaded_;
  for (const auto& [alpha, v] : memo_) all[cache_key(alpha)] = v;
  std::ofstream out(path, std::ios::trunc);
  for (const auto& [k, v] : all) out << nlohmann::json{{"key", k}, {"value", to_json(v)}}.dump() << "\n";
}

Int freudenthal_mult(const CartanDatum& datum, const DominantWeight& lambda, const RootVector& alpha) {
  WeightMultiplicities wm(datum, lambda, to_int(alpha.height()));
  return wm.mult(alpha);
}

std::string default_cache_dir() {
  const char* dir = std::getenv("KLR_CACHE_DIR");
  return dir ? std::string(dir) : std::string();
}

}  // namespace klr
