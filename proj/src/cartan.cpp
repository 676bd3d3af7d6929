#include "klr/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "klr/error.hpp"

namespace klr {

namespace {

std::string pair_str(std::size_t i, std::size_t j, const std::vector<std::string>& labels) {
  return "(" + labels[i] + "," + labels[j] + ")";
}

std::vector<std::string> numbered_labels(std::size_t n, int first) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(first + static_cast<int>(i)));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Int parse_int(const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<Int> parse_label_map(const CartanDatum& datum, std::string_view text) {
  std::vector<Int> out(datum.rank(), 0);
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw UsageError("expected label:coeff, got '" + item + "'");
    std::size_t i = datum.index_of(trim(item.substr(0, colon)));
    out[i] += parse_int(trim(item.substr(colon + 1)));
  }
  return out;
}

}  // namespace

CartanDatum CartanDatum::validate(std::vector<std::string> labels, std::vector<std::vector<Int>> a,
                                  std::vector<Int> d) {
  const std::size_t n = a.size();
  if (labels.size() != n) throw UsageError("label count does not match matrix size");
  if (d.size() != n) throw UsageError("symmetrizer count does not match matrix size");
  for (const auto& row : a)
    if (row.size() != n) throw UsageError("cartan matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) throw UsageError("duplicate label " + labels[i]);
  for (std::size_t i = 0; i < n; ++i)
    if (d[i] <= 0) throw UsageError("symmetrizer d_" + labels[i] + " is not positive");
  for (std::size_t i = 0; i < n; ++i)
    if (a[i][i] != 2) throw UsageError("axiom a_ii = 2 fails at " + pair_str(i, i, labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a[i][j] > 0)
        throw UsageError("axiom a_ij <= 0 fails at " + pair_str(i, j, labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw UsageError("axiom a_ij = 0 <=> a_ji = 0 fails at " + pair_str(i, j, labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i] * a[i][j] != d[j] * a[j][i])
        throw UsageError("axiom d_i a_ij = d_j a_ji fails at " + pair_str(i, j, labels));
  CartanDatum out;
  out.labels_ = std::move(labels);
  out.a_ = std::move(a);
  out.d_ = std::move(d);
  return out;
}

std::size_t CartanDatum::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw UsageError("unknown residue label '" + std::string(label) + "'");
}

nlohmann::json CartanDatum::to_json() const {
  nlohmann::json j;
  j["labels"] = labels_;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : a_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(klr::to_json(v));
    rows.push_back(r);
  }
  j["cartan_matrix"] = rows;
  nlohmann::json sym = nlohmann::json::array();
  for (const auto& v : d_) sym.push_back(klr::to_json(v));
  j["symmetrizers"] = sym;
  return j;
}

std::string CartanDatum::fingerprint() const { return to_json().dump(); }

CartanDatum validate_datum(std::vector<std::vector<Int>> a, std::vector<Int> d) {
  auto labels = numbered_labels(a.size(), 1);
  return CartanDatum::validate(std::move(labels), std::move(a), std::move(d));
}

CartanDatum finite_type(char type, int n) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  if (n < 1) throw UsageError("rank must be positive");
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  std::vector<Int> d(n, 1);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
      if (n < 2) throw UsageError("type B needs rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':
      if (n < 2) throw UsageError("type C needs rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);
      d[n - 1] = 2;
      break;
    case 'D':
      if (n < 4) throw UsageError("type D needs rank >= 4");
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 2, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw UsageError("type E needs rank 6, 7 or 8");
      link(0, 2, -1, -1);
      link(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'F':
      if (n != 4) throw UsageError("type F needs rank 4");
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);
      link(2, 3, -1, -1);
      d = {2, 2, 1, 1};
      break;
    case 'G':
      if (n != 2) throw UsageError("type G needs rank 2");
      link(0, 1, -1, -3);
      d = {3, 1};
      break;
    default:
      throw UsageError(std::string("unknown finite type '") + type + "'");
  }
  return CartanDatum::validate(numbered_labels(n, 1), std::move(a), std::move(d));
}

CartanDatum affine_type_a(int e) {
  if (e < 2) throw UsageError("affine type A needs at least 2 nodes");
  std::vector<std::vector<Int>> a(e, std::vector<Int>(e, 0));
  for (int i = 0; i < e; ++i) a[i][i] = 2;
  if (e == 2) {
    a[0][1] = a[1][0] = -2;
  } else {
    for (int i = 0; i < e; ++i) {
      a[i][(i + 1) % e] = -1;
      a[(i + 1) % e][i] = -1;
    }
  }
  return CartanDatum::validate(numbered_labels(e, 0), std::move(a), std::vector<Int>(e, 1));
}

CartanDatum rank_one() {
  return CartanDatum::validate({"0"}, {{Int(2)}}, {Int(1)});
}

CartanDatum builtin_datum(std::string_view family, int rank) {
  std::string f;
  for (char c : family) f += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (f == "affine-a" || f == "affine_a") return affine_type_a(rank);
  if (f == "rank1" || f == "nilhecke") return rank_one();
  if (f.size() == 1) return finite_type(f[0], rank);
  throw UsageError("unknown family '" + std::string(family) + "'");
}

RootVector RootVector::simple(std::size_t rank, std::size_t i) {
  RootVector r = zero(rank);
  r.coeffs.at(i) = 1;
  return r;
}

Int RootVector::height() const {
  Int h = 0;
  for (const auto& c : coeffs) h += c;
  return h;
}

bool RootVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Int& c) { return c == 0; });
}

bool RootVector::leq(const RootVector& other) const {
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] > other.coeffs[i]) return false;
  return true;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

Int pairing(const CartanDatum& datum, std::size_t i, const DominantWeight& lambda,
            const RootVector& beta) {
  if (i >= datum.rank()) throw UsageError("residue index out of range");
  Int v = lambda.coords[i];
  for (std::size_t j = 0; j < datum.rank(); ++j) v -= datum.a(i, j) * beta.coeffs[j];
  return v;
}

Int bilinear(const CartanDatum& datum, const RootVector& alpha, const RootVector& beta) {
  Int v = 0;
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    if (alpha.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < datum.rank(); ++j)
      v += alpha.coeffs[i] * beta.coeffs[j] * datum.d(i) * datum.a(i, j);
  }
  return v;
}

Int weight_root_form(const CartanDatum& datum, const DominantWeight& lambda,
                     const RootVector& alpha) {
  Int v = 0;
  for (std::size_t i = 0; i < datum.rank(); ++i) v += datum.d(i) * lambda.coords[i] * alpha.coeffs[i];
  return v;
}

Int defect_degree(const CartanDatum& datum, const DominantWeight& lambda,
                  const RootVector& alpha) {
  return 2 * weight_root_form(datum, lambda, alpha) - bilinear(datum, alpha, alpha);
}

RootVector content(const CartanDatum& datum, const Sequence& nu) {
  RootVector r = RootVector::zero(datum.rank());
  for (int v : nu.entries) r.coeffs.at(static_cast<std::size_t>(v)) += 1;
  return r;
}

int root_norm(const CartanDatum& datum, std::size_t i) { return 2 * to_int(datum.d(i)); }

DominantWeight parse_weight(const CartanDatum& datum, std::string_view text) {
  DominantWeight w{parse_label_map(datum, text)};
  for (std::size_t i = 0; i < datum.rank(); ++i)
    if (w.coords[i] < 0) throw UsageError("Lambda coordinate at " + datum.label(i) + " is negative");
  return w;
}

RootVector parse_root(const CartanDatum& datum, std::string_view text) {
  RootVector r{parse_label_map(datum, text)};
  for (std::size_t i = 0; i < datum.rank(); ++i)
    if (r.coeffs[i] < 0) throw UsageError("alpha coefficient at " + datum.label(i) + " is negative");
  return r;
}

Sequence parse_sequence(const CartanDatum& datum, std::string_view text) {
  Sequence nu;
  if (trim(text).empty()) return nu;
  for (const auto& item : split(text, ','))
    nu.entries.push_back(static_cast<int>(datum.index_of(item)));
  return nu;
}

nlohmann::json to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json to_json(const CartanDatum& datum, const Sequence& nu) {
  nlohmann::json j = nlohmann::json::array();
  for (int v : nu.entries) j.push_back(datum.label(static_cast<std::size_t>(v)));
  return j;
}

nlohmann::json to_json(const CartanDatum& datum, const RootVector& beta) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < datum.rank(); ++i)
    if (beta.coeffs[i] != 0) j[datum.label(i)] = to_json(beta.coeffs[i]);
  return j;
}

nlohmann::json to_json(const CartanDatum& datum, const DominantWeight& lambda) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < datum.rank(); ++i)
    if (lambda.coords[i] != 0) j[datum.label(i)] = to_json(lambda.coords[i]);
  return j;
}

std::string format_sequence(const CartanDatum& datum, const Sequence& nu) {
  std::string out = "(";
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (k) out += ",";
    out += datum.label(static_cast<std::size_t>(nu[k]));
  }
  return out + ")";
}

std::vector<Sequence> sequences_of_content(const RootVector& alpha) {
  std::vector<int> counts;
  for (const auto& c : alpha.coeffs) counts.push_back(to_int(c));
  int n = 0;
  for (int c : counts) n += c;
  std::vector<Sequence> out;
  Sequence cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == 0) continue;
      --counts[i];
      cur.entries.push_back(static_cast<int>(i));
      self(self);
      cur.entries.pop_back();
      ++counts[i];
    }
  };
  rec(rec);
  return out;
}

std::vector<RootVector> roots_up_to_height(std::size_t rank, int bound) {
  std::vector<RootVector> out;
  for (int h = 0; h <= bound; ++h) {
    std::vector<Int> cur(rank, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i + 1 == rank) {
        cur[i] = left;
        out.push_back(RootVector{cur});
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[i] = v;
        self(self, i + 1, left - v);
      }
    };
    if (rank == 0) {
      if (h == 0) out.push_back(RootVector{});
      continue;
    }
    std::vector<RootVector> level;
    std::swap(level, out);
    rec(rec, 0, h);
    std::vector<RootVector> fresh;
    std::swap(fresh, out);
    std::sort(fresh.begin(), fresh.end());
    out = std::move(level);
    out.insert(out.end(), fresh.begin(), fresh.end());
  }
  return out;
}

}  // namespace klr
