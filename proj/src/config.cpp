#include "klr/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "klr/error.hpp"
#include "klr/linalg.hpp"

namespace klr {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';' || c == '[' || c == ']') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Int parse_int(const std::string& tok) {
  Int v;
  if (tok.empty() || v.set_str(tok, 10) != 0) throw UsageError("expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  for (const auto& tok : split_tokens(text)) out.push_back(parse_int(tok));
  return out;
}

int parse_characteristic(std::string_view text) {
  const Int v = parse_int(trim(text));
  if (v == 0) return 0;
  if (v < 2 || v >= 65536 || !is_prime(static_cast<std::uint32_t>(v.get_ui())))
    throw UsageError("characteristic must be 0 or a prime below 65536, got " + v.get_str());
  return to_int(v);
}

void apply_config_key(JobConfig& config, const std::string& key, const std::string& value) {
  if (key == "family") {
    config.family = trim(value);
  } else if (key == "rank") {
    config.rank = to_int(parse_int(trim(value)));
  } else if (key == "labels") {
    config.labels = split_tokens(value);
  } else if (key == "cartan_matrix") {
    config.cartan_matrix = parse_int_list(value);
  } else if (key == "symmetrizers") {
    config.symmetrizers = parse_int_list(value);
  } else if (key == "Lambda") {
    config.lambda = trim(value);
  } else if (key == "alpha") {
    config.alpha = trim(value);
  } else if (key == "char" || key == "characteristic") {
    config.characteristic = parse_characteristic(value);
  } else if (key == "max_height") {
    config.max_height = to_int(parse_int(trim(value)));
  } else if (key.rfind("Q.", 0) == 0) {
    const auto dot = key.find('.', 2);
    if (dot == std::string::npos) throw UsageError("Q key must look like Q.i.j, got '" + key + "'");
    config.q.push_back({key.substr(2, dot - 2), key.substr(dot + 1), value});
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

JobConfig parse_config(std::string_view text) {
  JobConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) eq = body.find(':');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    try {
      apply_config_key(config, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    } catch (const UsageError& e) {
      throw UsageError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return config;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

CartanDatum JobConfig::datum() const {
  if (family) {
    if (cartan_matrix) throw UsageError("give either family/rank or cartan_matrix, not both");
    const std::string f = *family;
    const bool needs_rank = f != "rank1" && f != "nilhecke";
    if (needs_rank && !rank) throw UsageError("family '" + f + "' needs a rank");
    return builtin_datum(f, rank.value_or(1));
  }
  if (!cartan_matrix) throw UsageError("missing cartan_matrix (or family and rank)");
  const auto& flat = *cartan_matrix;
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
  if (n == 0 || n * n != flat.size())
    throw UsageError("cartan_matrix has " + std::to_string(flat.size()) + " entries, not a square count");
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = flat[i * n + j];
  std::vector<Int> d = symmetrizers ? *symmetrizers : std::vector<Int>(n, 1);
  if (d.size() != n) throw UsageError("symmetrizers must have " + std::to_string(n) + " entries");
  std::vector<std::string> names;
  if (labels) {
    names = *labels;
    if (names.size() != n) throw UsageError("labels must have " + std::to_string(n) + " entries");
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  }
  return CartanDatum::validate(std::move(names), std::move(a), std::move(d));
}

DominantWeight JobConfig::weight(const CartanDatum& datum) const {
  return lambda ? parse_weight(datum, *lambda) : DominantWeight::zero(datum.rank());
}

RootVector JobConfig::root(const CartanDatum& datum) const {
  return alpha ? parse_root(datum, *alpha) : RootVector::zero(datum.rank());
}

engine::QChoice JobConfig::qchoice(const CartanDatum& datum) const {
  auto out = engine::QChoice::standard(datum);
  for (const auto& entry : q) {
    const std::size_t i = datum.index_of(entry.i);
    const std::size_t j = datum.index_of(entry.j);
    if (i == j) throw UsageError("Q." + entry.i + "." + entry.j + ": Q_ii is fixed to 0");
    std::vector<engine::QTerm> terms;
    std::istringstream in(entry.terms);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
      if (trim(chunk).empty()) continue;
      std::vector<std::string> parts;
      std::istringstream cs(chunk);
      std::string piece;
      while (std::getline(cs, piece, ',')) parts.push_back(trim(piece));
      if (parts.size() != 3) throw UsageError("Q term '" + trim(chunk) + "' must be p,q,coeff");
      terms.push_back({to_int(parse_int(parts[0])), to_int(parse_int(parts[1])), parse_rational(parts[2])});
    }
    out.set(i, j, std::move(terms));
  }
  return out;
}

}  // namespace klr
