#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/engine/algebra.hpp"

namespace klr {

// Text configuration, one `key = value` per line, `#` starts a comment:
//
//   labels = 0 1
//   cartan_matrix = 2 -2; -2 2
//   symmetrizers = 1 1
//   Lambda = 0:1,1:1
//   alpha = 0:2,1:2
//   Q.0.1 = 2,0,1; 0,2,1      # terms p,q,coeff of Q_01(u,v)
//
// `family` and `rank` select a built-in datum instead of an explicit matrix.
struct JobConfig {
  std::optional<std::string> family;
  std::optional<int> rank;
  std::optional<std::vector<std::string>> labels;
  std::optional<std::vector<Int>> cartan_matrix;  // row-major
  std::optional<std::vector<Int>> symmetrizers;
  std::optional<std::string> lambda;
  std::optional<std::string> alpha;
  int characteristic = 0;
  std::optional<int> max_height;
  struct QEntry {
    std::string i, j, terms;
  };
  std::vector<QEntry> q;

  bool has_datum() const { return family.has_value() || cartan_matrix.has_value(); }
  CartanDatum datum() const;
  // Zero weight / root when unset.
  DominantWeight weight(const CartanDatum& datum) const;
  RootVector root(const CartanDatum& datum) const;
  engine::QChoice qchoice(const CartanDatum& datum) const;
};

// Throws UsageError with the offending line number.
JobConfig parse_config(std::string_view text);
JobConfig load_config(const std::string& path);
// Sets one key; shared by the file parser and the command line.
void apply_config_key(JobConfig& config, const std::string& key, const std::string& value);

std::vector<Int> parse_int_list(std::string_view text);
int parse_characteristic(std::string_view text);

}  // namespace klr
