#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "klr/cartan.hpp"

namespace klr {

// A straight piece of a path. Its direction is the weight Lambda - sum_j beta_j alpha_j;
// all directions of paths reachable from the highest weight are Weyl conjugates of Lambda.
struct Segment {
  std::vector<Int> beta;
  Rational length;

  bool operator==(const Segment&) const = default;
  friend bool operator<(const Segment& a, const Segment& b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.length < b.length;
  }
};

class CrystalVertex {
 public:
  CrystalVertex() = default;
  explicit CrystalVertex(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  bool operator==(const CrystalVertex&) const = default;
  friend bool operator<(const CrystalVertex& a, const CrystalVertex& b) {
    return a.segments_ < b.segments_;
  }

 private:
  // Drops empty segments and merges equal neighbours.
  void normalize();
  std::vector<Segment> segments_;
};

enum class TieBreak { Smallest, Largest };

class PathCrystal {
 public:
  PathCrystal(CartanDatum datum, DominantWeight lambda);

  const CartanDatum& datum() const { return datum_; }
  const DominantWeight& lambda() const { return lambda_; }

  // The straight path t -> t Lambda.
  CrystalVertex highest() const;

  std::optional<CrystalVertex> root_f(std::size_t i, const CrystalVertex& b) const;
  std::optional<CrystalVertex> root_e(std::size_t i, const CrystalVertex& b) const;
  int eps(std::size_t i, const CrystalVertex& b) const;
  int phi(std::size_t i, const CrystalVertex& b) const;
  // Lambda - wt(b) as an element of Q^+; throws OracleMismatch if not integral.
  RootVector depth(const CrystalVertex& b) const;
  // <h_i, wt(b)>.
  Int wt_pairing(std::size_t i, const CrystalVertex& b) const;

  // All vertices with height(Lambda - wt) <= max_height, sorted.
  std::vector<CrystalVertex> generate(int max_height) const;

  // f_{nu_n} ... f_{nu_1} v_Lambda; throws OracleMismatch on a null step.
  CrystalVertex pd_path(const Sequence& nu) const;
  // Raise fully along the chosen residue with eps > 0, recurse, append the run.
  Sequence extract_pd(const CrystalVertex& b, TieBreak tie = TieBreak::Smallest) const;

  nlohmann::json to_json(const CrystalVertex& b) const;

 private:
  Int slope(std::size_t i, const std::vector<Int>& beta) const;
  // Values of h_i at the breakpoints; h[0] = 0.
  std::vector<Rational> heights(std::size_t i, const std::vector<Segment>& segs) const;
  Segment reflect(std::size_t i, const Segment& s) const;

  CartanDatum datum_;
  DominantWeight lambda_;
};

// #{b : wt(b) = Lambda - alpha} among the given vertices.
Int weight_multiplicity(const PathCrystal& crystal, const std::vector<CrystalVertex>& vertices,
                        const RootVector& alpha);
Int weight_multiplicity(const CartanDatum& datum, const DominantWeight& lambda, const RootVector& alpha);

struct PDClasses {
  std::vector<std::vector<Sequence>> classes;  // grouped by b_nu, in vertex order
  Int weight_mult;
};
PDClasses pd_classes(const CartanDatum& datum, const DominantWeight& lambda, const RootVector& alpha);

}  // namespace klr
