#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "klr/engine/quotient.hpp"

namespace klr::engine {

// Tr(A) = A/[A,A] and the center Z(A) of a built quotient A, per degree.
template <class Field>
class Cocenter {
 public:
  using value_type = typename Field::value_type;
  using Vec = std::vector<value_type>;

  explicit Cocenter(const GradedQuotient<Field>& quotient);

  const GradedQuotient<Field>& quotient() const { return q_; }
  int defect() const { return defect_; }

  std::size_t dim_tr(int d) const;
  std::size_t dim_z(int d) const;
  // Degrees with nonzero Tr.
  std::vector<int> tr_support() const;

  // Coordinates in the Tr basis; zero iff e lies in [A,A] + I. Throws
  // UsageError if e is not homogeneous or its degree is outside the window.
  Vec class_of(const Element& e) const;
  // Like class_of, but homogeneous elements outside the window count as zero.
  bool in_commutator(const Element& e) const;
  static int degree_of(const KlrAlgebra& algebra, const Element& e);

  // dim Tr_j == dim Z_{d - j} for every j.
  bool duality_holds() const;

  // One JSON object per degree: {degree, dim_tr, dim_z}.
  std::vector<nlohmann::json> report() const;

 private:
  struct Degree {
    typename Field::Echelon commutators;
    std::vector<std::size_t> tr_cols;
    std::size_t dim_z = 0;
  };

  void build_tr(int d);
  void build_z(int d);

  const GradedQuotient<Field>& q_;
  int defect_ = 0;
  std::map<int, Degree> degrees_;
};

}  // namespace klr::engine
