#pragma once

#include <map>
#include <memory>
#include <vector>

#include "klr/engine/algebra.hpp"
#include "klr/laurent.hpp"
#include "klr/linalg.hpp"

namespace klr::engine {

// R^Lambda_beta presented degree by degree inside the free algebra: each
// component keeps its free monomials, the ideal component in reduced echelon
// form, and the quotient basis (standard monomials = non-pivot columns).
template <class Field>
class GradedQuotient {
 public:
  using value_type = typename Field::value_type;
  using Vec = std::vector<value_type>;

  struct Component {
    int degree = 0;
    std::vector<Mono> monos;
    std::map<Mono, std::size_t> index;
    typename Field::Echelon ideal;
    std::vector<std::size_t> quotient_cols;
  };

  // Builds every component in [min free degree, max(top of oracle, 0)] and
  // throws OracleMismatch if a dimension disagrees with the oracle.
  GradedQuotient(std::shared_ptr<KlrAlgebra> algebra, DominantWeight lambda, Field field,
                 LaurentPoly oracle);

  KlrAlgebra& algebra() const { return *algebra_; }
  const Field& field() const { return field_; }
  const DominantWeight& lambda() const { return lambda_; }
  const LaurentPoly& oracle() const { return oracle_; }
  int window_min() const { return wmin_; }
  int window_max() const { return wmax_; }
  bool in_window(int d) const { return d >= wmin_ && d <= wmax_; }

  std::size_t dim(int d) const;
  LaurentPoly graded_dim() const;
  const Component& component(int d) const { return comps_.at(static_cast<std::size_t>(d - wmin_)); }
  const Mono& basis_mono(int d, std::size_t j) const;

  // Quotient coordinates of the degree-d part of e; empty outside the window.
  Vec coords(const Element& e, int d) const;
  bool is_zero(const Element& e) const;

 private:
  void build_cores();
  void build_component(int d);

  std::shared_ptr<KlrAlgebra> algebra_;
  DominantWeight lambda_;
  Field field_;
  LaurentPoly oracle_;
  int wmin_ = 0;
  int wmax_ = 0;
  std::vector<Component> comps_;
  std::map<int, std::vector<Element>> cores_;  // tau_w g tau_u by degree, during the build
};

template <class Field>
GradedQuotient<Field> cyclotomic_quotient(std::shared_ptr<KlrAlgebra> algebra,
                                          const DominantWeight& lambda, const Field& field);

}  // namespace klr::engine
