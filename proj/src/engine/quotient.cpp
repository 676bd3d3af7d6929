#include "klr/engine/quotient.hpp"

#include <algorithm>
#include <set>

#include "klr/error.hpp"
#include "klr/gdim.hpp"

namespace klr::engine {

namespace {

int x_total(const Mono& m) {
  int s = 0;
  for (auto v : m.x) s += v;
  return s;
}

template <class Vec>
bool all_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

template <class Field>
GradedQuotient<Field>::GradedQuotient(std::shared_ptr<KlrAlgebra> algebra, DominantWeight lambda,
                                      Field field, LaurentPoly oracle)
    : algebra_(std::move(algebra)), lambda_(std::move(lambda)), field_(field), oracle_(std::move(oracle)) {
  algebra_->qchoice().validate(algebra_->datum(), field_.characteristic());
  wmin_ = algebra_->min_degree();
  wmax_ = oracle_.is_zero() ? 0 : static_cast<int>(std::max<long>(oracle_.max_degree(), 0));
  if (wmax_ < wmin_) wmax_ = wmin_;
  build_cores();
  for (int d = wmin_; d <= wmax_; ++d) build_component(d);
  cores_.clear();
}

template <class Field>
void GradedQuotient<Field>::build_cores() {
  KlrAlgebra& A = *algebra_;
  const int n = A.strands();
  if (n == 0) return;
  const auto& seqs = A.sequences();
  for (std::size_t g = 0; g < seqs.size(); ++g) {
    const int gnu = static_cast<int>(g);
    const int ell = to_int(lambda_.coords[static_cast<std::size_t>(seqs[g][0])]);
    std::vector<Letter> tail(static_cast<std::size_t>(ell), Letter::x(0));
    for (std::size_t w = 0; w < A.perms().size(); ++w) {
      Element start;
      start.add(A.mono(static_cast<int>(w), gnu), 1);
      const Element head = A.right_letters(std::move(start), tail);
      for (std::size_t u = 0; u < A.perms().size(); ++u) {
        std::vector<Letter> word;
        for (int s : A.word(static_cast<int>(u))) word.push_back(Letter::tau(s));
        Element core = A.right_letters(head, word);
        if (core.is_zero()) continue;
        const int deg = A.degree(core.terms.begin()->first);
        if (deg <= wmax_) cores_[deg].push_back(std::move(core));
      }
    }
  }
}

template <class Field>
void GradedQuotient<Field>::build_component(int d) {
  KlrAlgebra& A = *algebra_;
  const int n = A.strands();
  Component comp{d, A.basis_in_degree(d), {}, field_.make_echelon(0), {}};
  // Monomials with many x's first, so they become pivots and the standard
  // monomials are the short ones.
  std::stable_sort(comp.monos.begin(), comp.monos.end(), [&](const Mono& a, const Mono& b) {
    int xa = x_total(a), xb = x_total(b);
    if (xa != xb) return xa > xb;
    return A.length(a.perm) > A.length(b.perm);
  });
  for (std::size_t c = 0; c < comp.monos.size(); ++c) comp.index.emplace(comp.monos[c], c);
  comp.ideal = field_.make_echelon(comp.monos.size());

  auto insert_element = [&](const Element& e) {
    std::vector<std::pair<std::size_t, value_type>> entries;
    entries.reserve(e.terms.size());
    for (const auto& [m, c] : e.terms) {
      auto it = comp.index.find(m);
      if (it == comp.index.end()) throw OracleMismatch("ideal element left its degree");
      value_type v = field_.from_rational(c);
      if (!field_.is_zero(v)) entries.emplace_back(it->second, std::move(v));
    }
    if (!entries.empty()) comp.ideal.insert_sparse(std::move(entries));
  };

  // A = span{x^c tau_w} = span{tau_u x^b}, so I is spanned by the two-sided
  // x-multiples of the cores tau_w g tau_u. The multiples come from the rows
  // already found in lower degrees.
  if (auto it = cores_.find(d); it != cores_.end())
    for (const auto& core : it->second) insert_element(core);

  std::set<int> steps;
  for (std::size_t v = 0; v < A.sequences().size(); ++v)
    for (int k = 0; k < n; ++k) steps.insert(A.norm_at(static_cast<int>(v), k));
  for (int step : steps) {
    const int lower = d - step;
    if (!in_window(lower)) continue;
    const Component& low = component(lower);
    for (std::size_t r = 0; r < low.ideal.rank(); ++r) {
      const auto row = low.ideal.row(r);
      std::map<int, Element> by_left, by_right;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (field_.is_zero(row[c])) continue;
        const Mono& m = low.monos[c];
        const Rational coeff = field_.to_rational(row[c]);
        by_left[A.left_idempotent(m)].add(m, coeff);
        by_right[m.nu].add(m, coeff);
      }
      for (const auto& [mu, part] : by_left)
        for (int k = 0; k < n; ++k) {
          if (A.norm_at(mu, k) != step) continue;
          Element shifted;
          for (const auto& [m, c] : part.terms) {
            Mono m2 = m;
            m2.x[static_cast<std::size_t>(k)] += 1;
            shifted.add(m2, c);
          }
          insert_element(shifted);
        }
      for (const auto& [nu, part] : by_right)
        for (int k = 0; k < n; ++k)
          if (A.norm_at(nu, k) == step) insert_element(A.right_x(part, k));
    }
  }

  comp.quotient_cols = comp.ideal.free_cols();
  const Int expected = oracle_.coefficient(d);
  if (Int(static_cast<unsigned long>(comp.quotient_cols.size())) != expected)
    throw OracleMismatch("quotient dimension " + std::to_string(comp.quotient_cols.size()) +
                         " in degree " + std::to_string(d) + " over " + field_.name() +
                         " differs from the graded dimension formula (" + expected.get_str() + ")");
  comps_.push_back(std::move(comp));
}

template <class Field>
std::size_t GradedQuotient<Field>::dim(int d) const {
  return in_window(d) ? component(d).quotient_cols.size() : 0;
}

template <class Field>
LaurentPoly GradedQuotient<Field>::graded_dim() const {
  LaurentPoly p;
  for (int d = wmin_; d <= wmax_; ++d) p.add_term(d, Int(static_cast<unsigned long>(dim(d))));
  return p;
}

template <class Field>
const Mono& GradedQuotient<Field>::basis_mono(int d, std::size_t j) const {
  const auto& comp = component(d);
  return comp.monos[comp.quotient_cols.at(j)];
}

template <class Field>
typename GradedQuotient<Field>::Vec GradedQuotient<Field>::coords(const Element& e, int d) const {
  if (!in_window(d)) return {};
  const auto& comp = component(d);
  Vec v(comp.monos.size(), field_.zero());
  for (const auto& [m, c] : e.terms) {
    if (algebra_->degree(m) != d) continue;
    auto it = comp.index.find(m);
    v[it->second] = field_.add(v[it->second], field_.from_rational(c));
  }
  v = comp.ideal.reduce(std::move(v));
  Vec out;
  out.reserve(comp.quotient_cols.size());
  for (std::size_t c : comp.quotient_cols) out.push_back(v[c]);
  return out;
}

template <class Field>
bool GradedQuotient<Field>::is_zero(const Element& e) const {
  std::set<int> degrees;
  for (const auto& [m, c] : e.terms) degrees.insert(algebra_->degree(m));
  for (int d : degrees)
    if (!all_zero(coords(e, d))) return false;
  return true;
}

template <class Field>
GradedQuotient<Field> cyclotomic_quotient(std::shared_ptr<KlrAlgebra> algebra, const DominantWeight& lambda,
                                          const Field& field) {
  auto oracle = graded_dim_algebra(algebra->datum(), lambda, algebra->beta());
  return GradedQuotient<Field>(std::move(algebra), lambda, field, std::move(oracle));
}

template class GradedQuotient<RationalField>;
template class GradedQuotient<PrimeField>;
template GradedQuotient<RationalField> cyclotomic_quotient(std::shared_ptr<KlrAlgebra>, const DominantWeight&,
                                                           const RationalField&);
template GradedQuotient<PrimeField> cyclotomic_quotient(std::shared_ptr<KlrAlgebra>, const DominantWeight&,
                                                        const PrimeField&);

}  // namespace klr::engine
