#include "klr/engine/cocenter.hpp"

#include <set>

#include "klr/error.hpp"

namespace klr::engine {

namespace {

template <class Vec>
bool all_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Element single(const Mono& m) {
  Element e;
  e.add(m, 1);
  return e;
}

}  // namespace

template <class Field>
Cocenter<Field>::Cocenter(const GradedQuotient<Field>& quotient) : q_(quotient) {
  const KlrAlgebra& A = q_.algebra();
  defect_ = to_int(defect_degree(A.datum(), q_.lambda(), A.beta()));
  for (int d = q_.window_min(); d <= q_.window_max(); ++d) {
    build_tr(d);
    build_z(d);
  }
}

template <class Field>
void Cocenter<Field>::build_tr(int d) {
  KlrAlgebra& A = q_.algebra();
  const std::size_t n = q_.dim(d);
  Degree deg{q_.field().make_echelon(n), {}, 0};
  for (int i = q_.window_min(); i <= q_.window_max() && deg.commutators.rank() < n; ++i) {
    const int j = d - i;
    if (j < i || !q_.in_window(j)) continue;
    for (std::size_t a = 0; a < q_.dim(i) && deg.commutators.rank() < n; ++a) {
      const Mono& u = q_.basis_mono(i, a);
      for (std::size_t b = (i == j ? a + 1 : 0); b < q_.dim(j); ++b) {
        const Mono& v = q_.basis_mono(j, b);
        const bool uv = u.nu == A.left_idempotent(v);
        const bool vu = v.nu == A.left_idempotent(u);
        if (!uv && !vu) continue;
        Element c;
        if (uv) c += A.multiply(u, v);
        if (vu) c -= A.multiply(v, u);
        auto coords = q_.coords(c, d);
        if (!all_zero(coords)) deg.commutators.insert(std::move(coords));
      }
    }
  }
  deg.tr_cols = deg.commutators.free_cols();
  degrees_.insert_or_assign(d, std::move(deg));
}

template <class Field>
void Cocenter<Field>::build_z(int d) {
  KlrAlgebra& A = q_.algebra();
  const int n = A.strands();
  // Generators e(nu), x_k e(nu), tau_l e(nu) with their degrees.
  std::vector<std::pair<Element, int>> gens;
  for (std::size_t s = 0; s < A.sequences().size(); ++s) {
    const int nu = static_cast<int>(s);
    gens.emplace_back(A.idempotent(nu), 0);
    for (int k = 0; k < n; ++k) gens.emplace_back(A.x(k, nu), A.norm_at(nu, k));
    for (int l = 0; l + 1 < n; ++l) {
      Element t = A.tau(l, nu);
      gens.emplace_back(t, A.degree(t.terms.begin()->first));
    }
  }
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& [g, gd] : gens) {
    offsets.push_back(total);
    total += q_.dim(d + gd);
  }
  auto ech = q_.field().make_echelon(total);
  for (std::size_t b = 0; b < q_.dim(d); ++b) {
    const Element z = single(q_.basis_mono(d, b));
    std::vector<std::pair<std::size_t, value_type>> image;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int target = d + gens[g].second;
      if (q_.dim(target) == 0) continue;
      const Element c = A.multiply(z, gens[g].first) - A.multiply(gens[g].first, z);
      const auto coords = q_.coords(c, target);
      for (std::size_t t = 0; t < coords.size(); ++t)
        if (!q_.field().is_zero(coords[t])) image.emplace_back(offsets[g] + t, coords[t]);
    }
    if (!image.empty()) ech.insert_sparse(std::move(image));
  }
  degrees_.at(d).dim_z = q_.dim(d) - ech.rank();
}

template <class Field>
std::size_t Cocenter<Field>::dim_tr(int d) const {
  auto it = degrees_.find(d);
  return it == degrees_.end() ? 0 : it->second.tr_cols.size();
}

template <class Field>
std::size_t Cocenter<Field>::dim_z(int d) const {
  auto it = degrees_.find(d);
  return it == degrees_.end() ? 0 : it->second.dim_z;
}

template <class Field>
std::vector<int> Cocenter<Field>::tr_support() const {
  std::vector<int> out;
  for (const auto& [d, deg] : degrees_)
    if (!deg.tr_cols.empty()) out.push_back(d);
  return out;
}

template <class Field>
int Cocenter<Field>::degree_of(const KlrAlgebra& algebra, const Element& e) {
  if (e.is_zero()) throw UsageError("class_of: zero element has no degree");
  const int d = algebra.degree(e.terms.begin()->first);
  for (const auto& [m, c] : e.terms)
    if (algebra.degree(m) != d) throw UsageError("class_of: element is not homogeneous");
  return d;
}

template <class Field>
typename Cocenter<Field>::Vec Cocenter<Field>::class_of(const Element& e) const {
  const int d = degree_of(q_.algebra(), e);
  if (!q_.in_window(d))
    throw UsageError("class_of: degree " + std::to_string(d) + " outside the window [" +
                     std::to_string(q_.window_min()) + ", " + std::to_string(q_.window_max()) + "]");
  const Degree& deg = degrees_.at(d);
  const Vec v = deg.commutators.reduce(q_.coords(e, d));
  Vec out;
  out.reserve(deg.tr_cols.size());
  for (std::size_t c : deg.tr_cols) out.push_back(v[c]);
  return out;
}

template <class Field>
bool Cocenter<Field>::in_commutator(const Element& e) const {
  if (e.is_zero()) return true;
  // The quotient vanishes outside its window.
  if (!q_.in_window(degree_of(q_.algebra(), e))) return true;
  return all_zero(class_of(e));
}

template <class Field>
bool Cocenter<Field>::duality_holds() const {
  std::set<int> js;
  for (const auto& [d, deg] : degrees_) {
    js.insert(d);
    js.insert(defect_ - d);
  }
  for (int j : js)
    if (dim_tr(j) != dim_z(defect_ - j)) return false;
  return true;
}

template <class Field>
std::vector<nlohmann::json> Cocenter<Field>::report() const {
  std::vector<nlohmann::json> out;
  for (const auto& [d, deg] : degrees_)
    out.push_back({{"degree", d}, {"dim_tr", deg.tr_cols.size()}, {"dim_z", deg.dim_z}});
  return out;
}

template class Cocenter<RationalField>;
template class Cocenter<PrimeField>;

}  // namespace klr::engine
