#include "klr/gdim.hpp"

#include "klr/error.hpp"

namespace klr {

LaurentPoly quantum_integer(long m, long d) {
  LaurentPoly p;
  if (m == 0) return p;
  const long sign = m > 0 ? 1 : -1;
  const long a = m > 0 ? m : -m;
  for (long k = 0; k < a; ++k) p.add_term(d * (a - 1 - 2 * k), sign);
  return p;
}

std::vector<Permutation> orbit_transporters(const Sequence& nu, const Sequence& nu2) {
  std::vector<Permutation> out;
  const std::size_t n = nu.size();
  if (nu2.size() != n) return out;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  // w(j) must be a position t with nu2_t = nu_j.
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      out.emplace_back(image);
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || nu2[t] != nu[j]) continue;
      used[t] = true;
      image[j] = static_cast<int>(t);
      self(self, j + 1);
      used[t] = false;
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

// Precomputed per-sequence data shared by every w.
struct PairContext {
  std::vector<long> lambda_at;      // <h_{nu_t}, Lambda>
  std::vector<std::vector<long>> a; // a_{nu_t, nu_j}
  std::vector<long> d;              // d_{nu_t}
  std::vector<LaurentPoly> shift;   // q_{nu_t}^{N(1,nu,t) - 1}
};

PairContext make_context(const CartanDatum& datum, const DominantWeight& lambda, const Sequence& nu) {
  const std::size_t n = nu.size();
  PairContext ctx;
  for (std::size_t t = 0; t < n; ++t) {
    auto i = static_cast<std::size_t>(nu[t]);
    ctx.lambda_at.push_back(to_long(lambda.coords[i]));
    ctx.d.push_back(to_long(datum.d(i)));
    std::vector<long> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_long(datum.a(i, static_cast<std::size_t>(nu[j]))));
    ctx.a.push_back(std::move(row));
  }
  for (std::size_t t = 0; t < n; ++t) {
    long full = ctx.lambda_at[t];
    for (std::size_t j = 0; j < t; ++j) full -= ctx.a[t][j];
    ctx.shift.push_back(LaurentPoly::monomial(ctx.d[t] * (full - 1)));
  }
  return ctx;
}

LaurentPoly term(const PairContext& ctx, const Permutation& w) {
  const std::size_t n = ctx.d.size();
  LaurentPoly prod = LaurentPoly::monomial(0);
  for (std::size_t t = 0; t < n; ++t) {
    long N = ctx.lambda_at[t];
    for (std::size_t j = 0; j < t; ++j)
      if (w(static_cast<int>(j)) < w(static_cast<int>(t))) N -= ctx.a[t][j];
    if (N == 0) return {};
    prod = prod * quantum_integer(N, ctx.d[t]) * ctx.shift[t];
  }
  return prod;
}

}  // namespace

LaurentPoly graded_dim_pair(const CartanDatum& datum, const DominantWeight& lambda,
                            const Sequence& nu, const Sequence& nu2) {
  LaurentPoly total;
  auto ws = orbit_transporters(nu, nu2);
  if (ws.empty()) return total;
  auto ctx = make_context(datum, lambda, nu);
  for (const auto& w : ws) total += term(ctx, w);
  return total;
}

LaurentPoly graded_dim_algebra(const CartanDatum& datum, const DominantWeight& lambda,
                               const RootVector& alpha, int perm_bound) {
  const Int n = alpha.height();
  if (n > perm_bound)
    throw UsageError("|alpha| = " + n.get_str() + " exceeds the permutation bound " +
                     std::to_string(perm_bound));
  LaurentPoly total;
  auto perms = all_permutations(to_int(n));
  // Every pair (nu, w nu) is visited exactly once.
  for (const auto& nu : sequences_of_content(alpha)) {
    auto ctx = make_context(datum, lambda, nu);
    for (const auto& w : perms) total += term(ctx, w);
  }
  return total;
}

}  // namespace klr
