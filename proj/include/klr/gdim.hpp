#pragma once

#include <vector>

#include "klr/cartan.hpp"
#include "klr/laurent.hpp"
#include "klr/permutation.hpp"

namespace klr {

// [m]_d = (q^{dm} - q^{-dm}) / (q^d - q^{-d}); [0] = 0, [-m] = -[m].
LaurentPoly quantum_integer(long m, long d);

// All w with w nu = nu2; empty when the contents differ.
std::vector<Permutation> orbit_transporters(const Sequence& nu, const Sequence& nu2);

// Graded dimension of e(nu) R^Lambda e(nu2):
//   sum_{w nu = nu2} prod_t [N(w,nu,t)]_{nu_t} q_{nu_t}^{N(1,nu,t) - 1}
// with N(w,nu,t) = <h_{nu_t}, Lambda - sum_{j<t, w(j)<w(t)} alpha_{nu_j}>.
LaurentPoly graded_dim_pair(const CartanDatum& datum, const DominantWeight& lambda,
                            const Sequence& nu, const Sequence& nu2);

// Sum over all pairs in I^alpha. Throws UsageError above the permutation bound.
LaurentPoly graded_dim_algebra(const CartanDatum& datum, const DominantWeight& lambda,
                               const RootVector& alpha, int perm_bound = 8);

}  // namespace klr
