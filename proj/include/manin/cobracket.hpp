#pragma once
// The Lie-bialgebra view of a Manin triple: the dual brackets define a
// cobracket delta: g -> g x g, delta(X_i) = delta_i^{jk} X_j x X_k with
// delta_i^{jk} = ft^{jk}_i.  Its co-Jacobi identity is the Jacobi identity
// of G~, and its 1-cocycle condition with respect to the adjoint action is
// the mixed compatibility identity — both equalities are index-for-index
// under the dictionaries spelled out below.

#include "manin/triple.hpp"

namespace manin {

// delta_i^{jk}
template <typename K>
K cobracket(const ManinTriple<K>& t, int i, int j, int k) {
    return t.dual(j, k, i);
}

// Co-Jacobi residual of the cobracket,
//   C^{abc}_i = sum_l ( delta_l^{ab} delta_i^{lc}
//                     + delta_l^{bc} delta_i^{la}
//                     + delta_l^{ca} delta_i^{lb} ),
// equal to jacobi_residual(dual, a, b, c, i) — same indices, same sign.
template <typename K>
K co_jacobi_residual(const ManinTriple<K>& t, int a, int b, int c, int i) {
    K r{};
    for (int l = 1; l <= 3; ++l)
        r += cobracket(t, l, a, b) * cobracket(t, i, l, c) +
             cobracket(t, l, b, c) * cobracket(t, i, l, a) +
             cobracket(t, l, c, a) * cobracket(t, i, l, b);
    return r;
}

// 1-cocycle residual of delta with respect to ad:
//   coefficient of X_a x X_b in
//   delta([X_i, X_j]) - (ad_i x 1 + 1 x ad_i) delta(X_j)
//                     + (ad_j x 1 + 1 x ad_j) delta(X_i),
// equal to mixed_jacobi_residual(t, a, b, i, j) — the dictionary maps the
// residual R^{jk}_{mi} via (j,k,m,i) -> (a,b,i,j).
template <typename K>
K cocycle_residual(const ManinTriple<K>& t, int i, int j, int a, int b) {
    K r{};
    for (int k = 1; k <= 3; ++k) r += t.g(i, j, k) * cobracket(t, k, a, b);
    for (int l = 1; l <= 3; ++l) {
        r -= t.g(i, l, a) * cobracket(t, j, l, b);
        r -= t.g(i, l, b) * cobracket(t, j, a, l);
        r += t.g(j, l, a) * cobracket(t, i, l, b);
        r += t.g(j, l, b) * cobracket(t, i, a, l);
    }
    return r;
}

}  // namespace manin
