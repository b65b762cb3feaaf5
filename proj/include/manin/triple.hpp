#pragma once
// Manin triples in dimension 3 + 3: a pair of Lie algebras G (basis X_i,
// structure constants f_ij^k) and G~ (dual basis X~^i, structure constants
// ft^{jk}_i) such that the double bracket
//   [X_i, X~^j] = f_ki^j X~^k + ft^{jk}_i X_k
// makes G + G~ a Lie algebra in which the canonical pairing
// <X_i, X~^j> = delta_i^j is ad-invariant.

#include <string>
#include <vector>

#include "liealg/structure.hpp"

namespace manin {

template <typename K>
struct ManinTriple {
    liealg::StructureConstants<K> g;     // f_ij^k
    liealg::StructureConstants<K> dual;  // dual(j,k,i) = ft^{jk}_i

    friend bool operator==(const ManinTriple& x, const ManinTriple& y) {
        return x.g == y.g && x.dual == y.dual;
    }
    friend bool operator!=(const ManinTriple& x, const ManinTriple& y) {
        return !(x == y);
    }
};

// Compatibility residual — the mixed Jacobi identity of the double:
//   R^{jk}_{mi} = ft^{jk}_l f_mi^l + ft^{kl}_m f_li^j + ft^{jl}_i f_lm^k
//               + ft^{jl}_m f_il^k + ft^{kl}_i f_ml^j   (summed over l).
template <typename K>
K mixed_jacobi_residual(const ManinTriple<K>& t, int j, int k, int m, int i) {
    K r{};
    for (int l = 1; l <= 3; ++l)
        r += t.dual(j, k, l) * t.g(m, i, l) +
             t.dual(k, l, m) * t.g(l, i, j) +
             t.dual(j, l, i) * t.g(l, m, k) +
             t.dual(j, l, m) * t.g(i, l, k) +
             t.dual(k, l, i) * t.g(m, l, j);
    return r;
}

template <typename K>
bool mixed_jacobi_holds(const ManinTriple<K>& t) {
    for (int j = 1; j <= 3; ++j)
        for (int k = j + 1; k <= 3; ++k)
            for (int m = 1; m <= 3; ++m)
                for (int i = 1; i <= 3; ++i)
                    if (!is_zero(mixed_jacobi_residual(t, j, k, m, i)))
                        return false;
    return true;
}

// Names of the defining identities that fail: "jacobi(g)", "jacobi(g~)",
// "mixed".  Empty for a valid Manin triple.
template <typename K>
std::vector<std::string> triple_defects(const ManinTriple<K>& t) {
    std::vector<std::string> bad;
    if (!liealg::satisfies_jacobi(t.g)) bad.push_back("jacobi(g)");
    if (!liealg::satisfies_jacobi(t.dual)) bad.push_back("jacobi(g~)");
    if (!mixed_jacobi_holds(t)) bad.push_back("mixed");
    return bad;
}

template <typename K>
bool is_manin_triple(const ManinTriple<K>& t) {
    return triple_defects(t).empty();
}

// Validated constructor; throws std::invalid_argument naming the failed
// identities.
template <typename K>
ManinTriple<K> new_triple(const liealg::StructureConstants<K>& g,
                          const liealg::StructureConstants<K>& dual) {
    ManinTriple<K> t{g, dual};
    auto bad = triple_defects(t);
    if (!bad.empty()) {
        std::string msg = "new_triple: failed identities:";
        for (const auto& b : bad) msg += " " + b;
        throw std::invalid_argument(msg);
    }
    return t;
}

// The triple (G~, G): the same double with the roles of the two halves
// exchanged.  An involution.
template <typename K>
ManinTriple<K> dual_triple(const ManinTriple<K>& t) {
    return ManinTriple<K>{t.dual, t.g};
}

// Basis change X'_i = A^m_i X_m; the dual basis follows along as
// X~'^j = (A^-1)^j_m X~^m, so the pairing is preserved:
//   f' = change_basis(f, A),   ft' = change_basis(ft, (A^-1)^T).
// Composes as transform(transform(t, A), B) == transform(t, A*B).
template <typename K>
ManinTriple<K> transform(const ManinTriple<K>& t, const exact::Mat3<K>& A) {
    return ManinTriple<K>{
        liealg::change_basis(t.g, A),
        liealg::change_basis(t.dual,
                             exact::transpose(exact::matrix_inverse(A)))};
}

}  // namespace manin
