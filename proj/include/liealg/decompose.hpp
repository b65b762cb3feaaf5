#pragma once
// The (n, a) presentation of an antisymmetric tensor in dimension 3:
//   f_ij^k = eps_ijl n^{lk} + delta_i^k a_j - delta_j^k a_i
// with n symmetric.  The decomposition is a bijection, and the Jacobi
// identity holds exactly when n a = 0.

#include <array>

#include "liealg/structure.hpp"

namespace liealg {

template <typename K>
struct NADecomposition {
    exact::Mat3<K> n;    // symmetric, n(m-1, k-1) = n^{mk}
    std::array<K, 3> a;  // covector a_i
};

template <typename K>
NADecomposition<K> na_decompose(const StructureConstants<K>& f) {
    NADecomposition<K> d;
    const K half(exact::Rational(1, 2));
    // a_i = -(1/2) f_ij^j
    for (int i = 1; i <= 3; ++i) {
        K s{};
        for (int j = 1; j <= 3; ++j) s += f(i, j, j);
        d.a[i - 1] = -(s * half);
    }
    // n^{mk} = (1/2) eps^{ijm} f_ij^k - eps^{kjm} a_j
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 3; ++k) {
            K s{};
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    int e = epsilon(i, j, m);
                    if (e == 1)
                        s += f(i, j, k);
                    else if (e == -1)
                        s -= f(i, j, k);
                }
            s = s * half;
            for (int j = 1; j <= 3; ++j) {
                int e = epsilon(k, j, m);
                if (e == 1)
                    s -= d.a[j - 1];
                else if (e == -1)
                    s += d.a[j - 1];
            }
            d.n(m - 1, k - 1) = s;
        }
    return d;
}

template <typename K>
StructureConstants<K> recompose(const NADecomposition<K>& d) {
    StructureConstants<K> f;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                K s{};
                for (int l = 1; l <= 3; ++l) {
                    int e = epsilon(i, j, l);
                    if (e == 1)
                        s += d.n(l - 1, k - 1);
                    else if (e == -1)
                        s -= d.n(l - 1, k - 1);
                }
                if (i == k) s += d.a[j - 1];
                if (j == k) s -= d.a[i - 1];
                f.set(i, j, k, s);
            }
    return f;
}

// (n a)_m = n^{mk} a_k; zero exactly when the tensor satisfies Jacobi.
template <typename K>
std::array<K, 3> n_dot_a(const NADecomposition<K>& d) {
    std::array<K, 3> r{};
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 3; ++k)
            r[m - 1] += d.n(m - 1, k - 1) * d.a[k - 1];
    return r;
}

template <typename K>
bool n_dot_a_vanishes(const NADecomposition<K>& d) {
    auto r = n_dot_a(d);
    return is_zero(r[0]) && is_zero(r[1]) && is_zero(r[2]);
}

}  // namespace liealg
