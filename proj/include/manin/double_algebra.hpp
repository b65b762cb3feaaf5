#pragma once
// The 6-dimensional double of a Manin triple: basis Y_1..Y_3 = X_1..X_3,
// Y_4..Y_6 = X~^1..X~^3, brackets
//   [X_i, X_j]   = f_ij^k X_k
//   [X~^i, X~^j] = ft^{ij}_k X~^k
//   [X_i, X~^j]  = f_ki^j X~^k + ft^{jk}_i X_k
// and the canonical pairing <Y_I, Y_J> = 1 iff {I, J} = {i, 3+i}.

#include <array>

#include "manin/triple.hpp"

namespace manin {

// Antisymmetric tensor F_IJ^K with indices 1..6.
template <typename K>
class DoubleAlgebra {
public:
    DoubleAlgebra() = default;

    const K& operator()(int I, int J, int Kk) const {
        check_index(I);
        check_index(J);
        check_index(Kk);
        return f_[I - 1][J - 1][Kk - 1];
    }

    void set(int I, int J, int Kk, const K& v) {
        check_index(I);
        check_index(J);
        check_index(Kk);
        if (I == J && !is_zero(v))
            throw std::invalid_argument("DoubleAlgebra::set: F_II^K must vanish");
        f_[I - 1][J - 1][Kk - 1] = v;
        f_[J - 1][I - 1][Kk - 1] = -v;
    }

private:
    static void check_index(int i) {
        if (i < 1 || i > 6)
            throw std::out_of_range("DoubleAlgebra: index out of range");
    }
    std::array<std::array<std::array<K, 6>, 6>, 6> f_{};
};

template <typename K>
DoubleAlgebra<K> build_double(const ManinTriple<K>& t) {
    DoubleAlgebra<K> d;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                d.set(i, j, k, t.g(i, j, k));
                d.set(3 + i, 3 + j, 3 + k, t.dual(i, j, k));
            }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                // [X_i, X~^j]: X~^k component f_ki^j, X_k component ft^{jk}_i
                d.set(i, 3 + j, 3 + k, t.g(k, i, j));
                d.set(i, 3 + j, k, t.dual(j, k, i));
            }
    return d;
}

template <typename K>
K double_jacobi_residual(const DoubleAlgebra<K>& d, int I, int J, int Kk,
                         int M) {
    K r{};
    for (int l = 1; l <= 6; ++l)
        r += d(I, J, l) * d(l, Kk, M) + d(J, Kk, l) * d(l, I, M) +
             d(Kk, I, l) * d(l, J, M);
    return r;
}

template <typename K>
bool double_satisfies_jacobi(const DoubleAlgebra<K>& d) {
    for (int I = 1; I <= 6; ++I)
        for (int J = I + 1; J <= 6; ++J)
            for (int Kk = J + 1; Kk <= 6; ++Kk)
                for (int M = 1; M <= 6; ++M)
                    if (!is_zero(double_jacobi_residual(d, I, J, Kk, M)))
                        return false;
    return true;
}

// <Y_I, Y_J> of the canonical pairing.
inline int pairing_form(int I, int J) {
    return (I + 3 == J || J + 3 == I) ? 1 : 0;
}

// <[Y_Z, Y_U], Y_V> + <Y_U, [Y_Z, Y_V]>; zero for every basis triple by
// construction of the double.
template <typename K>
K pairing_ad_invariance_residual(const DoubleAlgebra<K>& d, int Z, int U,
                                 int V) {
    K r{};
    for (int l = 1; l <= 6; ++l) {
        if (pairing_form(l, V)) r += d(Z, U, l);
        if (pairing_form(U, l)) r += d(Z, V, l);
    }
    return r;
}

template <typename K>
bool pairing_is_ad_invariant(const DoubleAlgebra<K>& d) {
    for (int Z = 1; Z <= 6; ++Z)
        for (int U = 1; U <= 6; ++U)
            for (int V = 1; V <= 6; ++V)
                if (!is_zero(pairing_ad_invariance_residual(d, Z, U, V)))
                    return false;
    return true;
}

}  // namespace manin
