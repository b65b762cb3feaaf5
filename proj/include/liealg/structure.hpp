#pragma once
// Structure constants of 3-dimensional Lie algebras over an exact scalar
// field: bracket evaluation, Jacobi residuals, exact change of basis, and
// the JSON exchange format.

#include <array>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "exact/matrix.hpp"
#include "exact/ratfunc.hpp"
#include "exact/rational.hpp"

namespace liealg {

// Levi-Civita symbol, indices 1..3.
inline int epsilon(int i, int j, int k) {
    return (i - j) * (j - k) * (k - i) / 2;
}

// Antisymmetric tensor f_ij^k with [X_i, X_j] = f_ij^k X_k (indices 1..3).
// K is exact::Rational or exact::RatFunc.
template <typename K>
class StructureConstants {
public:
    StructureConstants() = default;

    // f_ij^k
    const K& operator()(int i, int j, int k) const {
        check_index(i);
        check_index(j);
        check_index(k);
        return f_[i - 1][j - 1][k - 1];
    }

    // Sets f_ij^k = v and f_ji^k = -v; a diagonal entry (i == j) only
    // accepts zero.
    void set(int i, int j, int k, const K& v) {
        check_index(i);
        check_index(j);
        check_index(k);
        if (i == j && !is_zero(v))
            throw std::invalid_argument(
                "StructureConstants::set: f_ii^k must vanish");
        f_[i - 1][j - 1][k - 1] = v;
        f_[j - 1][i - 1][k - 1] = -v;
    }

    bool is_zero_tensor() const {
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    if (!is_zero((*this)(i, j, k))) return false;
        return true;
    }

    friend bool operator==(const StructureConstants& x,
                           const StructureConstants& y) {
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    if (!(x(i, j, k) == y(i, j, k))) return false;
        return true;
    }
    friend bool operator!=(const StructureConstants& x,
                           const StructureConstants& y) {
        return !(x == y);
    }

private:
    static void check_index(int i) {
        if (i < 1 || i > 3)
            throw std::out_of_range("StructureConstants: index out of range");
    }
    std::array<std::array<std::array<K, 3>, 3>, 3> f_{};
};

template <typename K>
std::array<K, 3> bracket(const StructureConstants<K>& f,
                         const std::array<K, 3>& x,
                         const std::array<K, 3>& y) {
    std::array<K, 3> z{};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (is_zero(x[i - 1]) || is_zero(y[j - 1])) continue;
            for (int k = 1; k <= 3; ++k)
                z[k - 1] += x[i - 1] * y[j - 1] * f(i, j, k);
        }
    return z;
}

// Jacobi residual
//   J_ijk^m = sum_l ( f_ij^l f_lk^m + f_jk^l f_li^m + f_ki^l f_lj^m ),
// the coefficient of X_m in [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j].
template <typename K>
K jacobi_residual(const StructureConstants<K>& f, int i, int j, int k, int m) {
    K r{};
    for (int l = 1; l <= 3; ++l)
        r += f(i, j, l) * f(l, k, m) + f(j, k, l) * f(l, i, m) +
             f(k, i, l) * f(l, j, m);
    return r;
}

// In dimension 3 only the triple (1,2,3) gives a nontrivial identity.
template <typename K>
bool satisfies_jacobi(const StructureConstants<K>& f) {
    for (int m = 1; m <= 3; ++m)
        if (!is_zero(jacobi_residual(f, 1, 2, 3, m))) return false;
    return true;
}

// New basis X'_i = A^m_i X_m (column i of A holds the old components of
// X'_i):  f'_ij^k = A^m_i A^n_j f_mn^p (A^{-1})^k_p.
template <typename K>
StructureConstants<K> change_basis(const StructureConstants<K>& f,
                                   const exact::Mat3<K>& A) {
    exact::Mat3<K> Ainv = exact::matrix_inverse(A);
    StructureConstants<K> out;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                K s{};
                for (int m = 1; m <= 3; ++m)
                    for (int n = 1; n <= 3; ++n) {
                        if (is_zero(A(m - 1, i - 1)) ||
                            is_zero(A(n - 1, j - 1)))
                            continue;
                        for (int p = 1; p <= 3; ++p)
                            s += A(m - 1, i - 1) * A(n - 1, j - 1) *
                                 f(m, n, p) * Ainv(k - 1, p - 1);
                    }
                out.set(i, j, k, s);
            }
    return out;
}

// JSON form: {"basis_dim": 3, "brackets": [{"i":1,"j":2,"k":3,"c":"1"},...]}
// with i < j and nonzero coefficients only, in (i,j,k) order.
nlohmann::json algebra_to_json(const StructureConstants<exact::Rational>& f);
nlohmann::json algebra_to_json(const StructureConstants<exact::RatFunc>& f);
// Throw std::invalid_argument on malformed input.
StructureConstants<exact::Rational> algebra_from_json(const nlohmann::json& j);
StructureConstants<exact::RatFunc> algebra_from_json_symbolic(
    const nlohmann::json& j);

}  // namespace liealg
