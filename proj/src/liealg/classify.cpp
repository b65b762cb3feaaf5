#include "liealg/classify.hpp"

namespace liealg {

using exact::Mat3;
using exact::Rational;

std::string to_string(const Classification& c) {
    std::string s = to_string(c.bianchi);
    if (has_parameter(c.bianchi))
        s += " (a^2 = " + c.param_a_squared.to_string() + ")";
    return s;
}

namespace {

// Elementary symmetric functions of the eigenvalues of a symmetric 3x3
// matrix: e1 = trace, e2 = sum of principal 2x2 minors, e3 = det.  The
// matrix is diagonalizable, so rank and definiteness read off them:
//   rank 3  <=>  e3 != 0; then definite  <=>  e2 > 0 and e1*e3 > 0;
//   rank 2  <=>  e3 = 0, e2 != 0; the two nonzero eigenvalues multiply
//               to e2, so same sign  <=>  e2 > 0;
//   rank 1  <=>  e3 = e2 = 0, n != 0.
struct SymInvariants {
    Rational e1, e2, e3;
};

SymInvariants sym_invariants(const Mat3<Rational>& n) {
    SymInvariants s;
    s.e1 = n(0, 0) + n(1, 1) + n(2, 2);
    s.e2 = Rational();
    for (int p = 0; p < 3; ++p) {
        int q = (p + 1) % 3, r = (p + 2) % 3;
        s.e2 += n(q, q) * n(r, r) - n(q, r) * n(r, q);
    }
    s.e3 = exact::det3(n);
    return s;
}

bool matrix_is_zero(const Mat3<Rational>& n) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!n(i, j).is_zero()) return false;
    return true;
}

}  // namespace

Classification classify(const StructureConstants<Rational>& f) {
    if (!satisfies_jacobi(f))
        throw std::invalid_argument(
            "classify: structure constants violate the Jacobi identity");
    NADecomposition<Rational> d = na_decompose(f);
    SymInvariants s = sym_invariants(d.n);
    const Rational zero, four(4);

    bool a_is_zero =
        d.a[0].is_zero() && d.a[1].is_zero() && d.a[2].is_zero();
    if (a_is_zero) {
        if (matrix_is_zero(d.n)) return {BianchiClass::I, zero};
        if (!s.e3.is_zero()) {
            bool definite = s.e2 > zero && (s.e1 * s.e3) > zero;
            return {definite ? BianchiClass::IX : BianchiClass::VIII, zero};
        }
        if (!s.e2.is_zero())
            return {s.e2 > zero ? BianchiClass::VII0 : BianchiClass::VI0,
                    zero};
        return {BianchiClass::II, zero};
    }

    // a != 0: Jacobi gives n a = 0, so n is singular here.
    if (!s.e3.is_zero())
        throw std::logic_error("classify: nonsingular n with a != 0");
    if (matrix_is_zero(d.n)) return {BianchiClass::V, zero};
    if (s.e2.is_zero()) return {BianchiClass::IV, zero};

    // n of rank 2: the class is decided by the adjoint action on the
    // 2-dimensional ideal U = ker(a).  With p the first index where
    // a_p != 0 and u_q = a_p e_q - a_q e_p (q != p) spanning U, the matrix
    // of ad_{e_p} on U is M[r][c] = f_{p,q_c}^{q_r}; U is abelian, so any
    // other choice of complement shifts nothing and chi = tr(M)^2/det(M)
    // is an invariant.
    int p = 0;
    while (d.a[p].is_zero()) ++p;
    int q[2], t = 0;
    for (int u = 0; u < 3; ++u)
        if (u != p) q[t++] = u;
    Rational M[2][2];
    for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 2; ++r) M[r][c] = f(p + 1, q[c] + 1, q[r] + 1);
    Rational tr = M[0][0] + M[1][1];
    Rational det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    if (det.is_zero()) return {BianchiClass::III, zero};
    Rational chi = tr * tr / det;
    // Eigenvalues of M: real distinct nonzero when chi < 0 or chi > 4
    // (VI_a, standard parameter chi = 4a^2/(a^2-1)); a complex pair when
    // 0 < chi < 4 (VII_a, chi = 4a^2/(a^2+1)).  chi = 0 or 4 would put n
    // at rank <= 1, excluded above.
    if (chi > zero && chi < four)
        return {BianchiClass::VIIa, chi / (four - chi)};
    if (chi < zero || chi > four)
        return {BianchiClass::VIa, chi / (chi - four)};
    throw std::logic_error("classify: degenerate chi with rank-2 n");
}

}  // namespace liealg
