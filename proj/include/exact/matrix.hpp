#pragma once
// Small dense 3x3 matrices over an exact scalar (Rational or RatFunc).

#include <array>
#include <stdexcept>

namespace exact {

template <typename K>
struct Mat3 {
    std::array<std::array<K, 3>, 3> a{};

    K& operator()(int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const K& operator()(int i, int j) const {
        return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    static Mat3 identity() {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            m(i, i) = K(1);
        return m;
    }

    friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }
};

template <typename K>
Mat3<K> operator*(const Mat3<K>& x, const Mat3<K>& y) {
    Mat3<K> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            K s = K(0);
            for (int k = 0; k < 3; ++k)
                s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

template <typename K>
Mat3<K> transpose(const Mat3<K>& m) {
    Mat3<K> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = m(j, i);
    return r;
}

template <typename K>
K det3(const Mat3<K>& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Exact inverse via the adjugate; throws std::domain_error when the
// determinant is (identically) zero.  For parametric matrices a nonzero
// determinant polynomial may still vanish at special parameter values;
// those surface later as vanishing-denominator evaluation errors.
template <typename K>
Mat3<K> matrix_inverse(const Mat3<K>& m) {
    K d = det3(m);
    if (is_zero(d))
        throw std::domain_error("matrix_inverse: singular matrix");
    Mat3<K> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3;  // cofactor transpose
            int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r(i, j) = (m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1)) / d;
        }
    return r;
}

}  // namespace exact
