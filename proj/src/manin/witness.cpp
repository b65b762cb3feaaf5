#include "manin/witness.hpp"

#include <array>
#include <functional>

namespace manin {

using exact::Rational;

bool verify_witness(const TripleQ& src, const TripleQ& dst, const Mat3Q& A) {
    if (exact::det3(A).is_zero()) return false;
    return transform(src, A) == dst;
}

std::vector<Rational> witness_candidate_values(int bound) {
    std::vector<Rational> vals{Rational(0)};
    for (int m = 1; m <= bound; ++m) {
        vals.push_back(Rational(m));
        vals.push_back(Rational(-m));
    }
    for (int p = 1; p <= bound; p += 2) {
        vals.push_back(Rational(p, 2));
        vals.push_back(Rational(-p, 2));
    }
    return vals;
}

namespace {

using Vec3 = std::array<Rational, 3>;
using Tensor = liealg::StructureConstants<Rational>;

bool in_candidate_set(const Rational& x, int bound) {
    // canonical form makes the numerator odd whenever the denominator is 2
    if (x.den() != 1 && x.den() != 2) return false;
    exact::BigInt n = x.num();
    if (n < 0) n = -n;
    return n <= bound;
}

// Columns hold the new basis vectors: A(r, c) = cols[c][r].
Mat3Q assemble_matrix(const std::array<Vec3, 3>& cols) {
    Mat3Q A;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) A(r, c) = cols[c][r];
    return A;
}

std::optional<Mat3Q> check_candidate(
    const Tensor& f_src, const Tensor& f_dst, const std::array<Vec3, 3>& cols,
    const std::function<bool(const Mat3Q&)>& extra) {
    Mat3Q A = assemble_matrix(cols);
    if (exact::det3(A).is_zero()) return std::nullopt;
    if (liealg::change_basis(f_src, A) != f_dst) return std::nullopt;
    if (!extra(A)) return std::nullopt;
    return A;
}

// Enumerate A column-by-column against [X'_i, X'_j] = f_dst_ij^k X'_k.
std::optional<Mat3Q> search_columns(
    const Tensor& f_src, const Tensor& f_dst, int bound,
    const std::function<bool(const Mat3Q&)>& extra) {
    const std::vector<Rational> vals = witness_candidate_values(bound);
    std::vector<Vec3> vecs;
    for (const Rational& v0 : vals)
        for (const Rational& v1 : vals)
            for (const Rational& v2 : vals) {
                if (v0.is_zero() && v1.is_zero() && v2.is_zero()) continue;
                vecs.push_back({v0, v1, v2});
            }

    // A determining bracket: a pair (i,j) whose target coefficient on the
    // remaining index k is nonzero, so column k follows from (u_i, u_j).
    // Pairs are probed in the fixed order (1,2), (2,3), (3,1).
    int di = 0, dj = 0, dk = 0;
    bool have_det_pair = false;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 1}}) {
        int k = 6 - i - j;
        if (!f_dst(i, j, k).is_zero()) {
            di = i;
            dj = j;
            dk = k;
            have_det_pair = true;
            break;
        }
    }

    if (have_det_pair) {
        const Rational c = f_dst(di, dj, dk);
        const Rational ci = f_dst(di, dj, di);
        const Rational cj = f_dst(di, dj, dj);
        for (const Vec3& ui : vecs)
            for (const Vec3& uj : vecs) {
                Vec3 w = liealg::bracket(f_src, ui, uj);
                Vec3 uk;
                bool usable = true, all_zero = true;
                for (int q = 0; q < 3; ++q) {
                    uk[q] = (w[q] - ci * ui[q] - cj * uj[q]) / c;
                    if (!in_candidate_set(uk[q], bound)) {
                        usable = false;
                        break;
                    }
                    if (!uk[q].is_zero()) all_zero = false;
                }
                if (!usable || all_zero) continue;
                std::array<Vec3, 3> cols;
                cols[di - 1] = ui;
                cols[dj - 1] = uj;
                cols[dk - 1] = uk;
                if (auto A = check_candidate(f_src, f_dst, cols, extra))
                    return A;
            }
        return std::nullopt;
    }

    // No determining bracket: filter (u_1, u_2) by the (1,2) bracket, then
    // enumerate u_3.
    const Rational c1 = f_dst(1, 2, 1);
    const Rational c2 = f_dst(1, 2, 2);
    for (const Vec3& u1 : vecs)
        for (const Vec3& u2 : vecs) {
            Vec3 w = liealg::bracket(f_src, u1, u2);
            bool match = true;
            for (int q = 0; q < 3 && match; ++q)
                match = w[q] == c1 * u1[q] + c2 * u2[q];
            if (!match) continue;
            for (const Vec3& u3 : vecs)
                if (auto A = check_candidate(f_src, f_dst, {u1, u2, u3},
                                             extra))
                    return A;
        }
    return std::nullopt;
}

}  // namespace

std::optional<Mat3Q> search_witness(const TripleQ& src, const TripleQ& dst,
                                    int bound) {
    if (src == dst) return Mat3Q::identity();
    bool src_abelian = src.g.is_zero_tensor();
    bool dst_abelian = dst.g.is_zero_tensor();
    if (src_abelian != dst_abelian) return std::nullopt;

    if (src_abelian) {
        // Only the dual side constrains A; with M = A^T the requirement
        // change_basis(src.dual, (A^-1)^T) == dst.dual becomes
        // change_basis(dst.dual, M) == src.dual.
        auto M = search_columns(dst.dual, src.dual, bound,
                                [](const Mat3Q&) { return true; });
        if (!M) return std::nullopt;
        Mat3Q A = exact::transpose(*M);
        if (transform(src, A) == dst) return A;
        return std::nullopt;
    }

    auto dual_ok = [&](const Mat3Q& A) {
        return liealg::change_basis(
                   src.dual, exact::transpose(exact::matrix_inverse(A))) ==
               dst.dual;
    };
    return search_columns(src.g, dst.g, bound, dual_ok);
}

}  // namespace manin
