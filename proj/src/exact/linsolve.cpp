#include "exact/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace exact {

std::vector<std::size_t> Echelon::free_columns(std::size_t ncols) const {
    std::vector<std::size_t> free;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (p < pivot_cols.size() && pivot_cols[p] == c)
            ++p;
        else
            free.push_back(c);
    }
    return free;
}

Echelon bareiss_echelon(std::vector<std::vector<MultiPoly>> rows) {
    Echelon ech;
    if (rows.empty())
        return ech;
    const std::size_t ncols = rows[0].size();
    for (const auto& row : rows)
        if (row.size() != ncols)
            throw std::invalid_argument("bareiss_echelon: ragged rows");

    auto record_parametric = [&](const MultiPoly& p) {
        if (p.is_constant())
            return;
        // Normalize to a primitive polynomial with positive leading
        // coefficient before deduplicating.
        Rational c = p.content();
        if (p.leading_coefficient().sign() < 0)
            c = -c;
        MultiPoly q = p.divide_exact(MultiPoly(c));
        if (std::find(ech.parametric_pivots.begin(), ech.parametric_pivots.end(),
                      q) == ech.parametric_pivots.end())
            ech.parametric_pivots.push_back(q);
    };

    std::size_t r = 0;
    MultiPoly prev(Rational(1));
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero())
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        const MultiPoly p = rows[r][c];
        ech.pivot_cols.push_back(c);
        record_parametric(p);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const MultiPoly head = rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j) {
                if (j == c) {
                    rows[i][j] = MultiPoly();
                    continue;
                }
                rows[i][j] =
                    (p * rows[i][j] - head * rows[r][j]).divide_exact(prev);
            }
        }
        prev = p;
        ++r;
    }
    rows.resize(r);  // everything below the last pivot row is zero
    ech.rows = std::move(rows);
    return ech;
}

std::vector<RatFunc> echelon_backsolve(const Echelon& ech, std::size_t ncols,
                                       const std::vector<RatFunc>& free_values) {
    std::vector<std::size_t> free = ech.free_columns(ncols);
    if (free.size() != free_values.size())
        throw std::invalid_argument("echelon_backsolve: expected " +
                                    std::to_string(free.size()) +
                                    " free values, got " +
                                    std::to_string(free_values.size()));
    std::vector<RatFunc> x(ncols, RatFunc());
    for (std::size_t i = 0; i < free.size(); ++i)
        x[free[i]] = free_values[i];
    for (std::size_t ri = ech.rows.size(); ri-- > 0;) {
        std::size_t c = ech.pivot_cols[ri];
        RatFunc s;
        for (std::size_t j = c + 1; j < ncols; ++j)
            if (!ech.rows[ri][j].is_zero() && !x[j].is_zero())
                s += RatFunc(ech.rows[ri][j]) * x[j];
        x[c] = -s / RatFunc(ech.rows[ri][c]);
    }
    return x;
}

}  // namespace exact
