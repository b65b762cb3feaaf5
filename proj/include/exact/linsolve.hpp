#pragma once
// Fraction-free (Bareiss) elimination over polynomial entries and exact
// nullspace extraction over the rational-function field.

#include <cstddef>
#include <vector>

#include "exact/poly.hpp"
#include "exact/ratfunc.hpp"

namespace exact {

struct Echelon {
    // Row echelon form produced by fraction-free elimination; zero rows
    // removed.  rows[r][pivot_cols[r]] is the pivot of row r.
    std::vector<std::vector<MultiPoly>> rows;
    std::vector<std::size_t> pivot_cols;
    // Pivot polynomials that depend on parameters (deduplicated): the
    // echelon form is valid exactly where none of these vanish.
    std::vector<MultiPoly> parametric_pivots;

    std::size_t rank() const { return pivot_cols.size(); }
    // Columns carrying no pivot, in increasing order.
    std::vector<std::size_t> free_columns(std::size_t ncols) const;
};

// Deterministic pivoting: process columns left to right; within a column
// take the first remaining row with a nonzero (not identically zero) entry.
// The Bareiss update keeps every intermediate entry polynomial:
//   a'_ij = (p * a_ij - a_ik * a_kj) / p_prev     (division exact).
Echelon bareiss_echelon(std::vector<std::vector<MultiPoly>> rows);

// Solves U x = 0 by back-substitution over the rational-function field,
// with the free columns bound to the given values (aligned with
// free_columns(ncols)).  Returns the full solution vector of length ncols.
std::vector<RatFunc> echelon_backsolve(const Echelon& ech, std::size_t ncols,
                                       const std::vector<RatFunc>& free_values);

}  // namespace exact
