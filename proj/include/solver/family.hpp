#pragma once
// Linear solution families for the dual half of a Manin triple.
//
// Fixing the first half g (a three-dimensional real Lie algebra in standard
// form), the compatibility identity of the double is *linear* in the nine
// independent dual components ft^{ij}_k (i<j).  This module builds that
// linear system, reduces it exactly, and exposes the solution space as a
// tensor whose entries are linear in free parameters t1..tk.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact/linsolve.hpp"
#include "exact/ratfunc.hpp"
#include "liealg/bianchi.hpp"
#include "liealg/structure.hpp"
#include "manin/triple.hpp"

namespace solver {

// Fixed column ordering of the nine independent dual components: column c
// holds ft^{ij}_k with (i, j, k) = component_indices()[c] (1-based, i < j).
const std::array<std::array<int, 3>, 9>& component_indices();

// Matching canonical variable names "ft12_1" ... "ft23_3" (parseable
// identifiers, used in rendered relations and ideal generators).
const std::array<std::string, 9>& component_names();

struct DualFamily {
    liealg::BianchiClass algebra = liealg::BianchiClass::I;

    // True when the class parameter `a` stays symbolic in the family.
    bool symbolic_a = false;
    // The numeric parameter used when symbolic_a is false; meaningful only
    // for the parametrized classes.
    exact::Rational a_value;

    // Dual tensor components, linear in the free parameters t1..tk, with
    // coefficients in the field of rational functions of `a` when symbolic.
    liealg::StructureConstants<exact::RatFunc> dual;

    // Non-pivot columns of the reduced system in increasing order; free
    // parameter t(i+1) is bound to component free_cols[i].
    std::vector<std::size_t> free_cols;
    int nullspace_dim = 0;

    // Reduced rows of the linear system rendered over the component names
    // (primitive integer coefficients, positive leading coefficient), in
    // pivot order.
    std::vector<exact::MultiPoly> relations;

    // Parameter-dependent pivot polynomials: the reduction is valid exactly
    // where none of these vanish.
    std::vector<exact::MultiPoly> assumptions;
};

// The full linear system over the nine dual components for a first half
// with structure constants g: one row per identity instance, zero rows
// dropped.  Entries are polynomials in whatever parameters g carries.
std::vector<std::vector<exact::MultiPoly>> mixed_jacobi_system(
    const liealg::StructureConstants<exact::RatFunc>& g);

// Solves the system for the standard form of the given class.  With `a`
// present, parametrized classes are solved at that value (the standard-form
// constraints are enforced); without it they are solved symbolically.
// Classes without a parameter reject a nonzero `a`.
DualFamily solve_dual_family(liealg::BianchiClass c,
                             const std::optional<exact::Rational>& a = {});

// Solution-space dimension for every class, parametrized classes solved
// symbolically.
std::map<liealg::BianchiClass, int> solution_dimensions();

// A numeric member of the family: substitutes t1..tk (and `a` when the
// family is symbolic) and pairs the dual tensor with the standard first
// half.  Throws std::invalid_argument when the value count is wrong, when
// `a` is missing/contradicts the family or violates the class constraints,
// or when a recorded assumption vanishes at `a`.  The result satisfies the
// compatibility identity by construction; whether the dual side satisfies
// its own Jacobi identity depends on the residual ideal.
manin::ManinTriple<exact::Rational> specialize(const DualFamily& fam,
                          const std::vector<exact::Rational>& t,
                          const std::optional<exact::Rational>& a = {});

}  // namespace solver
