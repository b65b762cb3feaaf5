#pragma once
// Residual quadratic conditions on a linear dual family.
//
// Substituting the family into the Jacobi identity of the dual algebra
// leaves quadratic conditions in the free parameters; their vanishing locus
// is exactly where a family member is a Lie algebra (hence a Manin triple).

#include <vector>

#include "exact/poly.hpp"
#include "exact/rational.hpp"
#include "solver/family.hpp"

namespace solver {

// Generators of the residual ideal.  Free parameter t(i+1) is rendered as
// the component name of its column (e.g. "ft12_3"), so the generators read
// as conditions on dual components; for a symbolic family the coefficients
// involve "a".  Primitive, positive leading coefficient, deduplicated,
// zero generators dropped.
std::vector<exact::MultiPoly> dual_jacobi_ideal(const DualFamily& fam);

struct SamplingReport {
    bool equivalent = true;
    long long points = 0;
    // First parameter point where one side vanished and the other did not
    // (empty when equivalent).
    std::vector<exact::Rational> counterexample_t;
};

// Compares, over a deterministic point cloud, the vanishing locus of the
// family's residual against a reference generator set written over the nine
// component names (and "a").  The cloud is the full grid {0,1,-1}^k plus
// `samples` seeded random rational points (numerators in [-5,5],
// denominators in {1,2}).  At every point three values must agree: the
// numeric dual-Jacobi residual of the specialized tensor, the rendered
// generators from dual_jacobi_ideal, and the reference generators.
// The family must be numeric (symbolic_a -> std::invalid_argument).
SamplingReport ideal_equivalent(const DualFamily& fam,
                                const std::vector<exact::MultiPoly>& reference,
                                unsigned long long seed = 20020517ULL,
                                int samples = 200);

}  // namespace solver
