#pragma once
// Transcribed solution-space descriptions used as regression targets: for
// each class, the known linear relations cutting out the dual solution
// space and the known residual quadratic generators, written over the
// component names (and "a" for the parametrized classes).

#include <optional>
#include <vector>

#include "exact/poly.hpp"
#include "exact/rational.hpp"
#include "solver/family.hpp"

namespace solver {

// Known linear relations for the class.  With `a` given the parametrized
// rows are instantiated at that value; otherwise they carry the symbol "a".
std::vector<exact::MultiPoly> reference_relations(
    liealg::BianchiClass c, const std::optional<exact::Rational>& a = {});

// Known residual quadratic generators (empty for the three classes whose
// residual vanishes identically; for the abelian class, the three generic
// dual-Jacobi components themselves).
std::vector<exact::MultiPoly> reference_ideal(
    liealg::BianchiClass c, const std::optional<exact::Rational>& a = {});

// True when every reference relation vanishes identically on the family
// (as a rational function of the free parameters and `a`) and the reference
// rows have rank 9 - nullspace_dim, i.e. the family is exactly the solution
// set of the reference relations.
bool reference_match(const DualFamily& fam);

}  // namespace solver
