#pragma once
// Small polynomial helpers shared by the solver sources (defined in
// family.cpp).

#include <functional>
#include <map>
#include <string>

#include "exact/poly.hpp"
#include "exact/ratfunc.hpp"

namespace solver::detail {

// Scales to primitive integer coefficients with a positive leading
// coefficient (canonical representative of the generator up to scale).
exact::MultiPoly normalize_generator(exact::MultiPoly p);

// Rebuilds p with every variable name passed through `map`.
exact::MultiPoly rename_variables(
    const exact::MultiPoly& p,
    const std::function<std::string(const std::string&)>& map);

// Substitutes rational functions for the variables of p (every variable of
// p must be assigned; missing names throw std::invalid_argument).
exact::RatFunc subst_ratfunc(
    const exact::MultiPoly& p,
    const std::map<std::string, exact::RatFunc>& assignment);

}  // namespace solver::detail
