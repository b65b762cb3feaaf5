#include "solver/reference.hpp"

#include <stdexcept>

#include "internal.hpp"

namespace solver {

using exact::MultiPoly;
using exact::Rational;
using exact::RatFunc;
using liealg::BianchiClass;

namespace {

MultiPoly xvar(int col) {
    return MultiPoly::variable(component_names()[col]);
}

MultiPoly apoly(const std::optional<Rational>& a) {
    return a ? MultiPoly(*a) : MultiPoly::variable("a");
}

// The three dual-Jacobi components of a fully generic antisymmetric tensor,
// written over the component names (the residual conditions of the abelian
// class, where nothing is constrained).
std::vector<MultiPoly> generic_jacobi_components() {
    liealg::StructureConstants<RatFunc> generic;
    const auto& idx = component_indices();
    for (int col = 0; col < 9; ++col)
        generic.set(idx[col][0], idx[col][1], idx[col][2],
                    RatFunc::variable(component_names()[col]));
    std::vector<MultiPoly> out;
    for (int n = 1; n <= 3; ++n)
        out.push_back(detail::normalize_generator(
            liealg::jacobi_residual(generic, 1, 2, 3, n).num()));
    return out;
}

}  // namespace

std::vector<MultiPoly> reference_relations(BianchiClass c,
                                           const std::optional<Rational>& a) {
    using P = MultiPoly;
    auto x = xvar;
    const P A = apoly(a);
    const P A2 = A * A;
    const P one(1);
    switch (c) {
        case BianchiClass::I:
            return {};
        case BianchiClass::II:
            return {x(3) - x(7), x(6), x(0) + x(8)};
        case BianchiClass::III:
            return {x(5) - x(1), x(0) - x(3), x(2) - x(1), x(4) - x(1),
                    x(8) - x(7)};
        case BianchiClass::IV:
            return {x(2), x(1), x(7) + x(3) + P(2) * x(0), x(8) - x(0), x(5)};
        case BianchiClass::V:
            return {x(0) - x(8), x(5) + x(1), x(7) + x(3)};
        case BianchiClass::VI0:
            return {x(5) - x(1), x(3) - x(7), x(0) + x(8), x(4), x(6)};
        case BianchiClass::VIa:
            return {P(2) * A * x(3) - (A2 + one) * x(0) + (A2 - one) * x(8),
                    x(2) - A * x(1), x(4) - A * x(1), x(5) - x(1),
                    P(2) * A * x(7) + (A2 - one) * x(0) - (A2 + one) * x(8)};
        case BianchiClass::VII0:
            return {x(0) + x(8), x(1) - x(5), x(7) - x(3), x(4), x(6)};
        case BianchiClass::VIIa:
            return {x(4) - A * x(5), x(2) + A * x(5),
                    P(2) * A * x(8) + (A2 - one) * x(7) + (A2 + one) * x(3),
                    P(2) * A * x(0) + (A2 + one) * x(7) + (A2 - one) * x(3),
                    x(1) - x(5)};
        case BianchiClass::VIII:
            return {x(0) + x(8), x(3) - x(7), x(1) - x(5), x(6), x(4), x(2)};
        case BianchiClass::IX:
            return {x(8) + x(0), x(7) - x(3), x(5) - x(1), x(6), x(2), x(4)};
    }
    throw std::logic_error("reference_relations: unknown class");
}

std::vector<MultiPoly> reference_ideal(BianchiClass c,
                                       const std::optional<Rational>& a) {
    using P = MultiPoly;
    auto x = xvar;
    const P A = apoly(a);
    const P A2 = A * A;
    switch (c) {
        case BianchiClass::I:
            return generic_jacobi_components();
        case BianchiClass::II:
            return {P(-1) * x(5) * x(8) + x(8) * x(1) - P(2) * x(2) * x(7),
                    P(-2) * x(4) * x(8) - x(1) * x(7) + x(7) * x(5)};
        case BianchiClass::III:
            return {x(6) * x(1) - x(3) * x(8)};
        case BianchiClass::IV:
            return {x(0) * x(0)};
        case BianchiClass::V:
            return {};
        case BianchiClass::VI0:
            return {x(2) * x(7)};
        case BianchiClass::VIa:
            return {P(4) * A * x(6) * x(1) + A2 * x(0) * x(0) -
                    P(2) * A2 * x(0) * x(8) - P(2) * x(0) * x(8) -
                    x(0) * x(0) + A2 * x(8) * x(8) - x(8) * x(8)};
        case BianchiClass::VII0:
            return {x(2) * x(3)};
        case BianchiClass::VIIa:
            return {P(4) * A * x(6) * x(5) + A2 * x(7) * x(7) +
                    P(2) * A2 * x(7) * x(3) + x(7) * x(7) -
                    P(2) * x(7) * x(3) + A2 * x(3) * x(3) + x(3) * x(3)};
        case BianchiClass::VIII:
        case BianchiClass::IX:
            return {};
    }
    throw std::logic_error("reference_ideal: unknown class");
}

bool reference_match(const DualFamily& fam) {
    std::optional<Rational> a;
    if (!fam.symbolic_a && liealg::has_parameter(fam.algebra))
        a = fam.a_value;
    const std::vector<MultiPoly> rels = reference_relations(fam.algebra, a);

    const auto& names = component_names();
    const auto& idx = component_indices();

    // every reference relation must vanish identically on the family
    std::map<std::string, RatFunc> onto_family;
    onto_family["a"] = fam.symbolic_a ? RatFunc::variable("a")
                                      : RatFunc(fam.a_value);
    for (int col = 0; col < 9; ++col)
        onto_family[names[col]] =
            fam.dual(idx[col][0], idx[col][1], idx[col][2]);
    for (const MultiPoly& rel : rels)
        if (!detail::subst_ratfunc(rel, onto_family).is_zero()) return false;

    // and cut out a space of exactly the family's dimension: extract the
    // coefficient rows (the relations are linear in the components) and
    // compare ranks
    std::vector<std::vector<MultiPoly>> rows;
    for (const MultiPoly& rel : rels) {
        std::vector<MultiPoly> row;
        for (int col = 0; col < 9; ++col) {
            std::map<std::string, RatFunc> pick;
            pick["a"] = fam.symbolic_a ? RatFunc::variable("a")
                                       : RatFunc(fam.a_value);
            for (int c2 = 0; c2 < 9; ++c2)
                pick[names[c2]] = RatFunc(Rational(c2 == col ? 1 : 0));
            RatFunc coeff = detail::subst_ratfunc(rel, pick);
            row.push_back(coeff.num() *
                          (Rational(1) / coeff.den().constant_value()));
        }
        rows.push_back(std::move(row));
    }
    return static_cast<int>(exact::bareiss_echelon(rows).rank()) ==
           9 - fam.nullspace_dim;
}

}  // namespace solver
