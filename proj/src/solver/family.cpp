#include "solver/family.hpp"

#include <stdexcept>
#include <utility>

#include "internal.hpp"

namespace solver {

using exact::MultiPoly;
using exact::Rational;
using exact::RatFunc;
using liealg::BianchiClass;
using liealg::StructureConstants;

namespace detail {

MultiPoly normalize_generator(MultiPoly p) {
    if (p.is_zero()) return p;
    p *= Rational(1) / p.content();
    if (p.leading_coefficient() < Rational(0)) p = -p;
    return p;
}

MultiPoly rename_variables(
    const MultiPoly& p,
    const std::function<std::string(const std::string&)>& map) {
    MultiPoly out;
    for (const auto& [key, coeff] : p.terms()) {
        MultiPoly term(coeff);
        for (std::size_t v = 0; v < key.size(); ++v)
            if (key[v] > 0)
                term *= MultiPoly::variable(map(p.vars()[v])).pow(key[v]);
        out += term;
    }
    return out;
}

exact::RatFunc subst_ratfunc(
    const MultiPoly& p,
    const std::map<std::string, exact::RatFunc>& assignment) {
    exact::RatFunc out;
    for (const auto& [key, coeff] : p.terms()) {
        exact::RatFunc term{coeff};
        for (std::size_t v = 0; v < key.size(); ++v) {
            if (key[v] == 0) continue;
            auto it = assignment.find(p.vars()[v]);
            if (it == assignment.end())
                throw std::invalid_argument(
                    "subst_ratfunc: no value for variable " + p.vars()[v]);
            for (unsigned e = 0; e < key[v]; ++e) term *= it->second;
        }
        out += term;
    }
    return out;
}

}  // namespace detail

const std::array<std::array<int, 3>, 9>& component_indices() {
    static const std::array<std::array<int, 3>, 9> idx = {{{1, 2, 1},
                                                           {1, 2, 2},
                                                           {1, 2, 3},
                                                           {1, 3, 1},
                                                           {1, 3, 2},
                                                           {1, 3, 3},
                                                           {2, 3, 1},
                                                           {2, 3, 2},
                                                           {2, 3, 3}}};
    return idx;
}

const std::array<std::string, 9>& component_names() {
    static const std::array<std::string, 9> names = {
        "ft12_1", "ft12_2", "ft12_3", "ft13_1", "ft13_2",
        "ft13_3", "ft23_1", "ft23_2", "ft23_3"};
    return names;
}

namespace {

int column_of(int i, int j, int k) {
    const auto& idx = component_indices();
    for (int c = 0; c < 9; ++c)
        if (idx[c][0] == i && idx[c][1] == j && idx[c][2] == k) return c;
    throw std::logic_error("column_of: no such component");
}

// Adds coeff * ft^{jk}_l to the row, folding the antisymmetry of the upper
// index pair into the nine independent columns.
void add_component(std::vector<RatFunc>& row, int j, int k, int l,
                   const RatFunc& coeff) {
    if (j == k || coeff.is_zero()) return;
    if (j < k)
        row[column_of(j, k, l)] += coeff;
    else
        row[column_of(k, j, l)] -= coeff;
}

}  // namespace

std::vector<std::vector<MultiPoly>> mixed_jacobi_system(
    const StructureConstants<RatFunc>& g) {
    std::vector<std::vector<MultiPoly>> rows;
    for (auto [j, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        for (int m = 1; m <= 3; ++m) {
            for (int i = 1; i <= 3; ++i) {
                std::vector<RatFunc> r(9);
                for (int l = 1; l <= 3; ++l) {
                    add_component(r, j, k, l, g(m, i, l));
                    add_component(r, k, l, m, g(l, i, j));
                    add_component(r, j, l, i, g(l, m, k));
                    add_component(r, j, l, m, g(i, l, k));
                    add_component(r, k, l, i, g(m, l, j));
                }
                // clear any parameter-dependent denominators row-wide
                for (bool again = true; again;) {
                    again = false;
                    for (const RatFunc& e : r) {
                        if (e.den().is_constant()) continue;
                        RatFunc d{e.den()};
                        for (RatFunc& x : r) x *= d;
                        again = true;
                        break;
                    }
                }
                std::vector<MultiPoly> row;
                bool nonzero = false;
                for (const RatFunc& e : r) {
                    MultiPoly p = e.num();
                    p *= Rational(1) / e.den().constant_value();
                    nonzero = nonzero || !p.is_zero();
                    row.push_back(std::move(p));
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

DualFamily solve_dual_family(BianchiClass c,
                             const std::optional<Rational>& a) {
    DualFamily fam;
    fam.algebra = c;
    fam.symbolic_a = liealg::has_parameter(c) && !a.has_value();

    StructureConstants<RatFunc> g;
    if (fam.symbolic_a) {
        g = liealg::standard_form_symbolic(c);
    } else {
        StructureConstants<Rational> gq =
            a ? liealg::standard_form(c, *a) : liealg::standard_form(c);
        fam.a_value = a.value_or(Rational(0));
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    g.set(i, j, k, RatFunc(gq(i, j, k)));
    }

    exact::Echelon ech = exact::bareiss_echelon(mixed_jacobi_system(g));
    fam.nullspace_dim = 9 - static_cast<int>(ech.rank());
    fam.free_cols = ech.free_columns(9);

    std::vector<RatFunc> tvals;
    for (std::size_t i = 0; i < fam.free_cols.size(); ++i)
        tvals.push_back(RatFunc::variable("t" + std::to_string(i + 1)));
    std::vector<RatFunc> x = exact::echelon_backsolve(ech, 9, tvals);

    const auto& idx = component_indices();
    for (int col = 0; col < 9; ++col)
        fam.dual.set(idx[col][0], idx[col][1], idx[col][2], x[col]);

    const auto& names = component_names();
    for (const auto& row : ech.rows) {
        MultiPoly rel;
        for (int col = 0; col < 9; ++col)
            if (!row[col].is_zero())
                rel += row[col] * MultiPoly::variable(names[col]);
        fam.relations.push_back(detail::normalize_generator(rel));
    }
    for (const auto& p : ech.parametric_pivots)
        fam.assumptions.push_back(detail::normalize_generator(p));
    return fam;
}

std::map<BianchiClass, int> solution_dimensions() {
    std::map<BianchiClass, int> dims;
    for (BianchiClass c : liealg::all_bianchi_classes)
        dims[c] = solve_dual_family(c).nullspace_dim;
    return dims;
}

manin::ManinTriple<exact::Rational> specialize(const DualFamily& fam,
                          const std::vector<Rational>& t,
                          const std::optional<Rational>& a) {
    if (static_cast<int>(t.size()) != fam.nullspace_dim)
        throw std::invalid_argument(
            "specialize: expected " + std::to_string(fam.nullspace_dim) +
            " parameter values, got " + std::to_string(t.size()));

    Rational aval;
    if (fam.symbolic_a) {
        if (!a)
            throw std::invalid_argument(
                "specialize: the family is symbolic; a value for a is "
                "required");
        aval = *a;
    } else {
        if (a && !(*a == fam.a_value))
            throw std::invalid_argument(
                "specialize: a = " + a->to_string() +
                " contradicts the family's a = " + fam.a_value.to_string());
        aval = fam.a_value;
    }

    // validates the class constraints on the parameter
    StructureConstants<Rational> g =
        liealg::has_parameter(fam.algebra)
            ? liealg::standard_form(fam.algebra, aval)
            : liealg::standard_form(fam.algebra);

    std::map<std::string, Rational> asg;
    asg["a"] = aval;
    for (std::size_t i = 0; i < t.size(); ++i)
        asg["t" + std::to_string(i + 1)] = t[i];

    for (const MultiPoly& p : fam.assumptions)
        if (p.eval(asg).is_zero())
            throw std::invalid_argument("specialize: assumption " +
                                        p.to_string() + " vanishes at a = " +
                                        aval.to_string());

    const auto& idx = component_indices();
    StructureConstants<Rational> ft;
    for (int col = 0; col < 9; ++col)
        ft.set(idx[col][0], idx[col][1], idx[col][2],
               fam.dual(idx[col][0], idx[col][1], idx[col][2]).eval(asg));
    return manin::ManinTriple<exact::Rational>{g, ft};
}

}  // namespace solver
