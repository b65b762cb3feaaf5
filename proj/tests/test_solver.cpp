#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liealg/classify.hpp"
#include "manin/triple.hpp"
#include "solver/family.hpp"
#include "solver/ideal.hpp"
#include "solver/reference.hpp"

using exact::MultiPoly;
using exact::Rational;
using exact::RatFunc;
using liealg::BianchiClass;
using solver::DualFamily;

namespace {

std::vector<std::string> free_names(const DualFamily& fam) {
    std::vector<std::string> out;
    for (auto c : fam.free_cols) out.push_back(solver::component_names()[c]);
    return out;
}

std::vector<std::string> strings_of(const std::vector<MultiPoly>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

const RatFunc T1 = RatFunc::variable("t1");
const RatFunc T2 = RatFunc::variable("t2");
const RatFunc T3 = RatFunc::variable("t3");

}  // namespace

TEST_CASE("solution dimensions for every class") {
    using C = BianchiClass;
    const std::map<C, int> expected = {
        {C::I, 9},   {C::II, 6},   {C::III, 4}, {C::IV, 4},
        {C::V, 6},   {C::VI0, 4},  {C::VIa, 4}, {C::VII0, 4},
        {C::VIIa, 4}, {C::VIII, 3}, {C::IX, 3}};
    CHECK(solver::solution_dimensions() == expected);
    // parametrized classes cross-checked at sample parameter values
    for (Rational a : {Rational(2), Rational(3), Rational(5), Rational(1, 2)}) {
        CHECK(solver::solve_dual_family(C::VIa, a).nullspace_dim == 4);
        CHECK(solver::solve_dual_family(C::VIIa, a).nullspace_dim == 4);
    }
}

TEST_CASE("free columns of every family") {
    using V = std::vector<std::string>;
    auto fn = [](BianchiClass c) {
        return free_names(solver::solve_dual_family(c));
    };
    CHECK(fn(BianchiClass::I) ==
          V{"ft12_1", "ft12_2", "ft12_3", "ft13_1", "ft13_2", "ft13_3",
            "ft23_1", "ft23_2", "ft23_3"});
    CHECK(fn(BianchiClass::II) ==
          V{"ft12_2", "ft12_3", "ft13_2", "ft13_3", "ft23_2", "ft23_3"});
    CHECK(fn(BianchiClass::III) == V{"ft13_1", "ft13_3", "ft23_1", "ft23_3"});
    CHECK(fn(BianchiClass::IV) == V{"ft13_2", "ft23_1", "ft23_2", "ft23_3"});
    CHECK(fn(BianchiClass::V) ==
          V{"ft12_3", "ft13_2", "ft13_3", "ft23_1", "ft23_2", "ft23_3"});
    CHECK(fn(BianchiClass::VI0) == V{"ft12_3", "ft13_3", "ft23_2", "ft23_3"});
    CHECK(fn(BianchiClass::VIa) == V{"ft13_3", "ft23_1", "ft23_2", "ft23_3"});
    CHECK(fn(BianchiClass::VII0) == V{"ft12_3", "ft13_3", "ft23_2", "ft23_3"});
    CHECK(fn(BianchiClass::VIIa) == V{"ft13_3", "ft23_1", "ft23_2", "ft23_3"});
    CHECK(fn(BianchiClass::VIII) == V{"ft13_3", "ft23_2", "ft23_3"});
    CHECK(fn(BianchiClass::IX) == V{"ft13_3", "ft23_2", "ft23_3"});
}

TEST_CASE("reduced relations are frozen for the two simple rank-6 systems") {
    using V = std::vector<std::string>;
    auto fam8 = solver::solve_dual_family(BianchiClass::VIII);
    CHECK(strings_of(fam8.relations) ==
          V{"ft12_1 + ft23_3", "ft12_2 - ft13_3", "ft12_3 - ft13_2 + ft23_1",
            "ft13_1 - ft23_2", "ft13_2", "ft23_1"});
    auto fam9 = solver::solve_dual_family(BianchiClass::IX);
    CHECK(strings_of(fam9.relations) ==
          V{"ft12_1 + ft23_3", "ft12_2 - ft13_3", "ft12_3 + ft13_2 - ft23_1",
            "ft13_1 - ft23_2", "ft13_2", "ft23_1"});
    CHECK(fam8.assumptions.empty());
    CHECK(fam9.assumptions.empty());
}

TEST_CASE("symbolic family assumptions never vanish on the allowed domain") {
    auto via = solver::solve_dual_family(BianchiClass::VIa);
    REQUIRE(via.assumptions.size() == 1);
    CHECK(via.assumptions[0].to_string() == "a^2 - 1");
    auto viia = solver::solve_dual_family(BianchiClass::VIIa);
    REQUIRE(viia.assumptions.size() == 1);
    CHECK(viia.assumptions[0].to_string() == "a^2 + 1");
    // numeric solves carry no assumptions at all
    for (BianchiClass c : liealg::all_bianchi_classes) {
        auto fam = liealg::has_parameter(c)
                       ? solver::solve_dual_family(c, Rational(2))
                       : solver::solve_dual_family(c);
        CHECK(fam.assumptions.empty());
    }
}

TEST_CASE("the three-parameter family over the simple split class") {
    auto fam = solver::solve_dual_family(BianchiClass::VIII);
    // components: ft^12_1 = -t3, ft^12_2 = ft^13_3 = t1,
    // ft^13_1 = ft^23_2 = t2, ft^23_3 = t3, others zero
    CHECK(fam.dual(1, 2, 1) == -T3);
    CHECK(fam.dual(1, 2, 2) == T1);
    CHECK(fam.dual(1, 2, 3) == RatFunc(0));
    CHECK(fam.dual(1, 3, 1) == T2);
    CHECK(fam.dual(1, 3, 2) == RatFunc(0));
    CHECK(fam.dual(1, 3, 3) == T1);
    CHECK(fam.dual(2, 3, 1) == RatFunc(0));
    CHECK(fam.dual(2, 3, 2) == T2);
    CHECK(fam.dual(2, 3, 3) == T3);
}

TEST_CASE("specialize produces verified compatible pairs") {
    auto fam = solver::solve_dual_family(BianchiClass::VIII);
    // the origin gives the abelian dual
    auto t0 = solver::specialize(fam, {Rational(0), Rational(0), Rational(0)});
    CHECK(manin::is_manin_triple(t0));
    CHECK(liealg::classify(t0.dual).bianchi == BianchiClass::I);
    // the three marked points give solvable duals of type V
    for (auto& t : {std::vector<Rational>{Rational(0), Rational(0), Rational(1)},
                    std::vector<Rational>{Rational(0), Rational(1), Rational(0)},
                    std::vector<Rational>{Rational(0), Rational(1), Rational(1)}}) {
        auto tr = solver::specialize(fam, t);
        CHECK(manin::is_manin_triple(tr));
        CHECK(liealg::classify(tr.dual).bianchi == BianchiClass::V);
    }
    // (t1,t2,t3) = (0,0,1) lands on ft^12_1 = -1, ft^23_3 = 1
    auto tr = solver::specialize(fam, {Rational(0), Rational(0), Rational(1)});
    CHECK(tr.dual(1, 2, 1) == Rational(-1));
    CHECK(tr.dual(2, 3, 3) == Rational(1));
    CHECK(tr.dual(1, 2, 2) == Rational(0));

    // wrong parameter count
    CHECK_THROWS_AS(solver::specialize(fam, {Rational(1)}),
                    std::invalid_argument);
    // a numeric family rejects a contradictory parameter
    auto via2 = solver::solve_dual_family(BianchiClass::VIa, Rational(2));
    std::vector<Rational> z4(4, Rational(0));
    CHECK_THROWS_AS(solver::specialize(via2, z4, Rational(3)),
                    std::invalid_argument);
    CHECK(manin::is_manin_triple(solver::specialize(via2, z4, Rational(2))));
    // a symbolic family requires a value and validates the constraints
    auto via = solver::solve_dual_family(BianchiClass::VIa);
    CHECK_THROWS_AS(solver::specialize(via, z4), std::invalid_argument);
    CHECK_THROWS_AS(solver::specialize(via, z4, Rational(1)),
                    std::invalid_argument);  // a = 1 excluded for this class
    CHECK_THROWS_AS(solver::specialize(via, z4, Rational(-2)),
                    std::invalid_argument);
    auto sp = solver::specialize(via, z4, Rational(1, 2));
    CHECK(manin::is_manin_triple(sp));
    CHECK(liealg::classify(sp.g).bianchi == BianchiClass::VIa);
}

TEST_CASE("symbolic and numeric solves agree where both are defined") {
    for (BianchiClass c : {BianchiClass::VIa, BianchiClass::VIIa}) {
        auto sym = solver::solve_dual_family(c);
        for (Rational a : {Rational(2), Rational(3), Rational(1, 2)}) {
            auto num = solver::solve_dual_family(c, a);
            REQUIRE(sym.free_cols == num.free_cols);
            // basis members of the symbolic family specialize into the
            // numeric family's solution space: both satisfy the identity
            for (int i = 0; i < sym.nullspace_dim; ++i) {
                std::vector<Rational> t(sym.nullspace_dim, Rational(0));
                t[i] = Rational(1);
                auto trsym = solver::specialize(sym, t, a);
                auto trnum = solver::specialize(num, t);
                CHECK(trsym.dual == trnum.dual);
                CHECK(manin::mixed_jacobi_holds(trsym));
            }
        }
    }
}

TEST_CASE("computed families match the transcribed relation sets") {
    for (BianchiClass c : liealg::all_bianchi_classes) {
        CAPTURE(liealg::to_string(c));
        CHECK(solver::reference_match(solver::solve_dual_family(c)));
        if (liealg::has_parameter(c))
            for (Rational a :
                 {Rational(2), Rational(3), Rational(5), Rational(1, 2)})
                CHECK(solver::reference_match(solver::solve_dual_family(c, a)));
    }
}

TEST_CASE("residual ideals are frozen for the single-generator classes") {
    using V = std::vector<std::string>;
    auto gens = [](BianchiClass c) {
        return strings_of(solver::dual_jacobi_ideal(
            liealg::has_parameter(c)
                ? solver::solve_dual_family(c, Rational(2))
                : solver::solve_dual_family(c)));
    };
    CHECK(gens(BianchiClass::VII0) == V{"ft12_3*ft23_2"});
    CHECK(gens(BianchiClass::VI0) == V{"ft12_3*ft23_2"});
    CHECK(gens(BianchiClass::IV) == V{"ft23_3^2"});
    CHECK(gens(BianchiClass::III) == V{"ft13_1*ft23_3 - ft13_3*ft23_1"});
    CHECK(gens(BianchiClass::IX).empty());
    CHECK(gens(BianchiClass::VIII).empty());
    CHECK(gens(BianchiClass::V).empty());
    CHECK(gens(BianchiClass::II).size() == 2);
    CHECK(gens(BianchiClass::VIa) ==
          V{"3*ft13_3*ft23_1 + 2*ft23_2^2 - 2*ft23_3^2"});
    CHECK(gens(BianchiClass::VIIa) ==
          V{"5*ft13_3*ft23_1 + 2*ft23_2^2 + 2*ft23_3^2"});
}

TEST_CASE("residual vanishing matches the transcribed generators by sampling") {
    for (BianchiClass c : liealg::all_bianchi_classes) {
        CAPTURE(liealg::to_string(c));
        std::vector<Rational> avals = {Rational(2)};
        if (liealg::has_parameter(c))
            avals = {Rational(2), Rational(3), Rational(1, 2)};
        for (Rational a : avals) {
            std::optional<Rational> ap;
            if (liealg::has_parameter(c)) ap = a;
            auto fam = solver::solve_dual_family(c, ap);
            auto rep =
                solver::ideal_equivalent(fam, solver::reference_ideal(c, ap));
            CHECK(rep.equivalent);
            CHECK(rep.points >= 200);
        }
    }
    // the sampling harness rejects symbolic families
    CHECK_THROWS_AS(
        solver::ideal_equivalent(solver::solve_dual_family(BianchiClass::VIa),
                                 {}),
        std::invalid_argument);
}

TEST_CASE("sampling detects a wrong generator set") {
    auto fam = solver::solve_dual_family(BianchiClass::VII0);
    // claim the residual never vanishes away from ft12_3 = 0 alone
    std::vector<MultiPoly> wrong = {MultiPoly::variable("ft12_3")};
    auto rep = solver::ideal_equivalent(fam, wrong);
    CHECK_FALSE(rep.equivalent);
    CHECK_FALSE(rep.counterexample_t.empty());
}
