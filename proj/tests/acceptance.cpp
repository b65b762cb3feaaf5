// Acceptance harness: one pass/fail line per criterion, nonzero exit when
// any criterion fails.  All checks are exact (no floating-point tolerances).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "catalog/catalog.hpp"
#include "exact/matrix.hpp"
#include "liealg/bianchi.hpp"
#include "liealg/classify.hpp"
#include "liealg/decompose.hpp"
#include "liealg/structure.hpp"
#include "manin/cobracket.hpp"
#include "manin/triple.hpp"
#include "manin/witness.hpp"
#include "solver/family.hpp"
#include "solver/ideal.hpp"
#include "solver/reference.hpp"

using exact::Rational;
using liealg::BianchiClass;

namespace {

std::mt19937_64 g_rng(20020517ULL);

Rational random_small(std::mt19937_64& rng) {
    return Rational(static_cast<long long>(rng() % 5) - 2);  // {-2..2}
}

manin::Mat3Q random_invertible(std::mt19937_64& rng) {
    for (;;) {
        manin::Mat3Q A;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) A(r, c) = random_small(rng);
        if (!(exact::det3(A) == Rational(0))) return A;
    }
}

liealg::StructureConstants<Rational> random_tensor(std::mt19937_64& rng) {
    liealg::StructureConstants<Rational> f;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) f.set(i, j, k, random_small(rng));
    return f;
}

// ---------------------------------------------------------------------------

bool criterion_dimensions(std::string& detail) {
    const std::map<BianchiClass, int> expected{
        {BianchiClass::I, 9},    {BianchiClass::II, 6},
        {BianchiClass::III, 4},  {BianchiClass::IV, 4},
        {BianchiClass::V, 6},    {BianchiClass::VI0, 4},
        {BianchiClass::VIa, 4},  {BianchiClass::VII0, 4},
        {BianchiClass::VIIa, 4}, {BianchiClass::VIII, 3},
        {BianchiClass::IX, 3}};
    const auto dims = solver::solution_dimensions();
    if (dims != expected) {
        detail = "symbolic dimension table disagrees";
        return false;
    }
    const std::vector<Rational> avals{Rational(2), Rational(3), Rational(5),
                                      Rational(1, 2)};
    for (const auto& a : avals)
        for (const auto c : {BianchiClass::VIa, BianchiClass::VIIa})
            if (solver::solve_dual_family(c, a).nullspace_dim != 4) {
                detail = "numeric cross-check failed for " +
                         liealg::to_string(c) + " at a = " + a.to_string();
                return false;
            }
    detail = "11 classes, parametrized families cross-checked at 4 values";
    return true;
}

bool criterion_ideals(std::string& detail) {
    long long points = 0;
    for (const auto c : liealg::all_bianchi_classes) {
        std::vector<std::optional<Rational>> avals{{}};
        if (liealg::has_parameter(c))
            avals = {Rational(2), Rational(3), Rational(1, 2)};
        for (const auto& a : avals) {
            const auto fam = solver::solve_dual_family(c, a);
            const auto rep = solver::ideal_equivalent(
                fam, solver::reference_ideal(c, a));
            if (!rep.equivalent) {
                detail = "vanishing loci differ for " + liealg::to_string(c);
                return false;
            }
            points += rep.points;
        }
    }
    // spot checks quoted from the reference listing
    for (const auto c :
         {BianchiClass::IX, BianchiClass::VIII, BianchiClass::V})
        if (!solver::dual_jacobi_ideal(solver::solve_dual_family(c)).empty()) {
            detail = "ideal not empty for " + liealg::to_string(c);
            return false;
        }
    const auto vii0 = solver::reference_ideal(BianchiClass::VII0);
    const auto iv = solver::reference_ideal(BianchiClass::IV);
    if (vii0.size() != 1 || vii0[0].to_string() != "ft12_3*ft13_1" ||
        iv.size() != 1 || iv[0].to_string() != "ft12_1^2") {
        detail = "single-generator transcriptions changed";
        return false;
    }
    if (solver::dual_jacobi_ideal(
            solver::solve_dual_family(BianchiClass::VII0))
                .size() != 1 ||
        solver::dual_jacobi_ideal(solver::solve_dual_family(BianchiClass::IV))
                .size() != 1) {
        detail = "computed ideal generator counts changed";
        return false;
    }
    char buf[80];
    std::snprintf(buf, sizeof buf,
                  "all 11 vanishing loci agree (%lld sampled points)",
                  points);
    detail = buf;
    return true;
}

bool criterion_catalog(std::string& detail) {
    const auto reports = catalog::verify_catalog();
    if (reports.size() != 78) {
        detail = "expected 78 entries";
        return false;
    }
    int samples = 0;
    std::string flagged;
    for (const auto& r : reports) {
        samples += r.samples;
        if (!r.ok) {
            detail = "entry " + r.id + " failed: " +
                     (r.failures.empty() ? "?" : r.failures.front());
            return false;
        }
        if (r.flagged)
            flagged += "\n         flagged: " + r.id +
                       " -- passes as printed (see entry note)";
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "78 entries, %d parameter samples, all pass",
                  samples);
    detail = buf + flagged;
    return true;
}

bool criterion_counts(std::string& detail) {
    const auto ids = catalog::self_dual_ids();  // explicit enumeration
    const auto counts = catalog::count_classes();
    if (counts.total != 78 || counts.up_to_duality != 44 ||
        counts.self_dual != 10 ||
        counts.self_dual != static_cast<int>(ids.size())) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "got (%d, %d, %d), enumeration %zu",
                      counts.total, counts.up_to_duality, counts.self_dual,
                      ids.size());
        detail = buf;
        return false;
    }
    detail = "78 total / 44 up to duality / 10 self-dual; fixed points:";
    for (const auto& id : ids) detail += " " + id;
    return true;
}

bool criterion_worked_example(std::string& detail) {
    const auto fam = solver::solve_dual_family(BianchiClass::VIII);
    if (fam.nullspace_dim != 3) {
        detail = "solution family is not 3-parametric";
        return false;
    }
    // free coordinates (t1,t2,t3) bind to (ft13_3, ft23_2, ft23_3); the
    // marked points below are (alpha,beta,gamma) = (t3,t1,t2) in the
    // family's own parameter names
    const auto origin = solver::specialize(fam, {Rational(0), Rational(0),
                                                 Rational(0)});
    if (!manin::is_manin_triple(origin) ||
        liealg::classify(origin.dual).bianchi != BianchiClass::I) {
        detail = "origin does not give the abelian dual";
        return false;
    }

    struct Mark {
        std::vector<Rational> t;
        const char* entry;
    };
    const std::vector<Mark> marks{
        {{Rational(0), Rational(0), Rational(1)}, "VIII.b.i"},
        {{Rational(0), Rational(1), Rational(0)}, "VIII.b.ii"},
        {{Rational(0), Rational(1), Rational(1)}, "VIII.b.iii"}};
    std::vector<manin::TripleQ> targets;
    for (const auto& m : marks) {
        const auto t = solver::specialize(fam, m.t);
        if (!manin::is_manin_triple(t) ||
            liealg::classify(t.dual).bianchi != BianchiClass::V) {
            detail = std::string("marked point for ") + m.entry +
                     " is not a type-V dual";
            return false;
        }
        const auto& e = catalog::find_entry(m.entry);
        const auto target =
            catalog::instantiate(e, catalog::default_values(e));
        const auto w = manin::search_witness(t, target, 2);
        if (!w.has_value() || !manin::verify_witness(t, target, *w)) {
            detail = std::string("no bound-2 witness onto ") + m.entry;
            return false;
        }
        targets.push_back(target);
    }
    // pairwise inequivalence of the three listed forms at search bound 2
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (manin::search_witness(targets[i], targets[j], 2)
                    .has_value()) {
                detail = "two of the three listed duals are equivalent";
                return false;
            }
    detail =
        "3-parameter family; marked points land on the three listed "
        "inequivalent duals (abelian origin aside)";
    return true;
}

bool criterion_classifier(std::string& detail) {
    for (const auto c : liealg::all_bianchi_classes) {
        const auto f = liealg::has_parameter(c)
                           ? liealg::standard_form(c, Rational(2))
                           : liealg::standard_form(c);
        const auto base = liealg::classify(f);
        for (int trial = 0; trial < 100; ++trial) {
            const auto A = random_invertible(g_rng);
            if (liealg::classify(liealg::change_basis(f, A)) != base) {
                detail = "conjugation changed the class of " +
                         liealg::to_string(base);
                return false;
            }
        }
    }
    int jacobi_count = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto f = random_tensor(g_rng);
        const auto d = liealg::na_decompose(f);
        if (!(liealg::recompose(d) == f)) {
            detail = "decomposition round trip failed";
            return false;
        }
        bool na_zero = true;
        for (int m = 0; m < 3; ++m) {
            Rational s(0);
            for (int k = 0; k < 3; ++k) s += d.n(m, k) * d.a[k];
            if (!(s == Rational(0))) na_zero = false;
        }
        const bool jac = liealg::satisfies_jacobi(f);
        if (jac != na_zero) {
            detail = "Jacobi <-> n.a = 0 equivalence failed";
            return false;
        }
        if (jac) ++jacobi_count;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "1100 conjugations stable; round trip and Jacobi <-> "
                  "n.a=0 on 1000 tensors (%d Lie)",
                  jacobi_count);
    detail = buf;
    return true;
}

bool criterion_dictionary(std::string& detail) {
    const auto check_pair = [](const manin::TripleQ& t) {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c)
                    for (int i = 1; i <= 3; ++i) {
                        if (!(manin::co_jacobi_residual(t, a, b, c, i) ==
                              liealg::jacobi_residual(t.dual, a, b, c, i)))
                            return false;
                        if (!(manin::cocycle_residual(t, c, i, a, b) ==
                              manin::mixed_jacobi_residual(t, a, b, c, i)))
                            return false;
                    }
        return true;
    };

    const auto& entries = catalog::all_entries();
    for (int n = 0; n < 100; ++n) {
        const auto& e = entries[g_rng() % entries.size()];
        const auto grid = catalog::default_samples(e);
        const auto t0 =
            catalog::instantiate(e, grid[g_rng() % grid.size()]);
        const auto t = manin::transform(t0, random_invertible(g_rng));
        if (!manin::is_manin_triple(t)) {
            detail = "transformed catalog member stopped being a triple";
            return false;
        }
        if (!check_pair(t)) {
            detail = "dictionary failed on a valid pair from " + e.id;
            return false;
        }
    }
    int made = 0;
    while (made < 100) {
        const manin::TripleQ t{random_tensor(g_rng), random_tensor(g_rng)};
        if (manin::is_manin_triple(t)) continue;  // want invalid pairs
        if (!check_pair(t)) {
            detail = "dictionary failed on an invalid pair";
            return false;
        }
        ++made;
    }
    detail =
        "residual dictionaries agree on all 81 index tuples of 100 valid "
        "and 100 invalid pairs";
    return true;
}

// ---------------------------------------------------------------------------

int g_failures = 0;

void run_criterion(int n, const char* label, double budget_s,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& ex) {
        ok = false;
        detail = std::string("exception: ") + ex.what();
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && budget_s > 0 && dt >= budget_s) {
        ok = false;
        char buf[96];
        std::snprintf(buf, sizeof buf, "over budget: %.2f s >= %.0f s", dt,
                      budget_s);
        detail = buf;
    }
    if (!ok) ++g_failures;
    std::printf("[%s] %d. %s (%.2f s)\n", ok ? "PASS" : "FAIL", n, label, dt);
    if (!detail.empty()) std::printf("       %s\n", detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    std::printf("acceptance: exact Manin-triple classification toolkit\n");
    run_criterion(1, "dual-family dimensions match the reference counts",
                  1.0, criterion_dimensions);
    run_criterion(2,
                  "residual ideals are sampling-equivalent to the "
                  "transcribed generators",
                  5.0, criterion_ideals);
    run_criterion(3, "all catalog entries verify at default samples", 30.0,
                  criterion_catalog);
    run_criterion(4, "class counts 78 / 44 / 10 via fixed-point enumeration",
                  0.0, criterion_counts);
    run_criterion(5,
                  "worked sl(2,R) reduction: 3-parameter family and exactly "
                  "3 inequivalent non-abelian duals",
                  60.0, criterion_worked_example);
    run_criterion(6,
                  "classifier invariant under random conjugation; "
                  "decomposition property suite",
                  30.0, criterion_classifier);
    run_criterion(7,
                  "cobracket residual dictionaries hold on random valid and "
                  "invalid pairs",
                  0.0, criterion_dictionary);
    if (g_failures == 0) {
        std::printf("result: all 7 acceptance criteria passed\n");
        return 0;
    }
    std::printf("result: %d of 7 acceptance criteria FAILED\n", g_failures);
    return 1;
}
