#include "solver/ideal.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "internal.hpp"

namespace solver {

using exact::MultiPoly;
using exact::Rational;

std::vector<MultiPoly> dual_jacobi_ideal(const DualFamily& fam) {
    const auto& names = component_names();
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < fam.free_cols.size(); ++i)
        rename["t" + std::to_string(i + 1)] = names[fam.free_cols[i]];
    auto mapper = [&](const std::string& v) {
        auto it = rename.find(v);
        return it == rename.end() ? v : it->second;
    };

    std::vector<MultiPoly> gens;
    for (int n = 1; n <= 3; ++n) {
        exact::RatFunc r = liealg::jacobi_residual(fam.dual, 1, 2, 3, n);
        if (r.is_zero()) continue;
        MultiPoly p = detail::normalize_generator(
            detail::rename_variables(r.num(), mapper));
        if (!p.is_zero() && std::find(gens.begin(), gens.end(), p) == gens.end())
            gens.push_back(p);
    }
    return gens;
}

SamplingReport ideal_equivalent(const DualFamily& fam,
                                const std::vector<MultiPoly>& reference,
                                unsigned long long seed, int samples) {
    if (fam.symbolic_a)
        throw std::invalid_argument(
            "ideal_equivalent: needs a family solved at a numeric parameter");

    const int k = fam.nullspace_dim;
    const std::vector<MultiPoly> gens = dual_jacobi_ideal(fam);
    const auto& names = component_names();
    const auto& idx = component_indices();

    SamplingReport rep;
    auto agree_at = [&](const std::vector<Rational>& t) {
        std::map<std::string, Rational> asg;
        asg["a"] = fam.a_value;
        for (int i = 0; i < k; ++i) asg["t" + std::to_string(i + 1)] = t[i];

        // the component values of this family member double as the
        // assignment for generators written over the component names
        std::map<std::string, Rational> xasg;
        xasg["a"] = fam.a_value;
        liealg::StructureConstants<Rational> ft;
        for (int col = 0; col < 9; ++col) {
            Rational v =
                fam.dual(idx[col][0], idx[col][1], idx[col][2]).eval(asg);
            ft.set(idx[col][0], idx[col][1], idx[col][2], v);
            xasg[names[col]] = v;
        }

        bool z_res = true;
        for (int n = 1; n <= 3 && z_res; ++n)
            z_res = liealg::jacobi_residual(ft, 1, 2, 3, n).is_zero();
        auto all_vanish = [&](const std::vector<MultiPoly>& ps) {
            for (const MultiPoly& p : ps)
                if (!p.eval(xasg).is_zero()) return false;
            return true;
        };
        return z_res == all_vanish(reference) && z_res == all_vanish(gens);
    };

    // full grid {0,1,-1}^k, last coordinate varying fastest
    const Rational grid_vals[3] = {Rational(0), Rational(1), Rational(-1)};
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    for (long long n = 0; n < total; ++n) {
        std::vector<Rational> t(k);
        long long m = n;
        for (int i = k - 1; i >= 0; --i) {
            t[i] = grid_vals[m % 3];
            m /= 3;
        }
        ++rep.points;
        if (!agree_at(t)) {
            rep.equivalent = false;
            rep.counterexample_t = t;
            return rep;
        }
    }

    // seeded random rational points, numerators in [-5,5], denominators 1/2
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<Rational> t(k);
        for (int i = 0; i < k; ++i) {
            long long num = static_cast<long long>(rng() % 11) - 5;
            long long den = static_cast<long long>(rng() % 2) + 1;
            t[i] = Rational(num, den);
        }
        ++rep.points;
        if (!agree_at(t)) {
            rep.equivalent = false;
            rep.counterexample_t = t;
            return rep;
        }
    }
    return rep;
}

}  // namespace solver
