#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exact/linsolve.hpp"
#include "exact/matrix.hpp"
#include "exact/parse.hpp"
#include "exact/poly.hpp"
#include "exact/ratfunc.hpp"
#include "exact/rational.hpp"

using exact::BigInt;
using exact::Mat3;
using exact::MultiPoly;
using exact::RatFunc;
using exact::Rational;

TEST_CASE("rational arithmetic and canonical form") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));  // canonicalized on construction
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK((Rational(3, 7) * Rational(7, 3)).is_one());
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK_THROWS_AS(Rational(3, 7) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(-3, 4) < Rational(1, 5));
    CHECK(Rational(7, 2) > Rational(3));
}

TEST_CASE("rational serialization round-trip") {
    CHECK(Rational(5, 6).to_string() == "5/6");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational::parse("5/6") == Rational(5, 6));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("foo"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    // big values survive the round trip
    Rational big(BigInt("123456789012345678901234567890"), BigInt(7));
    CHECK(Rational::parse(big.to_string()) == big);
}

static MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }

TEST_CASE("polynomial arithmetic and canonical form") {
    MultiPoly a = var("a");
    CHECK((a + MultiPoly(1)) * (a - MultiPoly(1)) == a * a - MultiPoly(1));
    CHECK(((a + MultiPoly(1)) * (a - MultiPoly(1))).to_string() == "a^2 - 1");
    MultiPoly p = a * a * MultiPoly(Rational(2)) + var("b") - MultiPoly(Rational(5, 2));
    CHECK((p - p).is_zero());
    CHECK((p + (-p)).is_zero());
    CHECK((p - p).to_string() == "0");
    // canonical-form uniqueness for different construction orders
    MultiPoly q1 = var("b") + a * a * MultiPoly(2) - MultiPoly(Rational(5, 2));
    CHECK(p == q1);
    CHECK(p.to_string() == q1.to_string());
    // unused variables are pruned
    MultiPoly r = a * var("b") - a * var("b") + a;
    CHECK(r.vars().size() == 1);
    CHECK(r == a);
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
    MultiPoly al = var("al"), be = var("be"), ga = var("ga");
    MultiPoly disc = al * al + be * be - ga * ga;
    std::map<std::string, Rational> at{{"al", Rational(1)},
                                       {"be", Rational(0)},
                                       {"ga", Rational(0)}};
    CHECK(disc.eval(at) == Rational(1));
    CHECK(MultiPoly().eval({}) == Rational(0));
    std::map<std::string, Rational> root{{"a", Rational(1)}};
    CHECK((var("a") * var("a") - MultiPoly(1)).eval(root) == Rational(0));
    CHECK_THROWS_AS(disc.eval({{"al", Rational(1)}}), std::invalid_argument);

    std::mt19937_64 rng(7);
    auto rnd = [&]() {
        return Rational(static_cast<long long>(rng() % 13) - 6,
                        static_cast<long long>(rng() % 3) + 1);
    };
    for (int trial = 0; trial < 1000; ++trial) {
        MultiPoly p, q, r;
        MultiPoly vs[3] = {var("x"), var("y"), var("z")};
        auto rnd_poly = [&]() {
            MultiPoly acc;
            for (int t = 0; t < 3; ++t) {
                MultiPoly term(rnd());
                for (int v = 0; v < 3; ++v)
                    term *= vs[static_cast<int>(rng() % 3)].pow(static_cast<unsigned>(rng() % 2));
                acc += term;
            }
            return acc;
        };
        p = rnd_poly();
        q = rnd_poly();
        r = rnd_poly();
        std::map<std::string, Rational> pt{
            {"x", rnd()}, {"y", rnd()}, {"z", rnd()}};
        CHECK((p * q + r).eval(pt) == p.eval(pt) * q.eval(pt) + r.eval(pt));
    }
}

TEST_CASE("exact polynomial division") {
    MultiPoly a = var("a"), b = var("b");
    MultiPoly prod = (a + b) * (a - b);
    CHECK(prod.divide_exact(a + b) == a - b);
    CHECK_THROWS_AS((a * a + MultiPoly(1)).divide_exact(a + MultiPoly(1)),
                    std::domain_error);
    CHECK(MultiPoly().divide_exact(a + b).is_zero());
}

TEST_CASE("univariate gcd") {
    MultiPoly a = var("a");
    MultiPoly g = MultiPoly::gcd_univariate(a * a - MultiPoly(1), a - MultiPoly(1));
    CHECK(g == a - MultiPoly(1));
    CHECK(MultiPoly::gcd_univariate(a, MultiPoly(2)).is_constant());
    CHECK_THROWS_AS(MultiPoly::gcd_univariate(a, var("b")), std::domain_error);
}

TEST_CASE("rational function arithmetic") {
    RatFunc a = RatFunc::variable("a");
    RatFunc one(1);
    CHECK((one / a) * a == one);
    CHECK(((one / a) * a).to_string() == "1");
    // univariate gcd reduction
    RatFunc red = RatFunc(exact::parse_poly("a^2-1"), exact::parse_poly("a-1"));
    CHECK(red.to_string() == "a + 1");
    // ((a+1)/(a-1)) at a = 3 -> 2
    RatFunc f = (a + one) / (a - one);
    CHECK(f.eval({{"a", Rational(3)}}) == Rational(2));
    CHECK_THROWS_AS(f.eval({{"a", Rational(1)}}), std::domain_error);
    CHECK_THROWS_AS(f / RatFunc(0), std::domain_error);
    // canonical sign: denominator leading coefficient positive
    RatFunc g = RatFunc(exact::parse_poly("b"), exact::parse_poly("-a"));
    CHECK(g.to_string() == "-b/a");
    CHECK(f == RatFunc(exact::parse_poly("2*a+2"), exact::parse_poly("2*a-2")));
}

TEST_CASE("expression parser") {
    CHECK(exact::parse_ratfunc("(a+1)/(a-1)").eval({{"a", Rational(3)}}) ==
          Rational(2));
    CHECK(exact::parse_poly("a^2 - 1") == var("a") * var("a") - MultiPoly(1));
    CHECK(exact::parse_ratfunc("-b/a").to_string() == "-b/a");
    CHECK(exact::parse_ratfunc("1/2").as_rational() == Rational(1, 2));
    // canonical form clears fractional coefficients into the denominator
    CHECK(exact::parse_ratfunc("2*a*b^2 - a + 5/2").to_string() ==
          "(4*a*b^2 - 2*a + 5)/2");
    CHECK(exact::parse_ratfunc("(4*a*b^2 - 2*a + 5)/2") ==
          exact::parse_ratfunc("2*a*b^2 - a + 5/2"));
    CHECK_THROWS_AS(exact::parse_ratfunc("1/0"), std::domain_error);
    CHECK_THROWS_AS(exact::parse_ratfunc("a +"), std::invalid_argument);
    CHECK_THROWS_AS(exact::parse_ratfunc("(a"), std::invalid_argument);
    CHECK_THROWS_AS(exact::parse_ratfunc(""), std::invalid_argument);
    CHECK_THROWS_AS(exact::parse_poly("1/a"), std::invalid_argument);
    // round-trip: to_string output reparses to an equal value
    RatFunc h = exact::parse_ratfunc("(4*a^2)/(a^2-1)");
    CHECK(exact::parse_ratfunc(h.to_string()) == h);
    CHECK(h.eval({{"a", Rational(2)}}) == Rational(16, 3));
}

TEST_CASE("3x3 inverse") {
    using M = Mat3<Rational>;
    M id = M::identity();
    CHECK(exact::matrix_inverse(id) == id);
    M d;
    d(0, 0) = Rational(2);
    d(1, 1) = Rational(1);
    d(2, 2) = Rational(1);
    CHECK(exact::matrix_inverse(d)(0, 0) == Rational(1, 2));
    M u = id;
    u(0, 1) = Rational(1);
    M ui = exact::matrix_inverse(u);
    CHECK(ui(0, 1) == Rational(-1));
    CHECK(u * ui == id);
    M sing;  // all zero
    CHECK_THROWS_AS(exact::matrix_inverse(sing), std::domain_error);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        M m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m(i, j) = Rational(static_cast<long long>(rng() % 9) - 4);
        if (exact::det3(m).is_zero())
            continue;
        CHECK(m * exact::matrix_inverse(m) == id);
    }
}

TEST_CASE("bareiss echelon and nullspace") {
    using exact::bareiss_echelon;
    // x + y + z = 0, x + 2y + 3z = 0  ->  rank 2, nullspace (1, -2, 1)
    std::vector<std::vector<MultiPoly>> rows = {
        {MultiPoly(1), MultiPoly(1), MultiPoly(1)},
        {MultiPoly(1), MultiPoly(2), MultiPoly(3)},
    };
    auto ech = bareiss_echelon(rows);
    CHECK(ech.rank() == 2);
    CHECK(ech.free_columns(3) == std::vector<std::size_t>{2});
    auto x = exact::echelon_backsolve(ech, 3, {RatFunc(1)});
    CHECK(x[0] == RatFunc(1));
    CHECK(x[1] == RatFunc(-2));
    CHECK(x[2] == RatFunc(1));

    // duplicate and zero rows do not change the solution set
    rows.push_back({MultiPoly(2), MultiPoly(3), MultiPoly(4)});
    rows.push_back({MultiPoly(), MultiPoly(), MultiPoly()});
    auto ech2 = bareiss_echelon(rows);
    CHECK(ech2.rank() == 2);
    auto x2 = exact::echelon_backsolve(ech2, 3, {RatFunc(1)});
    CHECK(x2 == x);

    // parametric pivot is recorded
    MultiPoly a = var("a");
    std::vector<std::vector<MultiPoly>> prows = {
        {a, MultiPoly(1)},
    };
    auto pech = bareiss_echelon(prows);
    CHECK(pech.rank() == 1);
    REQUIRE(pech.parametric_pivots.size() == 1);
    CHECK(pech.parametric_pivots[0] == a);
    auto px = exact::echelon_backsolve(pech, 2, {RatFunc(1)});
    CHECK(px[0] == RatFunc(MultiPoly(-1), a));
}
