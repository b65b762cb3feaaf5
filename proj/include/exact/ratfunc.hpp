#pragma once
// Rational functions: fractions of multivariate polynomials.
//
// Normal form kept by every operation: the denominator is never zero;
// numerator and denominator are jointly primitive over the integers
// (divided by the gcd of their contents); the denominator's leading
// coefficient is positive; the zero function is 0/1.  When numerator and
// denominator are univariate in the same variable they are additionally
// reduced by their polynomial gcd.  Multivariate gcd reduction is
// intentionally not attempted — downstream zero tests are exact at sampled
// points instead.

#include <map>
#include <string>

#include "exact/poly.hpp"

namespace exact {

class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(long long c) : RatFunc(Rational(c)) {}
    RatFunc(const MultiPoly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(MultiPoly num, MultiPoly den);
    static RatFunc variable(const std::string& name) {
        return RatFunc(MultiPoly::variable(name));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // The value of a constant rational function; throws std::domain_error
    // when the value still depends on a parameter.
    Rational as_rational() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    // Semantic equality via cross-multiplication (exact; independent of
    // whether a common multivariate factor was cancelled).
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) {
        return !(a == b);
    }

    // Exact evaluation; throws std::domain_error when the denominator
    // vanishes at the point and std::invalid_argument on missing variables.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    // "num", or "num/den" with parentheses added where precedence needs
    // them, e.g. "(a+1)/(a-1)", "-b/a".
    std::string to_string() const;

private:
    void normalize();
    MultiPoly num_;
    MultiPoly den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline std::string to_string(const RatFunc& x) { return x.to_string(); }

}  // namespace exact
