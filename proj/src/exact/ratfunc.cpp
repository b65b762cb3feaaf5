#include "exact/ratfunc.hpp"

#include <stdexcept>

namespace exact {

namespace {

Rational rational_gcd(const Rational& a, const Rational& b) {
    // gcd(p1/q1, p2/q2) = gcd(p1, p2) / lcm(q1, q2); gcd(x, 0) = |x|.
    BigInt n = boost::multiprecision::gcd(
        a.num() < 0 ? BigInt(-a.num()) : a.num(),
        b.num() < 0 ? BigInt(-b.num()) : b.num());
    BigInt l = a.den() / boost::multiprecision::gcd(a.den(), b.den()) * b.den();
    return Rational(std::move(n), std::move(l));
}

bool univariate_pair(const MultiPoly& p, const MultiPoly& q) {
    if (p.vars().size() > 1 || q.vars().size() > 1)
        return false;
    if (p.vars().size() == 1 && q.vars().size() == 1)
        return p.vars() == q.vars();
    return true;  // at least one is constant
}

}  // namespace

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("RatFunc: zero denominator polynomial");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(Rational(1));
        return;
    }
    if (univariate_pair(num_, den_)) {
        MultiPoly g = MultiPoly::gcd_univariate(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    Rational scale = rational_gcd(num_.content(), den_.content());
    if (den_.leading_coefficient().sign() < 0)
        scale = -scale;
    if (!scale.is_one()) {
        Rational inv = Rational(1) / scale;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFunc::as_rational() const {
    if (!is_constant())
        throw std::domain_error("RatFunc: not a constant: " + to_string());
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.num_.is_zero())
        throw std::domain_error("RatFunc: division by the zero function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

Rational RatFunc::eval(const std::map<std::string, Rational>& assignment) const {
    Rational d = den_.eval(assignment);
    if (d.is_zero())
        throw std::domain_error("RatFunc::eval: denominator " + den_.to_string() +
                                " vanishes at the given point");
    return num_.eval(assignment) / d;
}

std::string RatFunc::to_string() const {
    std::string ns = num_.to_string();
    if (den_ == MultiPoly(Rational(1)))
        return ns;
    // Parenthesize multi-term numerators; parenthesize denominators unless
    // they are a single factor (an integer, a variable, or a power).
    if (ns.find(' ') != std::string::npos)
        ns = "(" + ns + ")";
    std::string ds = den_.to_string();
    if (ds.find(' ') != std::string::npos || ds.find('*') != std::string::npos ||
        ds.find('-') != std::string::npos)
        ds = "(" + ds + ")";
    return ns + "/" + ds;
}

}  // namespace exact
