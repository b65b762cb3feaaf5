#include "exact/rational.hpp"

namespace exact {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
        throw std::domain_error("Rational: zero denominator");
    canonicalize();
}

void Rational::canonicalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0)
        throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1)
        s += "/" + den_.str();
    return s;
}

Rational Rational::parse(const std::string& s) {
    auto bad = [&]() {
        return std::invalid_argument("Rational: cannot parse '" + s + "'");
    };
    if (s.empty())
        throw bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part, bool allow_sign) {
        if (part.empty())
            throw bad();
        std::size_t i = (allow_sign && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size())
            throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw bad();
    };
    try {
        if (slash == std::string::npos) {
            check_int(s, true);
            return Rational(BigInt(s));
        }
        std::string ns = s.substr(0, slash);
        std::string ds = s.substr(slash + 1);
        check_int(ns, true);
        check_int(ds, false);
        BigInt d(ds);
        if (d == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        return Rational(BigInt(ns), std::move(d));
    } catch (const std::runtime_error&) {  // cpp_int conversion failure
        throw bad();
    }
}

}  // namespace exact
