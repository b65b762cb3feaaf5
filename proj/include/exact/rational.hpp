#pragma once
// Arbitrary-precision rational numbers in canonical form.
//
// Canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.  Every
// constructor and operation re-canonicalizes, so two equal values always
// have bit-identical representations (required for deterministic
// serialization throughout the toolkit).

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace exact {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    // Total order via cross-multiplication (denominators are positive).
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Serializes as "p/q", or "p" when q = 1.
    std::string to_string() const;
    // Parses "p", "-p", or "p/q"; throws std::invalid_argument on anything
    // else (including "1/0").
    static Rational parse(const std::string& s);

private:
    void canonicalize();
    BigInt num_;
    BigInt den_;  // always > 0
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.to_string(); }

}  // namespace exact
