#include "exact/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace exact {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return r;
    }

private:
    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    RatFunc term() {
        RatFunc r = factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                r *= factor();
            else if (accept('/'))
                r /= factor();
            else
                return r;
        }
    }

    RatFunc factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-')
            neg ^= (s_[pos_++] == '-');
        RatFunc b = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("exponent must be a non-negative integer");
            unsigned long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
                if (e > 64)
                    fail("exponent too large");
            }
            RatFunc p(Rational(1));
            for (unsigned long i = 0; i < e; ++i)
                p *= b;
            b = p;
        }
        return neg ? -b : b;
    }

    RatFunc base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            skip_ws();
            if (!accept(')'))
                fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                digits += s_[pos_++];
            return RatFunc(Rational(BigInt(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                name += s_[pos_++];
            return RatFunc::variable(name);
        }
        fail("expected a number, name, or '('");
        return RatFunc();  // unreachable
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " +
                                    std::to_string(pos_) + " in '" + s_ + "': " +
                                    what);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) {
    return Parser(text).parse();
}

MultiPoly parse_poly(const std::string& text) {
    RatFunc r = parse_ratfunc(text);
    if (!r.den().is_constant())
        throw std::invalid_argument("expected a polynomial, got '" + text + "'");
    MultiPoly p = r.num();
    Rational d = r.den().constant_value();
    if (!d.is_one())
        p *= Rational(1) / d;
    return p;
}

}  // namespace exact
