#pragma once
// Sparse multivariate polynomials over Rational in named parameters.
//
// Canonical form: variable names sorted lexicographically and pruned to
// those actually appearing with positive exponent; terms keyed by exponent
// vectors under a graded-lexicographic order (total degree first, then lex
// on exponents), stored descending so iteration starts at the leading term;
// no zero coefficients stored.  Equal abstract values therefore have
// identical representations regardless of construction order.

#include <map>
#include <string>
#include <vector>

#include "exact/rational.hpp"

namespace exact {

class MultiPoly {
public:
    // Graded-lex, descending: leading term compares smallest in map order.
    struct TermOrder {
        bool operator()(const std::vector<unsigned>& a,
                        const std::vector<unsigned>& b) const;
    };
    using TermMap = std::map<std::vector<unsigned>, Rational, TermOrder>;

    MultiPoly() = default;                     // zero polynomial
    MultiPoly(const Rational& c);              // constant
    MultiPoly(long long c) : MultiPoly(Rational(c)) {}
    static MultiPoly variable(const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    // The constant value of a constant polynomial (zero polynomial -> 0).
    Rational constant_value() const;

    unsigned total_degree() const;  // 0 for constants and zero
    unsigned degree_in(const std::string& var) const;

    // Coefficient of the graded-lex leading term (0 for the zero poly).
    Rational leading_coefficient() const;
    // gcd of all coefficients, positive (0 for the zero polynomial);
    // dividing by it makes the coefficient set primitive over the integers.
    Rational content() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }

    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
        return !(a == b);
    }

    // Exact evaluation; the assignment must cover every variable
    // (missing-variable error otherwise; extra names are ignored).
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    // Exact polynomial division: *this = q * divisor must hold in the ring;
    // returns q, throws std::domain_error if the division leaves a
    // remainder.  Used by fraction-free elimination where the divisibility
    // is guaranteed.
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    // Univariate polynomial gcd (both polynomials in the same single
    // variable, constants allowed); result is primitive with positive
    // leading coefficient.  Throws std::domain_error on multivariate input.
    static MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q);

    // Canonical string, e.g. "a^2 - 1", "2*a*b^2 + 5/2"; "0" for zero.
    std::string to_string() const;

private:
    void insert_term(const std::vector<unsigned>& key, const Rational& c);
    void prune_vars();
    // Re-express this polynomial over the given superset variable list.
    static TermMap remap(const MultiPoly& p, const std::vector<std::string>& vars);

    std::vector<std::string> vars_;  // sorted, deduped, all used
    TermMap terms_;                  // keys have length vars_.size()
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline std::string to_string(const MultiPoly& p) { return p.to_string(); }

}  // namespace exact
