#pragma once
// Exact Bianchi classification of a 3-dimensional real Lie algebra given
// by rational structure constants.

#include <string>

#include "liealg/bianchi.hpp"
#include "liealg/decompose.hpp"

namespace liealg {

struct Classification {
    BianchiClass bianchi = BianchiClass::I;
    // For VI_a / VII_a the exact square of the standard-form parameter
    // (a basis invariant; a itself is only determined up to sign and the
    // a <-> 1/a convention is fixed by a > 0 resp. a > 0, a != 1).
    exact::Rational param_a_squared;
};

inline bool operator==(const Classification& x, const Classification& y) {
    return x.bianchi == y.bianchi && x.param_a_squared == y.param_a_squared;
}
inline bool operator!=(const Classification& x, const Classification& y) {
    return !(x == y);
}

// e.g. "VI_a (a^2 = 4)" or "VIII".
std::string to_string(const Classification& c);

// Throws std::invalid_argument when f violates the Jacobi identity.
Classification classify(const StructureConstants<exact::Rational>& f);

}  // namespace liealg
