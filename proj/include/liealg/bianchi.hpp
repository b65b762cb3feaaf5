#pragma once
// The eleven Bianchi classes of 3-dimensional real Lie algebras and their
// canonical structure constants
//   f_12^2 = -a,  f_12^3 = n3,  f_23^1 = n1,  f_31^2 = n2,  f_31^3 = a.

#include <array>
#include <string>

#include "liealg/structure.hpp"

namespace liealg {

enum class BianchiClass { I, II, III, IV, V, VI0, VIa, VII0, VIIa, VIII, IX };

inline constexpr std::array<BianchiClass, 11> all_bianchi_classes{
    BianchiClass::I,    BianchiClass::II,   BianchiClass::III,
    BianchiClass::IV,   BianchiClass::V,    BianchiClass::VI0,
    BianchiClass::VIa,  BianchiClass::VII0, BianchiClass::VIIa,
    BianchiClass::VIII, BianchiClass::IX};

// Canonical spelling: "I", "II", "III", "IV", "V", "VI_0", "VI_a",
// "VII_0", "VII_a", "VIII", "IX".
std::string to_string(BianchiClass c);
// Accepts the canonical spelling and the compact one ("VI0", "VIa", ...);
// throws std::invalid_argument otherwise.
BianchiClass bianchi_from_string(const std::string& s);
// True for VI_a and VII_a, whose standard form carries the parameter a.
bool has_parameter(BianchiClass c);

template <typename K>
StructureConstants<K> from_bianchi(const K& a, const K& n1, const K& n2,
                                   const K& n3) {
    StructureConstants<K> f;
    f.set(1, 2, 2, -a);
    f.set(1, 2, 3, n3);
    f.set(2, 3, 1, n1);
    f.set(3, 1, 2, n2);
    f.set(3, 1, 3, a);
    return f;
}

// Canonical numeric structure constants.  The parameter is required for
// VI_a (a > 0, a != 1) and VII_a (a > 0) and must be omitted otherwise.
StructureConstants<exact::Rational> standard_form(
    BianchiClass c, const exact::Rational& a = exact::Rational());

// Same forms with VI_a / VII_a carrying the symbolic parameter "a".
StructureConstants<exact::RatFunc> standard_form_symbolic(BianchiClass c);

}  // namespace liealg
