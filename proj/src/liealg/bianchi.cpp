#include "liealg/bianchi.hpp"

namespace liealg {

std::string to_string(BianchiClass c) {
    switch (c) {
        case BianchiClass::I: return "I";
        case BianchiClass::II: return "II";
        case BianchiClass::III: return "III";
        case BianchiClass::IV: return "IV";
        case BianchiClass::V: return "V";
        case BianchiClass::VI0: return "VI_0";
        case BianchiClass::VIa: return "VI_a";
        case BianchiClass::VII0: return "VII_0";
        case BianchiClass::VIIa: return "VII_a";
        case BianchiClass::VIII: return "VIII";
        case BianchiClass::IX: return "IX";
    }
    throw std::logic_error("to_string: unknown Bianchi class");
}

BianchiClass bianchi_from_string(const std::string& s) {
    for (BianchiClass c : all_bianchi_classes)
        if (s == to_string(c)) return c;
    if (s == "VI0") return BianchiClass::VI0;
    if (s == "VIa") return BianchiClass::VIa;
    if (s == "VII0") return BianchiClass::VII0;
    if (s == "VIIa") return BianchiClass::VIIa;
    throw std::invalid_argument("unknown Bianchi class name: " + s);
}

bool has_parameter(BianchiClass c) {
    return c == BianchiClass::VIa || c == BianchiClass::VIIa;
}

namespace {

template <typename K>
StructureConstants<K> form_impl(BianchiClass c, const K& a) {
    const K zero{};
    const K one(exact::Rational(1));
    const K minus(exact::Rational(-1));
    switch (c) {
        case BianchiClass::I: return from_bianchi(zero, zero, zero, zero);
        case BianchiClass::II: return from_bianchi(zero, one, zero, zero);
        case BianchiClass::III: return from_bianchi(one, zero, one, minus);
        case BianchiClass::IV: return from_bianchi(one, zero, zero, one);
        case BianchiClass::V: return from_bianchi(one, zero, zero, zero);
        case BianchiClass::VI0: return from_bianchi(zero, one, minus, zero);
        case BianchiClass::VIa: return from_bianchi(a, zero, one, minus);
        case BianchiClass::VII0: return from_bianchi(zero, one, one, zero);
        case BianchiClass::VIIa: return from_bianchi(a, zero, one, one);
        case BianchiClass::VIII: return from_bianchi(zero, one, one, minus);
        case BianchiClass::IX: return from_bianchi(zero, one, one, one);
    }
    throw std::logic_error("standard_form: unknown Bianchi class");
}

}  // namespace

StructureConstants<exact::Rational> standard_form(BianchiClass c,
                                                  const exact::Rational& a) {
    if (has_parameter(c)) {
        if (!(a > exact::Rational(0)))
            throw std::invalid_argument(
                "standard_form: " + to_string(c) + " requires a > 0");
        if (c == BianchiClass::VIa && a == exact::Rational(1))
            throw std::invalid_argument("standard_form: VI_a requires a != 1");
    } else if (!a.is_zero()) {
        throw std::invalid_argument("standard_form: " + to_string(c) +
                                    " has no parameter");
    }
    return form_impl<exact::Rational>(c, a);
}

StructureConstants<exact::RatFunc> standard_form_symbolic(BianchiClass c) {
    return form_impl<exact::RatFunc>(
        c, has_parameter(c) ? exact::RatFunc::variable("a")
                            : exact::RatFunc());
}

}  // namespace liealg
