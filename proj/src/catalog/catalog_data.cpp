#include <set>

#include "catalog/catalog.hpp"
#include "exact/parse.hpp"
#include "internal.hpp"

// The catalog data: the 54 base classes of compatible pairs, listed per
// first-half algebra, plus the 24 entries generated as their duals where the
// dual pair is not itself a base entry.  Dual components are given as
// ft^{ij}_k with i < j; every omitted component is zero.

namespace catalog {

using exact::RatFunc;
using liealg::BianchiClass;

namespace {

RatFunc rf(const char* s) { return exact::parse_ratfunc(s); }

Constraint a_pos() { return {rf("a"), ">0"}; }
Constraint a_ne_1() { return {rf("a-1"), "!=0"}; }
Constraint b_pos() { return {rf("b"), ">0"}; }
Constraint b_ne_0() { return {rf("b"), "!=0"}; }

struct FtComponent {
    int i, j, k;
    const char* expr;
};

liealg::StructureConstants<RatFunc> lift(
    const liealg::StructureConstants<exact::Rational>& f) {
    liealg::StructureConstants<RatFunc> out;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) out.set(i, j, k, RatFunc(f(i, j, k)));
    return out;
}

Entry base(const char* id, BianchiClass gc,
           std::initializer_list<FtComponent> ft,
           std::vector<Constraint> cons, BianchiClass dc, bool inverts,
           std::string dual_id, bool flagged = false, const char* note = "") {
    Entry e;
    e.id = id;
    e.g_class = gc;
    e.dual_class = dc;
    e.dual_inverts_a = inverts;
    e.dual_id = std::move(dual_id);
    e.flagged = flagged;
    e.note = note;
    e.triple.g = liealg::has_parameter(gc)
                     ? liealg::standard_form_symbolic(gc)
                     : lift(liealg::standard_form(gc));
    for (const auto& c : ft) e.triple.dual.set(c.i, c.j, c.k, rf(c.expr));
    e.constraints = std::move(cons);
    detail::scan_uses(e);
    return e;
}

// Generated entry: the dual pair of a base entry, under the same parameter
// constraints.
Entry derived_dual(const Entry& src) {
    Entry e;
    e.id = src.id + ".dual";
    e.g_class = src.dual_class;
    e.dual_class = src.g_class;
    e.dual_inverts_a = false;  // parameters carry over unchanged
    e.dual_id = src.id;
    e.triple = manin::dual_triple(src.triple);
    e.constraints = src.constraints;
    e.uses_a = src.uses_a;
    e.uses_b = src.uses_b;
    return e;
}

std::vector<Entry> build_catalog() {
    using C = BianchiClass;
    const char* self = nullptr;  // marker: dual_id = own id
    auto mk = [&](const char* id, C gc, std::initializer_list<FtComponent> ft,
                  std::vector<Constraint> cons, C dc, bool inverts,
                  const char* dual, bool flagged = false,
                  const char* note = "") {
        return base(id, gc, ft, std::move(cons), dc, inverts,
                    dual == self ? id : dual, flagged, note);
    };

    std::vector<Entry> es;

    // --- first half of type IX -------------------------------------------
    es.push_back(mk("IX.a", C::IX, {}, {}, C::I, false, "I.IX"));
    es.push_back(mk("IX.b", C::IX, {{1, 2, 2, "-b"}, {1, 3, 3, "-b"}},
                    {b_pos()}, C::V, false, "IX.b.dual"));

    // --- VIII -------------------------------------------------------------
    es.push_back(mk("VIII.a", C::VIII, {}, {}, C::I, false, "I.VIII"));
    es.push_back(mk("VIII.b.i", C::VIII, {{1, 2, 2, "-b"}, {1, 3, 3, "-b"}},
                    {b_pos()}, C::V, false, "VIII.b.i.dual"));
    es.push_back(mk("VIII.b.ii", C::VIII, {{2, 3, 2, "b"}, {1, 3, 1, "b"}},
                    {b_pos()}, C::V, false, "VIII.b.ii.dual"));
    es.push_back(mk("VIII.b.iii", C::VIII,
                    {{1, 2, 2, "1"}, {2, 3, 2, "1"}, {1, 3, 1, "1"},
                     {1, 3, 3, "1"}},
                    {}, C::V, false, "VIII.b.iii.dual"));

    // --- VII_a --------------------------------------------------------------
    es.push_back(mk("VII_a.a", C::VIIa, {}, {a_pos()}, C::I, false,
                    "I.VII_a"));
    es.push_back(mk("VII_a.b.i", C::VIIa, {{2, 3, 1, "1"}}, {a_pos()}, C::II,
                    false, "VII_a.b.i.dual"));
    es.push_back(mk("VII_a.b.ii", C::VIIa, {{2, 3, 1, "-1"}}, {a_pos()},
                    C::II, false, "VII_a.b.ii.dual"));
    es.push_back(mk("VII_a.c", C::VIIa,
                    {{1, 2, 2, "-b/a"},
                     {1, 2, 3, "b"},
                     {1, 3, 2, "-b"},
                     {1, 3, 3, "-b/a"}},
                    {a_pos(), b_ne_0()}, C::VIIa, true, self));

    // --- VII_0 --------------------------------------------------------------
    es.push_back(mk("VII_0.a", C::VII0, {}, {}, C::I, false, "I.VII_0"));
    es.push_back(mk("VII_0.b.i", C::VII0, {{1, 2, 3, "1"}}, {}, C::II, false,
                    "VII_0.b.i.dual"));
    es.push_back(mk("VII_0.b.ii", C::VII0, {{1, 2, 3, "-1"}}, {}, C::II,
                    false, "VII_0.b.ii.dual"));
    es.push_back(mk("VII_0.c", C::VII0,
                    {{1, 2, 2, "-b"}, {1, 2, 3, "b"}, {1, 3, 3, "-b"}},
                    {b_ne_0()}, C::IV, false, "VII_0.c.dual"));
    es.push_back(mk("VII_0.d.i", C::VII0, {{1, 2, 2, "-1"}, {1, 3, 3, "-1"}},
                    {}, C::V, false, "VII_0.d.i.dual"));
    es.push_back(mk("VII_0.d.ii", C::VII0, {{2, 3, 2, "b"}, {1, 3, 1, "b"}},
                    {b_pos()}, C::V, false, "VII_0.d.ii.dual"));

    // --- VI_a ---------------------------------------------------------------
    es.push_back(mk("VI_a.a", C::VIa, {}, {a_pos(), a_ne_1()}, C::I, false,
                    "I.VI_a"));
    es.push_back(mk("VI_a.b", C::VIa, {{2, 3, 1, "1"}}, {a_pos(), a_ne_1()},
                    C::II, false, "VI_a.b.dual"));
    es.push_back(mk("VI_a.c.i", C::VIa,
                    {{1, 2, 2, "-b/a"},
                     {1, 2, 3, "-b"},
                     {1, 3, 2, "-b"},
                     {1, 3, 3, "-b/a"}},
                    {a_pos(), a_ne_1(), b_ne_0()}, C::VIa, true, self));
    es.push_back(mk("VI_a.c.ii", C::VIa,
                    {{1, 2, 1, "1"},
                     {2, 3, 2, "(a+1)/(a-1)"},
                     {2, 3, 3, "(a+1)/(a-1)"},
                     {1, 3, 1, "-1"}},
                    {a_pos(), a_ne_1()}, C::VIa, true, self));
    es.push_back(mk("VI_a.c.iii", C::VIa,
                    {{1, 2, 1, "1"},
                     {2, 3, 2, "-(a-1)/(a+1)"},
                     {2, 3, 3, "(a-1)/(a+1)"},
                     {1, 3, 1, "1"}},
                    {a_pos(), a_ne_1()}, C::VIa, true, self));

    // --- VI_0 ---------------------------------------------------------------
    es.push_back(mk("VI_0.a", C::VI0, {}, {}, C::I, false, "I.VI_0"));
    es.push_back(mk("VI_0.b", C::VI0, {{1, 2, 3, "1"}}, {}, C::II, false,
                    "VI_0.b.dual"));
    es.push_back(mk("VI_0.c.i", C::VI0,
                    {{1, 2, 2, "-b"}, {1, 2, 3, "b"}, {1, 3, 3, "-b"}},
                    {b_ne_0()}, C::IV, false, "VI_0.c.i.dual"));
    es.push_back(mk(
        "VI_0.c.ii", C::VI0,
        {{1, 2, 1, "-1"},
         {1, 2, 2, "1"},
         {1, 2, 3, "1"},
         {2, 3, 3, "1"},
         {1, 3, 3, "1"}},
        {}, C::IV, false, "VI_0.c.ii.dual", true,
        "transcription note: the reference listing gives this entry's last "
        "bracket on an upper index pair that would repeat [2,3]; it is read "
        "as [3,1] (the only assignment consistent with the solution space), "
        "and with that reading the listed coefficients pass every identity "
        "unchanged (as-printed: pass)"));
    es.push_back(mk("VI_0.d.i", C::VI0, {{1, 2, 2, "-1"}, {1, 3, 3, "-1"}},
                    {}, C::V, false, "VI_0.d.i.dual"));
    es.push_back(mk("VI_0.d.ii", C::VI0,
                    {{1, 2, 1, "-1"}, {1, 2, 2, "1"}, {2, 3, 3, "1"},
                     {1, 3, 3, "1"}},
                    {}, C::V, false, "VI_0.d.ii.dual"));
    es.push_back(mk("VI_0.d.iii", C::VI0, {{2, 3, 2, "-1"}, {1, 3, 1, "-1"}},
                    {}, C::V, false, "VI_0.d.iii.dual"));

    // --- V ------------------------------------------------------------------
    es.push_back(mk("V.a", C::V, {}, {}, C::I, false, "I.V"));
    es.push_back(mk("V.b.i", C::V, {{2, 3, 1, "1"}}, {}, C::II, false,
                    "V.b.i.dual"));
    es.push_back(mk("V.b.ii", C::V, {{1, 2, 3, "1"}}, {}, C::II, false,
                    "V.b.ii.dual"));

    // --- IV -----------------------------------------------------------------
    es.push_back(mk("IV.a", C::IV, {}, {}, C::I, false, "I.IV"));
    es.push_back(mk("IV.b.i", C::IV, {{2, 3, 1, "1"}}, {}, C::II, false,
                    "IV.b.i.dual"));
    es.push_back(mk("IV.b.ii", C::IV, {{2, 3, 1, "-1"}}, {}, C::II, false,
                    "IV.b.ii.dual"));
    es.push_back(mk("IV.b.iii", C::IV, {{1, 3, 2, "-b"}}, {b_ne_0()}, C::II,
                    false, "IV.b.iii.dual"));

    // --- III ----------------------------------------------------------------
    es.push_back(mk("III.a", C::III, {}, {}, C::I, false, "I.III"));
    es.push_back(mk("III.b", C::III, {{2, 3, 1, "1"}}, {}, C::II, false,
                    "III.b.dual"));
    es.push_back(mk("III.c.i", C::III,
                    {{1, 2, 2, "-b"},
                     {1, 2, 3, "-b"},
                     {1, 3, 2, "-b"},
                     {1, 3, 3, "-b"}},
                    {b_ne_0()}, C::III, false, self));
    es.push_back(mk("III.c.ii", C::III, {{2, 3, 2, "1"}, {2, 3, 3, "1"}}, {},
                    C::III, false, self));
    es.push_back(mk("III.c.iii", C::III, {{1, 2, 1, "1"}, {1, 3, 1, "1"}}, {},
                    C::III, false, self));

    // --- II -----------------------------------------------------------------
    es.push_back(mk("II.a", C::II, {}, {}, C::I, false, "I.II"));
    es.push_back(mk("II.b.i", C::II, {{1, 2, 3, "1"}}, {}, C::II, false,
                    self));
    es.push_back(mk("II.b.ii", C::II, {{1, 2, 3, "-1"}}, {}, C::II, false,
                    self));

    // --- I (abelian first half; dual halves run through every class) -------
    es.push_back(mk("I.I", C::I, {}, {}, C::I, false, self));
    es.push_back(mk("I.II", C::I, {{2, 3, 1, "1"}}, {}, C::II, false, "II.a"));
    es.push_back(mk("I.III", C::I,
                    {{1, 2, 2, "-1"},
                     {1, 2, 3, "-1"},
                     {1, 3, 2, "-1"},
                     {1, 3, 3, "-1"}},
                    {}, C::III, false, "III.a"));
    es.push_back(mk("I.IV", C::I,
                    {{1, 2, 2, "-1"}, {1, 2, 3, "1"}, {1, 3, 3, "-1"}}, {},
                    C::IV, false, "IV.a"));
    es.push_back(mk("I.V", C::I, {{1, 2, 2, "-1"}, {1, 3, 3, "-1"}}, {},
                    C::V, false, "V.a"));
    es.push_back(mk("I.VI_0", C::I, {{2, 3, 1, "1"}, {1, 3, 2, "1"}}, {},
                    C::VI0, false, "VI_0.a"));
    es.push_back(mk("I.VI_a", C::I,
                    {{1, 2, 2, "-a"},
                     {1, 2, 3, "-1"},
                     {1, 3, 2, "-1"},
                     {1, 3, 3, "-a"}},
                    {a_pos(), a_ne_1()}, C::VIa, false, "VI_a.a"));
    es.push_back(mk("I.VII_0", C::I, {{2, 3, 1, "1"}, {1, 3, 2, "-1"}}, {},
                    C::VII0, false, "VII_0.a"));
    es.push_back(mk("I.VII_a", C::I,
                    {{1, 2, 2, "-a"},
                     {1, 2, 3, "1"},
                     {1, 3, 2, "-1"},
                     {1, 3, 3, "-a"}},
                    {a_pos()}, C::VIIa, false, "VII_a.a"));
    es.push_back(mk("I.VIII", C::I,
                    {{1, 2, 3, "-1"}, {2, 3, 1, "1"}, {1, 3, 2, "-1"}}, {},
                    C::VIII, false, "VIII.a"));
    es.push_back(mk("I.IX", C::I,
                    {{1, 2, 3, "1"}, {2, 3, 1, "1"}, {1, 3, 2, "-1"}}, {},
                    C::IX, false, "IX.a"));

    // --- generated duals ----------------------------------------------------
    const std::size_t n_base = es.size();
    for (std::size_t i = 0; i < n_base; ++i)
        if (es[i].dual_id == es[i].id + ".dual")
            es.push_back(derived_dual(es[i]));
    return es;
}

}  // namespace

const std::vector<Entry>& all_entries() {
    static const std::vector<Entry> entries = build_catalog();
    return entries;
}

const Entry& find_entry(const std::string& id) {
    for (const Entry& e : all_entries())
        if (e.id == id) return e;
    throw std::invalid_argument("find_entry: unknown entry id: " + id);
}

namespace detail {

void scan_uses(Entry& e) {
    std::set<std::string> names;
    auto collect = [&](const RatFunc& v) {
        for (const auto& n : v.num().vars()) names.insert(n);
        for (const auto& n : v.den().vars()) names.insert(n);
    };
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                collect(e.triple.g(i, j, k));
                collect(e.triple.dual(i, j, k));
            }
    for (const auto& c : e.constraints) collect(c.poly);
    e.uses_a = names.count("a") > 0;
    e.uses_b = names.count("b") > 0;
}

}  // namespace detail

}  // namespace catalog
