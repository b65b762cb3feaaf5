#pragma once
// The classification catalog: 78 equivalence classes of compatible pairs
// (g, g~) of three-dimensional real Lie algebras - 54 base entries plus 24
// generated as duals - with parameter constraints, duality links, structural
// verification, and JSON serialization.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "exact/ratfunc.hpp"
#include "liealg/bianchi.hpp"
#include "liealg/classify.hpp"
#include "manin/triple.hpp"
#include "manin/witness.hpp"

namespace catalog {

struct Constraint {
    exact::RatFunc poly;  // expression in the entry parameters a, b
    std::string rel;      // ">0", "!=0", or "=0"
};

struct Entry {
    std::string id;
    liealg::BianchiClass g_class = liealg::BianchiClass::I;
    liealg::BianchiClass dual_class = liealg::BianchiClass::I;
    // the dual half realizes parameter 1/a (rather than a) of dual_class
    bool dual_inverts_a = false;
    // id of the entry the dual triple is equivalent to (itself if self-dual)
    std::string dual_id;
    manin::ManinTriple<exact::RatFunc> triple;  // symbolic in a and/or b
    std::vector<Constraint> constraints;
    bool uses_a = false;
    bool uses_b = false;
    bool flagged = false;  // carries a transcription note
    std::string note;
};

// All 78 entries in catalog order (base entries first, generated duals
// after them).
const std::vector<Entry>& all_entries();

// Lookup by id; throws std::invalid_argument for unknown ids.
const Entry& find_entry(const std::string& id);

using Values = std::map<std::string, exact::Rational>;

// Canonical parameter values satisfying the entry's constraints
// (a = 2, b = 1 where used).
Values default_values(const Entry& e);

// The verification grid: a in {2,3} where used; b in {1,2} when b > 0 is
// required, {1,2,-1} when only b != 0 is required.  A single empty
// assignment for parameter-free entries.
std::vector<Values> default_samples(const Entry& e);

// Numeric instance.  Throws std::invalid_argument when required parameters
// are missing, unknown names are passed, or a constraint is violated.
manin::TripleQ instantiate(const Entry& e, const Values& v);

struct EntryReport {
    std::string id;
    bool ok = true;
    int samples = 0;
    std::vector<std::string> failures;
    bool flagged = false;
    std::string note;
};

// Structural verification at one parameter point: the defining identities,
// the Jacobi identity of the assembled double and the invariance of its
// canonical pairing, and the classification of both halves (parameters
// included) against the declared classes.  Returns human-readable failure
// descriptions (empty = pass).
std::vector<std::string> verify_at(const Entry& e, const Values& v);

// verify_at over the default sample grid.
EntryReport verify_entry(const Entry& e);

// Every entry, in catalog order.
std::vector<EntryReport> verify_catalog();

// Explicit duality-fixed-point enumeration: an entry is self-dual when its
// dual triple is equivalent to the entry itself (allowing the parameter
// mapping a -> 1/a), exhibited by an exact witness - entrywise equality, a
// bounded search, or one of the two stored analytic witness matrices.
// Entries whose halves classify differently are rejected without a search.
std::vector<std::string> self_dual_ids();

struct Counts {
    int total = 0;
    int up_to_duality = 0;
    int self_dual = 0;
};
Counts count_classes();

// Classified signature "g|dual" (parameters included) of the instance at
// default values, e.g. "VI_a (a^2 = 4)|VI_a (a^2 = 1/4)".
std::string fingerprint(const Entry& e);

// JSON serialization ({"version":1,"entries":[...]}).
nlohmann::json entry_to_json(const Entry& e);
nlohmann::json catalog_to_json();
std::vector<Entry> catalog_from_json(const nlohmann::json& j);

}  // namespace catalog
