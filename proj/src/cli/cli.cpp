#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog/catalog.hpp"
#include "cli/cli.hpp"
#include "exact/parse.hpp"
#include "liealg/classify.hpp"
#include "liealg/decompose.hpp"
#include "manin/double_algebra.hpp"
#include "solver/family.hpp"
#include "solver/ideal.hpp"
#include "solver/reference.hpp"

namespace cli {

namespace {

using exact::Rational;

std::string k_str(const Rational& v) { return v.to_string(); }
std::string k_str(const exact::RatFunc& v) { return v.to_string(); }
bool k_is_zero(const Rational& v) { return v == Rational(0); }
bool k_is_zero(const exact::RatFunc& v) { return v.is_zero(); }

// One summand "c B" of a bracket right-hand side, with 1/-1 coefficients
// elided and compound coefficients parenthesized.
std::string term(const std::string& coef, const std::string& basis) {
    if (coef == "1") return basis;
    if (coef == "-1") return "-" + basis;
    std::string c = coef;
    if (c.find(' ') != std::string::npos && c.front() != '(')
        c = "(" + c + ")";
    return c + " " + basis;
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].front() == '-')
            out += " - " + terms[i].substr(1);
        else
            out += " + " + terms[i];
    }
    return out;
}

// Bracket table of one subalgebra, basis vectors named <base>1..<base>3.
template <typename K>
void print_brackets(std::ostream& out,
                    const liealg::StructureConstants<K>& f,
                    const std::string& base) {
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            std::vector<std::string> ts;
            for (int k = 1; k <= 3; ++k)
                if (!k_is_zero(f(i, j, k)))
                    ts.push_back(
                        term(k_str(f(i, j, k)), base + std::to_string(k)));
            if (!ts.empty())
                out << "  [" << base << i << ", " << base << j
                    << "] = " << join_terms(ts) << "\n";
        }
}

// Parses "name=value" assignments (comma-separable) into parameter values.
bool parse_assignments(const std::vector<std::string>& items,
                       catalog::Values& v, std::ostream& err) {
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty()) continue;
            const auto eq = part.find('=');
            if (eq == std::string::npos || eq == 0) {
                err << "error: expected name=value, got '" << part << "'\n";
                return false;
            }
            try {
                v[part.substr(0, eq)] =
                    exact::parse_ratfunc(part.substr(eq + 1)).as_rational();
            } catch (const std::exception& ex) {
                err << "error: bad value in '" << part << "': " << ex.what()
                    << "\n";
                return false;
            }
        }
    }
    return true;
}

int cmd_classify(const std::string& path, std::ostream& out,
                 std::ostream& err) {
    nlohmann::json j;
    {
        std::ifstream in(path);
        if (!in) {
            err << "error: cannot open " << path << "\n";
            return 2;
        }
        try {
            in >> j;
        } catch (const std::exception& ex) {
            err << "error: invalid JSON in " << path << ": " << ex.what()
                << "\n";
            return 2;
        }
    }
    liealg::StructureConstants<Rational> f;
    try {
        f = liealg::algebra_from_json(j);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    liealg::Classification c;
    try {
        c = liealg::classify(f);
    } catch (const std::invalid_argument& ex) {
        err << "verification failure: " << ex.what() << "\n";
        return 1;
    }
    out << liealg::to_string(c) << "\n";
    const auto d = liealg::na_decompose(f);
    out << "a = (" << d.a[0].to_string() << ", " << d.a[1].to_string()
        << ", " << d.a[2].to_string() << ")\n";
    out << "n = [";
    for (int m = 0; m < 3; ++m) {
        out << (m ? ", [" : "[");
        for (int k = 0; k < 3; ++k)
            out << (k ? ", " : "") << d.n(m, k).to_string();
        out << "]";
    }
    out << "]\n";
    return 0;
}

int cmd_solve_duals(const std::string& type, const std::string& param,
                    bool as_json, unsigned long long seed, std::ostream& out,
                    std::ostream& err) {
    liealg::BianchiClass c;
    try {
        c = liealg::bianchi_from_string(type);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    std::optional<Rational> a;
    if (!param.empty()) {
        catalog::Values v;
        if (!parse_assignments({param}, v, err)) return 2;
        if (v.size() != 1 || v.count("a") == 0) {
            err << "error: --param takes a single assignment a=VALUE\n";
            return 2;
        }
        if (!liealg::has_parameter(c)) {
            err << "error: class " << liealg::to_string(c)
                << " has no parameter\n";
            return 2;
        }
        a = v.at("a");
    }

    solver::DualFamily fam;
    try {
        fam = solver::solve_dual_family(c, a);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    const auto ideal = solver::dual_jacobi_ideal(fam);
    const bool match = solver::reference_match(fam);

    // For a fully numeric family, cross-check the rendered ideal against
    // the reference generators on the seeded sample cloud.
    bool sampling_ok = true;
    solver::SamplingReport rep;
    if (!fam.symbolic_a) {
        std::optional<Rational> aref;
        if (liealg::has_parameter(c)) aref = fam.a_value;
        rep = solver::ideal_equivalent(fam, solver::reference_ideal(c, aref),
                                       seed);
        sampling_ok = rep.equivalent;
    }

    if (as_json) {
        nlohmann::json j;
        j["algebra"] = liealg::to_string(c);
        j["nullspace_dim"] = fam.nullspace_dim;
        auto rel = nlohmann::json::array();
        for (const auto& r : fam.relations) rel.push_back(r.to_string());
        j["relations"] = rel;
        auto gens = nlohmann::json::array();
        for (const auto& g : ideal) gens.push_back(g.to_string());
        j["ideal"] = gens;
        auto asm_ = nlohmann::json::array();
        for (const auto& p : fam.assumptions) asm_.push_back(p.to_string());
        j["assumptions"] = asm_;
        j["reference_match"] = match;
        out << j.dump(2) << "\n";
    } else {
        out << "algebra: " << liealg::to_string(c);
        if (a)
            out << " (a = " << a->to_string() << ")";
        else if (fam.symbolic_a)
            out << " (a symbolic)";
        out << "\n";
        out << "nullspace_dim: " << fam.nullspace_dim << "\n";
        if (fam.relations.empty()) {
            out << "relations: none\n";
        } else {
            out << "relations:\n";
            for (const auto& r : fam.relations)
                out << "  " << r.to_string() << " = 0\n";
        }
        if (ideal.empty()) {
            out << "ideal: empty\n";
        } else {
            out << "ideal:\n";
            for (const auto& g : ideal) out << "  " << g.to_string() << "\n";
        }
        if (fam.assumptions.empty()) {
            out << "assumptions: none\n";
        } else {
            out << "assumptions (nonvanishing):\n";
            for (const auto& p : fam.assumptions)
                out << "  " << p.to_string() << "\n";
        }
        out << "reference_match: " << (match ? "true" : "false") << "\n";
        if (!fam.symbolic_a)
            out << "ideal_check: "
                << (sampling_ok ? "equivalent" : "NOT equivalent")
                << " to the reference generators at " << rep.points
                << " points (seed " << seed << ")\n";
    }
    if (!match || !sampling_ok) {
        err << "verification failure: computed solution disagrees with the "
               "reference listing\n";
        return 1;
    }
    return 0;
}

int cmd_double(const std::string& id, const std::vector<std::string>& values,
               std::ostream& out, std::ostream& err) {
    const catalog::Entry* e = nullptr;
    try {
        e = &catalog::find_entry(id);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    catalog::Values v = catalog::default_values(*e);
    if (!parse_assignments(values, v, err)) return 2;
    manin::TripleQ t;
    try {
        t = catalog::instantiate(*e, v);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    const auto dbl = manin::build_double(t);
    if (!manin::double_satisfies_jacobi(dbl)) {
        err << "verification failure: double violates the Jacobi identity\n";
        return 1;
    }
    const auto name = [](int i) {
        return i <= 3 ? "X" + std::to_string(i)
                      : "X~" + std::to_string(i - 3);
    };
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            std::vector<std::string> ts;
            for (int k = 1; k <= 6; ++k)
                if (!k_is_zero(dbl(i, j, k)))
                    ts.push_back(term(k_str(dbl(i, j, k)), name(k)));
            if (!ts.empty())
                out << "[" << name(i) << ", " << name(j)
                    << "] = " << join_terms(ts) << "\n";
        }
    return 0;
}

// Verification grid for --samples n: the first n values from fixed pools
// compatible with the entry's parameter ranges.
std::vector<catalog::Values> custom_grid(const catalog::Entry& e, int n) {
    const std::vector<Rational> a_pool{Rational(2), Rational(3), Rational(5),
                                       Rational(1, 2), Rational(7),
                                       Rational(3, 2)};
    const std::vector<Rational> b_pos{Rational(1), Rational(2), Rational(3),
                                      Rational(1, 2), Rational(5),
                                      Rational(4)};
    const std::vector<Rational> b_nz{Rational(1), Rational(2), Rational(-1),
                                     Rational(1, 2), Rational(-2),
                                     Rational(3)};
    bool positive_b = false;
    for (const auto& c : e.constraints) {
        const auto& nv = c.poly.num().vars();
        if (c.rel == ">0" &&
            std::find(nv.begin(), nv.end(), "b") != nv.end())
            positive_b = true;
    }
    const auto take = [n](const std::vector<Rational>& pool) {
        return std::vector<Rational>(
            pool.begin(),
            pool.begin() + std::min<std::size_t>(
                               pool.size(), static_cast<std::size_t>(n)));
    };
    std::vector<catalog::Values> grid;
    if (e.uses_a && e.uses_b) {
        for (const auto& a : take(a_pool))
            for (const auto& b : take(positive_b ? b_pos : b_nz))
                grid.push_back({{"a", a}, {"b", b}});
    } else if (e.uses_a) {
        for (const auto& a : take(a_pool)) grid.push_back({{"a", a}});
    } else if (e.uses_b) {
        for (const auto& b : take(positive_b ? b_pos : b_nz))
            grid.push_back({{"b", b}});
    } else {
        grid.push_back(catalog::Values{});
    }
    return grid;
}

int cmd_verify_catalog(int samples, std::ostream& out, std::ostream& err) {
    std::vector<catalog::EntryReport> reports;
    if (samples == 0) {
        reports = catalog::verify_catalog();
    } else {
        for (const auto& e : catalog::all_entries()) {
            catalog::EntryReport r;
            r.id = e.id;
            r.flagged = e.flagged;
            r.note = e.note;
            for (const auto& v : custom_grid(e, samples)) {
                ++r.samples;
                const auto fails = catalog::verify_at(e, v);
                if (!fails.empty()) {
                    r.ok = false;
                    for (const auto& f : fails) r.failures.push_back(f);
                }
            }
            reports.push_back(std::move(r));
        }
    }
    std::sort(reports.begin(), reports.end(),
              [](const catalog::EntryReport& x,
                 const catalog::EntryReport& y) { return x.id < y.id; });

    int ok_count = 0;
    for (const auto& r : reports) {
        out << r.id << ": " << (r.ok ? "ok" : "FAIL") << " (" << r.samples
            << (r.samples == 1 ? " sample" : " samples") << ")"
            << (r.flagged ? " [flagged]" : "") << "\n";
        for (const auto& f : r.failures) out << "    " << f << "\n";
        if (r.ok) ++ok_count;
    }
    for (const auto& r : reports)
        if (r.flagged) out << "note (" << r.id << "): " << r.note << "\n";

    if (ok_count == static_cast<int>(reports.size())) {
        out << reports.size() << " classes verified\n";
        return 0;
    }
    out << ok_count << " of " << reports.size() << " classes verified\n";
    err << "verification failure: " << (reports.size() - ok_count)
        << " entries failed\n";
    return 1;
}

int cmd_show(const std::string& id, std::ostream& out, std::ostream& err) {
    const catalog::Entry* e = nullptr;
    try {
        e = &catalog::find_entry(id);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    out << "id: " << e->id << "\n";
    out << "first half: " << liealg::to_string(e->g_class) << "\n";
    out << "second half: " << liealg::to_string(e->dual_class)
        << (e->dual_inverts_a ? " (parameter 1/a)" : "") << "\n";
    if (e->constraints.empty()) {
        out << "constraints: (none)\n";
    } else {
        out << "constraints: ";
        for (std::size_t i = 0; i < e->constraints.size(); ++i) {
            const auto& c = e->constraints[i];
            out << (i ? ", " : "") << c.poly.to_string() << " "
                << c.rel.substr(0, c.rel.size() - 1) << " 0";
        }
        out << "\n";
    }
    out << "dual entry: "
        << (e->dual_id == e->id ? "self-dual" : e->dual_id) << "\n";
    out << "brackets:\n";
    print_brackets(out, e->triple.g, "X");
    print_brackets(out, e->triple.dual, "X~");
    if (e->flagged) out << "flagged note: " << e->note << "\n";
    return 0;
}

int cmd_export(const std::string& path, std::ostream& out,
               std::ostream& err) {
    const auto j = catalog::catalog_to_json();
    if (path == "-") {
        out << j.dump(2) << "\n";
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        err << "error: cannot write " << path << "\n";
        return 2;
    }
    f << j.dump(2) << "\n";
    if (!f.good()) {
        err << "error: write to " << path << " failed\n";
        return 2;
    }
    out << "wrote " << j.at("entries").size() << " entries to " << path
        << "\n";
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Exact-arithmetic toolkit for the classification of "
        "six-dimensional real Manin triples"};
    app.name("manin");
    app.require_subcommand(1);

    auto* c_classify = app.add_subcommand(
        "classify",
        "Classify a 3-dimensional Lie algebra given as JSON "
        "({\"basis_dim\":3,\"brackets\":[{\"i\":..,\"j\":..,\"k\":..,"
        "\"c\":\"..\"}]})");
    std::string alg_path;
    c_classify->add_option("input", alg_path, "path to the algebra JSON file")
        ->required();

    auto* c_solve = app.add_subcommand(
        "solve-duals",
        "Solve for all dual halves compatible with a standard-form algebra");
    std::string solve_type;
    c_solve->add_option("type", solve_type,
                        "Bianchi class (I, II, ..., VI_a, VII_0, ...)")
        ->required();
    std::string solve_param;
    c_solve->add_option("--param", solve_param,
                        "parameter assignment a=VALUE (exact rational)");
    bool solve_json = false;
    c_solve->add_flag("--json", solve_json, "emit a JSON object");
    unsigned long long solve_seed = 20020517ULL;
    c_solve->add_option("--seed", solve_seed,
                        "seed for the ideal sampling cross-check");

    auto* c_double = app.add_subcommand(
        "double", "Print the 6-dimensional double of a catalog entry");
    std::string double_id;
    c_double->add_option("entry", double_id, "catalog entry id")->required();
    std::vector<std::string> double_values;
    c_double->add_option("--values", double_values,
                         "parameter assignments, e.g. --values b=1");

    auto* c_verify = app.add_subcommand(
        "verify-catalog", "Verify every catalog entry on a sample grid");
    int verify_samples = 0;
    c_verify
        ->add_option("--samples", verify_samples,
                     "values per parameter (default: built-in grid)")
        ->check(CLI::Range(0, 6));

    auto* c_show = app.add_subcommand(
        "show", "Pretty-print one catalog entry's bracket relations");
    std::string show_id;
    c_show->add_option("entry", show_id, "catalog entry id")->required();

    auto* c_export =
        app.add_subcommand("export", "Write the complete catalog as JSON");
    std::string export_format = "json";
    c_export->add_option("--format", export_format, "output format")
        ->check(CLI::IsMember({"json"}));
    std::string export_path;
    c_export->add_option("path", export_path, "output file, or - for stdout")
        ->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs[0]->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_classify) return cmd_classify(alg_path, out, err);
        if (*c_solve)
            return cmd_solve_duals(solve_type, solve_param, solve_json,
                                   solve_seed, out, err);
        if (*c_double) return cmd_double(double_id, double_values, out, err);
        if (*c_verify) return cmd_verify_catalog(verify_samples, out, err);
        if (*c_show) return cmd_show(show_id, out, err);
        if (*c_export) return cmd_export(export_path, out, err);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace cli
