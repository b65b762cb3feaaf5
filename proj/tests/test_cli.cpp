#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "catalog/catalog.hpp"
#include "cli/cli.hpp"
#include "liealg/bianchi.hpp"
#include "liealg/structure.hpp"

using exact::Rational;
using liealg::BianchiClass;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream o, e;
    const int c = cli::run(std::move(args), o, e);
    return {c, o.str(), e.str()};
}

bool contains(const std::string& s, const std::string& sub) {
    return s.find(sub) != std::string::npos;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path =
        (std::filesystem::temp_directory_path() / name).string();
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("usage errors exit 2, help exits 0") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"classify"}).code == 2);  // missing required input

    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "classify"));
    CHECK(contains(help.out, "solve-duals"));
    CHECK(contains(help.out, "verify-catalog"));

    CHECK(run({"export", "--format", "xml", "/tmp/x.json"}).code == 2);
    CHECK(run({"verify-catalog", "--samples", "9"}).code == 2);
}

TEST_CASE("classify prints the type and the decomposition invariants") {
    const auto sl2 = write_temp(
        "cli_sl2.json",
        liealg::algebra_to_json(liealg::standard_form(BianchiClass::VIII))
            .dump());
    const auto r = run({"classify", sl2});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "VIII\n"
          "a = (0, 0, 0)\n"
          "n = [[1, 0, 0], [0, 1, 0], [0, 0, -1]]\n");

    const auto via = write_temp(
        "cli_via.json",
        liealg::algebra_to_json(
            liealg::standard_form(BianchiClass::VIa, Rational(2)))
            .dump());
    const auto r2 = run({"classify", via});
    CHECK(r2.code == 0);
    CHECK(contains(r2.out, "VI_a (a^2 = 4)"));
}

TEST_CASE("classify rejects bad input with the documented exit codes") {
    // not a Lie algebra: verification failure -> 1
    liealg::StructureConstants<Rational> bad;
    bad.set(1, 2, 2, Rational(-1));
    bad.set(2, 3, 1, Rational(1));
    const auto badf =
        write_temp("cli_bad.json", liealg::algebra_to_json(bad).dump());
    const auto r = run({"classify", badf});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "verification failure"));

    // missing file / malformed JSON / wrong schema -> 2
    CHECK(run({"classify", "/nonexistent/alg.json"}).code == 2);
    const auto garbled = write_temp("cli_garbled.json", "{not json");
    CHECK(run({"classify", garbled}).code == 2);
    const auto wrong = write_temp("cli_wrong.json",
                                  "{\"basis_dim\":4,\"brackets\":[]}");
    CHECK(run({"classify", wrong}).code == 2);
}

TEST_CASE("solve-duals reports the family, ideal, and reference match") {
    const auto ix = run({"solve-duals", "IX"});
    CHECK(ix.code == 0);
    CHECK(contains(ix.out, "nullspace_dim: 3"));
    CHECK(contains(ix.out, "ideal: empty"));
    CHECK(contains(ix.out, "reference_match: true"));
    CHECK(contains(ix.out, "ideal_check: equivalent"));

    const auto vii0 = run({"solve-duals", "VII_0"});
    CHECK(vii0.code == 0);
    CHECK(contains(vii0.out, "nullspace_dim: 4"));
    CHECK(contains(vii0.out, "ft12_3*ft23_2"));

    const auto via2 = run({"solve-duals", "VI_a", "--param", "a=2"});
    CHECK(via2.code == 0);
    CHECK(contains(via2.out, "algebra: VI_a (a = 2)"));
    CHECK(contains(via2.out, "nullspace_dim: 4"));
    CHECK(contains(via2.out, "3*ft13_3*ft23_1 + 2*ft23_2^2 - 2*ft23_3^2"));
    CHECK(contains(via2.out, "assumptions: none"));

    const auto vias = run({"solve-duals", "VI_a"});
    CHECK(vias.code == 0);
    CHECK(contains(vias.out, "(a symbolic)"));
    CHECK(contains(vias.out, "assumptions (nonvanishing):\n  a^2 - 1"));
}

TEST_CASE("solve-duals JSON mode and argument validation") {
    const auto r = run({"solve-duals", "IX", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("algebra") == "IX");
    CHECK(j.at("nullspace_dim") == 3);
    CHECK(j.at("relations").size() == 6);
    CHECK(j.at("ideal").empty());
    CHECK(j.at("assumptions").empty());
    CHECK(j.at("reference_match") == true);

    CHECK(run({"solve-duals", "XI"}).code == 2);
    CHECK(run({"solve-duals", "I", "--param", "a=2"}).code == 2);
    CHECK(run({"solve-duals", "VI_a", "--param", "b=2"}).code == 2);
    CHECK(run({"solve-duals", "VI_a", "--param", "a=1"}).code == 2);
    CHECK(run({"solve-duals", "VI_a", "--param", "a=zebra"}).code == 2);
}

TEST_CASE("double prints every nonzero bracket of the 6-dimensional double") {
    const auto r = run({"double", "II.b.i"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "[X2, X3] = X1\n"
          "[X2, X~1] = -X~3\n"
          "[X3, X~1] = X2 + X~2\n"
          "[X3, X~2] = -X1\n"
          "[X~1, X~2] = X~3\n");

    const auto rb = run({"double", "IX.b", "--values", "b=2"});
    CHECK(rb.code == 0);
    CHECK(contains(rb.out, "[X~1, X~2] = -2 X~2"));
    CHECK(contains(rb.out, "[X1, X2] = X3"));

    CHECK(run({"double", "nope"}).code == 2);
    CHECK(run({"double", "II.b.i", "--values", "b=1"}).code == 2);
    CHECK(run({"double", "IX.b", "--values", "b=-1"}).code == 2);
    CHECK(run({"double", "IX.b", "--values", "b"}).code == 2);
}

TEST_CASE("verify-catalog verifies all 78 entries") {
    const auto r = run({"verify-catalog", "--samples", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "78 classes verified"));
    CHECK(contains(r.out, "IX.a: ok (1 sample)"));
    CHECK(contains(r.out, "VI_0.c.ii: ok (1 sample) [flagged]"));
    CHECK(contains(r.out, "note (VI_0.c.ii):"));

    std::size_t ok_lines = 0, pos = 0;
    while ((pos = r.out.find(": ok (", pos)) != std::string::npos) {
        ++ok_lines;
        ++pos;
    }
    CHECK(ok_lines == 78);

    // reports are emitted in id order
    CHECK(r.out.rfind("I.I: ", 0) == 0);
    CHECK(r.out.find("\nII.a: ") < r.out.find("\nIX.a: "));
    CHECK(r.out.find("\nIX.a: ") < r.out.find("\nV.a: "));

    const auto r2 = run({"verify-catalog", "--samples", "2"});
    CHECK(r2.code == 0);
    CHECK(contains(r2.out, "IX.b: ok (2 samples)"));
    CHECK(contains(r2.out, "78 classes verified"));
}

TEST_CASE("show pretty-prints the bracket relations") {
    const auto r = run({"show", "IX.b"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "id: IX.b\n"
          "first half: IX\n"
          "second half: V\n"
          "constraints: b > 0\n"
          "dual entry: IX.b.dual\n"
          "brackets:\n"
          "  [X1, X2] = X3\n"
          "  [X1, X3] = -X2\n"
          "  [X2, X3] = X1\n"
          "  [X~1, X~2] = -b X~2\n"
          "  [X~1, X~3] = -b X~3\n");

    const auto r2 = run({"show", "VI_a.c.ii"});
    CHECK(r2.code == 0);
    CHECK(contains(r2.out, "second half: VI_a (parameter 1/a)"));
    CHECK(contains(r2.out, "dual entry: self-dual"));
    CHECK(contains(r2.out, "(a + 1)/(a - 1) X~2"));
    CHECK(contains(r2.out, "constraints: a > 0, a - 1 != 0"));

    const auto r3 = run({"show", "VI_0.c.ii"});
    CHECK(r3.code == 0);
    CHECK(contains(r3.out, "flagged note:"));
    CHECK(contains(r3.out, "[X~1, X~2] = -X~1 + X~2 + X~3"));

    CHECK(run({"show", "nope"}).code == 2);
}

TEST_CASE("export writes the catalog JSON") {
    const auto path =
        (std::filesystem::temp_directory_path() / "cli_catalog.json")
            .string();
    const auto r = run({"export", "--format", "json", path});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "wrote 78 entries to"));

    std::ifstream f(path);
    REQUIRE(f.good());
    nlohmann::json j;
    f >> j;
    CHECK(j.at("version") == 1);
    CHECK(j.at("entries").size() == 78);
    CHECK(catalog::catalog_from_json(j).size() == 78);

    const auto rs = run({"export", "-"});
    CHECK(rs.code == 0);
    CHECK(nlohmann::json::parse(rs.out).at("entries").size() == 78);

    CHECK(run({"export", "--format", "json", "/nonexistent-dir-xq/c.json"})
              .code == 2);
}
