#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpa/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using gpa::CliOptions;
using gpa::cmd_connectivity;
using gpa::cmd_net_ingest;
using gpa::cmd_radical;
using gpa::cmd_verify_suite;
using gpa::InputKind;
using gpa::RadicalKind;
using gpa::Report;

namespace {

const std::string kDataDir = GPA_TEST_DATA_DIR;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string corpus(const std::string& name) { return slurp(kDataDir + "/corpus/" + name); }

CliOptions with_oracle() {
    CliOptions opt;
    opt.oracle = true;
    return opt;
}

bool has_check(const Report& r, const std::string& name, bool pass) {
    for (const auto& c : r.checks())
        if (c.name == name) return c.pass == pass;
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Report plumbing

TEST_CASE("input digests are deterministic and order-stable") {
    CHECK(gpa::fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(gpa::fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(gpa::fnv1a64_hex("hello") == gpa::fnv1a64_hex("hello"));
    CHECK(gpa::fnv1a64_hex("hello") != gpa::fnv1a64_hex("hellp"));
}

TEST_CASE("report verdicts map to exit codes") {
    Report pass("demo", 0);
    pass.check("ok", true, "");
    CHECK(pass.exit_code() == 0);
    CHECK(pass.ok());
    CHECK(pass.text().find("verdict: PASS (exit 0)") != std::string::npos);

    Report fail("demo", 0);
    fail.check("ok", true, "");
    fail.check("bad", false, "mismatch");
    CHECK(fail.exit_code() == 1);
    CHECK_FALSE(fail.ok());
    CHECK(fail.text().find("check bad: FAIL -- mismatch") != std::string::npos);
    CHECK(fail.text().find("verdict: FAIL (exit 1)") != std::string::npos);

    Report refused("demo", 0);
    refused.check("ok", true, "");
    refused.refuse("out of scope");
    CHECK(refused.exit_code() == 2);
    CHECK(refused.text().find("refused: out of scope") != std::string::npos);
    CHECK(refused.text().find("verdict: REFUSED (exit 2)") != std::string::npos);
}

TEST_CASE("structured output carries the same verdict data as text") {
    Report r("demo cmd", 7);
    r.add_input("x.quiver", "vertex 1\n");
    r.warn("something minor");
    r.check("a-check", true, "fine");
    auto j = nlohmann::ordered_json::parse(r.structured());
    CHECK(j["command"] == "demo cmd");
    CHECK(j["seed"] == 7);
    CHECK(j["inputs"]["x.quiver"] == gpa::fnv1a64_hex("vertex 1\n"));
    CHECK(j["warnings"][0] == "something minor");
    CHECK(j["checks"][0]["name"] == "a-check");
    CHECK(j["checks"][0]["pass"] == true);
    CHECK(j["ok"] == true);
    CHECK(j["exit_code"] == 0);
}

TEST_CASE("input kinds are recognized by extension") {
    CHECK(gpa::input_kind_from_label("a/b/c.quiver") == InputKind::quiver);
    CHECK(gpa::input_kind_from_label("x.gmring") == InputKind::gmring);
    CHECK(gpa::input_kind_from_label("x.hopf") == InputKind::hopf);
    CHECK_FALSE(gpa::input_kind_from_label("x.txt").has_value());
    CHECK_FALSE(gpa::input_kind_from_label("quiver").has_value());
}

// ---------------------------------------------------------------------------
// connectivity

TEST_CASE("connectivity partitions a chain and lists its regular pairs") {
    Report r = cmd_connectivity("chain.quiver", corpus("chain.quiver"));
    CHECK(r.exit_code() == 0);
    const auto& res = r.results();
    CHECK(res.at("vertex_count") == 3);
    CHECK(res.at("strong").size() == 3);
    CHECK(res.at("weak").size() == 1);
    CHECK(res.at("regular_pair_count") == 3);
    CHECK(res.at("has_cycle") == false);
    CHECK(has_check(r, "strong-refines-weak", true));
    CHECK(has_check(r, "regular-pairs-one-way", true));
}

TEST_CASE("connectivity collapses a two cycle into one class with no pairs") {
    Report r = cmd_connectivity("twocycle.quiver", corpus("twocycle.quiver"));
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("strong").size() == 1);
    CHECK(r.results().at("has_cycle") == true);
    CHECK(r.results().at("regular_pair_count") == 0);
}

TEST_CASE("quiver parse errors surface with line numbers") {
    CHECK_THROWS_WITH_AS(cmd_connectivity("bad.quiver", "vertex 1\nwat\n"),
                         doctest::Contains("line 2"), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// radical: quiver inputs

TEST_CASE("chain radical under the oracle matches the three-path span") {
    Report r = cmd_radical("chain.quiver", corpus("chain.quiver"), InputKind::quiver,
                           RadicalKind::jacobson, with_oracle());
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("radical_dim") == 3);
    const auto& basis = r.results().at("radical_basis");
    REQUIRE(basis.size() == 3);
    CHECK(basis[2] == "a.b");
    CHECK(has_check(r, "radical-formula-vs-trace-oracle", true));
    CHECK(has_check(r, "radical-nilpotent", true));
    CHECK(r.results().at("oracle").at("dim") == 3);
}

TEST_CASE("all nilpotent-style kinds agree on a quiver") {
    for (RadicalKind kind : {RadicalKind::baer, RadicalKind::levitzki, RadicalKind::nil,
                             RadicalKind::jacobson}) {
        Report r = cmd_radical("star.quiver", corpus("star.quiver"), InputKind::quiver,
                               kind, with_oracle());
        CHECK(r.exit_code() == 0);
        CHECK(r.results().at("radical_dim") == 3);
    }
}

TEST_CASE("the regular radical of an arrow quiver is zero with a reason") {
    Report r = cmd_radical("onearrow.quiver", corpus("onearrow.quiver"),
                           InputKind::quiver, RadicalKind::vn, {});
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("radical_dim") == 0);
    CHECK(r.text().find("isolated vertices") != std::string::npos);
}

TEST_CASE("the regular radical picks up isolated vertices and the oracle agrees") {
    std::string text = "vertex 1\nvertex 2\nvertex 3\narrow a 1 2\n";
    Report r = cmd_radical("iso.quiver", text, InputKind::quiver, RadicalKind::vn,
                           with_oracle());
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("radical_dim") == 1);
    CHECK(r.results().at("radical_basis")[0] == "e(3)");
    CHECK(has_check(r, "vn-formula-vs-oracle", true));
}

TEST_CASE("cyclic quivers report their pair set but refuse the oracle") {
    Report plain = cmd_radical("twocycle.quiver", corpus("twocycle.quiver"),
                               InputKind::quiver, RadicalKind::jacobson, {});
    CHECK(plain.exit_code() == 0);
    CHECK(plain.results().at("semiprime") == true);
    CHECK(plain.results().at("finite_dimensional") == false);

    Report oracled = cmd_radical("twocycle.quiver", corpus("twocycle.quiver"),
                                 InputKind::quiver, RadicalKind::jacobson, with_oracle());
    CHECK(oracled.exit_code() == 2);
    CHECK(oracled.refusal().find("infinite-dimensional") != std::string::npos);
}

TEST_CASE("the oracle bound refuses rather than silently skipping") {
    CliOptions opt = with_oracle();
    opt.max_oracle_dim = 2;
    Report r = cmd_radical("chain.quiver", corpus("chain.quiver"), InputKind::quiver,
                           RadicalKind::jacobson, opt);
    CHECK(r.exit_code() == 2);
    CHECK(r.refusal().find("max-oracle-dim") != std::string::npos);
}

// ---------------------------------------------------------------------------
// radical: block system inputs

TEST_CASE("triangular block system radical comes out blockwise and verified") {
    Report r = cmd_radical("uppertri.gmring", corpus("uppertri.gmring"),
                           InputKind::gmring, RadicalKind::jacobson, with_oracle());
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("radical_dim") == 1);
    CHECK(r.results().at("radical_blocks")[0]["row"] == "u");
    CHECK(r.results().at("radical_blocks")[0]["col"] == "v");
    CHECK(has_check(r, "blockwise-formula-vs-oracle", true));
}

TEST_CASE("block systems refuse the regular radical without a full divisor set") {
    Report r = cmd_radical("uppertri.gmring", corpus("uppertri.gmring"),
                           InputKind::gmring, RadicalKind::vn, {});
    CHECK(r.exit_code() == 2);
    CHECK(r.refusal().find("(v,u)") != std::string::npos);
}

TEST_CASE("block systems refuse the nil radical outright") {
    Report r = cmd_radical("uppertri.gmring", corpus("uppertri.gmring"),
                           InputKind::gmring, RadicalKind::nil, {});
    CHECK(r.exit_code() == 2);
    CHECK(r.refusal().find("nil radical") != std::string::npos);
}

// ---------------------------------------------------------------------------
// radical: hopf inputs

TEST_CASE("dimension-4 instance radical equals the trace oracle") {
    Report r = cmd_radical("taft4.hopf", corpus("taft4.hopf"), InputKind::hopf,
                           RadicalKind::jacobson, with_oracle());
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("radical_dim") == 2);
    CHECK(r.results().at("radical_basis")[0] == "X1");
    CHECK(r.results().at("radical_basis")[1] == "X1*g");
    CHECK(has_check(r, "radical-formula-vs-trace-oracle", true));
}

TEST_CASE("dimension-9 instance radical has dimension six") {
    Report r = cmd_radical("taft9.hopf", corpus("taft9.hopf"), InputKind::hopf,
                           RadicalKind::jacobson, with_oracle());
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("radical_dim") == 6);
}

TEST_CASE("nonzero b parameters refuse the closed form but still show the oracle") {
    Report r = cmd_radical("famB3.hopf", corpus("famB3.hopf"), InputKind::hopf,
                           RadicalKind::jacobson, with_oracle());
    CHECK(r.exit_code() == 2);
    CHECK(r.refusal().find("a = 0, b = 0") != std::string::npos);
    CHECK(r.results().at("oracle").at("dim") == 13);

    Report quiet = cmd_radical("famB3.hopf", corpus("famB3.hopf"), InputKind::hopf,
                               RadicalKind::jacobson, {});
    CHECK(quiet.exit_code() == 2);
    CHECK_FALSE(quiet.results().contains("oracle"));
}

TEST_CASE("parameter violations refuse with every condition listed") {
    Report r = cmd_radical("corrupt.hopf", slurp(kDataDir + "/corpus_bad/corrupt.hopf"),
                           InputKind::hopf, RadicalKind::jacobson, {});
    CHECK(r.exit_code() == 2);
    CHECK(r.refusal().find("(xi)") != std::string::npos);
    CHECK(r.results().at("violations").size() == 2);
}

TEST_CASE("hopf instances refuse the regular radical kind") {
    Report r = cmd_radical("taft4.hopf", corpus("taft4.hopf"), InputKind::hopf,
                           RadicalKind::vn, {});
    CHECK(r.exit_code() == 2);
}

// ---------------------------------------------------------------------------
// determinism

TEST_CASE("reports are byte-identical across repeated runs") {
    auto run = [] {
        return cmd_radical("taft9.hopf", corpus("taft9.hopf"), InputKind::hopf,
                           RadicalKind::jacobson, with_oracle());
    };
    Report a = run();
    Report b = run();
    CHECK(a.text() == b.text());
    CHECK(a.structured() == b.structured());

    Report n1 = cmd_net_ingest("x", "hub a\nhub b\n");
    Report n2 = cmd_net_ingest("x", "hub a\nhub b\n");
    CHECK(n1.text() == n2.text());
    CHECK(n1.structured() == n2.structured());
}

// ---------------------------------------------------------------------------
// net-ingest

TEST_CASE("an empty network ingests to the vacuous all-true report") {
    Report r = cmd_net_ingest("empty.net", "");
    CHECK(r.exit_code() == 0);
    REQUIRE(r.warnings().size() == 1);
    CHECK(r.warnings()[0].find("empty network") != std::string::npos);
    CHECK(r.results().at("semiprime") == true);
    for (const auto& e : r.results().at("equivalence")) CHECK(e.at("holds") == true);
    CHECK(has_check(r, "equivalence-conditions-agree", true));
}

TEST_CASE("a star network has one regular pair per edge and radical dim three") {
    Report r = cmd_net_ingest("star.net", "hub a\nhub b\nhub c\n");
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("regular_pair_count") == 3);
    CHECK(r.results().at("radical_summary").at("radical_dim") == 3);
    CHECK(r.results().at("radical_summary").at("basis").size() == 3);
}

TEST_CASE("malformed edge lines warn and are skipped, not fatal") {
    Report r = cmd_net_ingest("messy.net", "a b\nnot enough tokens here\nc\nb c nice\n");
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("edges_ingested") == 2);
    CHECK(r.results().at("lines_skipped") == 2);
    REQUIRE(r.warnings().size() == 2);
    CHECK(r.warnings()[0].find("line 2") != std::string::npos);
    CHECK(r.warnings()[1].find("line 3") != std::string::npos);
    CHECK(r.results().at("arrow_count") == 2);
}

TEST_CASE("duplicate edge labels are made unique instead of rejected") {
    Report r = cmd_net_ingest("dup.net", "a b x\na c x\n# comment\nb c\n");
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("edges_ingested") == 3);
    bool renamed = false;
    for (const auto& lit : r.results().at("radical_summary").at("basis"))
        renamed = renamed || lit == "x#2";
    CHECK(renamed);
    CHECK(r.results().at("radical_summary").at("basis").size() == 4);
}

TEST_CASE("a mutual triangle ingests as one strong class and is semiprime") {
    Report r = cmd_net_ingest("tri.net", "a b\nb c\nc a\na c f\nc b g\nb a h\n");
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("semiprime") == true);
    CHECK(r.results().at("strong").size() == 1);
    CHECK(r.results().at("regular_pair_count") == 0);
}

TEST_CASE("a cycle feeding a tail is flagged infinite-dimensional") {
    Report r = cmd_net_ingest("cyctail.net", "a b\nb a\nb c\n");
    CHECK(r.exit_code() == 0);
    CHECK(r.results().at("radical_summary").at("finite_dimensional") == false);

    // a disjoint cycle does not contaminate the finite count elsewhere
    Report d = cmd_net_ingest("mixed.net", "x y\ny x\na b\n");
    CHECK(d.results().at("radical_summary").at("finite_dimensional") == true);
    CHECK(d.results().at("radical_summary").at("radical_dim") == 1);
}

// ---------------------------------------------------------------------------
// verify-suite

TEST_CASE("the bundled corpus verifies clean") {
    Report r = cmd_verify_suite(kDataDir + "/corpus", {});
    CHECK(r.exit_code() == 0);
    CHECK(r.checks().size() > 40);
    for (const auto& c : r.checks()) CHECK_MESSAGE(c.pass, c.name);
    // files assemble in name order regardless of worker completion order
    auto j = nlohmann::ordered_json::parse(r.structured());
    std::string prev;
    for (const auto& f : j["results"]["files"]) {
        std::string name = f["file"];
        CHECK(prev < name);
        prev = name;
    }
    bool famb3_warned = false;
    for (const auto& w : r.warnings())
        famb3_warned = famb3_warned || w.find("famB3") != std::string::npos;
    CHECK(famb3_warned);
}

TEST_CASE("a corrupted instance fails its validation check and the suite") {
    Report r = cmd_verify_suite(kDataDir + "/corpus_bad", {});
    CHECK(r.exit_code() == 1);
    CHECK(has_check(r, "corrupt.hopf: parameter-validation", false));
}

TEST_CASE("an empty corpus passes vacuously with a warning") {
    std::string dir = kDataDir + "/corpus_empty_tmp";
    std::filesystem::create_directory(dir);
    Report r = cmd_verify_suite(dir, {});
    std::filesystem::remove(dir);
    CHECK(r.exit_code() == 0);
    REQUIRE(r.warnings().size() == 1);
    CHECK(r.warnings()[0].find("vacuous") != std::string::npos);
}

TEST_CASE("a missing corpus directory is refused") {
    Report r = cmd_verify_suite(kDataDir + "/no_such_dir", {});
    CHECK(r.exit_code() == 2);
}

TEST_CASE("suite runs are deterministic despite parallel workers") {
    Report a = cmd_verify_suite(kDataDir + "/corpus", {});
    Report b = cmd_verify_suite(kDataDir + "/corpus", {});
    CHECK(a.text() == b.text());
    CHECK(a.structured() == b.structured());
}
