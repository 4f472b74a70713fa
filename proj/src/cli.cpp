#include "gpa/cli.hpp"

#include "gpa/findim.hpp"
#include "gpa/gm_ring.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gpa {

namespace {

using njson = nlohmann::ordered_json;

constexpr size_t kBasisListingLimit = 200;

std::string name_set(const Quiver& q, const std::vector<size_t>& vs) {
    std::string s = "{";
    for (size_t k = 0; k < vs.size(); ++k) {
        if (k) s += ", ";
        s += q.vertex_names()[vs[k]];
    }
    return s + "}";
}

njson name_array(const Quiver& q, const std::vector<size_t>& vs) {
    njson a = njson::array();
    for (size_t v : vs) a.push_back(q.vertex_names()[v]);
    return a;
}

/// The partition/refinement cross-checks behind the "partitions consistent"
/// guarantee; every entry must pass on every input.
std::vector<CheckLine> connectivity_checks(const Quiver& q, const Connectivity& c) {
    std::vector<CheckLine> out;
    const size_t n = q.vertex_count();

    auto partition_ok = [n](const std::vector<std::vector<size_t>>& classes) {
        std::vector<char> seen(n, 0);
        for (const auto& cl : classes) {
            if (cl.empty()) return false;
            for (size_t v : cl) {
                if (v >= n || seen[v]) return false;
                seen[v] = 1;
            }
        }
        for (char s : seen)
            if (!s) return false;
        return true;
    };
    out.push_back({"strong-classes-partition", partition_ok(c.strong),
                   "classes: " + std::to_string(c.strong.size())});
    out.push_back({"weak-classes-partition", partition_ok(c.weak),
                   "classes: " + std::to_string(c.weak.size())});

    std::vector<size_t> weak_of(n, size_t(-1));
    for (size_t k = 0; k < c.weak.size(); ++k)
        for (size_t v : c.weak[k]) weak_of[v] = k;
    auto inside_one_weak = [&](const std::vector<size_t>& vs) {
        for (size_t v : vs)
            if (weak_of[v] != weak_of[vs.front()]) return false;
        return true;
    };
    bool strong_in_weak = true;
    for (const auto& cl : c.strong) strong_in_weak = strong_in_weak && inside_one_weak(cl);
    out.push_back({"strong-refines-weak", strong_in_weak, ""});

    bool uni_in_weak = true;
    for (const auto& u : c.unilateral) uni_in_weak = uni_in_weak && inside_one_weak(u);
    out.push_back({"unilateral-within-weak", uni_in_weak, ""});

    if (!c.unilateral_truncated) {
        auto subset = [](const std::vector<size_t>& a, const std::vector<size_t>& b) {
            return std::includes(b.begin(), b.end(), a.begin(), a.end());
        };
        bool strong_in_uni = true;
        for (const auto& cl : c.strong) {
            bool found = false;
            for (const auto& u : c.unilateral) found = found || subset(cl, u);
            strong_in_uni = strong_in_uni && found;
        }
        out.push_back({"strong-within-unilateral", strong_in_uni, ""});
    }

    bool pairs_ok = true;
    auto pairs = c.regular_pairs();
    for (auto [s, t] : pairs)
        pairs_ok = pairs_ok && c.reach1[s][t] && !c.reach1[t][s] &&
                   c.strong_class[s] != c.strong_class[t];
    out.push_back({"regular-pairs-one-way", pairs_ok,
                   "pairs: " + std::to_string(pairs.size())});
    return out;
}

void connectivity_sections(Report& r, const Quiver& q, const Connectivity& c) {
    njson& res = r.results();
    {
        std::ostringstream os;
        os << "vertices: " << q.vertex_count() << "\n";
        os << "arrows: " << q.arrows().size() << "\n";
        os << "has cycle: " << (c.has_cycle ? "yes" : "no") << "\n";
        os << "isolated vertices: "
           << (c.isolated.empty() ? "none" : name_set(q, c.isolated)) << "\n";
        r.section("overview", os.str());
        res["vertex_count"] = q.vertex_count();
        res["arrow_count"] = q.arrows().size();
        njson verts = njson::array();
        for (const auto& nm : q.vertex_names()) verts.push_back(nm);
        res["vertices"] = std::move(verts);
        res["has_cycle"] = c.has_cycle;
        res["isolated"] = name_array(q, c.isolated);
    }

    auto class_section = [&](const char* title, const char* key,
                             const std::vector<std::vector<size_t>>& cls, bool truncated) {
        std::ostringstream os;
        njson arr = njson::array();
        for (const auto& cl : cls) {
            os << name_set(q, cl) << "\n";
            arr.push_back(name_array(q, cl));
        }
        if (cls.empty()) os << "(none)\n";
        if (truncated) os << "(enumeration truncated at the cap)\n";
        r.section(title, os.str());
        res[key] = std::move(arr);
    };
    class_section("strong components", "strong", c.strong, false);
    class_section("weak components", "weak", c.weak, false);
    class_section("unilateral components", "unilateral", c.unilateral,
                  c.unilateral_truncated);
    res["unilateral_truncated"] = c.unilateral_truncated;

    auto pairs = c.regular_pairs();
    std::ostringstream os;
    os << "count: " << pairs.size() << "\n";
    njson arr = njson::array();
    for (size_t k = 0; k < pairs.size() && k < kBasisListingLimit; ++k) {
        auto [s, t] = pairs[k];
        os << "(" << q.vertex_names()[s] << ", " << q.vertex_names()[t] << ")\n";
        arr.push_back(njson::array({q.vertex_names()[s], q.vertex_names()[t]}));
    }
    if (pairs.size() > kBasisListingLimit)
        os << "(listing capped at " << kBasisListingLimit << ")\n";
    r.section("regular pairs", os.str());
    res["regular_pair_count"] = pairs.size();
    res["regular_pairs"] = std::move(arr);
}

void append_checks(Report& r, const std::vector<CheckLine>& checks) {
    for (const auto& c : checks) r.check(c.name, c.pass, c.detail);
}

/// Basis listing with the size threshold: above the limit only the
/// dimension is reported.
void basis_section(Report& r, const char* title, const std::vector<std::string>& literals) {
    std::ostringstream os;
    os << "dimension " << literals.size() << "\n";
    njson arr = njson::array();
    if (literals.size() <= kBasisListingLimit) {
        for (const auto& s : literals) {
            os << s << "\n";
            arr.push_back(s);
        }
        r.results()["radical_basis"] = std::move(arr);
    } else {
        os << "(basis of " << literals.size() << " elements summarized by dimension)\n";
        r.results()["radical_basis_summarized"] = true;
    }
    r.results()["radical_dim"] = literals.size();
    r.section(title, os.str());
}

// --------------------------------------------------------------- radical

void radical_quiver(Report& r, std::string_view text, RadicalKind kind,
                    const CliOptions& opt) {
    Quiver q = Quiver::parse(text);
    PathAlgebra pa = PathAlgebra::plain(q);
    const Connectivity& c = pa.connectivity();
    njson& res = r.results();
    res["input"] = "quiver";
    res["kind"] = radical_kind_name(kind);

    if (kind == RadicalKind::vn) {
        std::vector<size_t> iso = vn_radical_description(pa);
        std::vector<std::string> literals;
        for (size_t v : iso) literals.push_back("e(" + q.vertex_names()[v] + ")");
        basis_section(r, "von Neumann regular radical", literals);
        if (iso.empty())
            r.section("reason",
                      "the von Neumann regular radical of a path algebra is spanned by "
                      "the idempotents e(v) of isolated vertices; this quiver has none, "
                      "so it is zero\n");
        if (!opt.oracle) return;
        if (c.has_cycle) {
            r.refuse("the oracle needs a finite-dimensional algebra; this quiver has a "
                     "cycle, so its path algebra is infinite-dimensional");
            return;
        }
        Materialization m = materialize(pa);
        if (m.algebra.dim() > opt.max_oracle_dim) {
            r.refuse("materialized dimension " + std::to_string(m.algebra.dim()) +
                     " exceeds --max-oracle-dim " + std::to_string(opt.max_oracle_dim));
            return;
        }
        Subspace predicted(m.algebra.dim());
        for (size_t v : iso) {
            GeneralizedPath p{{v}, {}, {0}};
            predicted.add(to_dense(SVec{{m.index.at(p), Cyclotomic(1)}}, m.algebra.dim()));
        }
        Subspace oracle = vn_radical(m.algebra);
        res["oracle"] = {{"ran", true}, {"dim", oracle.dim()}};
        r.check("vn-formula-vs-oracle", predicted == oracle,
                "formula dim " + std::to_string(predicted.dim()) + ", oracle dim " +
                    std::to_string(oracle.dim()));
        return;
    }

    RadicalDescription rd = radical_description(pa, kind);
    {
        std::ostringstream os;
        os << "regular pairs: " << rd.pairs.size() << "\n";
        for (auto [s, t] : rd.pairs)
            os << "(" << q.vertex_names()[s] << ", " << q.vertex_names()[t] << ")\n";
        os << "semiprime: " << (rd.zero() ? "yes" : "no") << "\n";
        r.section("radical description", os.str());
        njson arr = njson::array();
        for (auto [s, t] : rd.pairs)
            arr.push_back(njson::array({q.vertex_names()[s], q.vertex_names()[t]}));
        res["regular_pairs"] = std::move(arr);
        res["semiprime"] = rd.zero();
    }

    if (c.has_cycle) {
        if (!rd.zero())
            r.section("note",
                      "the quiver has a cycle: the path algebra is infinite-dimensional "
                      "and the radical is the span of all paths between regular pairs, "
                      "summarized here by its pair set\n");
        else
            r.section("note", "no regular pairs: the radical is zero\n");
        res["finite_dimensional"] = false;
        if (opt.oracle)
            r.refuse("the oracle needs a finite-dimensional algebra; this quiver has a "
                     "cycle, so its path algebra is infinite-dimensional");
        return;
    }

    std::optional<Materialization> m;
    try {
        m = materialize(pa);
    } catch (const std::length_error&) {
        r.section("note", "path enumeration exceeds the cap; summarized by pairs only\n");
        res["finite_dimensional"] = true;
        res["basis_enumeration_capped"] = true;
        if (opt.oracle)
            r.refuse("path enumeration exceeds the cap, so the oracle cannot "
                     "materialize this algebra");
        return;
    }
    res["finite_dimensional"] = true;
    std::vector<size_t> rad_idx;
    for (size_t i = 0; i < m->basis.size(); ++i) {
        const GeneralizedPath& p = m->basis[i];
        if (p.length() >= 1 && rd.pair_regular(p.source(), p.target()))
            rad_idx.push_back(i);
    }
    std::vector<std::string> literals;
    for (size_t i : rad_idx) literals.push_back(path_str(pa, m->basis[i]));
    basis_section(r, "radical basis (paths between regular pairs)", literals);

    if (!opt.oracle) return;
    if (m->algebra.dim() > opt.max_oracle_dim) {
        r.refuse("materialized dimension " + std::to_string(m->algebra.dim()) +
                 " exceeds --max-oracle-dim " + std::to_string(opt.max_oracle_dim));
        return;
    }
    Subspace predicted(m->algebra.dim());
    for (size_t i : rad_idx)
        predicted.add(to_dense(SVec{{i, Cyclotomic(1)}}, m->algebra.dim()));
    Subspace oracle = jacobson_radical(m->algebra);
    res["oracle"] = {{"ran", true}, {"dim", oracle.dim()}};
    r.check("radical-formula-vs-trace-oracle", predicted == oracle,
            "formula dim " + std::to_string(predicted.dim()) + ", oracle dim " +
                std::to_string(oracle.dim()));
    NilpotencyResult nil = largest_nilpotent_check(m->algebra, oracle);
    r.check("radical-nilpotent", nil.nilpotent,
            nil.nilpotent ? "nilpotency index " + std::to_string(nil.index)
                          : "oracle radical is not nilpotent");
}

void radical_gmring(Report& r, std::string_view text, RadicalKind kind,
                    const CliOptions& opt) {
    GammaSystem s = GammaSystem::parse(text);
    njson& res = r.results();
    res["input"] = "gmring";
    res["kind"] = radical_kind_name(kind);
    res["system"] = s.name();
    res["total_dim"] = s.total_dim();

    GmIdeal rad;
    try {
        rad = gm_radical_formula(s, kind);
    } catch (const std::invalid_argument& e) {
        r.refuse(e.what());
        return;
    }

    {
        std::ostringstream os;
        njson blocks = njson::array();
        for (size_t i = 0; i < s.index_count(); ++i)
            for (size_t j = 0; j < s.index_count(); ++j)
                if (rad.blocks[i][j].dim() > 0) {
                    os << "r(A_" << s.indices()[i] << "," << s.indices()[j] << "): dim "
                       << rad.blocks[i][j].dim() << "\n";
                    blocks.push_back({{"row", s.indices()[i]},
                                      {"col", s.indices()[j]},
                                      {"dim", rad.blocks[i][j].dim()}});
                }
        if (rad.total_dim() == 0) os << "all blocks zero\n";
        r.section("blockwise radical", os.str());
        res["radical_blocks"] = std::move(blocks);
    }

    FinDimAlgebra a = assemble(s);  // verifies mixed associativity
    Subspace assembled = rad.assembled(s);
    std::vector<std::string> literals;
    for (const Vec& row : assembled.basis()) literals.push_back(a.element_str(row));
    basis_section(r, "radical basis", literals);

    if (!opt.oracle) return;
    if (a.dim() > opt.max_oracle_dim) {
        r.refuse("assembled dimension " + std::to_string(a.dim()) +
                 " exceeds --max-oracle-dim " + std::to_string(opt.max_oracle_dim));
        return;
    }
    Subspace oracle;
    if (kind == RadicalKind::vn)
        oracle = a.has_unit() ? vn_radical(a) : vn_radical_of_nonunital(a);
    else
        oracle = a.has_unit() ? jacobson_radical(a) : radical_of_nonunital(a);
    res["oracle"] = {{"ran", true}, {"dim", oracle.dim()}};
    r.check("blockwise-formula-vs-oracle", assembled == oracle,
            "formula dim " + std::to_string(assembled.dim()) + ", oracle dim " +
                std::to_string(oracle.dim()));
}

void radical_hopf(Report& r, std::string_view text, RadicalKind kind,
                  const CliOptions& opt, const HopfFileLoader& loader) {
    HopfSpecFile f = parse_hopf_file(text, loader);
    njson& res = r.results();
    res["input"] = "hopf";
    res["kind"] = radical_kind_name(kind);
    res["instance"] = f.name;

    auto violations = validate_params(f.params);
    if (!violations.empty()) {
        std::ostringstream os;
        njson arr = njson::array();
        for (const auto& v : violations) {
            os << v.condition << " " << v.detail << "\n";
            arr.push_back({{"condition", v.condition}, {"detail", v.detail}});
        }
        r.section("parameter violations", os.str());
        res["violations"] = std::move(arr);
        r.refuse("parameter validation failed: " + violations.front().condition + " " +
                 violations.front().detail +
                 (violations.size() > 1
                      ? " (and " + std::to_string(violations.size() - 1) + " more)"
                      : ""));
        return;
    }

    if (kind == RadicalKind::vn) {
        r.refuse("no closed-form description of the von Neumann regular radical is "
                 "implemented for these algebras; only the nilpotent-radical kinds "
                 "(jacobson, baer, levitzki, nil) are supported here");
        return;
    }

    HopfAlgebra h{f.params};
    {
        std::ostringstream os;
        os << "instance: " << f.name << "\n";
        os << "group order " << h.params().group.order() << ", t = " << h.params().t
           << ", dimension " << h.dim() << "\n";
        os << "the nilpotent-radical kinds coincide in finite dimension over "
              "characteristic zero\n";
        r.section("overview", os.str());
        res["dim"] = h.dim();
    }

    bool ab_zero = true;
    for (int ai : h.params().a) ab_zero = ab_zero && ai == 0;
    for (const auto& row : h.params().b)
        for (const auto& e : row) ab_zero = ab_zero && e.is_zero();

    if (!ab_zero) {
        if (opt.oracle && h.dim() <= opt.max_oracle_dim) {
            Subspace oracle = jacobson_radical(h.algebra());
            std::ostringstream os;
            os << "trace-form radical dimension: " << oracle.dim() << "\n";
            r.section("oracle information", os.str());
            res["oracle"] = {{"ran", true}, {"dim", oracle.dim()}};
        }
        r.refuse("the closed-form radical (the span of positive-degree basis monomials) "
                 "applies to the a = 0, b = 0 case; this instance has nonzero a or b "
                 "parameters, where that span is not even an ideal");
        return;
    }

    HopfRadicalCheck rc = radical_check(h, opt.oracle ? opt.max_oracle_dim : 0);
    std::vector<std::string> literals;
    for (size_t i = 0; i < h.dim(); ++i)
        if (h.x_degree(i) > 0) literals.push_back(h.algebra().basis_names()[i]);
    basis_section(r, "radical basis (positive-degree monomials)", literals);

    if (!opt.oracle) return;
    if (!rc.verified) {
        r.refuse("dimension " + std::to_string(h.dim()) + " exceeds --max-oracle-dim " +
                 std::to_string(opt.max_oracle_dim));
        return;
    }
    res["oracle"] = {{"ran", true}, {"dim", rc.oracle->dim()}};
    r.check("radical-formula-vs-trace-oracle", rc.equal,
            "formula dim " + std::to_string(rc.predicted.dim()) + ", oracle dim " +
                std::to_string(rc.oracle->dim()));
}

// ------------------------------------------------------------ net ingest

/// Count the length >= 1 paths between the regular pairs, saturating at
/// `cap`. Returns nullopt when the count is infinite, i.e. when a vertex on
/// a cycle lies on a walk between some regular pair. Otherwise each pair's
/// walks stay inside an acyclic sub-digraph and a memoized sum counts them.
std::optional<uint64_t> count_regular_paths(const Quiver& q, const Connectivity& c,
                                            const std::vector<std::pair<size_t, size_t>>& pairs,
                                            uint64_t cap) {
    const size_t n = q.vertex_count();
    std::vector<std::vector<size_t>> heads(n);
    for (const auto& a : q.arrows()) heads[a.src].push_back(a.dst);
    for (auto [s, t] : pairs)
        for (size_t v = 0; v < n; ++v)
            if (c.reach1[v][v] && (v == s || c.reach1[s][v]) &&
                (v == t || c.reach1[v][t]))
                return std::nullopt;
    uint64_t total = 0;
    for (auto [s, t] : pairs) {
        std::vector<uint64_t> walks(n, 0);
        std::vector<char> done(n, 0);
        std::function<uint64_t(size_t)> count = [&](size_t v) -> uint64_t {
            if (done[v]) return walks[v];
            done[v] = 1;
            uint64_t acc = 0;
            if (v == t)
                acc = 1;
            else
                for (size_t h : heads[v])
                    if (h == t || c.reach1[h][t]) acc = std::min(cap, acc + count(h));
            walks[v] = acc;
            return acc;
        };
        total = std::min(cap, total + count(s));
    }
    return total;
}

// ----------------------------------------------------------- verify suite

struct FileOutcome {
    std::string fname;
    std::string bytes;
    std::vector<CheckLine> checks;
    std::vector<std::string> warnings;
};

void suite_quiver(FileOutcome& o, std::string_view text, const CliOptions& opt) {
    Quiver q = Quiver::parse(text);
    o.checks.push_back({"parse", true,
                        "vertices: " + std::to_string(q.vertex_count()) +
                            ", arrows: " + std::to_string(q.arrows().size())});
    Connectivity c = analyze(q);
    for (auto& line : connectivity_checks(q, c)) o.checks.push_back(std::move(line));

    PathAlgebra pa = PathAlgebra::plain(q);
    EquivalenceReport er = equivalence_report(pa);
    o.checks.push_back({"equivalence-conditions-agree", er.all_agree(),
                        std::string("common value: ") + (er.value() ? "true" : "false")});

    if (c.has_cycle) {
        o.warnings.push_back(o.fname + ": cyclic quiver; oracle checks skipped");
        return;
    }
    std::optional<Materialization> m;
    try {
        m = materialize(pa);
    } catch (const std::length_error&) {
        o.warnings.push_back(o.fname +
                             ": path enumeration too large; oracle checks skipped");
        return;
    }
    if (m->algebra.dim() > opt.max_oracle_dim) {
        o.warnings.push_back(o.fname + ": dimension " + std::to_string(m->algebra.dim()) +
                             " above the oracle bound; oracle checks skipped");
        return;
    }
    if (m->algebra.dim() == 0) return;

    RadicalDescription rd = radical_description(pa, RadicalKind::jacobson);
    Subspace predicted(m->algebra.dim());
    for (size_t i = 0; i < m->basis.size(); ++i)
        if (m->basis[i].length() >= 1 &&
            rd.pair_regular(m->basis[i].source(), m->basis[i].target()))
            predicted.add(to_dense(SVec{{i, Cyclotomic(1)}}, m->algebra.dim()));
    Subspace oracle = jacobson_radical(m->algebra);
    o.checks.push_back({"radical-span-vs-trace-oracle", predicted == oracle,
                        "dim " + std::to_string(predicted.dim())});
    NilpotencyResult nil = largest_nilpotent_check(m->algebra, oracle);
    o.checks.push_back({"radical-nilpotent", nil.nilpotent, ""});

    bool formula_prime = is_prime_path_algebra(pa);
    bool oracle_prime = prime_bruteforce(m->algebra);
    o.checks.push_back({"prime-formula-vs-bruteforce", formula_prime == oracle_prime,
                        std::string("prime: ") + (formula_prime ? "yes" : "no")});

    std::vector<size_t> iso = vn_radical_description(pa);
    Subspace vn_predicted(m->algebra.dim());
    for (size_t v : iso) {
        GeneralizedPath p{{v}, {}, {0}};
        vn_predicted.add(to_dense(SVec{{m->index.at(p), Cyclotomic(1)}}, m->algebra.dim()));
    }
    Subspace vn_oracle = vn_radical(m->algebra);
    o.checks.push_back({"vn-formula-vs-oracle", vn_predicted == vn_oracle,
                        "dim " + std::to_string(vn_oracle.dim())});
}

void suite_gmring(FileOutcome& o, std::string_view text, const CliOptions& opt) {
    GammaSystem s = GammaSystem::parse(text);
    s.verify();
    o.checks.push_back({"parse-and-associativity", true,
                        s.name() + ", total dim " + std::to_string(s.total_dim())});
    GmIdeal rad = gm_radical_formula(s, RadicalKind::jacobson);
    o.checks.push_back({"radical-is-ideal", is_gm_ideal(s, rad),
                        "dim " + std::to_string(rad.total_dim())});
    FinDimAlgebra a = assemble(s);
    if (a.dim() > opt.max_oracle_dim || a.dim() == 0) {
        o.warnings.push_back(o.fname + ": oracle comparison skipped (dimension)");
        return;
    }
    Subspace oracle = a.has_unit() ? jacobson_radical(a) : radical_of_nonunital(a);
    o.checks.push_back({"blockwise-formula-vs-oracle", rad.assembled(s) == oracle,
                        "dim " + std::to_string(oracle.dim())});
}

void suite_hopf(FileOutcome& o, std::string_view text, const CliOptions& opt,
                const HopfFileLoader& loader) {
    HopfSpecFile f = parse_hopf_file(text, loader);
    auto violations = validate_params(f.params);
    if (!violations.empty()) {
        std::string detail;
        for (const auto& v : violations) {
            if (!detail.empty()) detail += "; ";
            detail += v.condition + " " + v.detail;
        }
        o.checks.push_back({"parameter-validation", false, detail});
        return;
    }
    o.checks.push_back({"parameter-validation", true, f.name});

    HopfAlgebra h{f.params};
    size_t expected = h.params().group.order();
    for (unsigned ni : h.params().n) expected *= ni;
    o.checks.push_back({"dimension", h.dim() == expected,
                        std::to_string(h.dim()) + " = |C| * prod n_i"});
    HopfAxiomReport ax = check_hopf_axioms(h);
    o.checks.push_back(
        {"hopf-axioms", ax.all_pass(), ax.all_pass() ? "" : ax.failures.front()});

    bool ab_zero = true;
    for (int ai : h.params().a) ab_zero = ab_zero && ai == 0;
    for (const auto& row : h.params().b)
        for (const auto& e : row) ab_zero = ab_zero && e.is_zero();
    if (!ab_zero) {
        o.warnings.push_back(o.fname +
                             ": nonzero a/b parameters; radical and smash-decomposition "
                             "checks not applicable");
        return;
    }
    if (h.dim() > opt.max_oracle_dim) {
        o.warnings.push_back(o.fname + ": dimension above the oracle bound; radical and "
                                       "smash checks skipped");
        return;
    }
    HopfRadicalCheck rc = radical_check(h, opt.max_oracle_dim);
    o.checks.push_back({"radical-formula-vs-trace-oracle", rc.verified && rc.equal,
                        "dim " + std::to_string(rc.predicted.dim())});
    o.checks.push_back({"smash-decomposition", verify_smash_iso(h), ""});
}

FileOutcome run_suite_file(const std::filesystem::path& path, const CliOptions& opt) {
    FileOutcome o;
    o.fname = path.filename().string();
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        o.bytes = buf.str();
        if (!in) {
            o.checks.push_back({"read", false, "cannot read file"});
            return o;
        }
    }
    try {
        std::string ext = path.extension().string();
        if (ext == ".quiver") {
            suite_quiver(o, o.bytes, opt);
        } else if (ext == ".gmring") {
            suite_gmring(o, o.bytes, opt);
        } else {
            auto dir = path.parent_path();
            HopfFileLoader loader = [dir](const std::string& ref) {
                std::ifstream rin(dir / ref, std::ios::binary);
                if (!rin) throw std::invalid_argument("cannot read referenced file: " + ref);
                std::ostringstream rbuf;
                rbuf << rin.rdbuf();
                return rbuf.str();
            };
            suite_hopf(o, o.bytes, opt, loader);
        }
    } catch (const std::exception& e) {
        o.checks.push_back({"run", false, e.what()});
    }
    return o;
}

}  // namespace

std::optional<InputKind> input_kind_from_label(std::string_view label) {
    auto ends_with = [&](std::string_view suf) {
        return label.size() >= suf.size() &&
               label.substr(label.size() - suf.size()) == suf;
    };
    if (ends_with(".quiver")) return InputKind::quiver;
    if (ends_with(".gmring")) return InputKind::gmring;
    if (ends_with(".hopf")) return InputKind::hopf;
    return std::nullopt;
}

Report cmd_connectivity(const std::string& label, std::string_view file_text,
                        const CliOptions& opt) {
    Report r("connectivity " + label, opt.seed);
    r.add_input(label, file_text);
    Quiver q = Quiver::parse(file_text);
    Connectivity c = analyze(q);
    connectivity_sections(r, q, c);
    append_checks(r, connectivity_checks(q, c));
    return r;
}

Report cmd_radical(const std::string& label, std::string_view file_text, InputKind input,
                   RadicalKind kind, const CliOptions& opt, const HopfFileLoader& loader) {
    std::string cmd = "radical " + label + " " + radical_kind_name(kind);
    if (opt.oracle) cmd += " --oracle";
    Report r(cmd, opt.seed);
    r.add_input(label, file_text);
    switch (input) {
        case InputKind::quiver: radical_quiver(r, file_text, kind, opt); break;
        case InputKind::gmring: radical_gmring(r, file_text, kind, opt); break;
        case InputKind::hopf: radical_hopf(r, file_text, kind, opt, loader); break;
    }
    return r;
}

Report cmd_net_ingest(const std::string& label, std::string_view file_text,
                      const CliOptions& opt) {
    Report r("net-ingest " + label, opt.seed);
    r.add_input(label, file_text);

    Quiver q;
    std::set<std::string> used_names;
    size_t lineno = 0, edges = 0, malformed = 0;
    std::istringstream in{std::string(file_text)};
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() < 2 || toks.size() > 3) {
            r.warn("line " + std::to_string(lineno) +
                   ": malformed edge line (expected `src dst [label]`): '" + line +
                   "' -- skipped");
            ++malformed;
            continue;
        }
        std::string base = toks.size() == 3 ? toks[2] : "e" + std::to_string(lineno);
        std::string name = base;
        for (size_t k = 2; !used_names.insert(name).second; ++k)
            name = base + "#" + std::to_string(k);
        q.ensure_vertex(toks[0]);
        q.ensure_vertex(toks[1]);
        q.add_arrow(name, toks[0], toks[1]);
        ++edges;
    }
    r.results()["edges_ingested"] = edges;
    r.results()["lines_skipped"] = malformed;
    if (edges == 0 && q.vertex_count() == 0) r.warn("empty network: no edges ingested");

    Connectivity c = analyze(q);
    connectivity_sections(r, q, c);
    append_checks(r, connectivity_checks(q, c));

    PathAlgebra pa = PathAlgebra::plain(q);
    EquivalenceReport er = equivalence_report(pa);
    {
        std::ostringstream os;
        njson arr = njson::array();
        for (const auto& [name, value] : er.entries()) {
            os << name << ": " << (value ? "true" : "false") << "\n";
            arr.push_back({{"condition", name}, {"holds", value}});
        }
        r.section("equivalence report", os.str());
        r.results()["equivalence"] = std::move(arr);
        r.results()["semiprime"] = er.value();
    }
    r.check("equivalence-conditions-agree", er.all_agree(),
            std::string("common value: ") + (er.value() ? "true" : "false"));

    RadicalDescription rd = radical_description(pa, RadicalKind::jacobson);
    std::ostringstream os;
    os << "regular pairs: " << rd.pairs.size() << "\n";
    os << "semiprime: " << (rd.zero() ? "yes" : "no") << "\n";
    constexpr uint64_t kCountCap = 1000000000;
    auto dim = count_regular_paths(q, c, rd.pairs, kCountCap);
    if (!dim) {
        os << "a cycle meets a walk between a regular pair: the radical (the span of "
              "paths between regular pairs) is infinite-dimensional\n";
        r.results()["radical_summary"] = {{"regular_pair_count", rd.pairs.size()},
                                          {"finite_dimensional", false}};
    } else {
        os << "radical dimension: " << *dim << (*dim == kCountCap ? " (count cap)" : "")
           << "\n";
        r.results()["radical_summary"] = {{"regular_pair_count", rd.pairs.size()},
                                          {"finite_dimensional", true},
                                          {"radical_dim", *dim}};
        if (*dim > 0 && *dim <= kBasisListingLimit) {
            try {
                auto paths = enumerate_paths(pa, q.vertex_count(), 5000);
                njson arr = njson::array();
                for (const auto& p : paths)
                    if (p.length() >= 1 && rd.pair_regular(p.source(), p.target())) {
                        os << path_str(pa, p) << "\n";
                        arr.push_back(path_str(pa, p));
                    }
                r.results()["radical_summary"]["basis"] = std::move(arr);
            } catch (const std::length_error&) {
                os << "(basis enumeration exceeds the path cap; counts only)\n";
            }
        } else if (*dim > kBasisListingLimit) {
            os << "(basis summarized by dimension)\n";
        }
    }
    r.section("radical summary", os.str());
    return r;
}

Report cmd_verify_suite(const std::string& corpus_dir, const CliOptions& opt) {
    namespace fs = std::filesystem;
    Report r("verify-suite " + corpus_dir, opt.seed);

    std::vector<fs::path> files;
    std::error_code ec;
    fs::directory_iterator it(corpus_dir, ec);
    if (ec) {
        r.refuse("cannot read corpus directory: " + corpus_dir + " (" + ec.message() + ")");
        return r;
    }
    for (const auto& entry : it) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        if (ext == ".quiver" || ext == ".gmring" || ext == ".hopf")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename() < b.filename();
    });

    if (files.empty()) {
        r.warn("empty corpus: no .quiver/.gmring/.hopf files found; vacuous pass");
        r.results()["files"] = njson::array();
        return r;
    }

    std::vector<std::future<FileOutcome>> futures;
    futures.reserve(files.size());
    for (const auto& p : files)
        futures.push_back(std::async(std::launch::async, run_suite_file, p, opt));

    njson file_list = njson::array();
    for (auto& fut : futures) {
        FileOutcome o = fut.get();
        r.add_input(o.fname, o.bytes);
        size_t passed = 0;
        for (const auto& cl : o.checks) {
            r.check(o.fname + ": " + cl.name, cl.pass, cl.detail);
            if (cl.pass) ++passed;
        }
        for (const auto& w : o.warnings) r.warn(w);
        file_list.push_back(
            {{"file", o.fname}, {"checks", o.checks.size()}, {"passed", passed}});
    }
    r.results()["files"] = std::move(file_list);
    return r;
}

}  // namespace gpa
