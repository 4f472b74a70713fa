#include "gpa/path_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace gpa {

std::string radical_kind_name(RadicalKind k) {
    switch (k) {
        case RadicalKind::baer: return "baer";
        case RadicalKind::levitzki: return "levitzki";
        case RadicalKind::nil: return "nil";
        case RadicalKind::jacobson: return "jacobson";
        case RadicalKind::vn: return "vn";
    }
    return "?";
}

std::optional<RadicalKind> radical_kind_from_name(std::string_view name) {
    if (name == "baer") return RadicalKind::baer;
    if (name == "levitzki") return RadicalKind::levitzki;
    if (name == "nil") return RadicalKind::nil;
    if (name == "jacobson") return RadicalKind::jacobson;
    if (name == "vn") return RadicalKind::vn;
    return std::nullopt;
}

bool GeneralizedPath::operator<(const GeneralizedPath& o) const {
    if (length() != o.length()) return length() < o.length();
    if (verts != o.verts) return verts < o.verts;
    if (arrows != o.arrows) return arrows < o.arrows;
    return slots < o.slots;
}

PathAlgebra::PathAlgebra(Quiver q, std::vector<FinDimAlgebra> omegas, bool plain)
    : q_(std::move(q)), conn_(analyze(q_)), omegas_(std::move(omegas)), plain_(plain) {
    if (omegas_.size() != q_.vertex_count())
        throw std::invalid_argument("need one coefficient algebra per vertex");
    for (size_t v = 0; v < omegas_.size(); ++v) {
        const FinDimAlgebra& om = omegas_[v];
        if (!om.has_unit())
            throw std::invalid_argument("coefficient algebra at vertex " +
                                        q_.vertex_names()[v] + " has no unit");
        om.verify();
        omega_semisimple_.push_back(jacobson_radical(om).dim() == 0);
    }
}

PathAlgebra PathAlgebra::plain(Quiver q) {
    std::vector<FinDimAlgebra> omegas;
    size_t n = q.vertex_count();
    for (size_t v = 0; v < n; ++v) {
        std::vector<std::vector<SVec>> t(1, std::vector<SVec>(1));
        t[0][0] = {{0, Cyclotomic(1)}};
        omegas.emplace_back(std::vector<std::string>{"1"}, std::move(t), Vec{Cyclotomic(1)});
    }
    return PathAlgebra(std::move(q), std::move(omegas), true);
}

PathAlgebra PathAlgebra::with_omega(Quiver q, std::vector<FinDimAlgebra> omegas) {
    return PathAlgebra(std::move(q), std::move(omegas), false);
}

bool PathAlgebra::path_order(const GeneralizedPath& a, const GeneralizedPath& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.verts != b.verts) return a.verts < b.verts;
    for (size_t k = 0; k < a.arrows.size(); ++k) {
        const std::string& an = q_.arrows()[a.arrows[k]].name;
        const std::string& bn = q_.arrows()[b.arrows[k]].name;
        if (an != bn) return an < bn;
    }
    return a.slots < b.slots;
}

void PathElement::add_term(GeneralizedPath p, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(std::move(p), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PathElement PathElement::single(const PathAlgebra& a, GeneralizedPath p, Cyclotomic coef) {
    if (p.verts.empty() || p.verts.size() != p.arrows.size() + 1 ||
        p.slots.size() != p.verts.size())
        throw std::invalid_argument("malformed generalized path");
    for (size_t k = 0; k < p.arrows.size(); ++k) {
        const Arrow& ar = a.quiver().arrows()[p.arrows[k]];
        if (ar.src != p.verts[k] || ar.dst != p.verts[k + 1])
            throw std::invalid_argument("arrow " + ar.name + " does not fit the vertex walk");
    }
    for (size_t k = 0; k < p.slots.size(); ++k)
        if (p.slots[k] >= a.omega(p.verts[k]).dim())
            throw std::invalid_argument("slot index out of range");
    PathElement e(&a);
    e.add_term(std::move(p), coef);
    return e;
}

PathElement PathElement::vertex(const PathAlgebra& a, size_t v) {
    if (v >= a.quiver().vertex_count()) throw std::invalid_argument("vertex out of range");
    PathElement e(&a);
    const Vec& unit = a.omega(v).unit();
    for (size_t k = 0; k < unit.size(); ++k)
        e.add_term(GeneralizedPath{{v}, {}, {k}}, unit[k]);
    return e;
}

PathElement PathElement::arrow(const PathAlgebra& a, size_t arrow_index) {
    if (arrow_index >= a.quiver().arrows().size())
        throw std::invalid_argument("arrow index out of range");
    const Arrow& ar = a.quiver().arrows()[arrow_index];
    // unit slots at both endpoints, expanded over the Omega bases
    const Vec& us = a.omega(ar.src).unit();
    const Vec& ut = a.omega(ar.dst).unit();
    PathElement e(&a);
    for (size_t i = 0; i < us.size(); ++i) {
        if (us[i].is_zero()) continue;
        for (size_t j = 0; j < ut.size(); ++j) {
            if (ut[j].is_zero()) continue;
            e.add_term(GeneralizedPath{{ar.src, ar.dst}, {arrow_index}, {i, j}},
                       us[i] * ut[j]);
        }
    }
    return e;
}

PathElement PathElement::operator+(const PathElement& o) const {
    if (ambient_ && o.ambient_ && ambient_ != o.ambient_)
        throw std::invalid_argument("elements of different path algebras");
    PathElement out = *this;
    if (!out.ambient_) out.ambient_ = o.ambient_;
    for (const auto& [p, c] : o.terms_) out.add_term(p, c);
    return out;
}

PathElement PathElement::operator-() const {
    PathElement out(ambient_);
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
    return out;
}

PathElement PathElement::scaled(const Cyclotomic& c) const {
    PathElement out(ambient_);
    if (c.is_zero()) return out;
    for (const auto& [p, coef] : terms_) out.terms_.emplace(p, coef * c);
    return out;
}

PathElement PathElement::operator*(const PathElement& o) const {
    if (!ambient_ || !o.ambient_ || ambient_ != o.ambient_)
        throw std::invalid_argument("product needs a shared path-algebra ambient");
    PathElement out(ambient_);
    for (const auto& [p, c] : terms_)
        for (const auto& [q, d] : o.terms_) {
            if (p.target() != q.source()) continue;
            size_t v = p.target();
            Cyclotomic cd = c * d;
            // junction slot product, re-expanded over the Omega_vv basis
            for (const Term& t : ambient_->omega(v).basis_product(p.slots.back(),
                                                                  q.slots.front())) {
                GeneralizedPath merged;
                merged.verts = p.verts;
                merged.verts.insert(merged.verts.end(), q.verts.begin() + 1, q.verts.end());
                merged.arrows = p.arrows;
                merged.arrows.insert(merged.arrows.end(), q.arrows.begin(), q.arrows.end());
                merged.slots.assign(p.slots.begin(), p.slots.end() - 1);
                merged.slots.push_back(t.idx);
                merged.slots.insert(merged.slots.end(), q.slots.begin() + 1, q.slots.end());
                out.add_term(std::move(merged), cd * t.coef);
            }
        }
    return out;
}

PathElement PathElement::component(size_t i, size_t j) const {
    PathElement out(ambient_);
    for (const auto& [p, c] : terms_)
        if (p.source() == i && p.target() == j) out.terms_.emplace(p, c);
    return out;
}

PathElement PathElement::length_component(size_t l) const {
    PathElement out(ambient_);
    for (const auto& [p, c] : terms_)
        if (p.length() == l) out.terms_.emplace(p, c);
    return out;
}

std::optional<size_t> PathElement::min_length() const {
    std::optional<size_t> m;
    for (const auto& [p, c] : terms_)
        if (!m || p.length() < *m) m = p.length();
    return m;
}

std::optional<size_t> PathElement::max_length() const {
    std::optional<size_t> m;
    for (const auto& [p, c] : terms_)
        if (!m || p.length() > *m) m = p.length();
    return m;
}

bool PathElement::operator==(const PathElement& o) const { return terms_ == o.terms_; }

std::string path_str(const PathAlgebra& a, const GeneralizedPath& p) {
    const auto& vnames = a.quiver().vertex_names();
    if (p.length() == 0) {
        std::string out = "e(" + vnames[p.verts[0]] + ")";
        if (!a.is_plain()) out += "[" + a.omega(p.verts[0]).basis_names()[p.slots[0]] + "]";
        return out;
    }
    std::string out;
    if (!a.is_plain())
        out = "e(" + vnames[p.verts[0]] + ")[" +
              a.omega(p.verts[0]).basis_names()[p.slots[0]] + "].";
    for (size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) out += ".";
        out += a.quiver().arrows()[p.arrows[k]].name;
        if (!a.is_plain())
            out += "[" + a.omega(p.verts[k + 1]).basis_names()[p.slots[k + 1]] + "]";
    }
    return out;
}

std::string PathElement::str() const {
    if (terms_.empty()) return "0";
    std::vector<const GeneralizedPath*> order;
    for (const auto& [p, c] : terms_) order.push_back(&p);
    if (ambient_)
        std::sort(order.begin(), order.end(), [&](const auto* x, const auto* y) {
            return ambient_->path_order(*x, *y);
        });
    std::string out;
    for (const GeneralizedPath* p : order) {
        const Cyclotomic& c = terms_.at(*p);
        if (!out.empty()) out += " + ";
        std::string ps = ambient_ ? path_str(*ambient_, *p) : "<path>";
        if (c.is_one()) {
            out += ps;
        } else if ((-c).is_one()) {
            out += "-" + ps;
        } else {
            std::string cs = c.str();
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            out += cs + "*" + ps;
        }
    }
    return out;
}

namespace {

struct ElementParser {
    const PathAlgebra& alg;
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("element parse error at position " + std::to_string(pos) +
                                    ": " + what);
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a name");
        return std::string(s.substr(start, pos - start));
    }

    size_t slot_of(size_t vertex, const std::string& name) {
        const auto& names = alg.omega(vertex).basis_names();
        for (size_t k = 0; k < names.size(); ++k)
            if (names[k] == name) return k;
        fail("unknown coefficient basis element `" + name + "` at vertex " +
             alg.quiver().vertex_names()[vertex]);
    }

    // one dotted chunk: e(v) / e(v)[w] / arrowName / arrowName[w]
    PathElement chunk() {
        skip_ws();
        if (s.substr(pos).starts_with("e(")) {
            pos += 2;
            std::string vname = ident();
            if (!eat(')')) fail("expected ')'");
            size_t v = alg.quiver().has_vertex(vname)
                           ? alg.quiver().vertex_index(vname)
                           : (fail("unknown vertex `" + vname + "`"), 0);
            if (eat('[')) {
                std::string w = ident();
                if (!eat(']')) fail("expected ']'");
                size_t slot = slot_of(v, w);
                return PathElement::single(alg, GeneralizedPath{{v}, {}, {slot}});
            }
            return PathElement::vertex(alg, v);
        }
        std::string aname = ident();
        const auto& arrows = alg.quiver().arrows();
        size_t idx = SIZE_MAX;
        for (size_t k = 0; k < arrows.size(); ++k)
            if (arrows[k].name == aname) idx = k;
        if (idx == SIZE_MAX) fail("unknown arrow `" + aname + "`");
        PathElement e = PathElement::arrow(alg, idx);
        if (eat('[')) {
            std::string w = ident();
            if (!eat(']')) fail("expected ']'");
            size_t v = arrows[idx].dst;
            size_t slot = slot_of(v, w);
            e = e * PathElement::single(alg, GeneralizedPath{{v}, {}, {slot}});
        }
        return e;
    }

    PathElement term() {
        // optional scalar factor: split at the last top-level '*' whose right
        // side starts a chunk (a letter or `e(`)
        skip_ws();
        size_t depth = 0;
        size_t split = std::string_view::npos;
        for (size_t k = pos; k < s.size(); ++k) {
            char c = s[k];
            if (c == '(' || c == '[') ++depth;
            else if (c == ')' || c == ']') {
                if (depth == 0) break;
                --depth;
            } else if (depth == 0 && (c == '+' || c == '-')) {
                break;
            } else if (c == '*' && depth == 0) {
                split = k;
            }
        }
        Cyclotomic coef(1);
        if (split != std::string_view::npos) {
            std::string scalar(s.substr(pos, split - pos));
            coef = parse_scalar(scalar);
            pos = split + 1;
        }
        PathElement e = chunk();
        while (eat('.')) e = e * chunk();
        return e.scaled(coef);
    }

    PathElement element() {
        PathElement acc(&alg);
        bool neg = false;
        if (eat('-')) neg = true;
        acc = acc + (neg ? -term() : term());
        for (;;) {
            skip_ws();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return acc;
    }
};

}  // namespace

PathElement parse_element(const PathAlgebra& a, std::string_view text) {
    ElementParser p{a, text};
    return p.element();
}

std::vector<GeneralizedPath> enumerate_paths(const PathAlgebra& a, size_t max_len,
                                             size_t max_count) {
    const Quiver& q = a.quiver();
    std::vector<GeneralizedPath> all;
    auto guard = [&]() {
        if (all.size() > max_count)
            throw std::length_error("path enumeration exceeded " + std::to_string(max_count) +
                                    " paths");
    };
    std::vector<GeneralizedPath> level;
    for (size_t v = 0; v < q.vertex_count(); ++v)
        for (size_t k = 0; k < a.omega(v).dim(); ++k)
            level.push_back(GeneralizedPath{{v}, {}, {k}});
    auto order = [&](const GeneralizedPath& x, const GeneralizedPath& y) {
        return a.path_order(x, y);
    };
    std::sort(level.begin(), level.end(), order);
    all = level;
    guard();
    for (size_t len = 1; len <= max_len && !level.empty(); ++len) {
        std::vector<GeneralizedPath> next;
        for (const GeneralizedPath& p : level)
            for (size_t ai = 0; ai < q.arrows().size(); ++ai) {
                const Arrow& ar = q.arrows()[ai];
                if (ar.src != p.target()) continue;
                for (size_t k = 0; k < a.omega(ar.dst).dim(); ++k) {
                    GeneralizedPath ext = p;
                    ext.verts.push_back(ar.dst);
                    ext.arrows.push_back(ai);
                    ext.slots.push_back(k);
                    next.push_back(std::move(ext));
                }
            }
        std::sort(next.begin(), next.end(), order);
        all.insert(all.end(), next.begin(), next.end());
        guard();
        level = std::move(next);
    }
    return all;
}

bool RadicalDescription::pair_regular(size_t s, size_t t) const {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(s, t)) != pairs.end();
}

bool RadicalDescription::member(const PathElement& x) const {
    for (const auto& [p, c] : x.terms())
        if (!pair_regular(p.source(), p.target())) return false;
    return true;
}

RadicalDescription radical_description(const PathAlgebra& a, RadicalKind kind) {
    if (kind == RadicalKind::vn)
        throw std::invalid_argument(
            "the span-of-regular-paths description covers the Jacobson family; "
            "use the isolated-vertex description for the von Neumann radical");
    RadicalDescription d;
    d.kind = kind;
    d.pairs = a.connectivity().regular_pairs();
    return d;
}

std::vector<size_t> vn_radical_description(const PathAlgebra& a) {
    return a.connectivity().isolated;
}

bool is_prime_path_algebra(const PathAlgebra& a) {
    return a.connectivity().strong.size() == 1;
}

std::vector<std::pair<std::string, bool>> EquivalenceReport::entries() const {
    return {
        {"weak components are strong", weak_components_strong},
        {"unilateral components are strong", unilateral_components_strong},
        {"weak, unilateral, strong coincide", three_notions_coincide},
        {"arrows lie inside strong components", arrows_inside_strong},
        {"no regular path", no_regular_path},
        {"reachability is symmetric", reach_symmetric},
        {"direct sum of prime algebras", direct_sum_of_primes},
        {"semiprime", semiprime},
        {"blocks are semiprime", blocks_semiprime},
        {"block radicals vanish", block_radicals_zero},
        {"radical vanishes", radical_zero},
    };
}

bool EquivalenceReport::all_agree() const {
    bool v = weak_components_strong;
    for (const auto& [name, b] : entries())
        if (b != v) return false;
    return true;
}

EquivalenceReport equivalence_report(const PathAlgebra& a) {
    const Connectivity& c = a.connectivity();
    size_t n = a.quiver().vertex_count();
    EquivalenceReport r;

    r.weak_components_strong = (c.weak == c.strong);

    std::set<std::vector<size_t>> strong_sets(c.strong.begin(), c.strong.end());
    r.unilateral_components_strong = true;
    for (const auto& uni : c.unilateral)
        if (!strong_sets.count(uni)) r.unilateral_components_strong = false;

    std::set<std::vector<size_t>> weak_sets(c.weak.begin(), c.weak.end());
    std::set<std::vector<size_t>> uni_sets(c.unilateral.begin(), c.unilateral.end());
    r.three_notions_coincide = (weak_sets == strong_sets && uni_sets == strong_sets);

    r.arrows_inside_strong = true;
    for (const Arrow& ar : a.quiver().arrows())
        if (c.strong_class[ar.src] != c.strong_class[ar.dst]) r.arrows_inside_strong = false;

    r.no_regular_path = c.regular_pairs().empty();

    r.reach_symmetric = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && c.reach1[i][j] != c.reach1[j][i]) r.reach_symmetric = false;

    // direct sum decomposition: every arrow internal, and each strong-class
    // subquiver a prime path algebra (checked on the induced quiver itself)
    r.direct_sum_of_primes = true;
    for (const Arrow& ar : a.quiver().arrows())
        if (c.strong_class[ar.src] != c.strong_class[ar.dst])
            r.direct_sum_of_primes = false;
    if (r.direct_sum_of_primes)
        for (const auto& cls : c.strong) {
            Quiver sub;
            for (size_t v : cls) sub.add_vertex(a.quiver().vertex_names()[v]);
            for (const Arrow& ar : a.quiver().arrows())
                if (std::find(cls.begin(), cls.end(), ar.src) != cls.end() &&
                    std::find(cls.begin(), cls.end(), ar.dst) != cls.end())
                    sub.add_arrow(ar.name, a.quiver().vertex_names()[ar.src],
                                  a.quiver().vertex_names()[ar.dst]);
            if (!is_prime_path_algebra(PathAlgebra::plain(std::move(sub))))
                r.direct_sum_of_primes = false;
        }

    r.semiprime = radical_description(a, RadicalKind::jacobson).zero();

    r.blocks_semiprime = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && c.reach1[i][j] && !c.reach1[j][i]) r.blocks_semiprime = false;

    r.block_radicals_zero = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            bool block_nonzero = (i == j) || c.reach1[i][j];
            if (!block_nonzero) continue;
            if (gamma_block_radical(a, i, j, RadicalKind::jacobson) != BlockRadical::zero)
                r.block_radicals_zero = false;
        }

    r.radical_zero = true;
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t)
            if (c.reach1[s][t] && !c.reach1[t][s]) r.radical_zero = false;

    return r;
}

BlockRadical gamma_block_radical(const PathAlgebra& a, size_t s, size_t t, RadicalKind kind) {
    const Connectivity& c = a.connectivity();
    size_t n = a.quiver().vertex_count();
    if (s >= n || t >= n) throw std::invalid_argument("vertex out of range");
    if (kind == RadicalKind::vn) {
        if (s == t)
            throw std::invalid_argument(
                "the off-diagonal rule covers s != t only for the von Neumann radical");
        return BlockRadical::zero;
    }
    bool a_st = (s == t) || c.reach1[s][t];
    if (!a_st)
        throw std::invalid_argument("block radical rule needs A_st != 0");
    bool a_ts = (s == t) || c.reach1[t][s];
    return a_ts ? BlockRadical::zero : BlockRadical::full;
}

std::optional<Vec> Materialization::coords(const PathElement& x) const {
    Vec v(algebra.dim());
    for (const auto& [p, c] : x.terms()) {
        auto it = index.find(p);
        if (it == index.end()) return std::nullopt;
        v[it->second] += c;
    }
    return v;
}

namespace {

Materialization build_from_paths(const PathAlgebra& a,
                                 std::vector<GeneralizedPath> paths,
                                 std::optional<size_t> kill_at_len) {
    // kill_at_len L: products of length >= L are zero (quotient by J^L);
    // without it every concatenation must itself be a listed path.
    Materialization m{FinDimAlgebra({}, {}, std::nullopt), {}, {}, 0};
    std::map<GeneralizedPath, size_t> index;
    for (size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
    size_t dim = paths.size();
    std::vector<std::string> names;
    for (const auto& p : paths) names.push_back(path_str(a, p));
    std::vector<std::vector<SVec>> table(dim, std::vector<SVec>(dim));
    for (size_t i = 0; i < dim; ++i) {
        PathElement pi = PathElement::single(a, paths[i]);
        for (size_t j = 0; j < dim; ++j) {
            if (paths[i].target() != paths[j].source()) continue;
            if (kill_at_len && paths[i].length() + paths[j].length() >= *kill_at_len) continue;
            PathElement prod = pi * PathElement::single(a, paths[j]);
            SVec sv;
            std::vector<std::pair<size_t, Cyclotomic>> entries;
            for (const auto& [p, c] : prod.terms()) {
                auto it = index.find(p);
                if (it == index.end())
                    throw std::logic_error("product left the enumerated path set");
                entries.emplace_back(it->second, c);
            }
            std::sort(entries.begin(), entries.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto& [idx, c] : entries) sv.push_back({idx, std::move(c)});
            table[i][j] = std::move(sv);
        }
    }
    Vec unit(dim);
    for (size_t v = 0; v < a.quiver().vertex_count(); ++v) {
        PathElement ev = PathElement::vertex(a, v);
        for (const auto& [p, c] : ev.terms()) {
            auto it = index.find(p);
            if (it == index.end()) throw std::logic_error("vertex idempotent not in basis");
            unit[it->second] += c;
        }
    }
    m.algebra = FinDimAlgebra(std::move(names), std::move(table), std::move(unit));
    m.basis = std::move(paths);
    m.index = std::move(index);
    return m;
}

Materialization quotient_materialization(const PathAlgebra& a, Materialization base,
                                         const Subspace& ideal) {
    std::vector<bool> is_pivot(base.algebra.dim(), false);
    for (size_t p : ideal.pivots()) is_pivot[p] = true;
    Materialization out{base.algebra.quotient(ideal), {}, {}, base.paths_enumerated};
    for (size_t i = 0; i < base.basis.size(); ++i)
        if (!is_pivot[i]) {
            out.index[base.basis[i]] = out.basis.size();
            out.basis.push_back(base.basis[i]);
        }
    return out;
}

void check_relation_window(const RelationSet& rho) {
    size_t floor = rho.weak ? 1 : 2;
    for (const PathElement& g : rho.generators) {
        if (g.is_zero())
            throw std::invalid_argument("zero relation generator");
        if (*g.min_length() < floor)
            throw std::invalid_argument(
                "relation generator `" + g.str() + "` has a path of length " +
                std::to_string(*g.min_length()) + " below the allowed window");
    }
}

}  // namespace

Materialization materialize(const PathAlgebra& a, const RelationSet* rho,
                            std::optional<size_t> cap, size_t max_paths) {
    if (rho && rho->generators.empty()) rho = nullptr;
    if (rho) {
        for (const PathElement& g : rho->generators)
            if (g.ambient() != &a)
                throw std::invalid_argument("relation generator from a different ambient");
        check_relation_window(*rho);
    }
    const bool cyclic = a.connectivity().has_cycle;

    if (!cap && cyclic) {
        if (!rho)
            throw std::invalid_argument(
                "a cyclic quiver spans infinitely many paths; pass relations or a cap");
        if (!rho->truncation)
            throw std::invalid_argument(
                "relations on a cyclic quiver need a declared truncation exponent");
        size_t t = *rho->truncation;
        if (t < 2) throw std::invalid_argument("truncation exponent must be at least 2");
        for (const PathElement& g : rho->generators)
            if (*g.min_length() != *g.max_length())
                throw std::invalid_argument(
                    "relation generator `" + g.str() +
                    "` mixes path lengths; on a cyclic quiver a finite-window check "
                    "cannot certify the quotient dimension, so only length-homogeneous "
                    "relations are accepted without an explicit cap");

        // Verify span{length-t paths} lies in the degree-t piece of the
        // relation ideal. Any longer path factors through a length-t tail,
        // so this single graded piece certifies J^t inside the ideal.
        std::vector<GeneralizedPath> all = enumerate_paths(a, t, max_paths);
        std::vector<GeneralizedPath> deg_t;
        std::map<GeneralizedPath, size_t> tidx;
        for (const auto& p : all)
            if (p.length() == t) {
                tidx[p] = deg_t.size();
                deg_t.push_back(p);
            }
        Subspace piece(deg_t.size());
        for (const PathElement& g : rho->generators) {
            size_t lg = *g.min_length();
            if (lg > t) continue;
            for (const auto& pre : all) {
                if (pre.length() + lg > t) continue;
                PathElement pg = PathElement::single(a, pre) * g;
                for (const auto& post : all) {
                    if (pre.length() + lg + post.length() != t) continue;
                    PathElement full = pg * PathElement::single(a, post);
                    if (full.is_zero()) continue;
                    Vec coords(deg_t.size());
                    for (const auto& [p, c] : full.terms()) coords[tidx.at(p)] += c;
                    piece.add(std::move(coords));
                }
            }
        }
        for (const auto& p : deg_t) {
            Vec e(deg_t.size());
            e[tidx.at(p)] = Cyclotomic(1);
            if (!piece.contains(e))
                throw std::invalid_argument(
                    "relations do not swallow every path of the declared truncation "
                    "length: `" + path_str(a, p) + "` stays independent");
        }
        cap = t;  // sound: the ideal already contains J^t, so adding it is free
    }

    if (cap) {
        size_t L = *cap;
        if (L == 0) throw std::invalid_argument("cap must be at least 1");
        std::vector<GeneralizedPath> paths = enumerate_paths(a, L - 1, max_paths);
        Materialization m = build_from_paths(a, std::move(paths), L);
        m.paths_enumerated = m.basis.size();
        if (rho) {
            Mat gens;
            for (const PathElement& g : rho->generators) {
                // terms of length >= L die in the quotient by J^L already
                Vec v(m.algebra.dim());
                for (const auto& [p, c] : g.terms()) {
                    if (p.length() >= L) continue;
                    v[m.index.at(p)] += c;
                }
                gens.push_back(std::move(v));
            }
            Subspace ideal = ideal_closure(m.algebra, gens);
            return quotient_materialization(a, std::move(m), ideal);
        }
        return m;
    }

    // acyclic, exact kD (longest path has fewer arrows than vertices)
    std::vector<GeneralizedPath> paths =
        enumerate_paths(a, a.quiver().vertex_count(), max_paths);
    Materialization m = build_from_paths(a, std::move(paths), std::nullopt);
    m.paths_enumerated = m.basis.size();
    if (rho) {
        Mat gens;
        for (const PathElement& g : rho->generators) {
            auto v = m.coords(g);
            if (!v) throw std::logic_error("relation support escaped the full path basis");
            gens.push_back(std::move(*v));
        }
        Subspace ideal = ideal_closure(m.algebra, gens);
        return quotient_materialization(a, std::move(m), ideal);
    }
    return m;
}

}  // namespace gpa
