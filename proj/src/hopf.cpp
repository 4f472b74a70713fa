#include "gpa/hopf.hpp"

#include "gpa/path_algebra.hpp"
#include "gpa/quiver.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpa {

// ---------------------------------------------------------------------------
// Group

namespace {

std::string join_names(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "*";
        out += p;
    }
    return out.empty() ? std::string("1") : out;
}

std::vector<std::string> hopf_split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string hopf_trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_on(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t k = 0; k <= s.size(); ++k) {
        if (k == s.size() || s[k] == sep) {
            out.push_back(hopf_trim(s.substr(start, k - start)));
            start = k + 1;
        }
    }
    return out;
}

}  // namespace

Group::Group() {
    names_ = {"1"};
    table_ = {{0}};
    factor_form_ = true;
    finish_build(false);
}

void Group::finish_build(bool verify_axioms) {
    const size_t n = names_.size();
    if (verify_axioms) {
        if (n == 0) throw std::invalid_argument("group must be non-empty");
        std::set<std::string> seen;
        for (const auto& nm : names_) {
            if (nm.empty()) throw std::invalid_argument("empty element name");
            if (!seen.insert(nm).second)
                throw std::invalid_argument("duplicate element name: " + nm);
        }
        if (table_.size() != n)
            throw std::invalid_argument("multiplication table must have one row per element");
        for (size_t a = 0; a < n; ++a) {
            if (table_[a].size() != n)
                throw std::invalid_argument("row of " + names_[a] + " has the wrong length");
            for (size_t b = 0; b < n; ++b)
                if (table_[a][b] >= n)
                    throw std::invalid_argument("row of " + names_[a] +
                                                " holds an out-of-range product");
        }
        for (size_t a = 0; a < n; ++a)
            if (table_[0][a] != a || table_[a][0] != a)
                throw std::invalid_argument("first element does not act as the identity on " +
                                            names_[a]);
        for (size_t a = 0; a < n; ++a) {
            std::vector<bool> row(n, false), col(n, false);
            for (size_t b = 0; b < n; ++b) {
                if (row[table_[a][b]])
                    throw std::invalid_argument("row of " + names_[a] + " is not a permutation");
                row[table_[a][b]] = true;
                if (col[table_[b][a]])
                    throw std::invalid_argument("column of " + names_[a] +
                                                " is not a permutation");
                col[table_[b][a]] = true;
            }
        }
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw std::invalid_argument(
                            "multiplication table is not associative at (" + names_[a] + ", " +
                            names_[b] + ", " + names_[c] + ")");
    }
    inv_.assign(n, 0);
    for (size_t a = 0; a < n; ++a) {
        bool found = false;
        for (size_t b = 0; b < n; ++b)
            if (table_[a][b] == 0 && table_[b][a] == 0) {
                inv_[a] = b;
                found = true;
                break;
            }
        if (!found)
            throw std::invalid_argument("element " + names_[a] + " has no inverse");
    }
    central_.assign(n, true);
    abelian_flag_ = true;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (table_[a][b] != table_[b][a]) {
                central_[a] = false;
                abelian_flag_ = false;
            }
}

Group Group::abelian(std::vector<unsigned> factors) {
    for (unsigned m : factors)
        if (m == 0) throw std::invalid_argument("cyclic factor of order 0");
    Group g;
    g.factors_ = factors;
    g.factor_form_ = true;
    size_t order = 1;
    for (unsigned m : factors) order *= m;
    const size_t r = factors.size();
    auto exps_of = [&](size_t idx) {
        std::vector<unsigned> e(r);
        for (size_t k = r; k-- > 0;) {
            e[k] = static_cast<unsigned>(idx % factors[k]);
            idx /= factors[k];
        }
        return e;
    };
    g.names_.assign(order, "");
    for (size_t idx = 0; idx < order; ++idx) {
        auto e = exps_of(idx);
        std::vector<std::string> parts;
        for (size_t k = 0; k < r; ++k) {
            if (e[k] == 0) continue;
            std::string sym = (r == 1) ? "g" : "g" + std::to_string(k + 1);
            parts.push_back(e[k] == 1 ? sym : sym + "^" + std::to_string(e[k]));
        }
        g.names_[idx] = join_names(parts);
    }
    g.table_.assign(order, std::vector<size_t>(order));
    for (size_t a = 0; a < order; ++a)
        for (size_t b = 0; b < order; ++b) {
            auto ea = exps_of(a), eb = exps_of(b);
            size_t idx = 0;
            for (size_t k = 0; k < r; ++k)
                idx = idx * factors[k] + (ea[k] + eb[k]) % factors[k];
            g.table_[a][b] = idx;
        }
    g.finish_build(true);
    return g;
}

Group Group::dihedral(unsigned n) {
    if (n == 0) throw std::invalid_argument("dihedral parameter must be positive");
    Group g;
    g.factor_form_ = false;
    const size_t order = 2 * static_cast<size_t>(n);
    g.names_.assign(order, "");
    for (unsigned flip = 0; flip < 2; ++flip)
        for (unsigned rot = 0; rot < n; ++rot) {
            std::vector<std::string> parts;
            if (rot == 1)
                parts.push_back("r");
            else if (rot > 1)
                parts.push_back("r^" + std::to_string(rot));
            if (flip) parts.push_back("s");
            g.names_[rot + n * flip] = join_names(parts);
        }
    g.table_.assign(order, std::vector<size_t>(order));
    for (size_t a = 0; a < order; ++a)
        for (size_t b = 0; b < order; ++b) {
            unsigned ar = static_cast<unsigned>(a % n), af = static_cast<unsigned>(a / n);
            unsigned br = static_cast<unsigned>(b % n), bf = static_cast<unsigned>(b / n);
            unsigned rot = af ? (ar + n - br % n) % n : (ar + br) % n;
            g.table_[a][b] = rot + n * ((af + bf) % 2);
        }
    g.finish_build(true);
    return g;
}

Group Group::direct_product(const Group& a, const Group& b) {
    if (a.factor_form_ && b.factor_form_) {
        std::vector<unsigned> f = a.factors_;
        f.insert(f.end(), b.factors_.begin(), b.factors_.end());
        return abelian(std::move(f));
    }
    Group g;
    g.factor_form_ = false;
    const size_t order = a.order() * b.order();
    g.names_.assign(order, "");
    std::set<std::string> seen;
    for (size_t ia = 0; ia < a.order(); ++ia)
        for (size_t ib = 0; ib < b.order(); ++ib) {
            std::string nm;
            if (ia == 0 && ib == 0)
                nm = "1";
            else if (ib == 0)
                nm = a.names_[ia];
            else if (ia == 0)
                nm = b.names_[ib];
            else
                nm = a.names_[ia] + "*" + b.names_[ib];
            if (!seen.insert(nm).second)
                throw std::invalid_argument(
                    "direct product element names clash at " + nm +
                    "; rename one factor's elements");
            g.names_[ia * b.order() + ib] = nm;
        }
    g.table_.assign(order, std::vector<size_t>(order));
    for (size_t ia = 0; ia < a.order(); ++ia)
        for (size_t ib = 0; ib < b.order(); ++ib)
            for (size_t ja = 0; ja < a.order(); ++ja)
                for (size_t jb = 0; jb < b.order(); ++jb)
                    g.table_[ia * b.order() + ib][ja * b.order() + jb] =
                        a.table_[ia][ja] * b.order() + b.table_[ib][jb];
    g.finish_build(true);
    return g;
}

Group Group::from_cayley(std::vector<std::string> names,
                         std::vector<std::vector<size_t>> table) {
    Group g;
    g.factor_form_ = false;
    g.names_ = std::move(names);
    g.table_ = std::move(table);
    g.finish_build(true);
    return g;
}

size_t Group::mul(size_t a, size_t b) const {
    if (a >= order() || b >= order()) throw std::out_of_range("group element out of range");
    return table_[a][b];
}

size_t Group::inverse(size_t a) const {
    if (a >= order()) throw std::out_of_range("group element out of range");
    return inv_[a];
}

size_t Group::power(size_t a, long e) const {
    if (a >= order()) throw std::out_of_range("group element out of range");
    const long ord = static_cast<long>(element_order(a));
    long r = ((e % ord) + ord) % ord;
    size_t out = 0;
    for (long k = 0; k < r; ++k) out = table_[out][a];
    return out;
}

size_t Group::element_order(size_t a) const {
    if (a >= order()) throw std::out_of_range("group element out of range");
    size_t x = a, ord = 1;
    while (x != 0) {
        x = table_[x][a];
        ++ord;
    }
    return ord;
}

bool Group::is_central(size_t a) const {
    if (a >= order()) throw std::out_of_range("group element out of range");
    return central_[a];
}

const std::string& Group::element_name(size_t a) const {
    if (a >= order()) throw std::out_of_range("group element out of range");
    return names_[a];
}

std::optional<size_t> Group::element_by_name(std::string_view name) const {
    for (size_t a = 0; a < order(); ++a)
        if (names_[a] == name) return a;
    return std::nullopt;
}

size_t Group::element_from_exponents(const std::vector<long>& exps) const {
    if (!factor_form_)
        throw std::invalid_argument("exponent addressing needs a factor-form group");
    if (exps.size() != factors_.size())
        throw std::invalid_argument("expected " + std::to_string(factors_.size()) +
                                    " exponents, got " + std::to_string(exps.size()));
    size_t idx = 0;
    for (size_t k = 0; k < factors_.size(); ++k) {
        const long m = static_cast<long>(factors_[k]);
        idx = idx * factors_[k] + static_cast<size_t>(((exps[k] % m) + m) % m);
    }
    return idx;
}

std::vector<unsigned> Group::exponents_of(size_t a) const {
    if (!factor_form_)
        throw std::invalid_argument("exponent addressing needs a factor-form group");
    if (a >= order()) throw std::out_of_range("group element out of range");
    std::vector<unsigned> e(factors_.size());
    for (size_t k = factors_.size(); k-- > 0;) {
        e[k] = static_cast<unsigned>(a % factors_[k]);
        a /= factors_[k];
    }
    return e;
}

std::string Group::to_cayley_file(const std::string& name) const {
    std::string out = "# " + name + "\nelements";
    for (const auto& nm : names_) out += " " + nm;
    out += "\n";
    for (size_t a = 0; a < order(); ++a) {
        out += "row";
        for (size_t b = 0; b < order(); ++b) out += " " + names_[table_[a][b]];
        out += "\n";
    }
    return out;
}

bool Group::same_table(const Group& o) const {
    return names_ == o.names_ && table_ == o.table_;
}

Group parse_cayley_file(std::string_view text) {
    std::vector<std::string> names;
    std::vector<std::vector<size_t>> table;
    size_t lineno = 0, pos = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++lineno;
        std::string line = hopf_trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (auto h = line.find('#'); h != std::string::npos) line = hopf_trim(line.substr(0, h));
        if (line.empty()) continue;
        auto toks = hopf_split_ws(line);
        if (toks[0] == "elements") {
            if (!names.empty()) fail("elements line appears twice");
            names.assign(toks.begin() + 1, toks.end());
            if (names.empty()) fail("elements line lists no elements");
        } else if (toks[0] == "row") {
            if (names.empty()) fail("row before elements line");
            if (toks.size() != names.size() + 1)
                fail("row needs exactly " + std::to_string(names.size()) + " products");
            std::vector<size_t> row;
            for (size_t k = 1; k < toks.size(); ++k) {
                auto it = std::find(names.begin(), names.end(), toks[k]);
                if (it == names.end()) fail("unknown element: " + toks[k]);
                row.push_back(static_cast<size_t>(it - names.begin()));
            }
            table.push_back(std::move(row));
        } else {
            fail("unknown directive: " + toks[0]);
        }
    }
    if (names.empty()) throw std::invalid_argument("missing elements line");
    if (table.size() != names.size())
        throw std::invalid_argument("expected " + std::to_string(names.size()) +
                                    " row lines, got " + std::to_string(table.size()));
    return Group::from_cayley(std::move(names), std::move(table));
}

Group parse_group_token(std::string_view token) {
    auto pieces = split_on(token, 'x');
    std::vector<unsigned> factors;
    for (const auto& p : pieces) {
        if (p.size() < 2 || p[0] != 'Z')
            throw std::invalid_argument("bad group token: " + std::string(token));
        unsigned m = 0;
        for (size_t k = 1; k < p.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(p[k])))
                throw std::invalid_argument("bad group token: " + std::string(token));
            m = m * 10 + static_cast<unsigned>(p[k] - '0');
        }
        if (m == 0) throw std::invalid_argument("bad group token: " + std::string(token));
        factors.push_back(m);
    }
    return Group::abelian(std::move(factors));
}

// ---------------------------------------------------------------------------
// Character

Character Character::trivial(const Group& g) {
    return Character(std::vector<Cyclotomic>(g.order(), Cyclotomic(1)));
}

Character Character::from_exponents(const Group& g, const std::vector<long>& exps) {
    if (!g.has_factor_form())
        throw std::invalid_argument("exponent characters need a factor-form group");
    if (exps.size() != g.factors().size())
        throw std::invalid_argument("expected " + std::to_string(g.factors().size()) +
                                    " character exponents, got " + std::to_string(exps.size()));
    std::vector<Cyclotomic> vals(g.order(), Cyclotomic(1));
    for (size_t a = 0; a < g.order(); ++a) {
        auto e = g.exponents_of(a);
        Cyclotomic v(1);
        for (size_t k = 0; k < e.size(); ++k)
            v *= Cyclotomic::zeta(g.factors()[k], exps[k] * static_cast<long>(e[k]));
        vals[a] = v;
    }
    return Character(std::move(vals));
}

Character Character::from_values(const Group& g, std::vector<Cyclotomic> values) {
    if (values.size() != g.order())
        throw std::invalid_argument("character needs one value per group element");
    if (!values[g.identity()].is_one())
        throw std::invalid_argument("character value on the identity must be 1");
    for (size_t a = 0; a < g.order(); ++a)
        if (values[a].is_zero())
            throw std::invalid_argument("character value on " + g.element_name(a) + " is zero");
    for (size_t a = 0; a < g.order(); ++a)
        for (size_t b = 0; b < g.order(); ++b)
            if (values[g.mul(a, b)] != values[a] * values[b])
                throw std::invalid_argument("character is not multiplicative at (" +
                                            g.element_name(a) + ", " + g.element_name(b) + ")");
    return Character(std::move(values));
}

const Cyclotomic& Character::value(size_t element) const {
    if (element >= vals_.size()) throw std::out_of_range("group element out of range");
    return vals_[element];
}

Character Character::times(const Character& o) const {
    if (vals_.size() != o.vals_.size())
        throw std::invalid_argument("characters live on groups of different orders");
    std::vector<Cyclotomic> v(vals_.size());
    for (size_t k = 0; k < vals_.size(); ++k) v[k] = vals_[k] * o.vals_[k];
    return Character(std::move(v));
}

Character Character::inverse_char() const {
    std::vector<Cyclotomic> v(vals_.size());
    for (size_t k = 0; k < vals_.size(); ++k) v[k] = vals_[k].inverse();
    return Character(std::move(v));
}

Character Character::power_char(long e) const {
    std::vector<Cyclotomic> v(vals_.size());
    for (size_t k = 0; k < vals_.size(); ++k) v[k] = vals_[k].pow(e);
    return Character(std::move(v));
}

bool Character::is_trivial() const {
    for (const auto& v : vals_)
        if (!v.is_one()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Parameter validation

HopfParams taft_params(unsigned n, long chi_exponent) {
    if (n == 0) throw std::invalid_argument("truncation exponent must be positive");
    Group g = Group::cyclic(n);
    HopfParams p;
    p.group = g;
    p.t = 1;
    p.n = {n};
    p.c = {g.element_from_exponents({1})};
    p.cstar = {Character::from_exponents(g, {chi_exponent})};
    return p;
}

std::vector<ParamViolation> validate_params(const HopfParams& p) {
    std::vector<ParamViolation> out;
    auto add = [&](const char* cond, std::string detail) {
        out.push_back({cond, std::move(detail)});
    };
    const Group& G = p.group;
    const size_t t = p.t;
    bool structural_ok = true;
    auto structural = [&](bool ok, std::string detail) {
        if (!ok) {
            add("(structure)", std::move(detail));
            structural_ok = false;
        }
    };
    structural(p.n.size() == t, "n must list one exponent per generator");
    structural(p.c.size() == t, "c must list one group element per generator");
    structural(p.cstar.size() == t, "cstar must list one character per generator");
    structural(p.a.empty() || p.a.size() == t, "a must be empty or of length t");
    if (!p.b.empty()) {
        structural(p.b.size() == t, "b must be empty or a t x t matrix");
        for (const auto& row : p.b)
            structural(row.size() == t, "b must be empty or a t x t matrix");
    }
    if (structural_ok) {
        for (size_t i = 0; i < t; ++i) {
            structural(p.n[i] >= 2, "n_" + std::to_string(i + 1) + " must be at least 2");
            if (!p.b.empty())
                structural(p.b[i][i].is_zero(),
                           "b_" + std::to_string(i + 1) + std::to_string(i + 1) +
                               " must be zero");
            structural(p.c[i] < G.order(), "c_" + std::to_string(i + 1) +
                                               " is not a group element");
            structural(p.cstar[i].group_order() == G.order(),
                       "cstar_" + std::to_string(i + 1) + " lives on the wrong group");
            if (!p.a.empty())
                structural(p.a[i] == 0 || p.a[i] == 1,
                           "a_" + std::to_string(i + 1) + " must be 0 or 1");
        }
    }
    if (!structural_ok) return out;

    auto a_of = [&](size_t i) { return p.a.empty() ? 0 : p.a[i]; };
    auto b_of = [&](size_t i, size_t j) -> Cyclotomic {
        return p.b.empty() ? Cyclotomic(0) : p.b[i][j];
    };

    if (!G.is_abelian() && t > 1)
        add("(scope)", "nonabelian groups are supported with a single generator only");
    for (size_t i = 0; i < t; ++i)
        if (!G.is_central(p.c[i]))
            add("(central)", "c_" + std::to_string(i + 1) + " = " + G.element_name(p.c[i]) +
                                 " is not central");

    for (size_t i = 0; i < t; ++i)
        for (size_t j = i + 1; j < t; ++j) {
            Cyclotomic prod = p.cstar[i].value(p.c[j]) * p.cstar[j].value(p.c[i]);
            if (!prod.is_one())
                add("(v)", "c*_" + std::to_string(i + 1) + "(c_" + std::to_string(j + 1) +
                               ") c*_" + std::to_string(j + 1) + "(c_" + std::to_string(i + 1) +
                               ") = " + prod.str());
        }
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) {
            if (i == j) continue;
            if (!b_of(i, j).is_zero() && !p.cstar[i].times(p.cstar[j]).is_trivial())
                add("(vi)", "b_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                " is nonzero but c*_" + std::to_string(i + 1) + " c*_" +
                                std::to_string(j + 1) + " is not trivial");
            if (G.mul(p.c[i], p.c[j]) == G.identity() && !b_of(i, j).is_zero())
                add("(vii)", "c_" + std::to_string(i + 1) + " c_" + std::to_string(j + 1) +
                                 " = 1 but b_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                 " = " + b_of(i, j).str());
        }
    for (size_t i = 0; i < t; ++i) {
        auto ord = p.cstar[i].value(p.c[i]).primitive_root_order();
        if (!ord || *ord != p.n[i])
            add("(viii)", "c*_" + std::to_string(i + 1) + "(c_" + std::to_string(i + 1) +
                              ") = " + p.cstar[i].value(p.c[i]).str() +
                              " is not a primitive root of order " + std::to_string(p.n[i]));
        if (a_of(i) == 1 && !p.cstar[i].power_char(static_cast<long>(p.n[i])).is_trivial())
            add("(ix)", "a_" + std::to_string(i + 1) + " = 1 but (c*_" + std::to_string(i + 1) +
                            ")^" + std::to_string(p.n[i]) + " is not trivial");
        if (G.power(p.c[i], static_cast<long>(p.n[i])) == G.identity() && a_of(i) == 1)
            add("(x)", "c_" + std::to_string(i + 1) + "^" + std::to_string(p.n[i]) +
                           " = 1 forces a_" + std::to_string(i + 1) + " = 0");
    }
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) {
            Cyclotomic want = -(p.cstar[i].value(p.c[j]) * b_of(j, i));
            if (b_of(i, j) != want)
                add("(xi)", "b_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                                b_of(i, j).str() + " but -c*_" + std::to_string(i + 1) + "(c_" +
                                std::to_string(j + 1) + ") b_" + std::to_string(j + 1) +
                                std::to_string(i + 1) + " = " + want.str());
        }
    return out;
}

// ---------------------------------------------------------------------------
// HopfAlgebra

namespace {

HopfParams checked_params(HopfParams p) {
    auto violations = validate_params(p);
    if (!violations.empty()) {
        std::string msg = "invalid parameters:";
        for (const auto& v : violations) msg += " " + v.condition + " " + v.detail + ";";
        throw std::invalid_argument(msg);
    }
    if (p.a.empty()) p.a.assign(p.t, 0);
    if (p.b.empty()) p.b.assign(p.t, std::vector<Cyclotomic>(p.t));
    return p;
}

constexpr size_t npos_idx = static_cast<size_t>(-1);

}  // namespace

struct HopfAlgebraBuildAccess {
    static std::vector<size_t> strides(const HopfParams& p) {
        std::vector<size_t> s(p.t);
        size_t acc = 1;
        for (size_t i = 0; i < p.t; ++i) {
            s[i] = acc;
            acc *= p.n[i];
        }
        return s;
    }
    static size_t xdim(const HopfParams& p) {
        size_t acc = 1;
        for (size_t i = 0; i < p.t; ++i) acc *= p.n[i];
        return acc;
    }
};

HopfAlgebra::HopfAlgebra(HopfParams params, HopfCorruption corruption)
    : params_(checked_params(std::move(params))),
      corruption_(corruption),
      strides_(HopfAlgebraBuildAccess::strides(params_)),
      xdim_(HopfAlgebraBuildAccess::xdim(params_)),
      alg_(build_algebra()) {
    alg_.verify();
    const size_t d = dim();

    // Coproducts: the image of each basis word under the multiplicative
    // extension of the generator coproducts, multiplied in the word's order.
    std::vector<Tensor> gen_cop(params_.t);
    for (size_t i = 0; i < params_.t; ++i) {
        std::vector<unsigned> e(params_.t, 0);
        e[i] = 1;
        size_t xi = index_of(e, group().identity());
        size_t ci = index_of(std::vector<unsigned>(params_.t, 0), params_.c[i]);
        gen_cop[i][{xi, 0}] = Cyclotomic(1);
        gen_cop[i][{ci, xi}] += Cyclotomic(1);
    }
    coproducts_.resize(d);
    for (size_t idx = 0; idx < d; ++idx) {
        auto [p, g] = decode(idx);
        Tensor tns;
        tns[{0, 0}] = Cyclotomic(1);
        for (size_t i = 0; i < params_.t; ++i)
            for (unsigned k = 0; k < p[i]; ++k) tns = tensor_mult(tns, gen_cop[i]);
        size_t gidx = index_of(std::vector<unsigned>(params_.t, 0), g);
        Tensor gt;
        gt[{gidx, gidx}] = Cyclotomic(1);
        coproducts_[idx] = tensor_mult(tns, gt);
    }

    // Antipodes: S(X^p g) = S(g) S(X_t)^{p_t} ... S(X_1)^{p_1}.
    std::vector<Vec> sx(params_.t);
    for (size_t i = 0; i < params_.t; ++i) {
        Vec v = normal_form({HopfLetter::grp(group().inverse(params_.c[i])), HopfLetter::x(i)});
        Cyclotomic sign = corruption_.flip_antipode_sign ? Cyclotomic(1) : Cyclotomic(-1);
        for (auto& c : v) c *= sign;
        sx[i] = std::move(v);
    }
    antipodes_.resize(d);
    for (size_t idx = 0; idx < d; ++idx) {
        auto [p, g] = decode(idx);
        Vec w = zero_vec(d);
        w[index_of(std::vector<unsigned>(params_.t, 0), group().inverse(g))] = Cyclotomic(1);
        for (size_t i = params_.t; i-- > 0;)
            for (unsigned k = 0; k < p[i]; ++k) w = alg_.multiply(w, sx[i]);
        antipodes_[idx] = std::move(w);
    }
}

size_t HopfAlgebra::index_of(const std::vector<unsigned>& p, size_t g) const {
    if (p.size() != params_.t) throw std::invalid_argument("exponent vector has wrong length");
    if (g >= group().order()) throw std::out_of_range("group element out of range");
    size_t m = 0;
    for (size_t i = 0; i < params_.t; ++i) {
        if (p[i] >= params_.n[i]) throw std::out_of_range("exponent out of range");
        m += p[i] * strides_[i];
    }
    return m * group().order() + g;
}

std::pair<std::vector<unsigned>, size_t> HopfAlgebra::decode(size_t idx) const {
    if (idx >= xdim_ * group().order()) throw std::out_of_range("basis index out of range");
    size_t g = idx % group().order();
    size_t m = idx / group().order();
    std::vector<unsigned> p(params_.t);
    for (size_t i = 0; i < params_.t; ++i) p[i] = static_cast<unsigned>((m / strides_[i]) % params_.n[i]);
    return {std::move(p), g};
}

size_t HopfAlgebra::x_degree(size_t idx) const {
    auto [p, g] = decode(idx);
    size_t s = 0;
    for (unsigned e : p) s += e;
    return s;
}

Vec HopfAlgebra::unit_vec() const { return basis_vec(0); }

Vec HopfAlgebra::basis_vec(size_t idx) const {
    if (idx >= dim()) throw std::out_of_range("basis index out of range");
    Vec v = zero_vec(dim());
    v[idx] = Cyclotomic(1);
    return v;
}

Vec HopfAlgebra::group_vec(size_t g) const {
    return basis_vec(index_of(std::vector<unsigned>(params_.t, 0), g));
}

Vec HopfAlgebra::generator_vec(size_t i) const {
    if (i >= params_.t) throw std::out_of_range("generator index out of range");
    std::vector<unsigned> e(params_.t, 0);
    e[i] = 1;
    return basis_vec(index_of(e, group().identity()));
}

void HopfAlgebra::accum_add(Accum& m, size_t idx, const Cyclotomic& c) const {
    if (c.is_zero()) return;
    auto [it, inserted] = m.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

/// out += scale * X^p X_i, as a combination of basis monomials (group parts
/// arise from power reduction and b-corrections).
void HopfAlgebra::insert_x(const std::vector<unsigned>& p, size_t i, const Cyclotomic& scale,
                           Accum& out) const {
    if (scale.is_zero()) return;
    size_t j = npos_idx;
    for (size_t k = params_.t; k-- > i + 1;)
        if (p[k] > 0) {
            j = k;
            break;
        }
    if (j == npos_idx) {
        std::vector<unsigned> q = p;
        if (q[i] + 1 < params_.n[i]) {
            ++q[i];
            accum_add(out, index_of(q, group().identity()), scale);
        } else {
            q[i] = 0;
            if (params_.a[i] == 1) {
                size_t cn = group().power(params_.c[i], static_cast<long>(params_.n[i]));
                accum_add(out, index_of(q, cn), scale);
                accum_add(out, index_of(q, group().identity()), -scale);
            }
        }
        return;
    }
    std::vector<unsigned> q = p;
    --q[j];
    Cyclotomic swap = params_.cstar[j].value(params_.c[i]);
    if (corruption_.invert_swap_coefficient) swap = swap.inverse();
    Accum inner;
    insert_x(q, i, scale * swap, inner);
    Accum swapped = right_mult_x(inner, j);
    for (const auto& [idx2, c2] : swapped) accum_add(out, idx2, c2);
    const Cyclotomic& bc = params_.b[i][j];
    if (!bc.is_zero()) {
        size_t cc = group().mul(params_.c[i], params_.c[j]);
        accum_add(out, index_of(q, cc), scale * bc);
        accum_add(out, index_of(q, group().identity()), -(scale * bc));
    }
}

HopfAlgebra::Accum HopfAlgebra::right_mult_x(const Accum& e, size_t i) const {
    Accum out;
    for (const auto& [idx, coef] : e) {
        auto [p, g] = decode(idx);
        Cyclotomic twist = corruption_.drop_group_twist
                               ? Cyclotomic(1)
                               : params_.cstar[i].value(g).inverse();
        Accum mono;
        insert_x(p, i, coef * twist, mono);
        for (const auto& [idx2, c2] : mono) {
            auto [p2, g2] = decode(idx2);
            accum_add(out, index_of(p2, group().mul(g2, g)), c2);
        }
    }
    return out;
}

HopfAlgebra::Accum HopfAlgebra::right_mult_group(const Accum& e, size_t g) const {
    Accum out;
    for (const auto& [idx, coef] : e) {
        auto [p, h] = decode(idx);
        accum_add(out, index_of(p, group().mul(h, g)), coef);
    }
    return out;
}

std::string HopfAlgebra::basis_name(size_t idx) const {
    auto [p, g] = decode(idx);
    std::vector<std::string> parts;
    for (size_t i = 0; i < params_.t; ++i) {
        if (p[i] == 0) continue;
        std::string sym = "X" + std::to_string(i + 1);
        parts.push_back(p[i] == 1 ? sym : sym + "^" + std::to_string(p[i]));
    }
    if (parts.empty()) return group().element_name(g);
    std::string out = join_names(parts);
    if (g != group().identity()) out += "*" + group().element_name(g);
    return out;
}

FinDimAlgebra HopfAlgebra::build_algebra() const {
    const size_t N = group().order();
    const size_t d = xdim_ * N;
    std::vector<std::string> names(d);
    for (size_t idx = 0; idx < d; ++idx) names[idx] = basis_name(idx);
    std::vector<std::vector<SVec>> table(d, std::vector<SVec>(d));
    for (size_t u = 0; u < d; ++u) {
        for (size_t v = 0; v < d; ++v) {
            auto [q, h] = decode(v);
            Accum e;
            e[u] = Cyclotomic(1);
            for (size_t i = 0; i < params_.t; ++i)
                for (unsigned k = 0; k < q[i]; ++k) e = right_mult_x(e, i);
            e = right_mult_group(e, h);
            SVec sv;
            for (const auto& [idx, coef] : e) sv.push_back({idx, coef});
            table[u][v] = std::move(sv);
        }
    }
    Vec unit = zero_vec(d);
    unit[0] = Cyclotomic(1);
    return FinDimAlgebra(std::move(names), std::move(table), std::move(unit));
}

Vec HopfAlgebra::normal_form(const std::vector<HopfLetter>& word) const {
    Accum e;
    e[0] = Cyclotomic(1);
    for (const auto& letter : word) {
        if (letter.is_x) {
            if (letter.index >= params_.t)
                throw std::out_of_range("generator index out of range");
            e = right_mult_x(e, letter.index);
        } else {
            if (letter.index >= group().order())
                throw std::out_of_range("group element out of range");
            e = right_mult_group(e, letter.index);
        }
    }
    Vec v = zero_vec(xdim_ * group().order());
    for (const auto& [idx, coef] : e) v[idx] = coef;
    return v;
}

HopfAlgebra::Tensor HopfAlgebra::tensor_mult(const Tensor& a, const Tensor& b) const {
    Tensor out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            const SVec& left = alg_.basis_product(pa.first, pb.first);
            const SVec& right = alg_.basis_product(pa.second, pb.second);
            const Cyclotomic factor = ca * cb;
            for (const auto& tl : left)
                for (const auto& tr : right) {
                    auto key = std::make_pair(tl.idx, tr.idx);
                    auto [it, inserted] = out.emplace(key, factor * tl.coef * tr.coef);
                    if (!inserted) it->second += factor * tl.coef * tr.coef;
                }
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

HopfAlgebra::Tensor HopfAlgebra::coproduct_elem(const Vec& v) const {
    if (v.size() != dim()) throw std::invalid_argument("element has the wrong dimension");
    Tensor out;
    for (size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].is_zero()) continue;
        for (const auto& [key, c] : coproducts_[idx]) {
            auto [it, inserted] = out.emplace(key, v[idx] * c);
            if (!inserted) it->second += v[idx] * c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Cyclotomic HopfAlgebra::counit(const Vec& v) const {
    if (v.size() != dim()) throw std::invalid_argument("element has the wrong dimension");
    Cyclotomic out(0);
    for (size_t idx = 0; idx < v.size(); ++idx)
        if (!v[idx].is_zero() && x_degree(idx) == 0) out += v[idx];
    return out;
}

Vec HopfAlgebra::antipode(const Vec& v) const {
    if (v.size() != dim()) throw std::invalid_argument("element has the wrong dimension");
    Vec out = zero_vec(dim());
    for (size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].is_zero()) continue;
        for (size_t k = 0; k < dim(); ++k) out[k] += v[idx] * antipodes_[idx][k];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hopf axiom verification

namespace {

using Tensor3 = std::map<std::array<size_t, 3>, Cyclotomic>;

void tensor3_add(Tensor3& m, std::array<size_t, 3> key, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

}  // namespace

HopfAxiomReport check_hopf_axioms(const HopfAlgebra& h) {
    HopfAxiomReport rep;
    const FinDimAlgebra& alg = h.algebra();
    const size_t d = h.dim();
    auto name = [&](size_t idx) { return alg.basis_names()[idx]; };

    for (size_t x = 0; x < d; ++x) {
        const auto& dx = h.coproduct(x);
        Tensor3 lhs, rhs;
        for (const auto& [key, c] : dx) {
            for (const auto& [k2, c2] : h.coproduct(key.first))
                tensor3_add(lhs, {k2.first, k2.second, key.second}, c * c2);
            for (const auto& [k2, c2] : h.coproduct(key.second))
                tensor3_add(rhs, {key.first, k2.first, k2.second}, c * c2);
        }
        if (lhs != rhs) {
            rep.coassociative = false;
            rep.failures.push_back("coassociativity fails at " + name(x));
        }
        Vec left = zero_vec(d), right = zero_vec(d);
        for (const auto& [key, c] : dx) {
            if (h.x_degree(key.first) == 0) left[key.second] += c;
            if (h.x_degree(key.second) == 0) right[key.first] += c;
        }
        Vec direct = h.basis_vec(x);
        if (left != direct || right != direct) {
            rep.counit_laws = false;
            rep.failures.push_back("counit law fails at " + name(x));
        }
        Vec sl = zero_vec(d), sr = zero_vec(d);
        for (const auto& [key, c] : dx) {
            Vec wl = alg.multiply(h.antipode_basis(key.first), h.basis_vec(key.second));
            Vec wr = alg.multiply(h.basis_vec(key.first), h.antipode_basis(key.second));
            for (size_t k = 0; k < d; ++k) {
                sl[k] += c * wl[k];
                sr[k] += c * wr[k];
            }
        }
        Vec target = zero_vec(d);
        Cyclotomic eps = h.counit(h.basis_vec(x));
        for (size_t k = 0; k < d; ++k) target[k] = eps * alg.unit()[k];
        if (sl != target || sr != target) {
            rep.antipode_law = false;
            rep.failures.push_back("antipode law fails at " + name(x));
        }
    }

    for (size_t x = 0; x < d && (rep.coproduct_multiplicative || rep.counit_multiplicative);
         ++x) {
        for (size_t y = 0; y < d; ++y) {
            Vec prod = to_dense(alg.basis_product(x, y), d);
            HopfAlgebra::Tensor dprod = h.coproduct_elem(prod);
            HopfAlgebra::Tensor dxy = h.tensor_mult(h.coproduct(x), h.coproduct(y));
            if (dprod != dxy) {
                rep.coproduct_multiplicative = false;
                rep.failures.push_back("coproduct is not multiplicative at (" + name(x) + ", " +
                                       name(y) + ")");
            }
            Cyclotomic el = h.counit(prod);
            Cyclotomic er = h.counit(h.basis_vec(x)) * h.counit(h.basis_vec(y));
            if (el != er) {
                rep.counit_multiplicative = false;
                rep.failures.push_back("counit is not multiplicative at (" + name(x) + ", " +
                                       name(y) + ")");
            }
            if (!rep.coproduct_multiplicative && !rep.counit_multiplicative) break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Smash products

namespace {

Vec mat_column(const Mat& m, size_t j) {
    Vec out(m.size());
    for (size_t r = 0; r < m.size(); ++r) out[r] = m[r][j];
    return out;
}

}  // namespace

FinDimAlgebra smash_product(const FinDimAlgebra& base, const Group& c,
                            const std::vector<Mat>& action) {
    if (!base.has_unit())
        throw std::invalid_argument("smash product needs a unital base algebra");
    const size_t bd = base.dim();
    const size_t N = c.order();
    if (action.size() != N)
        throw std::invalid_argument("need one action matrix per group element");
    for (size_t g = 0; g < N; ++g) {
        if (action[g].size() != bd)
            throw std::invalid_argument("action of " + c.element_name(g) +
                                        " has the wrong row count");
        for (const auto& row : action[g])
            if (row.size() != bd)
                throw std::invalid_argument("action of " + c.element_name(g) +
                                            " has the wrong column count");
    }
    if (action[c.identity()] != identity_mat(bd))
        throw std::invalid_argument("the identity must act as the identity matrix");
    for (size_t g = 0; g < N; ++g)
        for (size_t h = 0; h < N; ++h)
            if (mat_mul(action[g], action[h]) != action[c.mul(g, h)])
                throw std::invalid_argument("action is not a group homomorphism at (" +
                                            c.element_name(g) + ", " + c.element_name(h) + ")");
    for (size_t g = 0; g < N; ++g) {
        if (mat_apply(action[g], base.unit()) != base.unit())
            throw std::invalid_argument("action of " + c.element_name(g) +
                                        " does not fix the unit");
        for (size_t i = 0; i < bd; ++i)
            for (size_t j = 0; j < bd; ++j) {
                Vec lhs = mat_apply(action[g], to_dense(base.basis_product(i, j), bd));
                Vec rhs = base.multiply(mat_column(action[g], i), mat_column(action[g], j));
                if (lhs != rhs)
                    throw std::invalid_argument(
                        "action of " + c.element_name(g) +
                        " is not an algebra map at basis pair (" + base.basis_names()[i] +
                        ", " + base.basis_names()[j] + ")");
            }
    }

    const size_t d = bd * N;
    std::vector<std::string> names(d);
    for (size_t i = 0; i < bd; ++i)
        for (size_t g = 0; g < N; ++g)
            names[i * N + g] = base.basis_names()[i] + "#" + c.element_name(g);
    std::vector<std::vector<SVec>> table(d, std::vector<SVec>(d));
    for (size_t i = 0; i < bd; ++i)
        for (size_t g = 0; g < N; ++g)
            for (size_t j = 0; j < bd; ++j)
                for (size_t h = 0; h < N; ++h) {
                    Vec moved = mat_column(action[g], j);
                    Vec prod = base.basis_times(i, moved);
                    size_t gh = c.mul(g, h);
                    SVec sv;
                    for (size_t k = 0; k < bd; ++k)
                        if (!prod[k].is_zero()) sv.push_back({k * N + gh, prod[k]});
                    table[i * N + g][j * N + h] = std::move(sv);
                }
    Vec unit = zero_vec(d);
    for (size_t k = 0; k < bd; ++k) unit[k * N + c.identity()] = base.unit()[k];
    FinDimAlgebra out(std::move(names), std::move(table), std::move(unit));
    out.verify();
    return out;
}

bool verify_smash_iso(const HopfAlgebra& h) {
    const HopfParams& p = h.params();
    for (size_t i = 0; i < p.t; ++i) {
        if (p.a[i] != 0)
            throw std::invalid_argument("the smash decomposition is stated for a = 0");
        for (size_t j = 0; j < p.t; ++j)
            if (!p.b[i][j].is_zero())
                throw std::invalid_argument("the smash decomposition is stated for b = 0");
    }

    // Independent construction of the skew base: one vertex, t loop arrows,
    // swap and power relations, materialized as a quotient path algebra.
    Quiver q;
    q.add_vertex("v");
    for (size_t i = 0; i < p.t; ++i)
        q.add_arrow("X" + std::to_string(i + 1), "v", "v");
    PathAlgebra pa = PathAlgebra::plain(q);
    RelationSet rho;
    size_t trunc = 1;
    for (size_t i = 0; i < p.t; ++i) trunc += p.n[i] - 1;
    rho.truncation = trunc;
    for (size_t i = 0; i < p.t; ++i) {
        GeneralizedPath pw;
        pw.verts.assign(p.n[i] + 1, 0);
        pw.arrows.assign(p.n[i], i);
        pw.slots.assign(p.n[i] + 1, 0);
        rho.generators.push_back(PathElement::single(pa, pw));
    }
    for (size_t i = 0; i < p.t; ++i)
        for (size_t j = i + 1; j < p.t; ++j) {
            GeneralizedPath ji{{0, 0, 0}, {j, i}, {0, 0, 0}};
            GeneralizedPath ij{{0, 0, 0}, {i, j}, {0, 0, 0}};
            PathElement gen = PathElement::single(pa, ji) +
                              PathElement::single(pa, ij, -p.cstar[j].value(p.c[i]));
            rho.generators.push_back(gen);
        }
    Materialization m = materialize(pa, p.t ? &rho : nullptr);
    const FinDimAlgebra& base = m.algebra;
    size_t xdim = 1;
    for (size_t i = 0; i < p.t; ++i) xdim *= p.n[i];
    if (base.dim() != xdim) return false;

    const Group& C = p.group;
    const size_t N = C.order();
    std::vector<Mat> action(N);
    for (size_t g = 0; g < N; ++g) {
        Mat mat(base.dim(), zero_vec(base.dim()));
        for (size_t k = 0; k < base.dim(); ++k) {
            Cyclotomic scale(1);
            for (size_t arrow : m.basis[k].arrows) scale *= p.cstar[arrow].value(g).inverse();
            mat[k][k] = scale;
        }
        action[g] = std::move(mat);
    }
    FinDimAlgebra smash = smash_product(base, C, action);

    const size_t d = h.dim();
    if (smash.dim() != d) return false;
    std::vector<Vec> phi(d);
    for (size_t k = 0; k < base.dim(); ++k)
        for (size_t g = 0; g < N; ++g) {
            std::vector<HopfLetter> word;
            for (size_t arrow : m.basis[k].arrows) word.push_back(HopfLetter::x(arrow));
            word.push_back(HopfLetter::grp(g));
            phi[k * N + g] = h.normal_form(word);
        }
    Mat rows(d);
    for (size_t s = 0; s < d; ++s) rows[s] = phi[s];
    if (rank(rows) != d) return false;
    for (size_t s1 = 0; s1 < d; ++s1)
        for (size_t s2 = 0; s2 < d; ++s2) {
            Vec mapped = zero_vec(d);
            for (const auto& term : smash.basis_product(s1, s2))
                for (size_t k = 0; k < d; ++k) mapped[k] += term.coef * phi[term.idx][k];
            Vec direct = h.algebra().multiply(phi[s1], phi[s2]);
            if (mapped != direct) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Radical identification

HopfRadicalCheck radical_check(const HopfAlgebra& h, size_t max_oracle_dim) {
    const HopfParams& p = h.params();
    for (size_t i = 0; i < p.t; ++i) {
        if (p.a[i] != 0)
            throw std::invalid_argument("the radical identification is stated for a = 0");
        for (size_t j = 0; j < p.t; ++j)
            if (!p.b[i][j].is_zero())
                throw std::invalid_argument("the radical identification is stated for b = 0");
    }
    HopfRadicalCheck out;
    out.predicted = Subspace(h.dim());
    for (size_t idx = 0; idx < h.dim(); ++idx)
        if (h.x_degree(idx) > 0) out.predicted.add(h.basis_vec(idx));
    if (!is_ideal(h.algebra(), out.predicted))
        throw std::logic_error("predicted radical is not an ideal");
    if (h.dim() <= max_oracle_dim) {
        out.oracle = jacobson_radical(h.algebra());
        out.equal = (*out.oracle == out.predicted);
        out.verified = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Representations

namespace {

Mat mat_pow(const Mat& m, unsigned e) {
    Mat out = identity_mat(m.size());
    for (unsigned k = 0; k < e; ++k) out = mat_mul(out, m);
    return out;
}

Mat mat_scale(const Mat& m, const Cyclotomic& c) {
    Mat out = m;
    for (auto& row : out)
        for (auto& x : row) x *= c;
    return out;
}

bool mat_is_zero(const Mat& m) {
    for (const auto& row : m)
        if (!is_zero_vec(row)) return false;
    return true;
}

std::string mat_str(const Mat& m) {
    std::string out = "[";
    for (size_t r = 0; r < m.size(); ++r) {
        out += r ? "; " : "";
        out += "[";
        for (size_t c = 0; c < m[r].size(); ++c) {
            if (c) out += ", ";
            out += m[r][c].str();
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace

HopfModuleResult representation_to_module(const HopfAlgebra& h,
                                          const HopfRepresentation& rep) {
    const HopfParams& p = h.params();
    if (!p.group.has_factor_form())
        throw std::invalid_argument("representations are given on factor-form groups");
    for (size_t i = 0; i < p.t; ++i) {
        if (p.a[i] != 0)
            throw std::invalid_argument("the representation functor is stated for a = 0");
        for (size_t j = 0; j < p.t; ++j)
            if (!p.b[i][j].is_zero())
                throw std::invalid_argument("the representation functor is stated for b = 0");
    }
    const auto& factors = p.group.factors();
    if (rep.group_gens.size() != factors.size())
        throw std::invalid_argument("need one matrix per cyclic factor generator");
    if (rep.f.size() != p.t)
        throw std::invalid_argument("need one matrix per skew generator");
    size_t vd = 0;
    for (const auto& m : rep.group_gens) vd = std::max(vd, m.size());
    for (const auto& m : rep.f) vd = std::max(vd, m.size());
    if (vd == 0) throw std::invalid_argument("representation space must be nonzero");
    auto check_shape = [&](const Mat& m, const std::string& what) {
        if (m.size() != vd)
            throw std::invalid_argument(what + " is not square of the common size");
        for (const auto& row : m)
            if (row.size() != vd)
                throw std::invalid_argument(what + " is not square of the common size");
    };
    for (size_t k = 0; k < rep.group_gens.size(); ++k)
        check_shape(rep.group_gens[k], "group generator matrix " + std::to_string(k + 1));
    for (size_t i = 0; i < rep.f.size(); ++i)
        check_shape(rep.f[i], "generator matrix f_" + std::to_string(i + 1));

    HopfModuleResult out;
    auto violate = [&](std::string msg) { out.violations.push_back(std::move(msg)); };

    for (size_t k = 0; k < factors.size(); ++k) {
        Mat pw = mat_pow(rep.group_gens[k], factors[k]);
        if (pw != identity_mat(vd))
            violate("group generator " + std::to_string(k + 1) + " does not have order dividing " +
                    std::to_string(factors[k]) + ": M^" + std::to_string(factors[k]) + " = " +
                    mat_str(pw));
    }
    for (size_t k = 0; k < factors.size(); ++k)
        for (size_t l = k + 1; l < factors.size(); ++l)
            if (mat_mul(rep.group_gens[k], rep.group_gens[l]) !=
                mat_mul(rep.group_gens[l], rep.group_gens[k]))
                violate("group generators " + std::to_string(k + 1) + " and " +
                        std::to_string(l + 1) + " do not commute");

    for (size_t i = 0; i < p.t; ++i) {
        Mat pw = mat_pow(rep.f[i], p.n[i]);
        if (!mat_is_zero(pw))
            violate("f_" + std::to_string(i + 1) + "^" + std::to_string(p.n[i]) +
                    " != 0: " + mat_str(pw));
    }
    for (size_t i = 0; i < p.t; ++i)
        for (size_t j = i + 1; j < p.t; ++j) {
            Mat lhs = mat_mul(rep.f[j], rep.f[i]);
            Mat rhs = mat_scale(mat_mul(rep.f[i], rep.f[j]), p.cstar[j].value(p.c[i]));
            if (lhs != rhs)
                violate("f_" + std::to_string(j + 1) + " f_" + std::to_string(i + 1) +
                        " != c*_" + std::to_string(j + 1) + "(c_" + std::to_string(i + 1) +
                        ") f_" + std::to_string(i + 1) + " f_" + std::to_string(j + 1) + ": " +
                        mat_str(lhs) + " vs " + mat_str(rhs));
        }
    for (size_t i = 0; i < p.t; ++i)
        for (size_t k = 0; k < factors.size(); ++k) {
            std::vector<long> e(factors.size(), 0);
            e[k] = 1;
            size_t gk = p.group.element_from_exponents(e);
            Mat lhs = mat_mul(rep.f[i], rep.group_gens[k]);
            Mat rhs = mat_scale(mat_mul(rep.group_gens[k], rep.f[i]),
                                p.cstar[i].value(gk));
            if (lhs != rhs)
                violate("x g = c*(g) g x fails for generator " + std::to_string(i + 1) +
                        " on factor " + std::to_string(k + 1) + ": f*rho = " + mat_str(lhs) +
                        " but c*(g)*rho*f = " + mat_str(rhs));
        }
    if (!out.violations.empty()) return out;

    std::vector<Mat> rho(p.group.order());
    for (size_t g = 0; g < p.group.order(); ++g) {
        auto exps = p.group.exponents_of(g);
        Mat m = identity_mat(vd);
        for (size_t k = 0; k < factors.size(); ++k)
            m = mat_mul(m, mat_pow(rep.group_gens[k], exps[k]));
        rho[g] = std::move(m);
    }
    out.action.resize(h.dim());
    for (size_t idx = 0; idx < h.dim(); ++idx) {
        auto [pe, g] = h.decode(idx);
        Mat m = identity_mat(vd);
        for (size_t i = 0; i < p.t; ++i) m = mat_mul(m, mat_pow(rep.f[i], pe[i]));
        out.action[idx] = mat_mul(m, rho[g]);
    }
    for (size_t x = 0; x < h.dim(); ++x)
        for (size_t y = 0; y < h.dim(); ++y) {
            Mat lhs = mat_mul(out.action[x], out.action[y]);
            Mat rhs(vd, zero_vec(vd));
            for (const auto& term : h.algebra().basis_product(x, y))
                for (size_t r = 0; r < vd; ++r)
                    for (size_t c2 = 0; c2 < vd; ++c2)
                        rhs[r][c2] += term.coef * out.action[term.idx][r][c2];
            if (lhs != rhs) {
                violate("module axiom fails at (" + h.algebra().basis_names()[x] + ", " +
                        h.algebra().basis_names()[y] + ")");
                out.action.clear();
                return out;
            }
        }
    out.valid = true;
    return out;
}

// ---------------------------------------------------------------------------
// Classification families

namespace {

bool is_prime_number(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

HopfAlgebra classify_instance(HopfFamily family, unsigned p, const ClassifyOptions& opt) {
    if (!is_prime_number(p)) throw std::invalid_argument("p must be prime");
    switch (family) {
        case HopfFamily::group_algebra: {
            if (!opt.group) throw std::invalid_argument("the group algebra family needs a group");
            HopfParams params;
            params.group = *opt.group;
            params.t = 0;
            return HopfAlgebra(std::move(params));
        }
        case HopfFamily::abelian_basic: {
            if (opt.t == 1) return HopfAlgebra(taft_params(p));
            if (opt.t != 2)
                throw std::invalid_argument("the cyclic family is built with t = 1 or t = 2");
            if (opt.i < 1 || opt.i >= p)
                throw std::invalid_argument("the exponent i must satisfy 1 <= i <= p - 1");
            Group g = Group::cyclic(p);
            HopfParams params;
            params.group = g;
            params.t = 2;
            params.n = {p, p};
            params.c = {g.element_from_exponents({1}),
                        g.element_from_exponents({static_cast<long>(opt.i)})};
            params.cstar = {Character::from_exponents(g, {1}),
                            Character::from_exponents(g, {-static_cast<long>(opt.i)})};
            return HopfAlgebra(std::move(params));
        }
        case HopfFamily::abelian_ab: {
            if (opt.use_a) {
                Group g = Group::cyclic(p * p);
                HopfParams params;
                params.group = g;
                params.t = 1;
                params.n = {p};
                params.c = {g.element_from_exponents({1})};
                params.cstar = {Character::from_exponents(g, {static_cast<long>(p)})};
                params.a = {1};
                return HopfAlgebra(std::move(params));
            }
            if (p == 2)
                throw std::invalid_argument(
                    "at p = 2 the product c_1 c_2 = g^2 = 1 forces b_12 = 0; "
                    "the b-variant exists for odd p only");
            Group g = Group::cyclic(p);
            HopfParams params;
            params.group = g;
            params.t = 2;
            params.n = {p, p};
            params.c = {g.element_from_exponents({1}), g.element_from_exponents({1})};
            params.cstar = {Character::from_exponents(g, {1}),
                            Character::from_exponents(g, {-1})};
            params.b.assign(2, std::vector<Cyclotomic>(2));
            params.b[0][1] = Cyclotomic(1);
            params.b[1][0] = -params.cstar[1].value(params.c[0]);
            return HopfAlgebra(std::move(params));
        }
        case HopfFamily::nonabelian_basic:
        case HopfFamily::nonabelian_a: {
            if (!opt.group || !opt.central || !opt.chi)
                throw std::invalid_argument(
                    "the central-generator families need a group, a central element and a "
                    "character");
            if (opt.group->is_abelian())
                throw std::invalid_argument(
                    "the central-generator families are the nonabelian arm; use the cyclic "
                    "families for abelian groups");
            HopfParams params;
            params.group = *opt.group;
            params.t = 1;
            params.n = {p};
            params.c = {*opt.central};
            params.cstar = {*opt.chi};
            params.a = {family == HopfFamily::nonabelian_a ? 1 : 0};
            return HopfAlgebra(std::move(params));
        }
    }
    throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------------------
// Degree-capped truncation of the infinite skew algebra

size_t TruncatedSkew::x_degree(size_t idx) const {
    const auto& e = exponents[idx / group_order];
    size_t s = 0;
    for (unsigned v : e) s += v;
    return s;
}

TruncatedSkew truncated_skew_algebra(const HopfParams& params, size_t cap) {
    auto violations = validate_params(params);
    if (!violations.empty()) {
        std::string msg = "invalid parameters:";
        for (const auto& v : violations) msg += " " + v.condition + " " + v.detail + ";";
        throw std::invalid_argument(msg);
    }
    for (size_t i = 0; i < params.t && !params.a.empty(); ++i)
        if (params.a[i] != 0)
            throw std::invalid_argument("the truncation covers a = 0 only");
    if (!params.b.empty())
        for (const auto& row : params.b)
            for (const auto& v : row)
                if (!v.is_zero())
                    throw std::invalid_argument("the truncation covers b = 0 only");

    const size_t t = params.t;
    const Group& C = params.group;
    const size_t N = C.order();

    // Monomials of total degree <= cap, graded-lexicographic.
    std::vector<std::vector<unsigned>> monos;
    std::vector<unsigned> cur(t, 0);
    for (size_t deg = 0; deg <= cap; ++deg) {
        std::function<void(size_t, size_t)> gen = [&](size_t pos, size_t left) {
            if (pos == t) {
                if (left == 0) monos.push_back(cur);
                return;
            }
            if (pos + 1 == t) {
                cur[pos] = static_cast<unsigned>(left);
                monos.push_back(cur);
                cur[pos] = 0;
                return;
            }
            for (size_t take = 0; take <= left; ++take) {
                cur[pos] = static_cast<unsigned>(take);
                gen(pos + 1, left - take);
            }
            cur[pos] = 0;
        };
        if (t == 0) {
            if (deg == 0) monos.push_back({});
        } else {
            gen(0, deg);
        }
    }
    std::map<std::vector<unsigned>, size_t> mono_index;
    for (size_t k = 0; k < monos.size(); ++k) mono_index[monos[k]] = k;

    const size_t d = monos.size() * N;
    std::vector<std::string> names(d);
    for (size_t k = 0; k < monos.size(); ++k)
        for (size_t g = 0; g < N; ++g) {
            std::vector<std::string> parts;
            for (size_t i = 0; i < t; ++i) {
                if (monos[k][i] == 0) continue;
                std::string sym = "X" + std::to_string(i + 1);
                parts.push_back(monos[k][i] == 1 ? sym
                                                 : sym + "^" + std::to_string(monos[k][i]));
            }
            std::string nm;
            if (parts.empty())
                nm = C.element_name(g);
            else {
                nm = join_names(parts);
                if (g != C.identity()) nm += "*" + C.element_name(g);
            }
            names[k * N + g] = nm;
        }

    std::vector<std::vector<SVec>> table(d, std::vector<SVec>(d));
    for (size_t k1 = 0; k1 < monos.size(); ++k1)
        for (size_t g = 0; g < N; ++g)
            for (size_t k2 = 0; k2 < monos.size(); ++k2)
                for (size_t h = 0; h < N; ++h) {
                    const auto& pm = monos[k1];
                    const auto& qm = monos[k2];
                    size_t total = 0;
                    std::vector<unsigned> sum(t);
                    for (size_t i = 0; i < t; ++i) {
                        sum[i] = pm[i] + qm[i];
                        total += sum[i];
                    }
                    if (total > cap) continue;
                    Cyclotomic coef(1);
                    for (size_t i = 0; i < t; ++i)
                        if (qm[i])
                            coef *= params.cstar[i].value(g).pow(-static_cast<long>(qm[i]));
                    for (size_t i = 0; i < t; ++i)
                        for (size_t j = i + 1; j < t; ++j)
                            if (pm[j] && qm[i])
                                coef *= params.cstar[j]
                                            .value(params.c[i])
                                            .pow(static_cast<long>(pm[j]) *
                                                 static_cast<long>(qm[i]));
                    size_t target = mono_index.at(sum) * N + C.mul(g, h);
                    table[k1 * N + g][k2 * N + h] = {{target, coef}};
                }
    Vec unit = zero_vec(d);
    unit[C.identity()] = Cyclotomic(1);
    TruncatedSkew out{FinDimAlgebra(std::move(names), std::move(table), std::move(unit)), cap,
                      N, t, std::move(monos)};
    out.algebra.verify();
    return out;
}

// ---------------------------------------------------------------------------
// Nilpotency evidence

namespace {

/// The degree-0 corner of the truncation is kC; extract it and certify it
/// is semiprime (zero trace-form radical).
void certify_group_corner(const TruncatedSkew& ts) {
    const size_t N = ts.group_order;
    std::vector<std::string> names(ts.algebra.basis_names().begin(),
                                   ts.algebra.basis_names().begin() + N);
    std::vector<std::vector<SVec>> table(N, std::vector<SVec>(N));
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) {
            for (const auto& term : ts.algebra.basis_product(a, b)) {
                if (term.idx >= N)
                    throw std::logic_error("degree-0 corner is not closed under products");
                table[a][b].push_back(term);
            }
        }
    Vec unit(ts.algebra.unit().begin(), ts.algebra.unit().begin() + N);
    FinDimAlgebra corner(std::move(names), std::move(table), std::move(unit));
    corner.verify();
    if (jacobson_radical(corner).dim() != 0)
        throw std::logic_error("group-algebra corner has a nonzero radical");
}

}  // namespace

SampleVerdict classify_ideal_sample(const TruncatedSkew& ts, const Vec& sample) {
    const FinDimAlgebra& alg = ts.algebra;
    if (sample.size() != alg.dim())
        throw std::invalid_argument("sample has the wrong dimension");
    if (is_zero_vec(sample)) throw std::invalid_argument("sample must be nonzero");
    const size_t N = ts.group_order;
    bool group_part = false;
    for (size_t k = 0; k < N; ++k)
        if (!sample[k].is_zero()) group_part = true;
    if (group_part) {
        certify_group_corner(ts);
        return SampleVerdict::group_part_certified;
    }

    Subspace ideal = ideal_closure(alg, {sample});
    size_t min_deg = ts.cap + 1;
    for (const auto& row : ideal.basis())
        for (size_t k = 0; k < row.size(); ++k)
            if (!row[k].is_zero()) min_deg = std::min(min_deg, ts.x_degree(k));
    if (min_deg == 0)
        throw std::logic_error("ideal of a degree-positive element gained a degree-0 part");

    Subspace power = ideal;
    for (size_t m = 2; m <= ts.cap + 2; ++m) {
        Subspace next(alg.dim());
        for (const auto& u : power.basis())
            for (const auto& w : ideal.basis()) next.add(alg.multiply(u, w));
        if (next.dim() == 0)
            return (m * min_deg <= ts.cap) ? SampleVerdict::premature_nilpotent
                                           : SampleVerdict::truncation_limited;
        if (m * min_deg > ts.cap) return SampleVerdict::truncation_limited;
        if (next == power) return SampleVerdict::truncation_limited;
        power = std::move(next);
    }
    return SampleVerdict::truncation_limited;
}

NilpotencyEvidence ideal_nilpotency_evidence(const TruncatedSkew& ts, size_t samples,
                                             uint64_t seed) {
    NilpotencyEvidence out;
    out.samples = samples;
    out.seed = seed;
    certify_group_corner(ts);
    out.notes.push_back(
        "degree-0 corner is the group algebra and has zero radical; a sample with a nonzero "
        "degree-0 part projects onto a nonzero ideal there, which no power can kill");
    std::mt19937_64 rng(seed);
    const size_t d = ts.algebra.dim();
    for (size_t s = 0; s < samples; ++s) {
        Vec v = zero_vec(d);
        bool nonzero = false;
        while (!nonzero) {
            for (size_t k = 0; k < d; ++k) {
                long c = static_cast<long>(rng() % 7) - 3;
                v[k] = Cyclotomic(c);
                if (c != 0) nonzero = true;
            }
        }
        switch (classify_ideal_sample(ts, v)) {
            case SampleVerdict::group_part_certified:
                ++out.group_part_certified;
                break;
            case SampleVerdict::truncation_limited:
                ++out.truncation_limited;
                break;
            case SampleVerdict::premature_nilpotent:
                ++out.premature_nilpotent;
                out.notes.push_back("sample " + std::to_string(s) +
                                    " generated a prematurely nilpotent ideal: " +
                                    ts.algebra.element_str(v));
                break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Instance files

namespace {

struct HopfLineParser {
    size_t lineno = 0;
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    }
};

std::vector<long> parse_int_list(const HopfLineParser& lp, std::string_view text) {
    std::vector<long> out;
    for (const auto& piece : split_on(text, ',')) {
        if (piece.empty()) lp.fail("empty entry in integer list");
        try {
            size_t used = 0;
            long v = std::stol(piece, &used);
            if (used != piece.size()) lp.fail("bad integer: " + piece);
            out.push_back(v);
        } catch (const std::invalid_argument&) {
            lp.fail("bad integer: " + piece);
        } catch (const std::out_of_range&) {
            lp.fail("integer out of range: " + piece);
        }
    }
    return out;
}

}  // namespace

HopfSpecFile parse_hopf_file(std::string_view text, const HopfFileLoader& loader) {
    HopfLineParser lp;
    HopfSpecFile out;
    out.name = "hopf";
    std::optional<Group> group;
    std::optional<size_t> t;
    std::vector<unsigned> n;
    std::vector<std::optional<size_t>> c;
    std::vector<std::optional<Character>> cstar;
    std::vector<int> a;
    std::vector<std::vector<Cyclotomic>> b;
    bool saw_name = false, saw_n = false, saw_a = false;

    auto need_group = [&]() -> const Group& {
        if (!group) lp.fail("group (or cayley) line must come first");
        return *group;
    };
    auto need_t = [&]() -> size_t {
        if (!t) lp.fail("t line must come before this directive");
        return *t;
    };
    auto gen_index = [&](const std::string& tok) -> size_t {
        long v = -1;
        try {
            size_t used = 0;
            v = std::stol(tok, &used);
            if (used != tok.size()) v = -1;
        } catch (const std::exception&) {
            v = -1;
        }
        if (v < 0) lp.fail("bad generator index: " + tok);
        if (v < 1 || static_cast<size_t>(v) > need_t())
            lp.fail("generator index out of range: " + tok);
        return static_cast<size_t>(v - 1);
    };

    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++lp.lineno;
        std::string line = hopf_trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (auto h = line.find('#'); h != std::string::npos) line = hopf_trim(line.substr(0, h));
        if (line.empty()) continue;

        std::string head = line.substr(0, line.find_first_of(" \t"));
        std::string rest = hopf_trim(line.substr(head.size()));

        if (head == "hopf") {
            if (saw_name) lp.fail("hopf line appears twice");
            if (rest.empty()) lp.fail("usage: hopf <name>");
            out.name = rest;
            saw_name = true;
        } else if (head == "group") {
            if (group) lp.fail("group line appears twice");
            if (rest.empty()) lp.fail("usage: group Z<m>[xZ<m>...]");
            try {
                group = parse_group_token(rest);
            } catch (const std::invalid_argument& e) {
                lp.fail(e.what());
            }
        } else if (head == "cayley") {
            if (group) lp.fail("group line appears twice");
            if (rest.empty()) lp.fail("usage: cayley <ref>");
            if (!loader) lp.fail("cayley reference needs a file loader");
            try {
                group = parse_cayley_file(loader(rest));
            } catch (const std::exception& e) {
                lp.fail("cayley " + rest + ": " + e.what());
            }
        } else if (head == "t") {
            if (t) lp.fail("t line appears twice");
            auto vals = parse_int_list(lp, rest);
            if (vals.size() != 1 || vals[0] < 0) lp.fail("usage: t <count>");
            t = static_cast<size_t>(vals[0]);
            c.assign(*t, std::nullopt);
            cstar.assign(*t, std::nullopt);
            b.assign(*t, std::vector<Cyclotomic>(*t));
        } else if (head == "n") {
            if (saw_n) lp.fail("n line appears twice");
            saw_n = true;
            auto toks = hopf_split_ws(rest);
            if (toks.size() != need_t()) lp.fail("n must list exactly t exponents");
            for (const auto& tok : toks) {
                auto vals = parse_int_list(lp, tok);
                if (vals.size() != 1 || vals[0] < 1) lp.fail("bad truncation exponent: " + tok);
                n.push_back(static_cast<unsigned>(vals[0]));
            }
        } else if (head == "c") {
            auto colon = rest.find(':');
            if (colon == std::string::npos) lp.fail("usage: c <i> : <exponents|element>");
            auto toks = hopf_split_ws(rest.substr(0, colon));
            if (toks.size() != 1) lp.fail("usage: c <i> : <exponents|element>");
            size_t i = gen_index(toks[0]);
            if (c[i]) lp.fail("c " + toks[0] + " assigned twice");
            std::string val = hopf_trim(rest.substr(colon + 1));
            if (val.empty()) lp.fail("missing group element");
            const Group& G = need_group();
            bool numeric = val.find_first_not_of("0123456789,- ") == std::string::npos;
            if (numeric && G.has_factor_form()) {
                auto exps = parse_int_list(lp, val);
                try {
                    c[i] = G.element_from_exponents(exps);
                } catch (const std::invalid_argument& e) {
                    lp.fail(e.what());
                }
            } else {
                auto found = G.element_by_name(val);
                if (!found) lp.fail("unknown group element: " + val);
                c[i] = *found;
            }
        } else if (head == "cstar") {
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                lp.fail("usage: cstar <i> [values] : <exponents|scalars>");
            auto toks = hopf_split_ws(rest.substr(0, colon));
            bool values_mode = toks.size() == 2 && toks[1] == "values";
            if (toks.empty() || toks.size() > 2 || (toks.size() == 2 && !values_mode))
                lp.fail("usage: cstar <i> [values] : <exponents|scalars>");
            size_t i = gen_index(toks[0]);
            if (cstar[i]) lp.fail("cstar " + toks[0] + " assigned twice");
            std::string val = hopf_trim(rest.substr(colon + 1));
            const Group& G = need_group();
            if (values_mode) {
                std::vector<Cyclotomic> vals;
                for (const auto& piece : split_on(val, ',')) {
                    try {
                        vals.push_back(parse_scalar(piece));
                    } catch (const std::invalid_argument& e) {
                        lp.fail(e.what());
                    }
                }
                try {
                    cstar[i] = Character::from_values(G, std::move(vals));
                } catch (const std::invalid_argument& e) {
                    lp.fail(e.what());
                }
            } else {
                if (!G.has_factor_form())
                    lp.fail("exponent characters need an abelian group token; "
                            "use `cstar <i> values : ...`");
                auto exps = parse_int_list(lp, val);
                try {
                    cstar[i] = Character::from_exponents(G, exps);
                } catch (const std::invalid_argument& e) {
                    lp.fail(e.what());
                }
            }
        } else if (head == "a") {
            if (saw_a) lp.fail("a line appears twice");
            saw_a = true;
            auto toks = hopf_split_ws(rest);
            if (toks.size() != need_t()) lp.fail("a must list exactly t entries");
            for (const auto& tok : toks) {
                auto vals = parse_int_list(lp, tok);
                if (vals.size() != 1 || (vals[0] != 0 && vals[0] != 1))
                    lp.fail("a entries must be 0 or 1");
                a.push_back(static_cast<int>(vals[0]));
            }
        } else if (head == "b") {
            auto colon = rest.find(':');
            if (colon == std::string::npos) lp.fail("usage: b <i> <j> : <scalar>");
            auto toks = hopf_split_ws(rest.substr(0, colon));
            if (toks.size() != 2) lp.fail("usage: b <i> <j> : <scalar>");
            size_t i = gen_index(toks[0]), j = gen_index(toks[1]);
            if (!b[i][j].is_zero()) lp.fail("b " + toks[0] + " " + toks[1] + " assigned twice");
            try {
                b[i][j] = parse_scalar(hopf_trim(rest.substr(colon + 1)));
            } catch (const std::invalid_argument& e) {
                lp.fail(e.what());
            }
        } else {
            lp.fail("unknown directive: " + head);
        }
    }

    lp.lineno = 0;
    if (!group) throw std::invalid_argument("missing group (or cayley) line");
    if (!t) throw std::invalid_argument("missing t line");
    if (*t > 0 && !saw_n) throw std::invalid_argument("missing n line");
    for (size_t i = 0; i < *t; ++i) {
        if (!c[i]) throw std::invalid_argument("missing c " + std::to_string(i + 1) + " line");
        if (!cstar[i])
            throw std::invalid_argument("missing cstar " + std::to_string(i + 1) + " line");
    }
    out.params.group = *group;
    out.params.t = *t;
    out.params.n = std::move(n);
    for (size_t i = 0; i < *t; ++i) {
        out.params.c.push_back(*c[i]);
        out.params.cstar.push_back(*cstar[i]);
    }
    out.params.a = std::move(a);
    out.params.b = std::move(b);
    return out;
}

}  // namespace gpa
