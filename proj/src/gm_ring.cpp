#include "gpa/gm_ring.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpa {

namespace {

std::string triple_str(const GammaSystem& s, size_t i, size_t j, size_t l) {
    return "(" + s.indices()[i] + "," + s.indices()[j] + "," + s.indices()[l] + ")";
}

}  // namespace

GammaSystem::GammaSystem(std::vector<std::string> index_names)
    : indices_(std::move(index_names)) {
    if (indices_.empty()) throw std::invalid_argument("index set must be non-empty");
    std::set<std::string> seen;
    for (const auto& n : indices_) {
        if (n.empty()) throw std::invalid_argument("empty index name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate index name: " + n);
    }
    basis_.assign(indices_.size(),
                  std::vector<std::vector<std::string>>(indices_.size()));
}

size_t GammaSystem::block_offset(size_t i, size_t j) const {
    size_t off = 0;
    for (size_t a = 0; a < indices_.size(); ++a)
        for (size_t b = 0; b < indices_.size(); ++b) {
            if (a == i && b == j) return off;
            off += basis_[a][b].size();
        }
    throw std::out_of_range("block index out of range");
}

size_t GammaSystem::total_dim() const {
    size_t n = 0;
    for (const auto& row : basis_)
        for (const auto& names : row) n += names.size();
    return n;
}

void GammaSystem::set_block(size_t i, size_t j, std::vector<std::string> names) {
    if (i >= indices_.size() || j >= indices_.size())
        throw std::out_of_range("block index out of range");
    if (!basis_[i][j].empty())
        throw std::invalid_argument("block (" + indices_[i] + "," + indices_[j] +
                                    ") declared twice");
    std::set<std::string> all;
    for (const auto& row : basis_)
        for (const auto& b : row) all.insert(b.begin(), b.end());
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("empty basis name");
        if (!all.insert(n).second)
            throw std::invalid_argument("basis name used twice: " + n);
    }
    basis_[i][j] = std::move(names);
}

void GammaSystem::set_mu(size_t i, size_t j, size_t l,
                         std::vector<std::vector<SVec>> table) {
    if (i >= indices_.size() || j >= indices_.size() || l >= indices_.size())
        throw std::out_of_range("mu index out of range");
    const size_t rows = block_dim(i, j), cols = block_dim(j, l), out = block_dim(i, l);
    if (table.size() != rows)
        throw std::invalid_argument("mu table for " + triple_str(*this, i, j, l) +
                                    " has wrong row count");
    for (const auto& row : table) {
        if (row.size() != cols)
            throw std::invalid_argument("mu table for " + triple_str(*this, i, j, l) +
                                        " has wrong column count");
        for (const auto& sv : row) {
            size_t prev = 0;
            bool first = true;
            for (const auto& t : sv) {
                if (t.idx >= out)
                    throw std::invalid_argument("mu value for " +
                                                triple_str(*this, i, j, l) +
                                                " leaves the target block");
                if (!first && t.idx <= prev)
                    throw std::invalid_argument("mu entry indices must increase");
                if (t.coef.is_zero())
                    throw std::invalid_argument("mu entry stores an explicit zero");
                prev = t.idx;
                first = false;
            }
        }
    }
    mu_[{i, j, l}] = std::move(table);
}

SVec GammaSystem::mu_product(size_t i, size_t j, size_t l, size_t a, size_t b) const {
    auto it = mu_.find({i, j, l});
    if (it == mu_.end()) return {};
    return it->second[a][b];
}

Vec GammaSystem::mu_apply(size_t i, size_t j, size_t l, const Vec& x,
                          const Vec& y) const {
    if (x.size() != block_dim(i, j) || y.size() != block_dim(j, l))
        throw std::invalid_argument("mu_apply operand has wrong dimension");
    Vec out = zero_vec(block_dim(i, l));
    auto it = mu_.find({i, j, l});
    if (it == mu_.end()) return out;
    for (size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        for (size_t b = 0; b < y.size(); ++b) {
            if (y[b].is_zero()) continue;
            const Cyclotomic c = x[a] * y[b];
            for (const auto& t : it->second[a][b]) out[t.idx] += c * t.coef;
        }
    }
    return out;
}

void GammaSystem::verify() const {
    const size_t n = indices_.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l)
                for (size_t m = 0; m < n; ++m) {
                    const size_t da = block_dim(i, j), db = block_dim(j, l),
                                 dc = block_dim(l, m);
                    if (da == 0 || db == 0 || dc == 0) continue;
                    for (size_t a = 0; a < da; ++a)
                        for (size_t b = 0; b < db; ++b)
                            for (size_t c = 0; c < dc; ++c) {
                                Vec ab = to_dense(mu_product(i, j, l, a, b),
                                                  block_dim(i, l));
                                Vec ec = zero_vec(dc);
                                ec[c] = Cyclotomic(1);
                                Vec left = mu_apply(i, l, m, ab, ec);
                                Vec bc = to_dense(mu_product(j, l, m, b, c),
                                                  block_dim(j, m));
                                Vec ea = zero_vec(da);
                                ea[a] = Cyclotomic(1);
                                Vec right = mu_apply(i, j, m, ea, bc);
                                if (left != right)
                                    throw std::invalid_argument(
                                        "mixed associativity fails on (" +
                                        basis_[i][j][a] + ", " + basis_[j][l][b] +
                                        ", " + basis_[l][m][c] + ") over indices " +
                                        triple_str(*this, i, j, l) + "->" +
                                        indices_[m]);
                            }
                }
}

// ---------------------------------------------------------------------------
// File format

namespace {

struct LineParser {
    std::string_view text;
    size_t lineno = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    }
};

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

/// `2*x + y - 1/2*z`, names resolved against `names`; "0" allowed.
SVec parse_combo(const LineParser& lp, std::string_view text,
                 const std::vector<std::string>& names) {
    Vec dense = zero_vec(names.size());
    size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size()) break;
        Cyclotomic sign(1);
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = Cyclotomic(-1);
            ++pos;
        } else if (any) {
            lp.fail("expected + or - between terms");
        }
        // take characters up to the next top-level + or -
        size_t depth = 0, start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) lp.fail("unbalanced ')'");
                --depth;
            }
            if (depth == 0 && (c == '+' || c == '-')) break;
            ++pos;
        }
        if (depth != 0) lp.fail("unbalanced '('");
        std::string term = trim(text.substr(start, pos - start));
        if (term.empty()) lp.fail("empty term");
        any = true;
        if (term == "0") continue;
        // split at the last top-level '*'
        size_t split = std::string::npos, d2 = 0;
        for (size_t k = 0; k < term.size(); ++k) {
            if (term[k] == '(') ++d2;
            if (term[k] == ')') --d2;
            if (d2 == 0 && term[k] == '*') split = k;
        }
        Cyclotomic coef = sign;
        std::string name = term;
        if (split != std::string::npos) {
            coef = coef * parse_scalar(term.substr(0, split));
            name = trim(term.substr(split + 1));
        }
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) lp.fail("unknown basis name in value: " + name);
        dense[static_cast<size_t>(it - names.begin())] += coef;
    }
    if (!any) lp.fail("empty linear combination");
    return to_sparse(dense);
}

}  // namespace

GammaSystem GammaSystem::parse(std::string_view text) {
    LineParser lp{text, 0};
    std::optional<GammaSystem> sys;
    std::string name = "gamma";
    // Accumulate mu assignments; tables are dense per (i,j,l).
    std::map<std::array<size_t, 3>, std::vector<std::vector<SVec>>> tables;

    size_t pos = 0;
    auto index_of = [&](const std::string& n) -> size_t {
        const auto& idx = sys->indices();
        auto it = std::find(idx.begin(), idx.end(), n);
        if (it == idx.end()) lp.fail("unknown index: " + n);
        return static_cast<size_t>(it - idx.begin());
    };
    auto basis_pos = [&](size_t i, size_t j, const std::string& n) -> size_t {
        const auto& names = sys->block_basis(i, j);
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end())
            lp.fail("basis name " + n + " is not in block (" + sys->indices()[i] +
                    "," + sys->indices()[j] + ")");
        return static_cast<size_t>(it - names.begin());
    };

    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++lp.lineno;
        std::string line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty() || line[0] == '#') {
            if (pos > text.size()) break;
            continue;
        }
        auto toks = split_ws(line);
        const std::string& head = toks[0];
        if (head == "gmring") {
            if (toks.size() != 2) lp.fail("usage: gmring <name>");
            name = toks[1];
        } else if (head == "index") {
            if (sys) lp.fail("index line appears twice");
            if (toks.size() < 2) lp.fail("usage: index <names...>");
            sys.emplace(std::vector<std::string>(toks.begin() + 1, toks.end()));
        } else if (head == "block") {
            if (!sys) lp.fail("block before index line");
            if (toks.size() < 5 || toks[3].rfind("dim=", 0) != 0 ||
                toks[4].rfind("basis=", 0) != 0)
                lp.fail("usage: block i j dim=<d> basis=<comma names>");
            size_t i = index_of(toks[1]), j = index_of(toks[2]);
            size_t d = 0;
            try {
                d = std::stoul(toks[3].substr(4));
            } catch (const std::exception&) {
                lp.fail("bad dim value: " + toks[3].substr(4));
            }
            // names are comma separated and may not contain whitespace
            std::string blob = toks[4].substr(6);
            for (size_t k = 5; k < toks.size(); ++k) blob += toks[k];
            std::vector<std::string> names;
            size_t p = 0;
            while (p <= blob.size() && !blob.empty()) {
                size_t c = blob.find(',', p);
                if (c == std::string::npos) c = blob.size();
                std::string nm = trim(blob.substr(p, c - p));
                if (nm.empty()) lp.fail("empty basis name in block line");
                names.push_back(nm);
                p = c + 1;
                if (p > blob.size()) break;
            }
            if (names.size() != d)
                lp.fail("dim=" + std::to_string(d) + " but " +
                        std::to_string(names.size()) + " basis names given");
            try {
                sys->set_block(i, j, std::move(names));
            } catch (const std::invalid_argument& e) {
                lp.fail(e.what());
            }
        } else if (head == "mu") {
            if (!sys) lp.fail("mu before index line");
            // mu i j l : bi bj -> combo
            size_t colon = line.find(':');
            size_t arrow = line.find("->");
            if (colon == std::string::npos || arrow == std::string::npos ||
                arrow < colon)
                lp.fail("usage: mu i j l : <bi> <bj> -> <lin combo>");
            auto idx_toks = split_ws(line.substr(2, colon - 2));
            if (idx_toks.size() != 3) lp.fail("mu needs exactly three indices");
            size_t i = index_of(idx_toks[0]), j = index_of(idx_toks[1]),
                   l = index_of(idx_toks[2]);
            auto operand_toks = split_ws(line.substr(colon + 1, arrow - colon - 1));
            if (operand_toks.size() != 2) lp.fail("mu needs exactly two operands");
            size_t a = basis_pos(i, j, operand_toks[0]);
            size_t b = basis_pos(j, l, operand_toks[1]);
            SVec val =
                parse_combo(lp, line.substr(arrow + 2), sys->block_basis(i, l));
            auto& table = tables[{i, j, l}];
            if (table.empty())
                table.assign(sys->block_dim(i, j),
                             std::vector<SVec>(sys->block_dim(j, l)));
            if (!table[a][b].empty())
                lp.fail("mu entry (" + operand_toks[0] + ", " + operand_toks[1] +
                        ") assigned twice");
            table[a][b] = std::move(val);
        } else {
            lp.fail("unknown directive: " + head);
        }
        if (pos > text.size()) break;
    }
    if (!sys) throw std::invalid_argument("no index line in system file");
    sys->set_name(name);
    for (auto& [key, table] : tables) sys->set_mu(key[0], key[1], key[2], std::move(table));
    sys->verify();
    return std::move(*sys);
}

// ---------------------------------------------------------------------------
// Builders

GammaSystem GammaSystem::matrix_pattern(const std::vector<size_t>& sizes) {
    std::vector<std::string> idx;
    for (size_t i = 0; i < sizes.size(); ++i) idx.push_back(std::to_string(i + 1));
    GammaSystem s(idx);
    s.set_name("matrix_pattern");
    auto cell = [&](size_t i, size_t j, size_t r, size_t c) {
        return "m" + std::to_string(i + 1) + std::to_string(j + 1) + "_" +
               std::to_string(r + 1) + std::to_string(c + 1);
    };
    const size_t n = sizes.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<std::string> names;
            for (size_t r = 0; r < sizes[i]; ++r)
                for (size_t c = 0; c < sizes[j]; ++c) names.push_back(cell(i, j, r, c));
            s.set_block(i, j, std::move(names));
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l) {
                std::vector<std::vector<SVec>> table(
                    sizes[i] * sizes[j], std::vector<SVec>(sizes[j] * sizes[l]));
                for (size_t r = 0; r < sizes[i]; ++r)
                    for (size_t c = 0; c < sizes[j]; ++c)
                        for (size_t r2 = 0; r2 < sizes[j]; ++r2)
                            for (size_t c2 = 0; c2 < sizes[l]; ++c2)
                                if (c == r2)
                                    table[r * sizes[j] + c][r2 * sizes[l] + c2] = {
                                        {r * sizes[l] + c2, Cyclotomic(1)}};
                s.set_mu(i, j, l, std::move(table));
            }
    return s;
}

GammaSystem GammaSystem::upper_triangular_pattern(const std::vector<size_t>& sizes) {
    std::vector<std::string> idx;
    for (size_t i = 0; i < sizes.size(); ++i) idx.push_back(std::to_string(i + 1));
    GammaSystem s(idx);
    s.set_name("upper_triangular");
    const size_t n = sizes.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            std::vector<std::string> names;
            for (size_t r = 0; r < sizes[i]; ++r)
                for (size_t c = 0; c < sizes[j]; ++c)
                    names.push_back("t" + std::to_string(i + 1) + std::to_string(j + 1) +
                                    "_" + std::to_string(r + 1) + std::to_string(c + 1));
            s.set_block(i, j, std::move(names));
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t l = j; l < n; ++l) {
                std::vector<std::vector<SVec>> table(
                    sizes[i] * sizes[j], std::vector<SVec>(sizes[j] * sizes[l]));
                for (size_t r = 0; r < sizes[i]; ++r)
                    for (size_t c = 0; c < sizes[j]; ++c)
                        for (size_t r2 = 0; r2 < sizes[j]; ++r2)
                            for (size_t c2 = 0; c2 < sizes[l]; ++c2)
                                if (c == r2)
                                    table[r * sizes[j] + c][r2 * sizes[l] + c2] = {
                                        {r * sizes[l] + c2, Cyclotomic(1)}};
                s.set_mu(i, j, l, std::move(table));
            }
    return s;
}

GammaSystem GammaSystem::matrix_over(const FinDimAlgebra& r, size_t n) {
    if (n == 0) throw std::invalid_argument("matrix size must be positive");
    std::vector<std::string> idx;
    for (size_t i = 0; i < n; ++i) idx.push_back(std::to_string(i + 1));
    GammaSystem s(idx);
    s.set_name("matrix_over");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<std::string> names;
            for (const auto& b : r.basis_names())
                names.push_back("r" + std::to_string(i + 1) + std::to_string(j + 1) +
                                "_" + b);
            s.set_block(i, j, std::move(names));
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l) {
                std::vector<std::vector<SVec>> table(r.dim(),
                                                     std::vector<SVec>(r.dim()));
                for (size_t a = 0; a < r.dim(); ++a)
                    for (size_t b = 0; b < r.dim(); ++b)
                        table[a][b] = r.basis_product(a, b);
                s.set_mu(i, j, l, std::move(table));
            }
    return s;
}

GammaSystem GammaSystem::diagonal(const std::vector<FinDimAlgebra>& rings) {
    std::vector<std::string> idx;
    for (size_t i = 0; i < rings.size(); ++i) idx.push_back(std::to_string(i + 1));
    GammaSystem s(idx);
    s.set_name("diagonal");
    for (size_t i = 0; i < rings.size(); ++i) {
        std::vector<std::string> names;
        for (const auto& b : rings[i].basis_names())
            names.push_back("d" + std::to_string(i + 1) + "_" + b);
        s.set_block(i, i, std::move(names));
    }
    for (size_t i = 0; i < rings.size(); ++i) {
        std::vector<std::vector<SVec>> table(rings[i].dim(),
                                             std::vector<SVec>(rings[i].dim()));
        for (size_t a = 0; a < rings[i].dim(); ++a)
            for (size_t b = 0; b < rings[i].dim(); ++b)
                table[a][b] = rings[i].basis_product(a, b);
        s.set_mu(i, i, i, std::move(table));
    }
    return s;
}

GammaSystem GammaSystem::from_materialization(const PathAlgebra& a,
                                              const Materialization& m) {
    GammaSystem s(a.quiver().vertex_names());
    s.set_name("path_blocks");
    const size_t nv = a.quiver().vertex_count();
    const size_t dim = m.algebra.dim();
    // global basis index -> (block, position); blocks keep global order
    std::vector<std::vector<std::vector<size_t>>> members(
        nv, std::vector<std::vector<size_t>>(nv));
    for (size_t k = 0; k < dim; ++k)
        members[m.basis[k].source()][m.basis[k].target()].push_back(k);
    std::vector<std::pair<size_t, size_t>> where(dim);  // block pair
    std::vector<size_t> pos_in_block(dim);
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = 0; j < nv; ++j) {
            std::vector<std::string> names;
            for (size_t p = 0; p < members[i][j].size(); ++p) {
                size_t g = members[i][j][p];
                names.push_back(m.algebra.basis_names()[g]);
                where[g] = {i, j};
                pos_in_block[g] = p;
            }
            s.set_block(i, j, std::move(names));
        }
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = 0; j < nv; ++j)
            for (size_t l = 0; l < nv; ++l) {
                if (members[i][j].empty() || members[j][l].empty()) continue;
                std::vector<std::vector<SVec>> table(
                    members[i][j].size(), std::vector<SVec>(members[j][l].size()));
                bool nonzero = false;
                for (size_t p = 0; p < members[i][j].size(); ++p)
                    for (size_t q = 0; q < members[j][l].size(); ++q) {
                        const SVec& prod = m.algebra.basis_product(members[i][j][p],
                                                                   members[j][l][q]);
                        SVec remapped;
                        for (const auto& t : prod) {
                            if (where[t.idx] != std::make_pair(i, l))
                                throw std::invalid_argument(
                                    "products are not graded by (source, target): " +
                                    m.algebra.basis_names()[members[i][j][p]] + " * " +
                                    m.algebra.basis_names()[members[j][l][q]]);
                            remapped.push_back({pos_in_block[t.idx], t.coef});
                        }
                        if (!remapped.empty()) nonzero = true;
                        table[p][q] = std::move(remapped);
                    }
                if (nonzero) s.set_mu(i, j, l, std::move(table));
            }
    return s;
}

// ---------------------------------------------------------------------------
// Assembly

FinDimAlgebra assemble(const GammaSystem& s) {
    s.verify();
    const size_t n = s.index_count();
    std::vector<std::string> names;
    // global index -> (i, j, position)
    std::vector<std::array<size_t, 3>> where;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t p = 0; p < s.block_dim(i, j); ++p) {
                names.push_back(s.block_basis(i, j)[p]);
                where.push_back({i, j, p});
            }
    const size_t dim = names.size();
    std::vector<std::vector<SVec>> table(dim, std::vector<SVec>(dim));
    for (size_t g1 = 0; g1 < dim; ++g1)
        for (size_t g2 = 0; g2 < dim; ++g2) {
            auto [i, j, a] = where[g1];
            auto [j2, l, b] = where[g2];
            if (j != j2) continue;
            const size_t off = s.block_offset(i, l);
            SVec out;
            for (const auto& t : s.mu_product(i, j, l, a, b))
                out.push_back({off + t.idx, t.coef});
            table[g1][g2] = std::move(out);
        }
    std::optional<Vec> unit;
    if (auto e = find_gm_unit(s)) {
        Vec u = zero_vec(dim);
        for (size_t i = 0; i < n; ++i) {
            const size_t off = s.block_offset(i, i);
            for (size_t p = 0; p < s.block_dim(i, i); ++p) u[off + p] = (*e)[i][p];
        }
        unit = std::move(u);
    }
    FinDimAlgebra alg(std::move(names), std::move(table), std::move(unit));
    alg.verify();
    return alg;
}

std::optional<std::vector<Vec>> find_gm_unit(const GammaSystem& s) {
    const size_t n = s.index_count();
    std::vector<Vec> out(n);
    for (size_t i = 0; i < n; ++i) {
        const size_t d = s.block_dim(i, i);
        if (d == 0) {
            bool touched = false;
            for (size_t j = 0; j < n && !touched; ++j)
                touched = s.block_dim(i, j) > 0 || s.block_dim(j, i) > 0;
            if (touched) return std::nullopt;  // e_ii must act on a nonzero block
            out[i] = Vec{};
            continue;
        }
        Mat lhs;
        Vec rhs;
        for (size_t j = 0; j < n; ++j) {
            // e_i * x = x for x over the basis of A_ij
            const size_t dj = s.block_dim(i, j);
            for (size_t b = 0; b < dj; ++b) {
                Mat contrib(d, zero_vec(dj));
                for (size_t a = 0; a < d; ++a)
                    for (const auto& t : s.mu_product(i, i, j, a, b))
                        contrib[a][t.idx] = t.coef;
                for (size_t comp = 0; comp < dj; ++comp) {
                    Vec row(d);
                    for (size_t a = 0; a < d; ++a) row[a] = contrib[a][comp];
                    lhs.push_back(std::move(row));
                    rhs.push_back(Cyclotomic(comp == b ? 1 : 0));
                }
            }
            // y * e_i = y for y over the basis of A_ji
            const size_t dji = s.block_dim(j, i);
            for (size_t b = 0; b < dji; ++b) {
                Mat contrib(d, zero_vec(dji));
                for (size_t a = 0; a < d; ++a)
                    for (const auto& t : s.mu_product(j, i, i, b, a))
                        contrib[a][t.idx] = t.coef;
                for (size_t comp = 0; comp < dji; ++comp) {
                    Vec row(d);
                    for (size_t a = 0; a < d; ++a) row[a] = contrib[a][comp];
                    lhs.push_back(std::move(row));
                    rhs.push_back(Cyclotomic(comp == b ? 1 : 0));
                }
            }
        }
        auto sol = solve(lhs, rhs);
        if (!sol) return std::nullopt;
        out[i] = std::move(*sol);
    }
    return out;
}

// ---------------------------------------------------------------------------
// gm non-zero divisors

bool GmDivisorReport::all_found() const {
    for (const auto& row : verdicts)
        for (const auto& v : row)
            if (v.status != GmDivisorStatus::found) return false;
    return true;
}

std::optional<std::pair<size_t, size_t>> GmDivisorReport::first_failure() const {
    for (size_t i = 0; i < verdicts.size(); ++i)
        for (size_t j = 0; j < verdicts[i].size(); ++j)
            if (verdicts[i][j].status != GmDivisorStatus::found) return {{i, j}};
    return std::nullopt;
}

namespace {

/// Exact certificate: d != 0, x -> x*d injective on every A_is, and
/// y -> d*y injective on every A_tj.
bool divisor_certificate(const GammaSystem& sys, size_t s, size_t t, const Vec& d) {
    if (is_zero_vec(d)) return false;
    const size_t n = sys.index_count();
    for (size_t i = 0; i < n; ++i) {
        const size_t di = sys.block_dim(i, s);
        if (di == 0) continue;
        Mat images;
        for (size_t a = 0; a < di; ++a) {
            Vec ea = zero_vec(di);
            ea[a] = Cyclotomic(1);
            images.push_back(sys.mu_apply(i, s, t, ea, d));
        }
        if (rank(images) != di) return false;
    }
    for (size_t j = 0; j < n; ++j) {
        const size_t dj = sys.block_dim(t, j);
        if (dj == 0) continue;
        Mat images;
        for (size_t b = 0; b < dj; ++b) {
            Vec eb = zero_vec(dj);
            eb[b] = Cyclotomic(1);
            images.push_back(sys.mu_apply(s, t, j, d, eb));
        }
        if (rank(images) != dj) return false;
    }
    return true;
}

}  // namespace

GmDivisorReport gm_nonzero_divisor(const GammaSystem& sys, GmSide side, size_t budget,
                                   uint64_t seed) {
    const size_t n = sys.index_count();
    GmDivisorReport report;
    report.side = side;
    report.verdicts.assign(n, std::vector<GmDivisorVerdict>(n));
    auto gm_unit = find_gm_unit(sys);
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t) {
            GmDivisorVerdict& v = report.verdicts[s][t];
            const size_t dst = sys.block_dim(s, t);
            if (dst == 0) {
                v.status = GmDivisorStatus::none_possible;
                v.note = "A_" + sys.indices()[s] + sys.indices()[t] +
                         " = 0 has no nonzero element";
                continue;
            }
            bool blocked = false;
            for (size_t i = 0; i < n && !blocked; ++i)
                if (sys.block_dim(i, s) > sys.block_dim(i, t)) {
                    v.status = GmDivisorStatus::none_possible;
                    v.note = "dim A_" + sys.indices()[i] + sys.indices()[s] + " > dim A_" +
                             sys.indices()[i] + sys.indices()[t] +
                             ": right multiplication cannot be injective";
                    blocked = true;
                }
            for (size_t j = 0; j < n && !blocked; ++j)
                if (sys.block_dim(t, j) > sys.block_dim(s, j)) {
                    v.status = GmDivisorStatus::none_possible;
                    v.note = "dim A_" + sys.indices()[t] + sys.indices()[j] + " > dim A_" +
                             sys.indices()[s] + sys.indices()[j] +
                             ": left multiplication cannot be injective";
                    blocked = true;
                }
            if (blocked) continue;

            std::vector<Vec> candidates;
            if (s == t && gm_unit && !is_zero_vec((*gm_unit)[s]))
                candidates.push_back((*gm_unit)[s]);
            for (size_t a = 0; a < dst; ++a) {
                Vec ea = zero_vec(dst);
                ea[a] = Cyclotomic(1);
                candidates.push_back(std::move(ea));
            }
            Vec all = zero_vec(dst), weighted = zero_vec(dst);
            for (size_t a = 0; a < dst; ++a) {
                all[a] = Cyclotomic(1);
                weighted[a] = Cyclotomic(static_cast<long>(a + 1));
            }
            candidates.push_back(std::move(all));
            candidates.push_back(std::move(weighted));

            std::mt19937_64 gen(seed ^ (s * 1315423911ULL + t * 2654435761ULL));
            size_t tried = 0;
            bool done = false;
            for (const auto& c : candidates) {
                if (tried >= budget) break;
                ++tried;
                if (divisor_certificate(sys, s, t, c)) {
                    v.status = GmDivisorStatus::found;
                    v.divisor = c;
                    v.note = "certified: multiplication maps have full rank";
                    done = true;
                    break;
                }
            }
            while (!done && tried < budget) {
                ++tried;
                Vec c(dst);
                for (size_t a = 0; a < dst; ++a)
                    c[a] = Cyclotomic(static_cast<long>(gen() % 7) - 3);
                if (divisor_certificate(sys, s, t, c)) {
                    v.status = GmDivisorStatus::found;
                    v.divisor = std::move(c);
                    v.note = "certified: multiplication maps have full rank";
                    done = true;
                }
            }
            if (!done && v.status == GmDivisorStatus::unknown)
                v.note = "no certified divisor among " + std::to_string(tried) +
                         " candidates";
        }
    return report;
}

// ---------------------------------------------------------------------------
// gm ideals and the radical formulas

size_t GmIdeal::total_dim() const {
    size_t d = 0;
    for (const auto& row : blocks)
        for (const auto& b : row) d += b.dim();
    return d;
}

Subspace GmIdeal::assembled(const GammaSystem& s) const {
    Subspace out(s.total_dim());
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = 0; j < blocks[i].size(); ++j) {
            const size_t off = s.block_offset(i, j);
            for (const auto& row : blocks[i][j].basis()) {
                Vec v = zero_vec(s.total_dim());
                for (size_t p = 0; p < row.size(); ++p) v[off + p] = row[p];
                out.add(std::move(v));
            }
        }
    return out;
}

bool is_gm_ideal(const GammaSystem& s, const GmIdeal& b) {
    const size_t n = s.index_count();
    if (b.blocks.size() != n) throw std::invalid_argument("block grid has wrong shape");
    for (size_t i = 0; i < n; ++i) {
        if (b.blocks[i].size() != n)
            throw std::invalid_argument("block grid has wrong shape");
        for (size_t j = 0; j < n; ++j)
            if (b.blocks[i][j].ambient_dim() != s.block_dim(i, j))
                throw std::invalid_argument("block subspace has wrong ambient dimension");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l) {
                // A_ij * B_jl inside B_il
                for (size_t a = 0; a < s.block_dim(i, j); ++a) {
                    Vec ea = zero_vec(s.block_dim(i, j));
                    ea[a] = Cyclotomic(1);
                    for (const auto& y : b.blocks[j][l].basis())
                        if (!b.blocks[i][l].contains(s.mu_apply(i, j, l, ea, y)))
                            return false;
                }
                // B_ij * A_jl inside B_il
                for (const auto& x : b.blocks[i][j].basis())
                    for (size_t c = 0; c < s.block_dim(j, l); ++c) {
                        Vec ec = zero_vec(s.block_dim(j, l));
                        ec[c] = Cyclotomic(1);
                        if (!b.blocks[i][l].contains(s.mu_apply(i, j, l, x, ec)))
                            return false;
                    }
            }
    return true;
}

namespace {

/// The {bi, bj} (or {bi}) subsystem with blocks and products copied over.
GammaSystem corner_system(const GammaSystem& s, size_t bi, size_t bj) {
    std::vector<size_t> keep;
    keep.push_back(std::min(bi, bj));
    if (bi != bj) keep.push_back(std::max(bi, bj));
    std::vector<std::string> names;
    for (size_t k : keep) names.push_back(s.indices()[k]);
    GammaSystem corner(names);
    corner.set_name(s.name() + "_corner");
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b)
            corner.set_block(a, b, s.block_basis(keep[a], keep[b]));
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b)
            for (size_t c = 0; c < keep.size(); ++c) {
                if (corner.block_dim(a, b) == 0 || corner.block_dim(b, c) == 0)
                    continue;
                std::vector<std::vector<SVec>> table(
                    corner.block_dim(a, b), std::vector<SVec>(corner.block_dim(b, c)));
                bool nonzero = false;
                for (size_t x = 0; x < table.size(); ++x)
                    for (size_t y = 0; y < table[x].size(); ++y) {
                        table[x][y] = s.mu_product(keep[a], keep[b], keep[c], x, y);
                        if (!table[x][y].empty()) nonzero = true;
                    }
                if (nonzero) corner.set_mu(a, b, c, std::move(table));
            }
    return corner;
}

Subspace window_slice(const Subspace& big, size_t off, size_t dim) {
    // intersect with the coordinate window, then restrict to it
    Subspace window(big.ambient_dim());
    for (size_t p = 0; p < dim; ++p) {
        Vec v = zero_vec(big.ambient_dim());
        v[off + p] = Cyclotomic(1);
        window.add(std::move(v));
    }
    Subspace inter = subspace_intersect(big, window);
    Subspace out(dim);
    for (const auto& row : inter.basis())
        out.add(Vec(row.begin() + static_cast<long>(off),
                    row.begin() + static_cast<long>(off + dim)));
    return out;
}

}  // namespace

Subspace gm_block_radical(const GammaSystem& s, size_t bi, size_t bj, RadicalKind kind) {
    if (bi >= s.index_count() || bj >= s.index_count())
        throw std::out_of_range("block index out of range");
    if (kind == RadicalKind::nil)
        throw std::invalid_argument("nil radical is not computed for block systems");
    const size_t dim = s.block_dim(bi, bj);
    if (dim == 0) return Subspace(0);
    GammaSystem corner = corner_system(s, bi, bj);
    FinDimAlgebra alg = assemble(corner);
    Subspace rad;
    if (kind == RadicalKind::vn)
        rad = alg.has_unit() ? vn_radical(alg) : vn_radical_of_nonunital(alg);
    else
        rad = alg.has_unit() ? jacobson_radical(alg) : radical_of_nonunital(alg);
    // locate the (bi, bj) window inside the corner
    const size_t ci = (bi <= bj) ? 0 : 1;
    const size_t cj = (bi <= bj) ? (bi == bj ? 0 : 1) : 0;
    return window_slice(rad, corner.block_offset(ci, cj), dim);
}

GmIdeal gm_radical_formula(const GammaSystem& s, RadicalKind kind,
                           size_t divisor_budget, uint64_t divisor_seed) {
    if (kind == RadicalKind::nil)
        throw std::invalid_argument("nil radical is not computed for block systems");
    const size_t n = s.index_count();
    if (kind == RadicalKind::vn) {
        for (GmSide side : {GmSide::left, GmSide::right}) {
            GmDivisorReport rep = gm_nonzero_divisor(s, side, divisor_budget, divisor_seed);
            if (!rep.all_found()) {
                auto [fs, ft] = *rep.first_failure();
                const GmDivisorVerdict& v = rep.verdicts[fs][ft];
                std::string status =
                    v.status == GmDivisorStatus::none_possible ? "impossible" : "not found";
                throw std::invalid_argument(
                    "von Neumann block formula needs gm non-zero divisors, but the (" +
                    s.indices()[fs] + "," + s.indices()[ft] + ") divisor is " + status +
                    " (" + v.note + "); without one the blockwise sum can differ from "
                    "the true regular radical");
            }
        }
    }
    GmIdeal out;
    out.blocks.assign(n, {});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out.blocks[i].push_back(gm_block_radical(s, i, j, kind));
    if (!is_gm_ideal(s, out))
        throw std::logic_error("blockwise radical is not closed under multiplication");
    FinDimAlgebra alg = assemble(s);
    Subspace sp = out.assembled(s);
    if (!is_ideal(alg, sp))
        throw std::logic_error("blockwise radical is not an ideal of the assembled algebra");
    if (kind == RadicalKind::vn) {
        // every element of a regular ideal has a von Neumann inverse
        std::mt19937_64 gen(divisor_seed + 17);
        std::vector<Vec> samples(sp.basis().begin(), sp.basis().end());
        for (size_t k = 0; k < 8 && sp.dim() > 0; ++k) {
            Vec v = zero_vec(alg.dim());
            for (const auto& row : sp.basis()) {
                Cyclotomic c(static_cast<long>(gen() % 7) - 3);
                for (size_t p = 0; p < v.size(); ++p) v[p] += c * row[p];
            }
            samples.push_back(std::move(v));
        }
        for (const auto& v : samples)
            if (!vn_regular_element(alg, v))
                throw std::logic_error(
                    "blockwise regular radical contains a non-regular element");
    }
    return out;
}

Subspace project(const GammaSystem& s, const Subspace& b, size_t bi, size_t bj) {
    if (bi >= s.index_count() || bj >= s.index_count())
        throw std::out_of_range("block index out of range");
    if (b.ambient_dim() != s.total_dim())
        throw std::invalid_argument("subspace does not live in the assembled algebra");
    const size_t off = s.block_offset(bi, bj);
    const size_t dim = s.block_dim(bi, bj);
    Subspace out(dim);
    for (const auto& row : b.basis())
        out.add(Vec(row.begin() + static_cast<long>(off),
                    row.begin() + static_cast<long>(off + dim)));
    return out;
}

}  // namespace gpa
