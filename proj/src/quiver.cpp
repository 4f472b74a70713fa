#include "gpa/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gpa {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Quiver Quiver::parse(std::string_view text) {
    Quiver q;
    size_t line_no = 0;
    size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("quiver file, line " + std::to_string(line_no) + ": " + what);
    };
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "vertex") {
            if (tok.size() != 2) fail("expected `vertex <name>`");
            if (q.has_vertex(tok[1])) fail("duplicate vertex `" + tok[1] + "`");
            q.add_vertex(tok[1]);
        } else if (tok[0] == "arrow") {
            if (tok.size() != 4) fail("expected `arrow <name> <src> <dst>`");
            if (!q.has_vertex(tok[2])) fail("unknown source vertex `" + tok[2] + "`");
            if (!q.has_vertex(tok[3])) fail("unknown target vertex `" + tok[3] + "`");
            if (q.arrow_index_.count(tok[1])) fail("duplicate arrow `" + tok[1] + "`");
            q.add_arrow(tok[1], tok[2], tok[3]);
        } else {
            fail("unknown directive `" + tok[0] + "`");
        }
    }
    return q;
}

bool Quiver::has_vertex(std::string_view name) const { return index_.count(name) > 0; }

size_t Quiver::vertex_index(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw std::invalid_argument("unknown vertex `" + std::string(name) + "`");
    return it->second;
}

size_t Quiver::ensure_vertex(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    add_vertex(name);
    return names_.size() - 1;
}

void Quiver::add_vertex(const std::string& name) {
    if (index_.count(name)) throw std::invalid_argument("duplicate vertex `" + name + "`");
    index_.emplace(name, names_.size());
    names_.push_back(name);
}

void Quiver::add_arrow(const std::string& name, std::string_view src, std::string_view dst) {
    if (arrow_index_.count(name)) throw std::invalid_argument("duplicate arrow `" + name + "`");
    Arrow a{name, vertex_index(src), vertex_index(dst)};
    arrow_index_.emplace(name, arrows_.size());
    arrows_.push_back(std::move(a));
}

std::string Quiver::to_file() const {
    std::string out;
    for (const auto& n : names_) out += "vertex " + n + "\n";
    for (const auto& a : arrows_)
        out += "arrow " + a.name + " " + names_[a.src] + " " + names_[a.dst] + "\n";
    return out;
}

std::vector<std::pair<size_t, size_t>> Connectivity::regular_pairs() const {
    std::vector<std::pair<size_t, size_t>> out;
    size_t n = reach1.size();
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t)
            if (reach1[s][t] && !reach1[t][s]) out.emplace_back(s, t);
    return out;
}

namespace {

// Iterative Tarjan; returns vertex -> raw component id.
std::vector<size_t> tarjan(size_t n, const std::vector<std::vector<size_t>>& adj,
                           size_t* count_out) {
    std::vector<size_t> comp(n, SIZE_MAX), low(n), disc(n, SIZE_MAX), stack;
    std::vector<bool> on_stack(n, false);
    size_t timer = 0, comps = 0;
    struct Frame {
        size_t v;
        size_t edge;
    };
    for (size_t root = 0; root < n; ++root) {
        if (disc[root] != SIZE_MAX) continue;
        std::vector<Frame> frames{{root, 0}};
        while (!frames.empty()) {
            auto& [v, edge] = frames.back();
            if (edge == 0) {
                disc[v] = low[v] = timer++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (edge < adj[v].size()) {
                size_t w = adj[v][edge++];
                if (disc[w] == SIZE_MAX) {
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                if (low[v] == disc[v]) {
                    while (true) {
                        size_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comps;
                        if (w == v) break;
                    }
                    ++comps;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    size_t parent = frames.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
    *count_out = comps;
    return comp;
}

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

// group vertices by key, classes ordered by least member, each class sorted
std::vector<std::vector<size_t>> classes_by_key(const std::vector<size_t>& key) {
    std::map<size_t, std::vector<size_t>> buckets;
    for (size_t v = 0; v < key.size(); ++v) buckets[key[v]].push_back(v);
    std::vector<std::vector<size_t>> out;
    out.reserve(buckets.size());
    for (auto& [k, members] : buckets) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

Connectivity analyze(const Quiver& q, size_t unilateral_cap) {
    Connectivity c;
    size_t n = q.vertex_count();
    std::vector<std::vector<size_t>> adj(n);
    std::vector<bool> touched(n, false);
    for (const Arrow& a : q.arrows()) {
        adj[a.src].push_back(a.dst);
        touched[a.src] = touched[a.dst] = true;
        if (a.src == a.dst) c.has_cycle = true;
    }
    for (size_t v = 0; v < n; ++v)
        if (!touched[v]) c.isolated.push_back(v);

    // positive-length reachability, one BFS per source
    c.reach1.assign(n, std::vector<bool>(n, false));
    for (size_t s = 0; s < n; ++s) {
        std::deque<size_t> queue;
        for (size_t w : adj[s])
            if (!c.reach1[s][w]) {
                c.reach1[s][w] = true;
                queue.push_back(w);
            }
        while (!queue.empty()) {
            size_t v = queue.front();
            queue.pop_front();
            for (size_t w : adj[v])
                if (!c.reach1[s][w]) {
                    c.reach1[s][w] = true;
                    queue.push_back(w);
                }
        }
    }

    // strong classes, renumbered so class ids follow each class's least vertex
    size_t raw_count = 0;
    std::vector<size_t> raw = tarjan(n, adj, &raw_count);
    c.strong = classes_by_key(raw);
    c.strong_class.assign(n, 0);
    for (size_t id = 0; id < c.strong.size(); ++id) {
        if (c.strong[id].size() >= 2) c.has_cycle = true;
        for (size_t v : c.strong[id]) c.strong_class[v] = id;
    }

    UnionFind uf(n);
    for (const Arrow& a : q.arrows()) uf.unite(a.src, a.dst);
    std::vector<size_t> weak_key(n);
    for (size_t v = 0; v < n; ++v) weak_key[v] = uf.find(v);
    c.weak = classes_by_key(weak_key);

    // Unilateral sets: in the condensation poset (class A <= B iff B is
    // reachable from A), a vertex set is unilaterally connected exactly when
    // its classes form a chain, so the maximal sets are the unions of
    // classes along maximal chains. Maximal chains run from a minimal
    // element to a maximal one along cover edges.
    size_t k = c.strong.size();
    std::vector<std::vector<bool>> creach(k, std::vector<bool>(k, false));
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v)
            if (c.reach1[u][v]) creach[c.strong_class[u]][c.strong_class[v]] = true;
    for (size_t i = 0; i < k; ++i) creach[i][i] = false;  // strict order

    std::vector<std::vector<size_t>> covers(k);
    std::vector<bool> is_min(k, true);
    for (size_t ai = 0; ai < k; ++ai)
        for (size_t b = 0; b < k; ++b) {
            if (!creach[ai][b]) continue;
            is_min[b] = false;
            bool cover = true;
            for (size_t mid = 0; mid < k && cover; ++mid)
                if (creach[ai][mid] && creach[mid][b]) cover = false;
            if (cover) covers[ai].push_back(b);
        }

    std::vector<size_t> chain;
    bool capped = false;
    std::function<void(size_t)> walk = [&](size_t cls) {
        if (capped) return;
        chain.push_back(cls);
        if (covers[cls].empty()) {
            if (c.unilateral.size() >= unilateral_cap) {
                capped = true;
            } else {
                std::vector<size_t> verts;
                for (size_t cc : chain)
                    verts.insert(verts.end(), c.strong[cc].begin(), c.strong[cc].end());
                std::sort(verts.begin(), verts.end());
                c.unilateral.push_back(std::move(verts));
            }
        } else {
            for (size_t nxt : covers[cls]) walk(nxt);
        }
        chain.pop_back();
    };
    for (size_t cls = 0; cls < k; ++cls)
        if (is_min[cls]) walk(cls);
    c.unilateral_truncated = capped;
    std::sort(c.unilateral.begin(), c.unilateral.end());

    return c;
}

}  // namespace gpa
