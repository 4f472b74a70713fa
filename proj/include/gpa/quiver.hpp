#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpa {

struct Arrow {
    std::string name;
    size_t src;
    size_t dst;
};

/// Finite directed multigraph with named vertices and named arrows. Loops
/// and parallel arrows are allowed. Vertex order is fixed at insertion and
/// drives every deterministic output downstream.
class Quiver {
public:
    /// Line-oriented format: `vertex <name>`, `arrow <name> <src> <dst>`,
    /// `#` starts a comment, blank lines ignored. Throws
    /// std::invalid_argument carrying the 1-based line number.
    static Quiver parse(std::string_view text);

    size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(std::string_view name) const;
    size_t vertex_index(std::string_view name) const;  // throws on unknown name
    size_t ensure_vertex(const std::string& name);     // adds when missing

    void add_vertex(const std::string& name);  // throws on duplicate
    void add_arrow(const std::string& name, std::string_view src, std::string_view dst);

    /// Serialization in the parse() format; parse(to_file()) round-trips.
    std::string to_file() const;

private:
    std::vector<std::string> names_;
    std::map<std::string, size_t, std::less<>> index_;
    std::vector<Arrow> arrows_;
    std::map<std::string, size_t, std::less<>> arrow_index_;
};

/// Everything the radical formulas read off a quiver. Computed in one pass
/// by analyze() and immutable afterwards.
struct Connectivity {
    /// vertex -> strong class id; ids ordered by each class's least vertex.
    std::vector<size_t> strong_class;
    std::vector<std::vector<size_t>> strong;      // classes, each sorted
    std::vector<std::vector<size_t>> weak;        // same ordering convention
    /// Maximal unilaterally-connected vertex sets (may overlap), each
    /// sorted; the list is ordered lexicographically.
    std::vector<std::vector<size_t>> unilateral;
    /// Set when the number of maximal sets exceeded the enumeration cap.
    bool unilateral_truncated = false;
    /// reach1[i][j]: a directed path of length >= 1 from i to j exists.
    std::vector<std::vector<bool>> reach1;
    bool has_cycle = false;
    std::vector<size_t> isolated;  // no incident arrows, loops included

    /// Reflexive-transitive reachability (i = j or positive-length path).
    bool reachable(size_t i, size_t j) const { return i == j || reach1[i][j]; }
    bool same_cycle(size_t s, size_t t) const {
        return s != t && strong_class[s] == strong_class[t];
    }
    /// Ordered pairs (s,t) with a positive-length path s -> t but none
    /// t -> s. Paths between such endpoints are the regular paths.
    std::vector<std::pair<size_t, size_t>> regular_pairs() const;
};

Connectivity analyze(const Quiver& q, size_t unilateral_cap = 100000);

}  // namespace gpa
