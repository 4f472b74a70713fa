#pragma once

#include "gpa/findim.hpp"
#include "gpa/linalg.hpp"
#include "gpa/quiver.hpp"
#include "gpa/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gpa {

enum class RadicalKind { baer, levitzki, nil, jacobson, vn };

std::string radical_kind_name(RadicalKind k);
std::optional<RadicalKind> radical_kind_from_name(std::string_view name);

/// A basis path of k(D, Omega): a vertex sequence, the arrows joining it,
/// and one Omega-basis index per vertex ("slot"). Plain kD uses a
/// one-dimensional Omega at every vertex, making every slot 0. Length-0
/// paths are single vertices carrying one slot.
struct GeneralizedPath {
    std::vector<size_t> verts;   // n+1 vertices
    std::vector<size_t> arrows;  // n arrow indices
    std::vector<size_t> slots;   // n+1 Omega basis indices

    size_t length() const { return arrows.size(); }
    size_t source() const { return verts.front(); }
    size_t target() const { return verts.back(); }

    bool operator==(const GeneralizedPath& o) const {
        return verts == o.verts && arrows == o.arrows && slots == o.slots;
    }
    /// Length-lexicographic; ties broken by vertex sequence, then arrow
    /// indices, then slots.
    bool operator<(const GeneralizedPath& o) const;
};

/// Ambient handle for k(D, Omega): the quiver plus one finite-dimensional
/// unital coefficient algebra per vertex. Immutable once built.
class PathAlgebra {
public:
    /// Plain kD: every Omega_ii = k.
    static PathAlgebra plain(Quiver q);
    /// k(D, Omega). Each Omega must declare a unit and pass verify(); its
    /// own radical is probed and reported through semisimple_omegas().
    static PathAlgebra with_omega(Quiver q, std::vector<FinDimAlgebra> omegas);

    const Quiver& quiver() const { return q_; }
    const Connectivity& connectivity() const { return conn_; }
    const FinDimAlgebra& omega(size_t vertex) const { return omegas_[vertex]; }
    bool is_plain() const { return plain_; }
    /// False entries mark vertices whose Omega has a nonzero radical; the
    /// closed radical formulas are stated for semisimple coefficients.
    const std::vector<bool>& semisimple_omegas() const { return omega_semisimple_; }

    bool same_ambient(const PathAlgebra& o) const { return this == &o; }

    /// Deterministic path order used for materialized bases and printing:
    /// length, then vertex sequence, then arrow NAMES, then slots.
    bool path_order(const GeneralizedPath& a, const GeneralizedPath& b) const;

private:
    PathAlgebra(Quiver q, std::vector<FinDimAlgebra> omegas, bool plain);
    Quiver q_;
    Connectivity conn_;
    std::vector<FinDimAlgebra> omegas_;
    std::vector<bool> omega_semisimple_;
    bool plain_;
};

/// Finite k-combination of generalized paths, the working representation
/// of elements of k(D, Omega). Values are freely copyable; the ambient
/// algebra is referenced, not owned.
class PathElement {
public:
    explicit PathElement(const PathAlgebra* ambient = nullptr) : ambient_(ambient) {}

    static PathElement single(const PathAlgebra& a, GeneralizedPath p,
                              Cyclotomic coef = Cyclotomic(1));
    /// The vertex idempotent e_i: the unit of Omega_ii expanded over slots.
    static PathElement vertex(const PathAlgebra& a, size_t v);
    /// Length-1 path on one arrow with unit slots at both ends.
    static PathElement arrow(const PathAlgebra& a, size_t arrow_index);

    const PathAlgebra* ambient() const { return ambient_; }
    const std::map<GeneralizedPath, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PathElement operator+(const PathElement& o) const;
    PathElement operator-() const;
    PathElement operator-(const PathElement& o) const { return *this + (-o); }
    /// The product rule: concatenation with the junction slots multiplied
    /// inside Omega and re-expanded over its basis; zero on endpoint
    /// mismatch. Throws std::invalid_argument when ambients differ.
    PathElement operator*(const PathElement& o) const;
    PathElement scaled(const Cyclotomic& c) const;

    /// Component living in A_ij (paths from i to j).
    PathElement component(size_t i, size_t j) const;
    /// Component of uniform length l.
    PathElement length_component(size_t l) const;
    /// Smallest/largest path length in the support; nullopt when zero.
    std::optional<size_t> min_length() const;
    std::optional<size_t> max_length() const;

    bool operator==(const PathElement& o) const;
    bool operator!=(const PathElement& o) const { return !(*this == o); }

    std::string str() const;

    void add_term(GeneralizedPath p, const Cyclotomic& c);

private:
    const PathAlgebra* ambient_;
    std::map<GeneralizedPath, Cyclotomic> terms_;
};

/// Render one path in the element-literal syntax accepted by
/// parse_element: `e(v)` / `e(v)[w]` for vertices, dotted arrow chains
/// with `[w]` slot annotations elsewhere.
std::string path_str(const PathAlgebra& a, const GeneralizedPath& p);

/// Parse the element-literal syntax: terms `coeff * spec` joined by + and -,
/// spec either `e(<vertex>)` with an optional `[omegaBasis]` suffix or a
/// dotted chain `arrow[slot].arrow[slot]...` where each slot annotation
/// names an Omega basis element at that arrow's target (source slot via a
/// leading `e(v)[w].` factor). Throws std::invalid_argument on bad input.
PathElement parse_element(const PathAlgebra& a, std::string_view text);

/// All paths of length <= max_len (every slot combination), in path_order.
/// Throws std::length_error when more than max_count paths exist.
std::vector<GeneralizedPath> enumerate_paths(const PathAlgebra& a, size_t max_len,
                                             size_t max_count);

/// The span-of-regular-paths description of the radical of kD: identical
/// for the Baer, Levitzki, nil and Jacobson radicals. Membership of an
/// element means every support path runs between a regular pair.
struct RadicalDescription {
    RadicalKind kind = RadicalKind::jacobson;
    std::vector<std::pair<size_t, size_t>> pairs;  // regular (source, target)
    bool zero() const { return pairs.empty(); }
    bool pair_regular(size_t s, size_t t) const;
    bool member(const PathElement& x) const;
};

RadicalDescription radical_description(const PathAlgebra& a, RadicalKind kind);

/// Vertices i with r_n contribution ke_ii: exactly the isolated ones.
std::vector<size_t> vn_radical_description(const PathAlgebra& a);

/// kD is prime iff D is strongly connected.
bool is_prime_path_algebra(const PathAlgebra& a);

/// The eleven equivalent conditions on D and A = kD, each evaluated by its
/// own route; they must all agree, and all_agree() says whether they do.
struct EquivalenceReport {
    bool weak_components_strong = false;        // every weak comp. is strong
    bool unilateral_components_strong = false;  // every unilateral comp. is strong
    bool three_notions_coincide = false;        // weak = unilateral = strong
    bool arrows_inside_strong = false;          // D is the union of its strong comps.
    bool no_regular_path = false;
    bool reach_symmetric = false;               // A_ij = 0 iff A_ji = 0
    bool direct_sum_of_primes = false;
    bool semiprime = false;                     // radical description is zero
    bool blocks_semiprime = false;              // A_ij semiprime A_ji-rings
    bool block_radicals_zero = false;           // r(A_ij) = 0 for all i, j
    bool radical_zero = false;                  // r(A) = 0

    std::vector<std::pair<std::string, bool>> entries() const;
    bool all_agree() const;
    bool value() const { return no_regular_path; }
};

EquivalenceReport equivalence_report(const PathAlgebra& a);

enum class BlockRadical { zero, full };

/// Radical of the single block A_st as a Gamma-ring: for the Jacobson
/// family, full iff A_ts = 0 (requires A_st != 0); for vn, zero for any
/// s != t. Violated preconditions throw std::invalid_argument.
BlockRadical gamma_block_radical(const PathAlgebra& a, size_t s, size_t t, RadicalKind kind);

/// Relation generators with an optional declared truncation exponent t
/// (needed on cyclic quivers: homogeneous generators only, and the check
/// J^t subset-of (rho) is performed on the single graded piece of length
/// t). weak admits generators of length 1 (inside J rather than J^2).
struct RelationSet {
    std::vector<PathElement> generators;
    std::optional<size_t> truncation;
    bool weak = false;
};

/// A finite-dimensional image of k(D, Omega), with the path identity of
/// every basis index preserved.
struct Materialization {
    FinDimAlgebra algebra;
    std::vector<GeneralizedPath> basis;          // algebra basis index -> path
    std::map<GeneralizedPath, size_t> index;     // normal-form path -> index
    size_t paths_enumerated = 0;

    /// Dense coordinates of a formal element; nullopt when some support
    /// path is not a normal form (reduce via multiply first).
    std::optional<Vec> coords(const PathElement& x) const;
};

/// Build the finite-dimensional quotient selected by rho and cap:
/// no rho, no cap: exact kD, acyclic quivers only;
/// cap L: quotient by J^L (any quiver, any rho, relations reduced there);
/// rho without cap: acyclic via full ideal closure, cyclic only with a
/// declared homogeneous truncation exponent.
/// Enumeration beyond max_paths, an infinite-dimensional request, or a
/// relation violating its J-window throws (std::length_error for the
/// former, std::invalid_argument with a witness for the rest).
Materialization materialize(const PathAlgebra& a, const RelationSet* rho = nullptr,
                            std::optional<size_t> cap = std::nullopt,
                            size_t max_paths = 5000);

}  // namespace gpa
