#pragma once

#include "gpa/findim.hpp"
#include "gpa/linalg.hpp"
#include "gpa/path_algebra.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gpa {

/// A finite block system: an ordered index set I, a space A_ij with named
/// basis for every (i,j), and trilinear products mu_ijl : A_ij x A_jl ->
/// A_il given by structure constants. Blocks may be zero (empty basis) and
/// absent mu tables are zero maps. verify() checks the mixed associativity
/// law w(xz) = (wx)z on all basis triples.
class GammaSystem {
public:
    GammaSystem() = default;
    explicit GammaSystem(std::vector<std::string> index_names);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    size_t index_count() const { return indices_.size(); }
    const std::vector<std::string>& indices() const { return indices_; }

    size_t block_dim(size_t i, size_t j) const { return basis_[i][j].size(); }
    const std::vector<std::string>& block_basis(size_t i, size_t j) const {
        return basis_[i][j];
    }
    /// Position of A_ij's first coordinate in the assembled algebra
    /// (blocks are laid out row-major in index order).
    size_t block_offset(size_t i, size_t j) const;
    size_t total_dim() const;

    /// Declare the basis of A_ij. Names must be unique across the whole
    /// system; a block may be declared only once.
    void set_block(size_t i, size_t j, std::vector<std::string> names);
    /// Structure constants of mu_ijl: table[a][b] = coordinates in A_il of
    /// (a-th basis of A_ij) * (b-th basis of A_jl).
    void set_mu(size_t i, size_t j, size_t l, std::vector<std::vector<SVec>> table);
    /// Product of single basis vectors, zero when no table was declared.
    SVec mu_product(size_t i, size_t j, size_t l, size_t a, size_t b) const;
    /// Product of block vectors x in A_ij, y in A_jl, in A_il coordinates.
    Vec mu_apply(size_t i, size_t j, size_t l, const Vec& x, const Vec& y) const;

    /// Mixed associativity on all basis triples; throws
    /// std::invalid_argument naming a witness triple on failure.
    void verify() const;

    /// Line format: `gmring <name>`, `index <names...>`,
    /// `block i j dim=<d> basis=<comma names>`,
    /// `mu i j l : <bi> <bj> -> <linear combo>` (omitted entries zero),
    /// `#` comments. Indices are referred to by name. Throws
    /// std::invalid_argument with a 1-based line number.
    static GammaSystem parse(std::string_view text);

    /// A_ij = M_{n_i x n_j}(k) over size list n; entry names m<i><j>_<r><c>.
    static GammaSystem matrix_pattern(const std::vector<size_t>& sizes);
    /// Same but A_ij = 0 below the diagonal.
    static GammaSystem upper_triangular_pattern(const std::vector<size_t>& sizes);
    /// A_ij = M_n(R) cells: n x n blocks each a copy of the coefficient
    /// ring R (structure constants from R's table).
    static GammaSystem matrix_over(const FinDimAlgebra& r, size_t n);
    /// Diagonal system: A_ii = rings[i], all off-diagonal blocks zero.
    static GammaSystem diagonal(const std::vector<FinDimAlgebra>& rings);
    /// Blocks A_ij = span of basis paths from vertex i to vertex j of a
    /// materialized path algebra; every generalized path algebra is a
    /// block system this way.
    static GammaSystem from_materialization(const PathAlgebra& a, const Materialization& m);

private:
    std::string name_ = "gamma";
    std::vector<std::string> indices_;
    std::vector<std::vector<std::vector<std::string>>> basis_;
    std::map<std::array<size_t, 3>, std::vector<std::vector<SVec>>> mu_;
};

/// Flatten the system into one algebra: basis = concatenated block bases,
/// products via mu when inner indices meet and zero otherwise. The unit is
/// declared when a generalized matrix unit exists. Mixed associativity is
/// verified first; failures carry a witness triple.
FinDimAlgebra assemble(const GammaSystem& s);

/// Per-index idempotents e_ii with e_ii x_ij = x_ij e_jj = x_ij for every
/// block vector, found by linear solves; absent when any index has none.
std::optional<std::vector<Vec>> find_gm_unit(const GammaSystem& s);

enum class GmSide { left, right };
enum class GmDivisorStatus { found, none_possible, unknown };

struct GmDivisorVerdict {
    GmDivisorStatus status = GmDivisorStatus::unknown;
    std::optional<Vec> divisor;  // coordinates in A_st when found
    std::string note;
};

struct GmDivisorReport {
    GmSide side = GmSide::left;
    std::vector<std::vector<GmDivisorVerdict>> verdicts;  // [s][t]
    bool all_found() const;
    /// First pair that is not `found`, for refusal messages.
    std::optional<std::pair<size_t, size_t>> first_failure() const;
};

/// Per-(s,t) search for d in A_st whose multiplications are injective:
/// x -> x*d on every A_is and y -> d*y on every A_tj. found(d) is exact
/// (certified by rank); none_possible only on a provable obstruction
/// (zero block, or an injectivity-blocking dimension drop); unknown after
/// the candidate budget (deterministic candidates, then seeded random
/// ones) is exhausted. The defining property reads the same from either
/// side, so `side` changes only the report label; the left/right pair in
/// the radical theorems is covered by one certificate.
GmDivisorReport gm_nonzero_divisor(const GammaSystem& s, GmSide side, size_t budget,
                                   uint64_t seed = 0);

/// Per-block subspaces B_ij of a block system, the shape of every radical
/// this module produces.
struct GmIdeal {
    std::vector<std::vector<Subspace>> blocks;  // [i][j], ambient dim = block dim
    size_t total_dim() const;
    bool zero() const { return total_dim() == 0; }
    /// The same ideal as a subspace of assemble(S).
    Subspace assembled(const GammaSystem& s) const;
};

/// Closure check: A_is B_sj inside B_ij and B_is A_sj inside B_ij for all
/// index triples.
bool is_gm_ideal(const GammaSystem& s, const GmIdeal& b);

/// The blockwise radical formula: r(A) = sum of the single-block radicals
/// r(A_ij), each computed as the radical of the assembled {i,j} corner
/// intersected with the A_ij coordinates. Kinds baer, levitzki and
/// jacobson coincide here (finite dimension, characteristic zero); vn
/// requires verified two-sided gm non-zero divisors and refuses otherwise
/// (std::invalid_argument naming the failing pair), since the summation
/// formula is false without them. The result is re-verified to be an
/// ideal of assemble(S). kind nil is not covered (throws).
GmIdeal gm_radical_formula(const GammaSystem& s, RadicalKind kind,
                           size_t divisor_budget = 32, uint64_t divisor_seed = 1);

/// Radical of the single block A_st as a module over its opposite block,
/// via the {s,t} corner reduction. Subspace ambient = dim A_st.
Subspace gm_block_radical(const GammaSystem& s, size_t bi, size_t bj, RadicalKind kind);

/// Projection on (s,t): every x in A_st that appears as the (s,t) part of
/// some element of B (a subspace of the assembled algebra).
Subspace project(const GammaSystem& s, const Subspace& b, size_t bi, size_t bj);

}  // namespace gpa
