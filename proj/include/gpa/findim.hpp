#pragma once

#include "gpa/linalg.hpp"
#include "gpa/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gpa {

/// One term of a sparse vector: coefficient sitting on basis index idx.
struct Term {
    size_t idx;
    Cyclotomic coef;
    bool operator==(const Term& o) const { return idx == o.idx && coef == o.coef; }
};

/// Sparse vector with strictly increasing indices and no stored zeros.
using SVec = std::vector<Term>;

SVec to_sparse(const Vec& dense);
Vec to_dense(const SVec& sparse, size_t dim);
SVec svec_add(const SVec& a, const SVec& b);
SVec svec_scale(const SVec& a, const Cyclotomic& c);

/// Associative algebra over Q(zeta) presented by structure constants on a
/// named basis, with an optional declared unit. Immutable; every oracle in
/// this module runs on it.
class FinDimAlgebra {
public:
    FinDimAlgebra(std::vector<std::string> basis_names,
                  std::vector<std::vector<SVec>> table,
                  std::optional<Vec> unit = std::nullopt);

    size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const SVec& basis_product(size_t i, size_t j) const { return table_[i][j]; }
    bool has_unit() const { return unit_.has_value(); }
    const Vec& unit() const;  // throws when absent

    Vec multiply(const Vec& x, const Vec& y) const;
    SVec multiply_sparse(const SVec& x, const SVec& y) const;
    Vec basis_times(size_t i, const Vec& v) const;  // b_i * v
    Vec times_basis(const Vec& v, size_t j) const;  // v * b_j

    /// Checks associativity on all basis triples and the declared unit's
    /// action; throws std::invalid_argument naming a witness on failure.
    void verify() const;

    /// Left regular representation of x; column j holds x * b_j.
    Mat left_mult_matrix(const Vec& x) const;
    Mat right_mult_matrix(const Vec& x) const;
    Cyclotomic trace_left_mult(const SVec& x) const;

    /// Full matrix algebra M_n over Q; basis e1_1, e1_2, ..., en_n.
    static FinDimAlgebra matrix_algebra(size_t n);

    /// Group algebra of Z_n, basis g0..g{n-1}, gi*gj = g{(i+j) mod n}.
    static FinDimAlgebra cyclic_group_algebra(size_t n);

    /// Adjoin a unit as basis index 0; the old basis shifts up by one.
    FinDimAlgebra unitalized() const;

    /// Quotient by a two-sided ideal (not re-verified here); basis = images
    /// of the basis vectors at the ideal's non-pivot coordinates.
    FinDimAlgebra quotient(const Subspace& ideal) const;

    std::string element_str(const Vec& v) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<SVec>> table_;
    std::optional<Vec> unit_;
    std::vector<Cyclotomic> basis_traces_;  // trace of L_{b_k}
};

bool is_ideal(const FinDimAlgebra& a, const Subspace& b);

/// Two-sided ideal generated by the given elements.
Subspace ideal_closure(const FinDimAlgebra& a, const Mat& generators);

/// Jacobson radical of a unital algebra as the kernel of the symmetric form
/// (x, y) -> trace(L_{xy}), valid in characteristic zero. Before returning,
/// asserts the kernel is an ideal, is nilpotent, and that the quotient's
/// own trace form is nondegenerate; throws std::invalid_argument on
/// non-unital input.
Subspace jacobson_radical(const FinDimAlgebra& a);

/// Radical of a possibly non-unital algebra, via unitalization.
Subspace radical_of_nonunital(const FinDimAlgebra& a);

struct NilpotencyResult {
    bool nilpotent = false;
    size_t index = 0;  // least n with B^n = 0, meaningful when nilpotent
};

/// Requires b to be an ideal (throws otherwise). When the algebra is unital
/// and b turns out nilpotent, additionally asserts b lies inside the trace
/// kernel, i.e. inside the Jacobson radical.
NilpotencyResult largest_nilpotent_check(const FinDimAlgebra& a, const Subspace& b);

/// Witness y with x*y*x = x, by a linear solve in y. nullopt certifies the
/// system is inconsistent; it is never a numeric giving-up.
std::optional<Vec> vn_regular_element(const FinDimAlgebra& a, const Vec& x);

/// Largest von Neumann regular ideal of a unital algebra: eA for the
/// maximal central idempotent e annihilating the Jacobson radical on both
/// sides (lifted by Newton iteration from the quotient). Before returning,
/// asserts e is a central idempotent with eJ = Je = 0, the result is an
/// ideal meeting J trivially, and every basis element is regular. Throws
/// std::invalid_argument on non-unital input.
Subspace vn_radical(const FinDimAlgebra& a);

/// vn_radical through unitalization; any ideal of A is one of A-with-unit
/// and regularity witnesses transfer via y -> yxy, so the intersection
/// with A is exact.
Subspace vn_radical_of_nonunital(const FinDimAlgebra& a);

enum class VnIdealStatus { verified, counterexample, inconclusive };

struct VnIdealResult {
    VnIdealStatus status = VnIdealStatus::inconclusive;
    std::optional<Vec> counterexample;
    size_t tested = 0;
    std::string note;
};

/// Tests von-Neumann regularity of every basis vector of b plus `samples`
/// seeded random combinations. A counterexample is conclusive. `verified`
/// is sampling evidence, not proof: regularity does not pass to spans. A b
/// that is not an ideal comes back `inconclusive` instead of erroring.
VnIdealResult vn_regular_ideal_check(const FinDimAlgebra& a, const Subspace& b,
                                     size_t samples, uint64_t seed);

/// Basis-pair primeness scan: not prime iff some basis pair (b_i, b_j) has
/// b_i * A * b_j = 0. Exact and complete for algebras whose basis behaves
/// monomially (paths, matrix units): there a general annihilating pair
/// forces an annihilating basis pair. Throws when dim exceeds max_dim; use
/// the closed-form graph criteria beyond that.
bool prime_bruteforce(const FinDimAlgebra& a, size_t max_dim = 64);

/// Semiprime iff the radical vanishes (finite-dimensional, char 0).
bool semiprime_bruteforce(const FinDimAlgebra& a, size_t max_dim = 64);

}  // namespace gpa
