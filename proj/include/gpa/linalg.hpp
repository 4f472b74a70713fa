#pragma once

#include "gpa/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gpa {

using Vec = std::vector<Cyclotomic>;
using Mat = std::vector<Vec>;  // row-major

Vec zero_vec(size_t n);
bool is_zero_vec(const Vec& v);
Mat identity_mat(size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& x);

/// Gauss-Jordan elimination to reduced row echelon form, in place. Zero rows
/// are dropped. Returns the pivot column of each surviving row.
std::vector<size_t> rref_in_place(Mat& m);

size_t rank(Mat m);

/// One solution of A x = b, if the system is consistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Basis of { x in k^cols : A x = 0 }. The column count is explicit so the
/// kernel of an empty matrix is still well defined.
std::vector<Vec> null_space(const Mat& a, size_t cols);

/// Linear subspace of k^n maintained in reduced row echelon form, so two
/// equal subspaces always hold identical basis matrices.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim) {}

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return rows_.size(); }
    const Mat& basis() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    /// Returns true when v was independent of the current span.
    bool add(Vec v);
    void add_all(const Mat& vectors);

    /// v with the span's pivot coordinates eliminated; zero iff v lies in
    /// the span. The surviving coordinates sit at non-pivot positions, which
    /// makes this usable as a normal form modulo the subspace.
    Vec reduce(Vec v) const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    size_t ambient_ = 0;
    Mat rows_;
    std::vector<size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

}  // namespace gpa
