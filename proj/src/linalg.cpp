#include "gpa/linalg.hpp"

#include <stdexcept>

namespace gpa {

Vec zero_vec(size_t n) { return Vec(n); }

bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Mat identity_mat(size_t n) {
    Mat m(n, Vec(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic(1);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a.size(), k = b.size(), p = b[0].size();
    Mat r(n, Vec(p));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < p; ++j) {
                if (b[t][j].is_zero()) continue;
                r[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    return r;
}

Vec mat_apply(const Mat& a, const Vec& x) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("mat_apply: shape mismatch");
        for (size_t j = 0; j < x.size(); ++j) {
            if (a[i][j].is_zero() || x[j].is_zero()) continue;
            r[i] += a[i][j] * x[j];
        }
    }
    return r;
}

std::vector<size_t> rref_in_place(Mat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Cyclotomic inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j)
            if (!m[row][j].is_zero()) m[row][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Cyclotomic f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

size_t rank(Mat m) { return rref_in_place(m).size(); }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    size_t cols = a.empty() ? 0 : a[0].size();
    Mat aug(a.size(), Vec(cols + 1));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    if (a.empty()) return is_zero_vec(b) ? std::optional<Vec>(Vec(cols)) : std::nullopt;
    std::vector<size_t> pivots = rref_in_place(aug);
    Vec x(cols);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;  // 0 = nonzero row
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

std::vector<Vec> null_space(const Mat& a, size_t cols) {
    Mat m = a;
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("null_space: shape mismatch");
    std::vector<size_t> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec x(cols);
        x[f] = Cyclotomic(1);
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

bool Subspace::add(Vec v) {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::add: wrong dimension");
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (v[pivots_[i]].is_zero()) continue;
        Cyclotomic f = v[pivots_[i]];
        for (size_t j = 0; j < ambient_; ++j)
            if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
    size_t lead = ambient_;
    for (size_t j = 0; j < ambient_; ++j)
        if (!v[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead == ambient_) return false;
    Cyclotomic inv = v[lead].inverse();
    for (auto& c : v)
        if (!c.is_zero()) c *= inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][lead].is_zero()) continue;
        Cyclotomic f = rows_[i][lead];
        for (size_t j = 0; j < ambient_; ++j)
            if (!v[j].is_zero()) rows_[i][j] -= f * v[j];
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < lead) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, lead);
    return true;
}

void Subspace::add_all(const Mat& vectors) {
    for (const auto& v : vectors) add(v);
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: wrong dimension");
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (v[pivots_[i]].is_zero()) continue;
        Cyclotomic f = v[pivots_[i]];
        for (size_t j = 0; j < ambient_; ++j)
            if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    for (const auto& row : o.rows_)
        if (!contains(row)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace_sum: ambient mismatch");
    Subspace s = a;
    s.add_all(b.basis());
    return s;
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace_intersect: ambient mismatch");
    size_t n = a.ambient_dim();
    Subspace out(n);
    if (a.dim() == 0 || b.dim() == 0) return out;
    // Solve x^T A = y^T B by taking the kernel of the n x (dimA + dimB)
    // matrix whose columns are the basis rows of A and the negated basis
    // rows of B.
    size_t ka = a.dim(), kb = b.dim();
    Mat m(n, Vec(ka + kb));
    for (size_t i = 0; i < ka; ++i)
        for (size_t j = 0; j < n; ++j) m[j][i] = a.basis()[i][j];
    for (size_t i = 0; i < kb; ++i)
        for (size_t j = 0; j < n; ++j) m[j][ka + i] = -b.basis()[i][j];
    for (const Vec& xy : null_space(m, ka + kb)) {
        Vec elt(n);
        for (size_t i = 0; i < ka; ++i) {
            if (xy[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                if (!a.basis()[i][j].is_zero()) elt[j] += xy[i] * a.basis()[i][j];
        }
        out.add(std::move(elt));
    }
    return out;
}

}  // namespace gpa
