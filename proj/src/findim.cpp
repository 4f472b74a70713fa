#include "gpa/findim.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace gpa {

SVec to_sparse(const Vec& dense) {
    SVec out;
    for (size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) out.push_back({i, dense[i]});
    return out;
}

Vec to_dense(const SVec& sparse, size_t dim) {
    Vec out(dim);
    for (const Term& t : sparse) out[t.idx] = t.coef;
    return out;
}

SVec svec_add(const SVec& a, const SVec& b) {
    SVec out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].idx < b[j].idx)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].idx < a[i].idx) {
            out.push_back(b[j++]);
        } else {
            Cyclotomic c = a[i].coef + b[j].coef;
            if (!c.is_zero()) out.push_back({a[i].idx, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

SVec svec_scale(const SVec& a, const Cyclotomic& c) {
    if (c.is_zero()) return {};
    SVec out;
    out.reserve(a.size());
    for (const Term& t : a) out.push_back({t.idx, t.coef * c});
    return out;
}

FinDimAlgebra::FinDimAlgebra(std::vector<std::string> basis_names,
                             std::vector<std::vector<SVec>> table,
                             std::optional<Vec> unit)
    : names_(std::move(basis_names)), table_(std::move(table)), unit_(std::move(unit)) {
    size_t m = names_.size();
    if (table_.size() != m)
        throw std::invalid_argument("algebra table has wrong row count");
    for (const auto& row : table_)
        if (row.size() != m) throw std::invalid_argument("algebra table has wrong column count");
    if (unit_ && unit_->size() != m)
        throw std::invalid_argument("unit vector has wrong dimension");
    basis_traces_.assign(m, Cyclotomic(0));
    for (size_t k = 0; k < m; ++k) {
        Cyclotomic t(0);
        for (size_t j = 0; j < m; ++j)
            for (const Term& term : table_[k][j])
                if (term.idx == j) t += term.coef;
        basis_traces_[k] = std::move(t);
    }
}

const Vec& FinDimAlgebra::unit() const {
    if (!unit_) throw std::invalid_argument("algebra has no declared unit");
    return *unit_;
}

Vec FinDimAlgebra::multiply(const Vec& x, const Vec& y) const {
    size_t m = dim();
    if (x.size() != m || y.size() != m)
        throw std::invalid_argument("multiply: element dimension mismatch");
    Vec out(m);
    for (size_t i = 0; i < m; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < m; ++j) {
            if (y[j].is_zero()) continue;
            Cyclotomic c = x[i] * y[j];
            for (const Term& t : table_[i][j]) out[t.idx] += c * t.coef;
        }
    }
    return out;
}

SVec FinDimAlgebra::multiply_sparse(const SVec& x, const SVec& y) const {
    SVec acc;
    for (const Term& a : x)
        for (const Term& b : y) {
            Cyclotomic c = a.coef * b.coef;
            acc = svec_add(acc, svec_scale(table_[a.idx][b.idx], c));
        }
    return acc;
}

Vec FinDimAlgebra::basis_times(size_t i, const Vec& v) const {
    Vec out(dim());
    for (size_t j = 0; j < dim(); ++j) {
        if (v[j].is_zero()) continue;
        for (const Term& t : table_[i][j]) out[t.idx] += v[j] * t.coef;
    }
    return out;
}

Vec FinDimAlgebra::times_basis(const Vec& v, size_t j) const {
    Vec out(dim());
    for (size_t i = 0; i < dim(); ++i) {
        if (v[i].is_zero()) continue;
        for (const Term& t : table_[i][j]) out[t.idx] += v[i] * t.coef;
    }
    return out;
}

void FinDimAlgebra::verify() const {
    size_t m = dim();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const SVec& ij = table_[i][j];
            for (size_t k = 0; k < m; ++k) {
                SVec left;  // (b_i b_j) b_k
                for (const Term& t : ij)
                    left = svec_add(left, svec_scale(table_[t.idx][k], t.coef));
                SVec right;  // b_i (b_j b_k)
                for (const Term& t : table_[j][k])
                    right = svec_add(right, svec_scale(table_[i][t.idx], t.coef));
                if (left != right)
                    throw std::invalid_argument(
                        "associativity fails on basis triple (" + names_[i] + ", " + names_[j] +
                        ", " + names_[k] + ")");
            }
        }
    if (unit_) {
        for (size_t i = 0; i < m; ++i) {
            Vec e(m);
            e[i] = Cyclotomic(1);
            if (multiply(*unit_, e) != e || multiply(e, *unit_) != e)
                throw std::invalid_argument("declared unit fails on basis element " + names_[i]);
        }
    }
}

Mat FinDimAlgebra::left_mult_matrix(const Vec& x) const {
    size_t m = dim();
    Mat out(m, Vec(m));
    // column j of L_x is x * b_j
    for (size_t j = 0; j < m; ++j) {
        Vec col(m);
        for (size_t i = 0; i < m; ++i) {
            if (x[i].is_zero()) continue;
            for (const Term& t : table_[i][j]) col[t.idx] += x[i] * t.coef;
        }
        for (size_t r = 0; r < m; ++r) out[r][j] = col[r];
    }
    return out;
}

Mat FinDimAlgebra::right_mult_matrix(const Vec& x) const {
    size_t m = dim();
    Mat out(m, Vec(m));
    for (size_t j = 0; j < m; ++j) {
        Vec col = basis_times(j, x);  // b_j * x
        for (size_t r = 0; r < m; ++r) out[r][j] = col[r];
    }
    return out;
}

Cyclotomic FinDimAlgebra::trace_left_mult(const SVec& x) const {
    Cyclotomic t(0);
    for (const Term& term : x) t += term.coef * basis_traces_[term.idx];
    return t;
}

FinDimAlgebra FinDimAlgebra::matrix_algebra(size_t n) {
    std::vector<std::string> names;
    auto id = [n](size_t i, size_t j) { return i * n + j; };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            names.push_back("e" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    std::vector<std::vector<SVec>> table(n * n, std::vector<SVec>(n * n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    if (j == k) table[id(i, j)][id(k, l)] = {{id(i, l), Cyclotomic(1)}};
    Vec unit(n * n);
    for (size_t i = 0; i < n; ++i) unit[id(i, i)] = Cyclotomic(1);
    return FinDimAlgebra(std::move(names), std::move(table), std::move(unit));
}

FinDimAlgebra FinDimAlgebra::cyclic_group_algebra(size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic group algebra needs order >= 1");
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    std::vector<std::vector<SVec>> table(n, std::vector<SVec>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) table[i][j] = {{(i + j) % n, Cyclotomic(1)}};
    Vec unit(n);
    unit[0] = Cyclotomic(1);
    return FinDimAlgebra(std::move(names), std::move(table), std::move(unit));
}

FinDimAlgebra FinDimAlgebra::unitalized() const {
    size_t m = dim();
    std::string one = "one";
    while (std::find(names_.begin(), names_.end(), one) != names_.end()) one += "_";
    std::vector<std::string> names{one};
    names.insert(names.end(), names_.begin(), names_.end());
    std::vector<std::vector<SVec>> table(m + 1, std::vector<SVec>(m + 1));
    table[0][0] = {{0, Cyclotomic(1)}};
    for (size_t i = 0; i < m; ++i) {
        table[0][i + 1] = {{i + 1, Cyclotomic(1)}};
        table[i + 1][0] = {{i + 1, Cyclotomic(1)}};
        for (size_t j = 0; j < m; ++j) {
            SVec shifted;
            for (const Term& t : table_[i][j]) shifted.push_back({t.idx + 1, t.coef});
            table[i + 1][j + 1] = std::move(shifted);
        }
    }
    Vec unit(m + 1);
    unit[0] = Cyclotomic(1);
    return FinDimAlgebra(std::move(names), std::move(table), std::move(unit));
}

FinDimAlgebra FinDimAlgebra::quotient(const Subspace& ideal) const {
    size_t m = dim();
    if (ideal.ambient_dim() != m)
        throw std::invalid_argument("quotient: ideal lives in the wrong space");
    std::vector<bool> is_pivot(m, false);
    for (size_t p : ideal.pivots()) is_pivot[p] = true;
    std::vector<size_t> keep;  // original indices surviving into the quotient
    for (size_t i = 0; i < m; ++i)
        if (!is_pivot[i]) keep.push_back(i);
    std::vector<size_t> pos(m, SIZE_MAX);
    for (size_t qi = 0; qi < keep.size(); ++qi) pos[keep[qi]] = qi;

    auto compress = [&](const Vec& reduced) {
        Vec out(keep.size());
        for (size_t qi = 0; qi < keep.size(); ++qi) out[qi] = reduced[keep[qi]];
        return out;
    };

    std::vector<std::string> names;
    for (size_t i : keep) names.push_back(names_[i]);
    std::vector<std::vector<SVec>> table(keep.size(), std::vector<SVec>(keep.size()));
    for (size_t qi = 0; qi < keep.size(); ++qi)
        for (size_t qj = 0; qj < keep.size(); ++qj) {
            Vec prod = to_dense(table_[keep[qi]][keep[qj]], m);
            table[qi][qj] = to_sparse(compress(ideal.reduce(std::move(prod))));
        }
    std::optional<Vec> unit;
    if (unit_) unit = compress(ideal.reduce(*unit_));
    return FinDimAlgebra(std::move(names), std::move(table), std::move(unit));
}

std::string FinDimAlgebra::element_str(const Vec& v) const {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (v[i].is_one()) {
            out += names_[i];
        } else if ((-v[i]).is_one()) {
            out += "-" + names_[i];
        } else {
            std::string c = v[i].str();
            if (c.find(' ') != std::string::npos) c = "(" + c + ")";
            out += c + "*" + names_[i];
        }
    }
    return out.empty() ? "0" : out;
}

bool is_ideal(const FinDimAlgebra& a, const Subspace& b) {
    if (b.ambient_dim() != a.dim()) return false;
    for (const Vec& v : b.basis())
        for (size_t k = 0; k < a.dim(); ++k) {
            if (!b.contains(a.basis_times(k, v))) return false;
            if (!b.contains(a.times_basis(v, k))) return false;
        }
    return true;
}

Subspace ideal_closure(const FinDimAlgebra& a, const Mat& generators) {
    Subspace w(a.dim());
    std::deque<Vec> queue;
    for (const Vec& g : generators)
        if (w.add(g)) queue.push_back(g);
    while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        for (size_t k = 0; k < a.dim(); ++k) {
            Vec lw = a.basis_times(k, v);
            if (w.add(lw)) queue.push_back(std::move(lw));
            Vec rw = a.times_basis(v, k);
            if (w.add(rw)) queue.push_back(std::move(rw));
        }
    }
    return w;
}

namespace {

// Subspace spanned by products u*v, u over rows of x, v over rows of y.
Subspace product_space(const FinDimAlgebra& a, const Subspace& x, const Subspace& y) {
    Subspace out(a.dim());
    for (const Vec& u : x.basis())
        for (const Vec& v : y.basis()) out.add(a.multiply(u, v));
    return out;
}

NilpotencyResult nilpotency_scan(const FinDimAlgebra& a, const Subspace& b) {
    NilpotencyResult res;
    if (b.dim() == 0) {
        res.nilpotent = true;
        res.index = 1;
        return res;
    }
    Subspace power = b;
    for (size_t n = 2; n <= a.dim() + 1; ++n) {
        Subspace next = product_space(a, power, b);
        if (next.dim() == 0) {
            res.nilpotent = true;
            res.index = n;
            return res;
        }
        if (next == power) return res;  // stabilized away from zero
        power = std::move(next);
    }
    return res;
}

}  // namespace

Subspace jacobson_radical(const FinDimAlgebra& a) {
    if (!a.has_unit())
        throw std::invalid_argument("trace-criterion radical needs a unital algebra");
    size_t m = a.dim();
    Mat gram(m, Vec(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            gram[i][j] = a.trace_left_mult(a.basis_product(i, j));
    Subspace rad(m);
    for (Vec& v : null_space(gram, m)) rad.add(std::move(v));

    if (!is_ideal(a, rad))
        throw std::logic_error("trace kernel failed the ideal assertion");
    NilpotencyResult nil = nilpotency_scan(a, rad);
    if (!nil.nilpotent)
        throw std::logic_error("trace kernel failed the nilpotency assertion");
    FinDimAlgebra quo = a.quotient(rad);
    size_t q = quo.dim();
    Mat qgram(q, Vec(q));
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j)
            qgram[i][j] = quo.trace_left_mult(quo.basis_product(i, j));
    if (rank(std::move(qgram)) != q)
        throw std::logic_error("quotient trace form failed the nondegeneracy assertion");
    return rad;
}

Subspace radical_of_nonunital(const FinDimAlgebra& a) {
    if (a.has_unit()) return jacobson_radical(a);
    FinDimAlgebra ext = a.unitalized();
    Subspace big = jacobson_radical(ext);
    Subspace out(a.dim());
    for (const Vec& v : big.basis()) {
        if (!v[0].is_zero())
            throw std::logic_error("radical of the unitalization leaked onto the adjoined unit");
        out.add(Vec(v.begin() + 1, v.end()));
    }
    return out;
}

NilpotencyResult largest_nilpotent_check(const FinDimAlgebra& a, const Subspace& b) {
    if (!is_ideal(a, b))
        throw std::invalid_argument("nilpotency check requires a two-sided ideal");
    NilpotencyResult res = nilpotency_scan(a, b);
    if (res.nilpotent && a.has_unit()) {
        // a nilpotent ideal always sits inside the radical; catch trace bugs
        for (const Vec& v : b.basis())
            for (size_t j = 0; j < a.dim(); ++j) {
                Vec e(a.dim());
                e[j] = Cyclotomic(1);
                if (!a.trace_left_mult(to_sparse(a.multiply(v, e))).is_zero())
                    throw std::logic_error(
                        "nilpotent ideal escaped the trace kernel; oracle inconsistency");
            }
    }
    return res;
}

std::optional<Vec> vn_regular_element(const FinDimAlgebra& a, const Vec& x) {
    // x*y*x = x is linear in y: solve (L_x R_x) y = x
    Mat lx = a.left_mult_matrix(x);
    Mat rx = a.right_mult_matrix(x);
    std::optional<Vec> y = solve(mat_mul(lx, rx), x);
    if (y) {
        Vec check = a.multiply(a.multiply(x, *y), x);
        if (check != x) throw std::logic_error("von Neumann witness failed re-verification");
    }
    return y;
}

VnIdealResult vn_regular_ideal_check(const FinDimAlgebra& a, const Subspace& b,
                                     size_t samples, uint64_t seed) {
    VnIdealResult res;
    if (!is_ideal(a, b)) {
        res.status = VnIdealStatus::inconclusive;
        res.note = "input subspace is not a two-sided ideal";
        return res;
    }
    auto check = [&](const Vec& x) {
        ++res.tested;
        return vn_regular_element(a, x).has_value();
    };
    for (const Vec& v : b.basis()) {
        if (!check(v)) {
            res.status = VnIdealStatus::counterexample;
            res.counterexample = v;
            return res;
        }
    }
    std::mt19937_64 gen(seed);
    for (size_t s = 0; s < samples && b.dim() > 0; ++s) {
        Vec x(a.dim());
        for (const Vec& v : b.basis()) {
            long c = static_cast<long>(gen() % 7) - 3;
            if (c == 0) continue;
            for (size_t i = 0; i < x.size(); ++i)
                if (!v[i].is_zero()) x[i] += Cyclotomic(c) * v[i];
        }
        if (!check(x)) {
            res.status = VnIdealStatus::counterexample;
            res.counterexample = std::move(x);
            return res;
        }
    }
    res.status = VnIdealStatus::verified;
    res.note = b.dim() == 0 ? "zero ideal, trivially regular"
                            : "all sampled elements regular; sampling evidence";
    return res;
}

Subspace vn_radical(const FinDimAlgebra& a) {
    if (!a.has_unit())
        throw std::invalid_argument("vn radical needs a unital algebra; "
                                    "use vn_radical_of_nonunital");
    size_t m = a.dim();
    Subspace rad = jacobson_radical(a);

    // N = { x : xJ = Jx = 0 }, the largest candidate region: any regular
    // ideal misses J, hence multiplies it to zero on both sides
    Mat conditions;
    for (const Vec& r : rad.basis()) {
        Mat right = a.right_mult_matrix(r);  // row k of the product x*r
        Mat left = a.left_mult_matrix(r);    // r*x
        for (Vec& row : right) conditions.push_back(std::move(row));
        for (Vec& row : left) conditions.push_back(std::move(row));
    }
    std::vector<Vec> n_basis = null_space(conditions, m);

    // image of N in the semisimple quotient, a direct summand there
    FinDimAlgebra q = a.quotient(rad);
    std::vector<bool> is_pivot(m, false);
    for (size_t p : rad.pivots()) is_pivot[p] = true;
    auto compress = [&](Vec v) {
        Vec reduced = rad.reduce(std::move(v));
        Vec out;
        out.reserve(q.dim());
        for (size_t i = 0; i < m; ++i)
            if (!is_pivot[i]) out.push_back(std::move(reduced[i]));
        return out;
    };
    Subspace n_bar(q.dim());
    for (const Vec& n : n_basis) n_bar.add(compress(n));
    if (n_bar.dim() == 0) return Subspace(m);

    // the unit of the ideal n_bar of the semisimple quotient: solve
    // u*b = b*u = b over the span of n_bar
    size_t p = n_bar.dim();
    Mat eq;
    Vec rhs;
    for (const Vec& b : n_bar.basis()) {
        Mat rows(2 * q.dim(), Vec(p));
        for (size_t i = 0; i < p; ++i) {
            Vec ub = q.multiply(n_bar.basis()[i], b);
            Vec bu = q.multiply(b, n_bar.basis()[i]);
            for (size_t k = 0; k < q.dim(); ++k) {
                rows[k][i] = ub[k];
                rows[q.dim() + k][i] = bu[k];
            }
        }
        for (Vec& row : rows) eq.push_back(std::move(row));
        for (size_t k = 0; k < q.dim(); ++k) rhs.push_back(b[k]);
        for (size_t k = 0; k < q.dim(); ++k) rhs.push_back(b[k]);
    }
    std::optional<Vec> coeffs = solve(eq, rhs);
    if (!coeffs)
        throw std::logic_error("annihilator image has no unit in the quotient");
    Vec e_bar(q.dim());
    for (size_t i = 0; i < p; ++i)
        for (size_t k = 0; k < q.dim(); ++k) e_bar[k] += (*coeffs)[i] * n_bar.basis()[i][k];

    // preimage of e_bar inside N itself, so the Newton lift stays in the
    // annihilator ideal and inherits eJ = Je = 0
    Mat pre(q.dim(), Vec(n_basis.size()));
    for (size_t i = 0; i < n_basis.size(); ++i) {
        Vec img = compress(n_basis[i]);
        for (size_t k = 0; k < q.dim(); ++k) pre[k][i] = img[k];
    }
    std::optional<Vec> lift = solve(pre, e_bar);
    if (!lift) throw std::logic_error("no preimage of the quotient idempotent");
    Vec e(m);
    for (size_t i = 0; i < n_basis.size(); ++i)
        for (size_t k = 0; k < m; ++k) e[k] += (*lift)[i] * n_basis[i][k];

    // Newton iteration e <- 3e^2 - 2e^3 squares the defect e^2 - e in J
    for (size_t round = 0;; ++round) {
        Vec e2 = a.multiply(e, e);
        if (e2 == e) break;
        if (round > 64) throw std::logic_error("idempotent lift failed to converge");
        Vec e3 = a.multiply(e2, e);
        for (size_t k = 0; k < m; ++k)
            e[k] = Cyclotomic(3) * e2[k] - Cyclotomic(2) * e3[k];
    }

    Subspace out(m);
    for (size_t k = 0; k < m; ++k) {
        out.add(a.times_basis(e, k));
        out.add(a.basis_times(k, e));
    }

    for (size_t k = 0; k < m; ++k)
        if (a.times_basis(e, k) != a.basis_times(k, e))
            throw std::logic_error("lifted idempotent is not central");
    for (const Vec& r : rad.basis())
        if (!is_zero_vec(a.multiply(e, r)) || !is_zero_vec(a.multiply(r, e)))
            throw std::logic_error("lifted idempotent does not annihilate the radical");
    if (!is_ideal(a, out)) throw std::logic_error("vn radical is not an ideal");
    if (subspace_intersect(out, rad).dim() != 0)
        throw std::logic_error("vn radical meets the Jacobson radical");
    for (const Vec& b : out.basis())
        if (!vn_regular_element(a, b))
            throw std::logic_error("vn radical basis element is not regular");
    return out;
}

Subspace vn_radical_of_nonunital(const FinDimAlgebra& a) {
    if (a.has_unit()) return vn_radical(a);
    FinDimAlgebra one = a.unitalized();
    Subspace big = vn_radical(one);
    Subspace coord(a.dim() + 1);
    for (size_t k = 1; k <= a.dim(); ++k) {
        Vec v(a.dim() + 1);
        v[k] = Cyclotomic(1);
        coord.add(std::move(v));
    }
    Subspace inter = subspace_intersect(big, coord);
    Subspace out(a.dim());
    for (const Vec& row : inter.basis()) {
        if (!row[0].is_zero())
            throw std::logic_error("vn radical escaped the original algebra");
        out.add(Vec(row.begin() + 1, row.end()));
    }
    return out;
}

bool prime_bruteforce(const FinDimAlgebra& a, size_t max_dim) {
    size_t m = a.dim();
    if (m > max_dim)
        throw std::invalid_argument(
            "primeness scan limited to dimension " + std::to_string(max_dim) +
            "; use the closed-form graph criterion for larger algebras");
    if (m == 0) return false;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            bool all_zero = true;
            for (size_t k = 0; k < m && all_zero; ++k) {
                SVec acc;  // b_i * b_k * b_j, accumulated so terms may cancel
                for (const Term& t : a.basis_product(i, k))
                    acc = svec_add(acc, svec_scale(a.basis_product(t.idx, j), t.coef));
                if (!acc.empty()) all_zero = false;
            }
            if (all_zero) return false;
        }
    return true;
}

bool semiprime_bruteforce(const FinDimAlgebra& a, size_t max_dim) {
    if (a.dim() > max_dim)
        throw std::invalid_argument(
            "semiprimeness scan limited to dimension " + std::to_string(max_dim) +
            "; use the closed-form graph criterion for larger algebras");
    return radical_of_nonunital(a).dim() == 0;
}

}  // namespace gpa
