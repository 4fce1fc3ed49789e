#include "spanprog/linalg.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace spanprog {

SparseVector RowEchelonBasis::reduce(SparseVector v) const {
    if (v.dim() != dim_) throw std::invalid_argument("RowEchelonBasis: dimension mismatch");
    auto it = v.entries().begin();
    while (it != v.entries().end()) {
        const int col = it->first;
        auto p = row_of_pivot_.find(col);
        if (p == row_of_pivot_.end()) {
            ++it;
            continue;
        }
        const Rational c = it->second;
        v.axpy(-c, rows_[p->second]);
        // The pivot row only has entries at columns >= col, so resume there.
        it = v.entries().upper_bound(col);
    }
    return v;
}

bool RowEchelonBasis::insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    const int pivot = v.entries().begin()->first;
    const Rational lead = v.entries().begin()->second;
    v.scale(Rational(1) / lead);
    row_of_pivot_[pivot] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

bool span_membership(const std::vector<SparseVector>& vectors, const SparseVector& target) {
    for (const auto& v : vectors)
        if (v.dim() != target.dim())
            throw std::invalid_argument("span_membership: dimension mismatch");
    RowEchelonBasis basis(target.dim());
    for (const auto& v : vectors) basis.insert(v);
    return basis.contains(target);
}

namespace detail {

namespace {

// Row storage plus per-column occupancy indexes. col_rows_all drives
// elimination; col_rows_unused drives pivot selection.
class SystemState {
public:
    SystemState(int num_vars, std::vector<std::unordered_map<int, Rational>> rows,
                std::vector<Rational> rhs)
        : rows_(std::move(rows)), rhs_(std::move(rhs)), col_rows_all_(num_vars),
          col_rows_unused_(num_vars), row_used_(rows_.size(), false) {
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
            for (auto it = rows_[r].begin(); it != rows_[r].end();) {
                if (it->second == 0) {
                    it = rows_[r].erase(it);
                } else {
                    col_rows_all_[it->first].insert(r);
                    col_rows_unused_[it->first].insert(r);
                    ++it;
                }
            }
        }
    }

    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_cols() const { return static_cast<int>(col_rows_all_.size()); }
    const std::unordered_map<int, Rational>& row(int r) const { return rows_[r]; }
    const Rational& rhs(int r) const { return rhs_[r]; }
    bool used(int r) const { return row_used_[r]; }

    void mark_used(int r) {
        row_used_[r] = true;
        for (const auto& [c, x] : rows_[r]) col_rows_unused_[c].erase(r);
    }

    // Smallest unused-occupancy column, ties by index; -1 when none remain.
    int select_pivot_col(const std::vector<char>& col_pivoted) const {
        int best = -1;
        size_t best_count = std::numeric_limits<size_t>::max();
        for (int c = 0; c < num_cols(); ++c) {
            if (col_pivoted[c] || col_rows_unused_[c].empty()) continue;
            if (col_rows_unused_[c].size() < best_count) {
                best_count = col_rows_unused_[c].size();
                best = c;
            }
        }
        return best;
    }

    int select_pivot_row(int col) const {
        int best = -1;
        size_t best_nnz = std::numeric_limits<size_t>::max();
        for (int r : col_rows_unused_[col]) {
            if (rows_[r].size() < best_nnz ||
                (rows_[r].size() == best_nnz && r < best)) {
                best_nnz = rows_[r].size();
                best = r;
            }
        }
        return best;
    }

    std::vector<int> rows_with_col(int col) const {
        std::vector<int> out(col_rows_all_[col].begin(), col_rows_all_[col].end());
        std::sort(out.begin(), out.end());
        return out;
    }

    void scale_row(int r, const Rational& c) {
        for (auto& [col, x] : rows_[r]) x *= c;
        rhs_[r] *= c;
    }

    // rows_[dst] += c * rows_[src]
    void add_scaled_row(int dst, const Rational& c, int src) {
        for (const auto& [col, x] : rows_[src]) {
            auto it = rows_[dst].find(col);
            if (it == rows_[dst].end()) {
                rows_[dst].emplace(col, c * x);
                col_rows_all_[col].insert(dst);
                if (!row_used_[dst]) col_rows_unused_[col].insert(dst);
            } else {
                it->second += c * x;
                if (it->second == 0) {
                    rows_[dst].erase(it);
                    col_rows_all_[col].erase(dst);
                    col_rows_unused_[col].erase(dst);
                }
            }
        }
        rhs_[dst] += c * rhs_[src];
    }

private:
    std::vector<std::unordered_map<int, Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<std::set<int>> col_rows_all_;
    std::vector<std::set<int>> col_rows_unused_;
    std::vector<char> row_used_;
};

}  // namespace

LinearSolveResult solve_sparse_system(int num_vars,
                                      std::vector<std::unordered_map<int, Rational>> rows,
                                      std::vector<Rational> rhs,
                                      bool want_nullspace) {
    if (rows.size() != rhs.size())
        throw std::invalid_argument("solve_sparse_system: rows/rhs size mismatch");
    SystemState state(num_vars, std::move(rows), std::move(rhs));

    std::vector<char> col_pivoted(num_vars, false);
    std::vector<std::pair<int, int>> pivots;  // (row, col), in elimination order

    while (true) {
        const int col = state.select_pivot_col(col_pivoted);
        if (col < 0) break;
        const int prow = state.select_pivot_row(col);
        state.scale_row(prow, Rational(1) / state.row(prow).at(col));
        for (int r : state.rows_with_col(col)) {
            if (r == prow) continue;
            state.add_scaled_row(r, -state.row(r).at(col), prow);
        }
        state.mark_used(prow);
        col_pivoted[col] = true;
        pivots.emplace_back(prow, col);
    }

    LinearSolveResult result;
    for (int r = 0; r < state.num_rows(); ++r) {
        if (!state.used(r) && state.rhs(r) != 0) {
            result.consistent = false;
            return result;
        }
    }
    result.consistent = true;
    result.particular.assign(num_vars, Rational(0));
    for (const auto& [prow, pcol] : pivots) result.particular[pcol] = state.rhs(prow);

    if (want_nullspace) {
        for (int f = 0; f < num_vars; ++f) {
            if (col_pivoted[f]) continue;
            std::vector<Rational> z(num_vars, Rational(0));
            z[f] = 1;
            bool touched = false;
            for (const auto& [prow, pcol] : pivots) {
                auto it = state.row(prow).find(f);
                if (it != state.row(prow).end()) {
                    z[pcol] = -it->second;
                    touched = true;
                }
            }
            // Columns absent from every equation are genuinely free too.
            (void)touched;
            result.nullspace.push_back(std::move(z));
        }
    }
    return result;
}

}  // namespace detail

namespace {

// Accumulates M = sum_v v v^T restricted to the coordinates that occur.
void accumulate_outer(std::unordered_map<int, std::unordered_map<int, Rational>>& m,
                      const SparseVector& v) {
    for (const auto& [i, x] : v.entries())
        for (const auto& [j, y] : v.entries()) m[i][j] += x * y;
}

}  // namespace

std::optional<std::vector<Rational>> min_norm_solution(const std::vector<SparseVector>& vectors,
                                                       const SparseVector& target) {
    for (const auto& v : vectors)
        if (v.dim() != target.dim())
            throw std::invalid_argument("min_norm_solution: dimension mismatch");

    // Touched coordinates become the unknowns of the normal system.
    std::set<int> touched;
    for (const auto& v : vectors)
        for (const auto& [i, x] : v.entries()) touched.insert(i);
    for (const auto& [i, x] : target.entries()) touched.insert(i);

    std::unordered_map<int, int> var_of_coord;
    std::vector<int> coord_of_var;
    for (int c : touched) {
        var_of_coord[c] = static_cast<int>(coord_of_var.size());
        coord_of_var.push_back(c);
    }
    const int nv = static_cast<int>(coord_of_var.size());

    std::unordered_map<int, std::unordered_map<int, Rational>> m;
    for (const auto& v : vectors) accumulate_outer(m, v);

    std::vector<std::unordered_map<int, Rational>> rows(nv);
    std::vector<Rational> rhs(nv, Rational(0));
    for (int r = 0; r < nv; ++r) {
        const int coord = coord_of_var[r];
        auto it = m.find(coord);
        if (it != m.end())
            for (const auto& [j, x] : it->second) rows[r][var_of_coord[j]] = x;
        rhs[r] = target.at(coord);
    }

    auto solved = detail::solve_sparse_system(nv, std::move(rows), std::move(rhs), false);
    if (!solved.consistent) return std::nullopt;

    SparseVector y(target.dim());
    for (int r = 0; r < nv; ++r) y.set(coord_of_var[r], solved.particular[r]);

    std::vector<Rational> coeffs;
    coeffs.reserve(vectors.size());
    SparseVector check(target.dim());
    for (const auto& v : vectors) {
        coeffs.push_back(v.dot(y));
        check.axpy(coeffs.back(), v);
    }
    check.axpy(-1, target);
    if (!check.is_zero())
        throw std::logic_error("min_norm_solution: nonzero residual after normal solve");
    return coeffs;
}

std::optional<SparseVector> constrained_quadratic_min(
    const std::vector<SparseVector>& objective_vectors,
    const std::vector<SparseVector>& orthogonality_vectors,
    const SparseVector& normalizer) {
    const int dim = normalizer.dim();
    for (const auto& v : objective_vectors)
        if (v.dim() != dim) throw std::invalid_argument("constrained_quadratic_min: dimension mismatch");
    for (const auto& v : orthogonality_vectors)
        if (v.dim() != dim) throw std::invalid_argument("constrained_quadratic_min: dimension mismatch");

    // Independent constraint rows; infeasible iff normalizer is spanned.
    RowEchelonBasis ortho(dim);
    for (const auto& a : orthogonality_vectors) ortho.insert(a);
    const SparseVector reduced_normalizer = ortho.reduce(normalizer);
    if (reduced_normalizer.is_zero()) return std::nullopt;

    std::vector<const SparseVector*> constraints;
    std::vector<Rational> constraint_rhs;
    for (const auto& row : ortho.rows()) {
        constraints.push_back(&row);
        constraint_rhs.emplace_back(0);
    }
    constraints.push_back(&reduced_normalizer);
    constraint_rhs.emplace_back(1);

    // Objective matrix over the deduplicated vector set.
    std::set<std::map<int, Rational>> seen;
    std::unordered_map<int, std::unordered_map<int, Rational>> m;
    for (const auto& v : objective_vectors)
        if (seen.insert(v.entries()).second) accumulate_outer(m, v);

    std::set<int> touched;
    for (const auto& [i, row] : m) touched.insert(i);
    for (const auto* c : constraints)
        for (const auto& [i, x] : c->entries()) touched.insert(i);

    std::unordered_map<int, int> var_of_coord;
    std::vector<int> coord_of_var;
    for (int c : touched) {
        var_of_coord[c] = static_cast<int>(coord_of_var.size());
        coord_of_var.push_back(c);
    }
    const int nw = static_cast<int>(coord_of_var.size());
    const int nc = static_cast<int>(constraints.size());
    const int nv = nw + nc;

    // Stationarity rows (M w + C lambda = 0), then the constraint rows.
    std::vector<std::unordered_map<int, Rational>> rows(nw + nc);
    std::vector<Rational> rhs(nw + nc, Rational(0));
    for (int r = 0; r < nw; ++r) {
        auto it = m.find(coord_of_var[r]);
        if (it != m.end())
            for (const auto& [j, x] : it->second) rows[r][var_of_coord[j]] = x;
    }
    for (int k = 0; k < nc; ++k) {
        for (const auto& [i, x] : constraints[k]->entries()) {
            rows[var_of_coord[i]][nw + k] = x;
            rows[nw + k][var_of_coord[i]] = x;
        }
        rhs[nw + k] = constraint_rhs[k];
    }

    auto solved = detail::solve_sparse_system(nv, std::move(rows), std::move(rhs), true);
    if (!solved.consistent)
        throw std::logic_error("constrained_quadratic_min: KKT system inconsistent");

    std::vector<Rational> z = std::move(solved.particular);
    if (!solved.nullspace.empty()) {
        // Project onto the row space: z -= N (N^T N)^{-1} N^T z.
        const int k = static_cast<int>(solved.nullspace.size());
        std::vector<std::unordered_map<int, Rational>> gram(k);
        std::vector<Rational> g_rhs(k, Rational(0));
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                Rational dot(0);
                for (int i = 0; i < nv; ++i) dot += solved.nullspace[a][i] * solved.nullspace[b][i];
                if (dot != 0) gram[a][b] = dot;
            }
            for (int i = 0; i < nv; ++i) g_rhs[a] += solved.nullspace[a][i] * z[i];
        }
        auto proj = detail::solve_sparse_system(k, std::move(gram), std::move(g_rhs), false);
        if (!proj.consistent)
            throw std::logic_error("constrained_quadratic_min: degenerate nullspace gram");
        for (int a = 0; a < k; ++a)
            for (int i = 0; i < nv; ++i) z[i] -= proj.particular[a] * solved.nullspace[a][i];
    }

    SparseVector w(dim);
    for (int r = 0; r < nw; ++r) w.set(coord_of_var[r], z[r]);

    for (const auto& a : orthogonality_vectors)
        if (a.dot(w) != 0)
            throw std::logic_error("constrained_quadratic_min: orthogonality violated");
    if (normalizer.dot(w) != 1)
        throw std::logic_error("constrained_quadratic_min: normalization violated");
    return w;
}

}  // namespace spanprog
