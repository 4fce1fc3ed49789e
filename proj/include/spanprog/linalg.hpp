#pragma once

#include "spanprog/sparse_vector.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace spanprog {

// Incrementally maintained row-echelon basis of a rational subspace. Each
// row's pivot is its first nonzero entry and carries coefficient 1, so a
// single ascending pass reduces an arbitrary vector against the basis.
class RowEchelonBasis {
public:
    explicit RowEchelonBasis(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVector>& rows() const { return rows_; }

    // Residual of v after elimination against the basis; zero iff v is in span.
    SparseVector reduce(SparseVector v) const;

    // Inserts v; returns true iff the rank grew.
    bool insert(SparseVector v);

    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

private:
    int dim_;
    std::vector<SparseVector> rows_;
    std::unordered_map<int, int> row_of_pivot_;
};

// Exact membership of target in span(vectors). Spans of the empty list
// contain exactly the zero vector.
bool span_membership(const std::vector<SparseVector>& vectors, const SparseVector& target);

// Minimum-norm exact solution of sum_i w_i * vectors[i] = target, or nullopt
// when no solution exists. Computed via the normal system (A A^T) y = target,
// w = A^T y, which is the unique least-norm solution whenever one exists.
std::optional<std::vector<Rational>> min_norm_solution(const std::vector<SparseVector>& vectors,
                                                       const SparseVector& target);

// Minimizes sum_{b in objective} <b,w>^2 subject to <normalizer,w> = 1 and
// <a,w> = 0 for all a in orthogonality. Returns nullopt when the constraints
// are infeasible, i.e. normalizer lies in span(orthogonality). The KKT system
// is solved exactly; among solutions the minimum-norm one is returned.
std::optional<SparseVector> constrained_quadratic_min(
    const std::vector<SparseVector>& objective_vectors,
    const std::vector<SparseVector>& orthogonality_vectors,
    const SparseVector& normalizer);

namespace detail {

// Sparse exact Gauss-Jordan elimination for a general rational linear system.
// Pivots are chosen Markowitz-style (sparsest column, then sparsest row) to
// keep fill-in local for block-structured systems.
struct LinearSolveResult {
    bool consistent = false;
    std::vector<Rational> particular;            // one solution, free vars at 0
    std::vector<std::vector<Rational>> nullspace; // basis of the homogeneous solutions
};

LinearSolveResult solve_sparse_system(int num_vars,
                                      std::vector<std::unordered_map<int, Rational>> rows,
                                      std::vector<Rational> rhs,
                                      bool want_nullspace);

}  // namespace detail

}  // namespace spanprog
