#pragma once

#include "spanprog/linalg.hpp"
#include "spanprog/sparse_vector.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spanprog {

// Boolean input assignment, one bit per input variable.
struct InputAssignment {
    std::vector<int> bits;

    int arity() const { return static_cast<int>(bits.size()); }
};

// A span program (H, |t>, V): a target vector plus, per input variable, a
// 0-group and a 1-group of vectors, together with always-available free
// vectors. Vectors are stored once and referenced by stable insertion-order
// ids. Immutable after construction.
class SpanProgram {
public:
    SpanProgram(int dim, SparseVector target, int input_arity);

    int dim() const { return dim_; }
    int input_arity() const { return input_arity_; }
    const SparseVector& target() const { return target_; }
    int vector_count() const { return static_cast<int>(vectors_.size()); }
    const SparseVector& vector(int id) const { return vectors_.at(id); }
    const std::vector<SparseVector>& vectors() const { return vectors_; }
    const std::vector<int>& free_vectors() const { return free_ids_; }
    const std::vector<int>& group(int input, int bit) const;

    int add_free_vector(SparseVector v);
    int add_group_vector(int input, int bit, SparseVector v);

private:
    int dim_;
    SparseVector target_;
    int input_arity_;
    std::vector<SparseVector> vectors_;
    std::vector<int> free_ids_;
    std::vector<std::vector<int>> groups0_, groups1_;
};

struct PositiveWitness {
    std::map<int, Rational> coefficients;  // vector id -> coefficient, nonzero only
    Rational size;                         // ||w||^2
};

struct NegativeWitness {
    SparseVector functional;  // w' in H
    Rational size;            // sum over program vectors of <v,w'>^2
};

// V(x): free vectors first, then the matching bit-group of each input in
// order, deduplicated by id.
std::vector<int> available_vectors(const SpanProgram& p, const InputAssignment& x);

// 1 iff the target lies in span(V(x)); exact.
int evaluate(const SpanProgram& p, const InputAssignment& x);

// Minimum-size witnesses of Definition-style positive/negative form; nullopt
// on the opposite side of the dichotomy.
std::optional<PositiveWitness> positive_witness(const SpanProgram& p, const InputAssignment& x);
std::optional<NegativeWitness> negative_witness(const SpanProgram& p, const InputAssignment& x);

// Objective value sum_v <v,w>^2 over the program's deduplicated vector set.
Rational negative_objective(const SpanProgram& p, const SparseVector& w);

struct WitnessSizeSummary {
    Rational wsize1;
    Rational wsize0;
    double combined;        // sqrt(wsize0 * wsize1)
    bool vacuous1 = false;  // no 1-inputs supplied
    bool vacuous0 = false;  // no 0-inputs supplied
};

// Max positive witness size over inputs_1, max negative witness size over
// inputs_0, and their geometric mean. Throws if an input evaluates on the
// wrong side, naming its position.
WitnessSizeSummary wsize_over(const SpanProgram& p,
                              const std::vector<InputAssignment>& inputs_1,
                              const std::vector<InputAssignment>& inputs_0);

}  // namespace spanprog
