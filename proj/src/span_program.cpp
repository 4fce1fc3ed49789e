#include "spanprog/span_program.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace spanprog {

SpanProgram::SpanProgram(int dim, SparseVector target, int input_arity)
    : dim_(dim), target_(std::move(target)), input_arity_(input_arity),
      groups0_(input_arity), groups1_(input_arity) {
    if (dim < 1) throw std::invalid_argument("SpanProgram: dimension must be positive");
    if (input_arity < 0) throw std::invalid_argument("SpanProgram: negative input arity");
    if (target_.dim() != dim) throw std::invalid_argument("SpanProgram: target dimension mismatch");
}

const std::vector<int>& SpanProgram::group(int input, int bit) const {
    if (input < 0 || input >= input_arity_)
        throw std::out_of_range("SpanProgram: input index out of range");
    if (bit != 0 && bit != 1) throw std::invalid_argument("SpanProgram: bit must be 0 or 1");
    return bit ? groups1_[input] : groups0_[input];
}

int SpanProgram::add_free_vector(SparseVector v) {
    if (v.dim() != dim_) throw std::invalid_argument("SpanProgram: vector dimension mismatch");
    vectors_.push_back(std::move(v));
    free_ids_.push_back(vector_count() - 1);
    return vector_count() - 1;
}

int SpanProgram::add_group_vector(int input, int bit, SparseVector v) {
    if (v.dim() != dim_) throw std::invalid_argument("SpanProgram: vector dimension mismatch");
    if (input < 0 || input >= input_arity_)
        throw std::out_of_range("SpanProgram: input index out of range");
    vectors_.push_back(std::move(v));
    (bit ? groups1_[input] : groups0_[input]).push_back(vector_count() - 1);
    return vector_count() - 1;
}

namespace {

void check_arity(const SpanProgram& p, const InputAssignment& x) {
    if (x.arity() != p.input_arity())
        throw std::invalid_argument("input arity mismatch: program expects " +
                                    std::to_string(p.input_arity()) + ", got " +
                                    std::to_string(x.arity()));
    for (int b : x.bits)
        if (b != 0 && b != 1) throw std::invalid_argument("input bits must be 0 or 1");
}

}  // namespace

std::vector<int> available_vectors(const SpanProgram& p, const InputAssignment& x) {
    check_arity(p, x);
    std::vector<int> ids;
    std::set<int> seen;
    for (int id : p.free_vectors())
        if (seen.insert(id).second) ids.push_back(id);
    for (int i = 0; i < p.input_arity(); ++i)
        for (int id : p.group(i, x.bits[i]))
            if (seen.insert(id).second) ids.push_back(id);
    return ids;
}

int evaluate(const SpanProgram& p, const InputAssignment& x) {
    std::vector<SparseVector> avail;
    for (int id : available_vectors(p, x)) avail.push_back(p.vector(id));
    return span_membership(avail, p.target()) ? 1 : 0;
}

std::optional<PositiveWitness> positive_witness(const SpanProgram& p, const InputAssignment& x) {
    const auto ids = available_vectors(p, x);
    std::vector<SparseVector> avail;
    avail.reserve(ids.size());
    for (int id : ids) avail.push_back(p.vector(id));
    auto coeffs = min_norm_solution(avail, p.target());
    if (!coeffs) return std::nullopt;
    PositiveWitness w;
    w.size = 0;
    for (size_t i = 0; i < ids.size(); ++i) {
        w.size += (*coeffs)[i] * (*coeffs)[i];
        if ((*coeffs)[i] != 0) w.coefficients[ids[i]] = (*coeffs)[i];
    }
    return w;
}

Rational negative_objective(const SpanProgram& p, const SparseVector& w) {
    std::set<std::map<int, Rational>> seen;
    Rational total(0);
    for (const auto& v : p.vectors()) {
        if (!seen.insert(v.entries()).second) continue;
        const Rational ip = v.dot(w);
        total += ip * ip;
    }
    return total;
}

std::optional<NegativeWitness> negative_witness(const SpanProgram& p, const InputAssignment& x) {
    std::vector<SparseVector> avail;
    for (int id : available_vectors(p, x)) avail.push_back(p.vector(id));
    std::set<std::map<int, Rational>> seen;
    std::vector<SparseVector> objective;
    for (const auto& v : p.vectors())
        if (seen.insert(v.entries()).second) objective.push_back(v);
    auto w = constrained_quadratic_min(objective, avail, p.target());
    if (!w) return std::nullopt;
    NegativeWitness nw;
    nw.functional = std::move(*w);
    nw.size = negative_objective(p, nw.functional);
    return nw;
}

WitnessSizeSummary wsize_over(const SpanProgram& p,
                              const std::vector<InputAssignment>& inputs_1,
                              const std::vector<InputAssignment>& inputs_0) {
    WitnessSizeSummary out;
    out.wsize1 = 0;
    out.wsize0 = 0;
    out.vacuous1 = inputs_1.empty();
    out.vacuous0 = inputs_0.empty();
    for (size_t i = 0; i < inputs_1.size(); ++i) {
        auto w = positive_witness(p, inputs_1[i]);
        if (!w)
            throw std::invalid_argument("inputs_1[" + std::to_string(i) +
                                        "] evaluates to 0, not 1");
        out.wsize1 = std::max(out.wsize1, w->size);
    }
    for (size_t i = 0; i < inputs_0.size(); ++i) {
        auto w = negative_witness(p, inputs_0[i]);
        if (!w)
            throw std::invalid_argument("inputs_0[" + std::to_string(i) +
                                        "] evaluates to 1, not 0");
        out.wsize0 = std::max(out.wsize0, w->size);
    }
    out.combined = std::sqrt(to_double(out.wsize0) * to_double(out.wsize1));
    return out;
}

}  // namespace spanprog
