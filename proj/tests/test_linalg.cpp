#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spanprog/constructions.hpp"
#include "spanprog/linalg.hpp"

#include <random>

using namespace spanprog;

namespace {

SparseVector vec(int dim, std::initializer_list<std::pair<int, int>> entries) {
    SparseVector v(dim);
    for (auto [i, x] : entries) v.set(i, x);
    return v;
}

}  // namespace

TEST_CASE("span_membership basics") {
    const auto e0 = SparseVector::basis(2, 0);
    const auto e1 = SparseVector::basis(2, 1);

    CHECK(span_membership({e0}, e0));
    CHECK(span_membership({vec(2, {{0, 1}, {1, 1}}), vec(2, {{0, 1}, {1, -1}})}, e0));
    CHECK_FALSE(span_membership({vec(2, {{0, 1}, {1, 1}})}, e0));
}

TEST_CASE("span_membership empty vector list") {
    CHECK(span_membership({}, SparseVector(3)));
    CHECK_FALSE(span_membership({}, SparseVector::basis(3, 1)));
}

TEST_CASE("span_membership dimension mismatch") {
    CHECK_THROWS_AS(span_membership({SparseVector::basis(2, 0)}, SparseVector::basis(3, 0)),
                    std::invalid_argument);
}

TEST_CASE("min_norm_solution identity and symmetric split") {
    const auto e0 = SparseVector::basis(2, 0);
    auto w = min_norm_solution({e0}, e0);
    REQUIRE(w);
    CHECK((*w)[0] == 1);

    auto w2 = min_norm_solution({vec(2, {{0, 1}, {1, 1}}), vec(2, {{0, 1}, {1, -1}})}, e0);
    REQUIRE(w2);
    CHECK((*w2)[0] == Rational(1, 2));
    CHECK((*w2)[1] == Rational(1, 2));
}

TEST_CASE("min_norm_solution none when unsolvable") {
    CHECK_FALSE(min_norm_solution({vec(2, {{0, 1}, {1, 1}})}, SparseVector::basis(2, 0)));
    CHECK_FALSE(min_norm_solution({}, SparseVector::basis(2, 0)));
    auto empty = min_norm_solution({}, SparseVector(2));
    REQUIRE(empty);
    CHECK(empty->empty());
}

TEST_CASE("min_norm over P1 triangle vectors stays below 2") {
    const auto p1 = build_p1(3);
    const Graph triangle = make_complete(3);
    std::vector<SparseVector> avail;
    for (int id : available_vectors(p1, InputAssignment{to_input_bits(triangle)}))
        avail.push_back(p1.vector(id));
    auto w = min_norm_solution(avail, p1.target());
    REQUIRE(w);
    Rational size(0);
    for (const auto& c : *w) size += c * c;
    CHECK(size <= Rational(4, 3));
    CHECK(size < 2);
}

TEST_CASE("constrained_quadratic_min forced cases") {
    const auto e0 = SparseVector::basis(2, 0);
    const auto e1 = SparseVector::basis(2, 1);

    auto w = constrained_quadratic_min({e0}, {}, e0);
    REQUIRE(w);
    CHECK(*w == e0);
    CHECK(e0.dot(*w) * e0.dot(*w) == 1);

    auto w2 = constrained_quadratic_min({e0, e1}, {e1}, e0);
    REQUIRE(w2);
    CHECK(*w2 == e0);
}

TEST_CASE("constrained_quadratic_min infeasible when normalizer is spanned") {
    const auto e0 = SparseVector::basis(2, 0);
    CHECK_FALSE(constrained_quadratic_min({e0}, {e0}, e0));
    CHECK_FALSE(constrained_quadratic_min({}, {vec(2, {{0, 1}, {1, 1}}), SparseVector::basis(2, 1)},
                                          vec(2, {{0, 2}, {1, 1}})));
}

TEST_CASE("P1 all-vector objective on the single edge stays below n + n^3") {
    const auto p1 = build_p1(2);
    Graph g(2);
    g.add_edge(1, 2);
    std::vector<SparseVector> avail;
    for (int id : available_vectors(p1, InputAssignment{to_input_bits(g)}))
        avail.push_back(p1.vector(id));
    auto w = constrained_quadratic_min(p1.vectors(), avail, p1.target());
    REQUIRE(w);
    Rational value(0);
    for (const auto& v : p1.vectors()) {
        const Rational ip = v.dot(*w);
        value += ip * ip;
    }
    CHECK(value <= 10);
}

TEST_CASE("membership and min_norm agree on random sparse instances") {
    std::mt19937_64 rng(20240817);
    const int dim = 7;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<SparseVector> vectors;
        const int count = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < count; ++i) {
            SparseVector v(dim);
            const int nnz = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < nnz; ++j)
                v.set(static_cast<int>(rng() % dim), static_cast<int>(rng() % 5) - 2);
            vectors.push_back(v);
        }
        SparseVector target(dim);
        if (trial % 2 == 0) {
            for (const auto& v : vectors)
                target.axpy(static_cast<int>(rng() % 5) - 2, v);
        } else {
            const int nnz = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < nnz; ++j)
                target.set(static_cast<int>(rng() % dim), static_cast<int>(rng() % 5) - 2);
        }

        const bool member = span_membership(vectors, target);
        const auto solution = min_norm_solution(vectors, target);
        CHECK(member == solution.has_value());
        if (solution) {
            SparseVector residual(dim);
            for (size_t i = 0; i < vectors.size(); ++i) residual.axpy((*solution)[i], vectors[i]);
            residual.axpy(-1, target);
            CHECK(residual.is_zero());
        }
    }
}

TEST_CASE("constrained_quadratic_min satisfies constraints exactly on random instances") {
    std::mt19937_64 rng(9118);
    const int dim = 6;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<SparseVector> objective, ortho;
        for (int i = 0; i < 4; ++i) {
            SparseVector v(dim);
            for (int j = 0; j < 2; ++j)
                v.set(static_cast<int>(rng() % dim), static_cast<int>(rng() % 5) - 2);
            objective.push_back(v);
        }
        for (int i = 0; i < 2; ++i) {
            SparseVector v(dim);
            for (int j = 0; j < 2; ++j)
                v.set(static_cast<int>(rng() % dim), static_cast<int>(rng() % 5) - 2);
            ortho.push_back(v);
        }
        SparseVector normalizer(dim);
        normalizer.set(static_cast<int>(rng() % dim), 1 + static_cast<int>(rng() % 3));

        auto w = constrained_quadratic_min(objective, ortho, normalizer);
        RowEchelonBasis basis(dim);
        for (const auto& a : ortho) basis.insert(a);
        const bool feasible = !basis.contains(normalizer);
        CHECK(feasible == w.has_value());
        if (w) {
            CHECK(normalizer.dot(*w) == 1);
            for (const auto& a : ortho) CHECK(a.dot(*w) == 0);
        }
    }
}
