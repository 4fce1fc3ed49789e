#include "spanprog/constructions.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace spanprog {

SparseVector VectorLayoutP1::free_vector(int k) const {
    const BasisIndexerP1 basis{n};
    SparseVector v(basis.dim());
    v.set(basis.zero(), 1);
    v.set(basis.index(k, k, 0), 1);
    v.set(basis.index(k, k, 1), 1);
    return v;
}

SparseVector VectorLayoutP1::edge_vector(int u, int v, int k, int t) const {
    const BasisIndexerP1 basis{n};
    SparseVector vec(basis.dim());
    vec.set(basis.index(u, k, t), 1);
    vec.set(basis.index(v, k, 1 - t), 1);
    return vec;
}

SparseVector VectorLayoutP2::free_vector(int k) const {
    const BasisIndexerP2 basis{n};
    SparseVector v(basis.dim());
    v.set(basis.index(0, k), 1);
    v.set(basis.index(1, k), 1);
    v.set(basis.index(k, k), -1);
    return v;
}

SparseVector VectorLayoutP2::edge_vector(int u, int v, int k) const {
    const BasisIndexerP2 basis{n};
    SparseVector vec(basis.dim());
    vec.set(basis.index(u, k), 1);
    vec.set(basis.index(v, k), -1);
    return vec;
}

SpanProgram build_p1(int n) {
    if (n < 1) throw std::invalid_argument("build_p1: n must be positive");
    const BasisIndexerP1 basis{n};
    const VectorLayoutP1 layout{n};
    SpanProgram p(basis.dim(), SparseVector::basis(basis.dim(), basis.zero()), pair_count(n));
    for (int k = 1; k <= n; ++k) p.add_free_vector(layout.free_vector(k));
    for (int pi = 0; pi < pair_count(n); ++pi) {
        const auto [u, v] = pair_from_index(n, pi);
        for (int k = 1; k <= n; ++k) {
            p.add_group_vector(pi, 1, layout.edge_vector(u, v, k, 0));
            p.add_group_vector(pi, 1, layout.edge_vector(u, v, k, 1));
        }
    }
    return p;
}

SpanProgram build_p2(int n) {
    if (n < 2) throw std::invalid_argument("build_p2: n must be at least 2");
    const BasisIndexerP2 basis{n};
    const VectorLayoutP2 layout{n};
    SparseVector target(basis.dim());
    for (int k = 2; k <= n; ++k) target.set(basis.index(0, k), 1);
    SpanProgram p(basis.dim(), std::move(target), pair_count(n));
    for (int k = 2; k <= n; ++k) p.add_free_vector(layout.free_vector(k));
    for (int pi = 0; pi < pair_count(n); ++pi) {
        const auto [u, v] = pair_from_index(n, pi);
        for (int k = 2; k <= n; ++k) p.add_group_vector(pi, 1, layout.edge_vector(u, v, k));
    }
    return p;
}

SpanProgram build_st_connectivity(int n, int s, int t) {
    if (n < 2) throw std::invalid_argument("build_st_connectivity: n must be at least 2");
    if (s < 1 || s > n || t < 1 || t > n)
        throw std::out_of_range("build_st_connectivity: vertex out of range");
    if (s == t) throw std::invalid_argument("build_st_connectivity: s and t must differ");
    SparseVector target(n);
    target.set(s - 1, 1);
    target.set(t - 1, -1);
    SpanProgram p(n, std::move(target), pair_count(n));
    for (int pi = 0; pi < pair_count(n); ++pi) {
        const auto [u, v] = pair_from_index(n, pi);
        SparseVector vec(n);
        vec.set(u - 1, 1);
        vec.set(v - 1, -1);
        p.add_group_vector(pi, 1, vec);
    }
    return p;
}

namespace {

void validate_cycle(const Graph& g, const OddCycle& cycle) {
    const int d = static_cast<int>(cycle.size());
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("paper_positive_witness_p1: cycle length must be odd and >= 3");
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (static_cast<int>(distinct.size()) != d)
        throw std::invalid_argument("paper_positive_witness_p1: cycle vertices must be distinct");
    for (int i = 0; i < d; ++i) {
        if (!g.has_edge(cycle[i], cycle[(i + 1) % d]))
            throw std::invalid_argument("paper_positive_witness_p1: cycle edge missing from graph");
    }
}

}  // namespace

PositiveWitness paper_positive_witness_p1(const Graph& g, const OddCycle& cycle,
                                          CycleWitnessStyle style) {
    validate_cycle(g, cycle);
    const int n = g.n();
    const int d = static_cast<int>(cycle.size());
    const VectorLayoutP1 layout{n};
    const BasisIndexerP1 basis{n};

    const int rotations = style == CycleWitnessStyle::averaged ? d : 1;
    const Rational weight = style == CycleWitnessStyle::averaged ? Rational(1, d) : Rational(1);

    PositiveWitness witness;
    SparseVector sum(basis.dim());
    auto add = [&](int id, const Rational& c, const SparseVector& vec) {
        witness.coefficients[id] += c;
        sum.axpy(c, vec);
    };

    for (int r = 0; r < rotations; ++r) {
        const int k = cycle[r];  // each rotation runs in its start vertex's subspace
        add(layout.free_id(k), weight, layout.free_vector(k));
        for (int j = 0; j < d; ++j) {
            const int a = cycle[(r + j) % d];
            const int b = cycle[(r + j + 1) % d];
            const int parity_a = j % 2;
            const int t = a < b ? parity_a : 1 - parity_a;
            const int pi = pair_index(n, a, b);
            const Rational c = (j % 2 == 0) ? -weight : weight;
            add(layout.edge_id(pi, k, t), c, layout.edge_vector(std::min(a, b), std::max(a, b), k, t));
        }
    }

    sum.axpy(-1, SparseVector::basis(basis.dim(), basis.zero()));
    if (!sum.is_zero())
        throw std::logic_error("paper_positive_witness_p1: witness does not reproduce the target");

    witness.size = 0;
    for (auto it = witness.coefficients.begin(); it != witness.coefficients.end();) {
        if (it->second == 0) {
            it = witness.coefficients.erase(it);
        } else {
            witness.size += it->second * it->second;
            ++it;
        }
    }
    return witness;
}

NegativeWitness paper_negative_witness_p1(const Graph& g) {
    if (auto cycle = find_odd_cycle(g))
        throw std::invalid_argument("paper_negative_witness_p1: graph has an odd cycle");
    const int n = g.n();
    const BasisIndexerP1 basis{n};
    const VectorLayoutP1 layout{n};

    SparseVector w(basis.dim());
    w.set(basis.zero(), 1);
    // Per subspace k: vertices at even BFS distance from k get <w'|._{k,1}> = -1,
    // odd-distance vertices get <w'|._{k,0}> = +1; unreachable coordinates stay 0.
    for (int k = 1; k <= n; ++k) {
        std::vector<int> dist(n + 1, -1);
        dist[k] = 0;
        std::deque<int> queue{k};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int v = 1; v <= n; ++v) {
            if (dist[v] == -1) continue;
            if (dist[v] % 2 == 0)
                w.set(basis.index(v, k, 1), -1);
            else
                w.set(basis.index(v, k, 0), 1);
        }
    }

    // Validity: pairs to 1 with the target, annihilates every available vector.
    for (int k = 1; k <= n; ++k)
        if (layout.free_vector(k).dot(w) != 0)
            throw std::logic_error("paper_negative_witness_p1: free vector not annihilated");
    for (auto [u, v] : g.edges())
        for (int k = 1; k <= n; ++k)
            for (int t = 0; t < 2; ++t)
                if (layout.edge_vector(u, v, k, t).dot(w) != 0)
                    throw std::logic_error("paper_negative_witness_p1: edge vector not annihilated");

    NegativeWitness witness;
    witness.functional = std::move(w);
    witness.size = 0;
    for (int pi = 0; pi < pair_count(n); ++pi) {
        const auto [u, v] = pair_from_index(n, pi);
        for (int k = 1; k <= n; ++k) {
            for (int t = 0; t < 2; ++t) {
                const Rational ip = layout.edge_vector(u, v, k, t).dot(witness.functional);
                witness.size += ip * ip;
            }
        }
    }
    return witness;
}

PositiveWitness paper_positive_witness_p2(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("paper_positive_witness_p2: graph disconnected");
    const int n = g.n();
    const BasisIndexerP2 basis{n};
    const VectorLayoutP2 layout{n};

    PositiveWitness witness;
    witness.size = 0;
    if (n < 2) return witness;  // one vertex: the program degenerates, nothing to express
    SparseVector sum(basis.dim());
    for (int k = 2; k <= n; ++k) {
        witness.coefficients[layout.free_id(k)] = 1;
        sum.axpy(1, layout.free_vector(k));
        const auto path = shortest_path(g, 1, k);
        for (size_t j = 0; j + 1 < path->size(); ++j) {
            const int a = (*path)[j], b = (*path)[j + 1];
            const int pi = pair_index(n, a, b);
            // Stored vector is |min> - |max>; the telescoping term is |b> - |a|.
            const Rational c = a < b ? Rational(-1) : Rational(1);
            witness.coefficients[layout.edge_id(pi, k)] = c;
            sum.axpy(c, layout.edge_vector(std::min(a, b), std::max(a, b), k));
        }
    }

    SparseVector target(basis.dim());
    for (int k = 2; k <= n; ++k) target.set(basis.index(0, k), 1);
    sum.axpy(-1, target);
    if (!sum.is_zero())
        throw std::logic_error("paper_positive_witness_p2: witness does not reproduce the target");

    for (const auto& [id, c] : witness.coefficients) witness.size += c * c;
    return witness;
}

NegativeWitness paper_negative_witness_p2(const Graph& g, int v) {
    const int n = g.n();
    if (v < 1 || v > n) throw std::out_of_range("paper_negative_witness_p2: vertex out of range");
    const auto info = components(g);
    if (info.same_component(1, v))
        throw std::invalid_argument("paper_negative_witness_p2: vertex is connected to vertex 1");

    const BasisIndexerP2 basis{n};
    const VectorLayoutP2 layout{n};
    const int cv = info.component_of[v];
    const Rational dv(info.sizes[cv]);

    // Subspaces k inside C_v: |0_k> gets 1/d_v, vertices outside C_v get
    // -1/d_v (including components unreachable from the seeds, so that only
    // C_v's border pairs contribute), vertices inside C_v stay 0.
    SparseVector w(basis.dim());
    for (int k = 2; k <= n; ++k) {
        if (info.component_of[k] != cv) continue;
        w.set(basis.index(0, k), 1 / dv);
        for (int u = 1; u <= n; ++u)
            if (info.component_of[u] != cv) w.set(basis.index(u, k), -1 / dv);
    }

    SparseVector target(basis.dim());
    for (int k = 2; k <= n; ++k) target.set(basis.index(0, k), 1);
    if (target.dot(w) != 1)
        throw std::logic_error("paper_negative_witness_p2: target pairing is not 1");
    for (int k = 2; k <= n; ++k)
        if (layout.free_vector(k).dot(w) != 0)
            throw std::logic_error("paper_negative_witness_p2: free vector not annihilated");
    for (auto [a, b] : g.edges())
        for (int k = 2; k <= n; ++k)
            if (layout.edge_vector(a, b, k).dot(w) != 0)
                throw std::logic_error("paper_negative_witness_p2: edge vector not annihilated");

    NegativeWitness witness;
    witness.functional = std::move(w);
    witness.size = 0;
    for (int pi = 0; pi < pair_count(n); ++pi) {
        const auto [a, b] = pair_from_index(n, pi);
        for (int k = 2; k <= n; ++k) {
            const Rational ip = layout.edge_vector(a, b, k).dot(witness.functional);
            witness.size += ip * ip;
        }
    }
    return witness;
}

}  // namespace spanprog
