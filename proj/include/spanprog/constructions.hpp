#pragma once

#include "spanprog/graph.hpp"
#include "spanprog/span_program.hpp"

namespace spanprog {

// Basis layout of P1: coordinate 0 is |0>, then |v_{k,b}| for v,k in [1..n],
// b in {0,1}, packed (v,k,b)-major. Dimension 2n^2+1.
struct BasisIndexerP1 {
    int n;

    int dim() const { return 2 * n * n + 1; }
    int zero() const { return 0; }
    int index(int v, int k, int b) const { return 1 + ((v - 1) * n + (k - 1)) * 2 + b; }
};

// Basis layout of P2: |v_k> for v in [0..n], k in [2..n]. Dimension n^2-1.
struct BasisIndexerP2 {
    int n;

    int dim() const { return n * n - 1; }
    int index(int v, int k) const { return (k - 2) * (n + 1) + v; }
};

// Vector-id layout shared by the builders and the explicit witness
// constructions. Ids are insertion order: free vectors first, then per
// unordered pair, per subspace k, the group vectors.
struct VectorLayoutP1 {
    int n;

    int free_id(int k) const { return k - 1; }
    // t = 0: |u_{k,0}> + |v_{k,1}>; t = 1: |u_{k,1}> + |v_{k,0}> (u < v).
    int edge_id(int pair_idx, int k, int t) const {
        return n + pair_idx * 2 * n + (k - 1) * 2 + t;
    }

    SparseVector free_vector(int k) const;
    SparseVector edge_vector(int u, int v, int k, int t) const;  // u < v
};

struct VectorLayoutP2 {
    int n;

    int free_id(int k) const { return k - 2; }
    int edge_id(int pair_idx, int k) const { return (n - 1) + pair_idx * (n - 1) + (k - 2); }

    SparseVector free_vector(int k) const;                 // |0_k> + |1_k> - |k_k>
    SparseVector edge_vector(int u, int v, int k) const;   // |u_k> - |v_k>, u < v
};

// Span program detecting the presence of an odd cycle; the graph is bipartite
// iff the program evaluates to 0.
SpanProgram build_p1(int n);

// Span program detecting graph connectivity (n >= 2; a 1-vertex graph is
// trivially connected and needs no program).
SpanProgram build_p2(int n);

// s-t connectivity subroutine: target |s> - |t>, one vector |u> - |v> per
// potential edge, no free vectors.
SpanProgram build_st_connectivity(int n, int s, int t);

enum class CycleWitnessStyle {
    averaged,         // all d rotations, coefficient 1/d each; size (d+1)/d
    single_rotation,  // one rotation, unit coefficients; size d+1
};

// Explicit positive witness for P1 from an odd cycle: each rotation starts at
// a different cycle vertex and runs inside that vertex's subspace, with
// alternating signs along the cycle edges.
PositiveWitness paper_positive_witness_p1(const Graph& g, const OddCycle& cycle,
                                          CycleWitnessStyle style = CycleWitnessStyle::averaged);

// Explicit negative witness for P1 on a bipartite graph: seeds <w'|0> = 1,
// <w'|k_{k,1}> = -1 per subspace, then sign-flip propagation along edges.
NegativeWitness paper_negative_witness_p1(const Graph& g);

// Explicit positive witness for P2 on a connected graph: per subspace k, the
// free vector plus a telescoping shortest 1->k path.
PositiveWitness paper_positive_witness_p2(const Graph& g);

// Explicit negative witness for P2 given a vertex v cut off from vertex 1:
// per-subspace values 1/d_v on |0_k> for k in v's component, constant on each
// side of the component boundary.
NegativeWitness paper_negative_witness_p2(const Graph& g, int v);

}  // namespace spanprog
