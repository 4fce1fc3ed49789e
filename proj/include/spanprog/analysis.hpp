#pragma once

#include "spanprog/constructions.hpp"
#include "spanprog/graph.hpp"
#include "spanprog/span_program.hpp"

#include <string>
#include <vector>

namespace spanprog {

// One verified witness-size bound: a computed size against the explicit
// formula it must stay under, with the comparison done exactly.
struct BoundReport {
    std::string program;     // "P1" | "P2" | "ST"
    int n = 0;
    std::string input;       // human-readable input description
    std::string side;        // "wsize1" | "wsize0"
    Rational computed;
    Rational bound;
    bool pass = false;
    std::string provenance;  // "optimal" | "paper-constructed"

    double computed_float() const { return to_double(computed); }
    double bound_float() const { return to_double(bound); }
};

// Non-bipartite graph: optimal positive size vs 2 and the constructed cycle
// witness vs (d+1)/d. Bipartite graph: optimal and constructed negative sizes
// vs n + n^3.
std::vector<BoundReport> verify_bounds_p1(const Graph& g);

// Connected graph: optimal positive size vs n^2 and the constructed path
// witness vs n(n-1). Disconnected: optimal negative size vs n and the largest
// per-component constructed witness vs n.
std::vector<BoundReport> verify_bounds_p2(const Graph& g);

struct ScalingRow {
    int n = 0;
    double wsize1 = 0.0;
    double wsize0 = 0.0;
    double combined = 0.0;
    double bound = 0.0;  // sqrt(2(n+n^3)) for P1, n^1.5 for P2
    bool pass = false;
};

struct ScanConfig {
    std::string program;  // "p1" | "p2"
    std::string family;   // "cycles" (P1) | "split_paths" (P2)
    int n_min = 3;
    int n_max = 13;
    int samples = 2;      // graphs per n; extras are seeded vertex relabelings
    uint64_t seed = 0;
};

// Per-n combined witness size over the family's sampled inputs against the
// explicit bound curve. Throws when the family cannot produce both a 1-input
// and a 0-input at some n, naming that n.
std::vector<ScalingRow> scaling_scan(const ScanConfig& config);

// Ordinary least-squares slope of log(combined) against log(n), restricted to
// rows with n >= n_min.
double fit_loglog_slope(const std::vector<ScalingRow>& rows, int n_min = 5);

}  // namespace spanprog
