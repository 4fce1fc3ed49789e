// Acceptance suite: one test case per release criterion, each printing a
// single PASS/FAIL line. Run via ctest or directly; the CLI determinism case
// invokes the spanprog binary located at SPANPROG_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spanprog/analysis.hpp"
#include "spanprog/constructions.hpp"
#include "spanprog/graph.hpp"
#include "spanprog/span_program.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace spanprog;

namespace {

InputAssignment input_of(const Graph& g) { return InputAssignment{to_input_bits(g)}; }

Graph from_mask(int n, unsigned mask) {
    Graph g(n);
    for (int idx = 0; idx < pair_count(n); ++idx)
        if ((mask >> idx) & 1) {
            const auto [u, v] = pair_from_index(n, idx);
            g.add_edge(u, v);
        }
    return g;
}

Graph random_bipartite(int n, double p, std::mt19937_64& rng) {
    std::vector<int> side(n + 1);
    for (int v = 1; v <= n; ++v) side[v] = static_cast<int>(rng() % 2);
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (side[u] != side[v] && static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                g.add_edge(u, v);
    return g;
}

Graph random_connected(int n, double extra_p, std::mt19937_64& rng) {
    Graph g = random_tree(n, rng());
    if (n >= 2) {
        const Graph overlay = random_gnp(n, extra_p, rng());
        for (auto [u, v] : overlay.edges())
            if (!g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

Graph random_disconnected(int n, double p, std::mt19937_64& rng) {
    const int k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
    return disjoint_union(random_gnp(k, p, rng()), random_gnp(n - k, p, rng()));
}

void report(int criterion, const std::string& name, bool pass) {
    std::cout << "ACCEPTANCE " << criterion << " (" << name << "): " << (pass ? "PASS" : "FAIL")
              << std::endl;
    CHECK_MESSAGE(pass, "criterion ", criterion, " (", name, ")");
}

std::string run_cli(const std::string& args) {
    const std::string out_path = "acceptance_cli_out.tmp";
    const std::string command =
        std::string(SPANPROG_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int rc = std::system(command.c_str());
    std::ifstream f(out_path, std::ios::binary);
    std::ostringstream content;
    content << f.rdbuf();
    std::remove(out_path.c_str());
    return std::to_string(rc) + "\n" + content.str();
}

}  // namespace

TEST_CASE("criterion 1: oracle equivalence for P1 and P2") {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;

    for (int n = 1; n <= 5 && ok; ++n) {
        const auto p1 = build_p1(n);
        const auto p2 = n >= 2 ? std::optional<SpanProgram>(build_p2(n)) : std::nullopt;
        for (unsigned mask = 0; mask < (1u << pair_count(n)) && ok; ++mask) {
            const Graph g = from_mask(n, mask);
            const auto x = input_of(g);
            ok = ok && evaluate(p1, x) == (find_odd_cycle(g) ? 1 : 0);
            if (p2) ok = ok && evaluate(*p2, x) == (is_connected(g) ? 1 : 0);
        }
    }

    for (int n = 6; n <= 10 && ok; ++n) {
        const auto p1 = build_p1(n);
        const auto p2 = build_p2(n);
        int index = 0;
        for (double p : {0.2, 0.5, 0.8}) {
            for (int sample = 0; sample < 200 && ok; ++sample, ++index) {
                const Graph g = random_gnp(n, p, 1000003ULL * n + index);
                const auto x = input_of(g);
                ok = ok && evaluate(p1, x) == (find_odd_cycle(g) ? 1 : 0);
                ok = ok && evaluate(p2, x) == (is_connected(g) ? 1 : 0);
            }
        }
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && seconds < 300.0;
    report(1, "oracle equivalence, exhaustive n<=5 plus random n<=10", ok);
}

TEST_CASE("criterion 2: s-t subroutine matches the component oracle") {
    bool ok = true;
    for (int n = 2; n <= 4 && ok; ++n) {
        for (unsigned mask = 0; mask < (1u << pair_count(n)) && ok; ++mask) {
            const Graph g = from_mask(n, mask);
            const auto info = components(g);
            const auto x = input_of(g);
            for (int s = 1; s <= n && ok; ++s)
                for (int t = 1; t <= n && ok; ++t) {
                    if (s == t) continue;
                    ok = evaluate(build_st_connectivity(n, s, t), x) ==
                         (info.same_component(s, t) ? 1 : 0);
                }
        }
    }
    report(2, "s-t subroutine oracle equivalence", ok);
}

TEST_CASE("criterion 3: witness validity and dichotomy") {
    bool ok = true;
    std::mt19937_64 rng(333);

    std::vector<std::pair<std::string, Graph>> corpus;
    for (int n = 1; n <= 4; ++n)
        for (unsigned mask = 0; mask < (1u << pair_count(n)); ++mask)
            corpus.emplace_back("exhaustive", from_mask(n, mask));
    for (int n = 5; n <= 8; ++n)
        for (int sample = 0; sample < 6; ++sample)
            corpus.emplace_back("random", random_gnp(n, 0.2 + 0.1 * sample, rng()));

    for (const auto& [kind, g] : corpus) {
        const int n = g.n();
        const auto x = input_of(g);
        std::vector<SpanProgram> programs;
        programs.push_back(build_p1(n));
        if (n >= 2) {
            programs.push_back(build_p2(n));
            programs.push_back(build_st_connectivity(n, 1, n));
        }
        for (const auto& p : programs) {
            const auto pos = positive_witness(p, x);
            const auto neg = negative_witness(p, x);
            ok = ok && (pos.has_value() != neg.has_value());
            if (pos) {
                SparseVector residual(p.dim());
                for (const auto& [id, c] : pos->coefficients) residual.axpy(c, p.vector(id));
                residual.axpy(-1, p.target());
                ok = ok && residual.is_zero();
            }
            if (neg) {
                ok = ok && p.target().dot(neg->functional) == 1;
                for (int id : available_vectors(p, x))
                    ok = ok && p.vector(id).dot(neg->functional) == 0;
            }
            if (!ok) break;
        }
        if (!ok) break;
    }
    report(3, "witness validity and dichotomy", ok);
}

TEST_CASE("criterion 4: odd-cycle positive witness sizes (Eq. 1)") {
    bool ok = true;
    for (int d = 3; d <= 13; d += 2) {
        const Graph g = make_cycle(d);
        std::vector<int> cycle(d);
        for (int i = 0; i < d; ++i) cycle[i] = i + 1;
        const Rational expected(d + 1, d);

        const auto paper = paper_positive_witness_p1(g, cycle);
        ok = ok && paper.size == expected;

        const auto optimal = positive_witness(build_p1(d), input_of(g));
        ok = ok && optimal.has_value() && optimal->size <= expected && optimal->size < 2;
        if (!ok) break;
    }
    report(4, "Eq. 1: paper size (d+1)/d, optimal below 2", ok);
}

TEST_CASE("criterion 5: bipartite negative witnesses (Eq. 2)") {
    bool ok = true;
    for (int n = 2; n <= 10 && ok; ++n) {
        const auto program = build_p1(n);
        const Rational bound = Rational(n) + Rational(n) * n * n;
        std::mt19937_64 rng(5000 + n);
        const double ps[] = {0.2, 0.5, 0.8};
        for (int sample = 0; sample < 100 && ok; ++sample) {
            const Graph g = random_bipartite(n, ps[sample % 3], rng);
            const auto optimal = negative_witness(program, input_of(g));
            ok = ok && optimal.has_value() && optimal->size <= bound;

            const auto paper = paper_negative_witness_p1(g);
            for (const auto& v : program.vectors()) {
                const Rational ip = v.dot(paper.functional);
                ok = ok && ip * ip <= 1;
            }
        }
    }
    report(5, "Eq. 2: optimal wsize0 <= n+n^3, paper witness per-vector <= 1", ok);
}

TEST_CASE("criterion 6: connected positive witnesses (Eq. 4)") {
    bool ok = true;
    for (int n = 2; n <= 10 && ok; ++n) {
        const auto program = build_p2(n);
        std::mt19937_64 rng(6000 + n);
        for (int sample = 0; sample < 100 && ok; ++sample) {
            const Graph g = random_connected(n, 0.2 + 0.06 * (sample % 10), rng);
            const auto paper = paper_positive_witness_p2(g);
            ok = ok && paper.size <= Rational(n) * (n - 1);

            const auto optimal = positive_witness(program, input_of(g));
            ok = ok && optimal.has_value() && optimal->size <= Rational(n) * n;
        }
    }
    report(6, "Eq. 4: paper size <= n(n-1), optimal wsize1 <= n^2", ok);
}

TEST_CASE("criterion 7: disconnected negative witnesses (Eq. 5)") {
    bool ok = true;
    for (int n = 2; n <= 10 && ok; ++n) {
        const auto program = build_p2(n);
        std::mt19937_64 rng(7000 + n);
        for (int sample = 0; sample < 100 && ok; ++sample) {
            const Graph g = random_disconnected(n, 0.3 + 0.05 * (sample % 10), rng);
            const auto optimal = negative_witness(program, input_of(g));
            ok = ok && optimal.has_value() && optimal->size <= n;
        }
    }
    report(7, "Eq. 5: optimal wsize0 <= n, exact", ok);
}

TEST_CASE("criterion 8: scaling scans and log-log slope (Eqs. 3 and 6)") {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;

    ScanConfig p1_config;
    p1_config.program = "p1";
    p1_config.family = "cycles";
    p1_config.n_min = 3;
    p1_config.n_max = 15;
    p1_config.samples = 2;
    p1_config.seed = 8;
    const auto p1_rows = scaling_scan(p1_config);
    for (const auto& row : p1_rows) {
        ok = ok && row.combined <= std::sqrt(2.0 * (row.n + std::pow(row.n, 3)));
        ok = ok && row.pass;
    }
    ok = ok && fit_loglog_slope(p1_rows, 5) <= 1.65;

    ScanConfig p2_config;
    p2_config.program = "p2";
    p2_config.family = "split_paths";
    p2_config.n_min = 2;
    p2_config.n_max = 15;
    p2_config.samples = 2;
    p2_config.seed = 8;
    const auto p2_rows = scaling_scan(p2_config);
    for (const auto& row : p2_rows) {
        ok = ok && row.combined <= std::pow(row.n, 1.5);
        ok = ok && row.pass;
    }
    ok = ok && fit_loglog_slope(p2_rows, 5) <= 1.65;

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && seconds < 600.0;
    report(8, "Eqs. 3/6: scan bounds hold, slope <= 1.65", ok);
}

TEST_CASE("criterion 9: optimal witness never exceeds the paper-constructed one") {
    bool ok = true;
    std::mt19937_64 rng(999);

    // P1 positive side: odd cycles, plus graphs containing one.
    for (int d : {3, 5, 7}) {
        const Graph g = make_cycle(d);
        std::vector<int> cycle(d);
        for (int i = 0; i < d; ++i) cycle[i] = i + 1;
        const auto optimal = positive_witness(build_p1(d), input_of(g));
        ok = ok && optimal && optimal->size <= paper_positive_witness_p1(g, cycle).size;
    }
    // P1 negative side: random bipartite graphs.
    for (int n = 2; n <= 7 && ok; ++n) {
        const auto program = build_p1(n);
        for (int sample = 0; sample < 5 && ok; ++sample) {
            const Graph g = random_bipartite(n, 0.5, rng);
            const auto optimal = negative_witness(program, input_of(g));
            ok = ok && optimal && optimal->size <= paper_negative_witness_p1(g).size;
        }
    }
    // P2 positive side: random connected graphs.
    for (int n = 2; n <= 7 && ok; ++n) {
        const auto program = build_p2(n);
        for (int sample = 0; sample < 5 && ok; ++sample) {
            const Graph g = random_connected(n, 0.3, rng);
            const auto optimal = positive_witness(program, input_of(g));
            ok = ok && optimal && optimal->size <= paper_positive_witness_p2(g).size;
        }
    }
    // P2 negative side: random disconnected graphs, worst constructed witness
    // over the components cut off from vertex 1.
    for (int n = 2; n <= 7 && ok; ++n) {
        const auto program = build_p2(n);
        for (int sample = 0; sample < 5 && ok; ++sample) {
            const Graph g = random_disconnected(n, 0.4, rng);
            const auto optimal = negative_witness(program, input_of(g));
            const auto info = components(g);
            Rational best_paper(-1);
            for (int v = 1; v <= n; ++v) {
                if (info.same_component(1, v)) continue;
                const Rational size = paper_negative_witness_p2(g, v).size;
                if (best_paper < 0 || size < best_paper) best_paper = size;
            }
            ok = ok && optimal && best_paper >= 0 && optimal->size <= best_paper;
        }
    }
    report(9, "optimality sandwich: optimal <= paper-constructed", ok);
}

TEST_CASE("criterion 10: CLI determinism") {
    bool ok = true;

    const std::string graph_path = "acceptance_graph.tmp";
    ok = ok && run_cli("gen --family gnp --n 8 --p 0.4 --seed 1 --out " + graph_path) ==
                   run_cli("gen --family gnp --n 8 --p 0.4 --seed 1 --out " + graph_path);

    const std::vector<std::string> commands = {
        "gen --family gnp --n 8 --p 0.4 --seed 1",
        "eval --program p1 --graph " + graph_path + " --format json",
        "eval --program p2 --graph " + graph_path + " --format plain",
        "eval --program st --s 1 --t 3 --graph " + graph_path,
        "witness --program p1 --graph " + graph_path + " --full --compare-paper --format json",
        "witness --program p2 --graph " + graph_path + " --format csv",
        "bounds --program p1 --graph " + graph_path + " --format csv",
        "bounds --program p2 --graph " + graph_path + " --format json",
        "scan --program p1 --family cycles --n 3..8 --samples 3 --seed 4 --format csv",
        "scan --program p2 --family split_paths --n 2..8 --samples 3 --seed 4 --format json",
    };
    for (const auto& command : commands) {
        const std::string first = run_cli(command);
        const std::string second = run_cli(command);
        if (first != second) {
            std::cout << "  non-deterministic: spanprog " << command << std::endl;
            ok = false;
        }
    }
    std::remove(graph_path.c_str());
    report(10, "CLI determinism: same seed, identical bytes", ok);
}
