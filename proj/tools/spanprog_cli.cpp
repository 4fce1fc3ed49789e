#include "spanprog/analysis.hpp"
#include "spanprog/constructions.hpp"
#include "spanprog/graph.hpp"
#include "spanprog/span_program.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::json;  // sorted keys, so parse + re-dump round-trips byte-identically
using namespace spanprog;

namespace {

constexpr int kExitPassFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInfeasible = 3;

struct CommonOptions {
    std::string format = "plain";  // json|csv|plain
    std::string input_format = "auto";
    double tolerance = 1e-9;
    std::string out;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format: json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd->add_option("--input-format", opts.input_format, "Graph file format: auto, edges or matrix")
        ->check(CLI::IsMember({"auto", "edges", "matrix"}));
    cmd->add_option("--tolerance", opts.tolerance, "Tolerance for floating-point cross-checks")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", opts.out, "Write the report to a file instead of stdout");
}

GraphFormat parse_format(const std::string& name) {
    if (name == "edges") return GraphFormat::edge_list;
    if (name == "matrix") return GraphFormat::adjacency_matrix;
    return GraphFormat::auto_detect;
}

void emit(const CommonOptions& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opts.out);
    f << text;
}

std::string csv_header() { return "program,n,input,side,computed,bound,pass\n"; }

std::string csv_row(const BoundReport& r) {
    std::ostringstream os;
    os << r.program << "," << r.n << "," << r.input << "," << r.side << "-"
       << (r.provenance == "optimal" ? "optimal" : "paper") << "," << to_string(r.computed) << ","
       << to_string(r.bound) << "," << (r.pass ? "true" : "false") << "\n";
    return os.str();
}

json report_json(const BoundReport& r) {
    return json{{"program", r.program},
                {"n", r.n},
                {"input", r.input},
                {"side", r.side},
                {"provenance", r.provenance},
                {"computed", to_string(r.computed)},
                {"computed_float", format_double(r.computed_float())},
                {"bound", to_string(r.bound)},
                {"pass", r.pass}};
}

struct ProgramInput {
    std::string tag;  // p1|p2|st
    Graph graph;
    SpanProgram program;
    InputAssignment assignment;
};

ProgramInput load_program(const std::string& tag, const std::string& path,
                          const CommonOptions& opts, int s, int t) {
    Graph g = read_graph_file(path, parse_format(opts.input_format));
    if (tag == "p1")
        return {tag, g, build_p1(g.n()), InputAssignment{to_input_bits(g)}};
    if (tag == "p2")
        return {tag, g, build_p2(g.n()), InputAssignment{to_input_bits(g)}};
    if (tag == "st")
        return {tag, g, build_st_connectivity(g.n(), s, t), InputAssignment{to_input_bits(g)}};
    throw std::invalid_argument("unknown program tag: " + tag);
}

std::string verdict_of(const std::string& tag, int value) {
    if (tag == "p1") return value ? "not-bipartite" : "bipartite";
    if (tag == "p2") return value ? "connected" : "disconnected";
    return value ? "st-connected" : "st-disconnected";
}

int run_eval(const std::string& tag, const std::string& path, const CommonOptions& opts, int s,
             int t) {
    const auto in = load_program(tag, path, opts, s, t);
    const int value = evaluate(in.program, in.assignment);
    const std::string verdict = verdict_of(tag, value);

    std::ostringstream os;
    if (opts.format == "json") {
        json j{{"command", "eval"},
               {"program", in.tag},
               {"n", in.graph.n()},
               {"value", value},
               {"verdict", verdict}};
        os << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        os << "program,n,value,verdict\n"
           << in.tag << "," << in.graph.n() << "," << value << "," << verdict << "\n";
    } else {
        os << "program=" << in.tag << " n=" << in.graph.n() << " value=" << value
           << " verdict=" << verdict << "\n";
    }
    emit(opts, os.str());
    return 0;
}

// Paper-constructed witness size for the side the input falls on; nullopt for
// the s-t subroutine, which the paper gives no explicit witness for.
std::optional<Rational> paper_witness_size(const ProgramInput& in, bool positive_side) {
    if (in.tag == "p1") {
        if (positive_side) {
            const auto cycle = find_odd_cycle(in.graph);
            return paper_positive_witness_p1(in.graph, *cycle).size;
        }
        return paper_negative_witness_p1(in.graph).size;
    }
    if (in.tag == "p2") {
        if (positive_side) return paper_positive_witness_p2(in.graph).size;
        const auto info = components(in.graph);
        Rational worst(0);
        for (int v = 2; v <= in.graph.n(); ++v) {
            if (info.same_component(1, v)) continue;
            if (info.component_of[v] != info.component_of[1])
                worst = std::max(worst, paper_negative_witness_p2(in.graph, v).size);
        }
        return worst;
    }
    return std::nullopt;
}

int run_witness(const std::string& tag, const std::string& path, const CommonOptions& opts, int s,
                int t, bool full, bool compare_paper) {
    const auto in = load_program(tag, path, opts, s, t);
    const auto pos = positive_witness(in.program, in.assignment);
    const auto neg = pos ? std::nullopt : negative_witness(in.program, in.assignment);
    const bool positive_side = pos.has_value();
    const Rational size = positive_side ? pos->size : neg->size;
    const double size_float = to_double(size);
    if (std::abs(size_float - to_double(size)) > opts.tolerance)
        throw std::logic_error("witness size float conversion drifted");

    std::optional<Rational> paper;
    if (compare_paper) paper = paper_witness_size(in, positive_side);

    std::ostringstream os;
    if (opts.format == "json") {
        json j{{"command", "witness"},
               {"program", in.tag},
               {"n", in.graph.n()},
               {"kind", positive_side ? "positive" : "negative"},
               {"size", to_string(size)},
               {"size_float", format_double(size_float)}};
        if (paper) {
            j["paper_size"] = to_string(*paper);
            j["optimal_le_paper"] = size <= *paper;
        }
        if (full) {
            json entries = json::object();
            if (positive_side) {
                for (const auto& [id, c] : pos->coefficients)
                    entries[std::to_string(id)] = to_string(c);
            } else {
                for (const auto& [i, c] : neg->functional.entries())
                    entries[std::to_string(i)] = to_string(c);
            }
            j[positive_side ? "coefficients" : "functional"] = entries;
        }
        os << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        os << "program,n,kind,size,size_float,paper_size\n"
           << in.tag << "," << in.graph.n() << ","
           << (positive_side ? "positive" : "negative") << "," << to_string(size) << ","
           << format_double(size_float) << "," << (paper ? to_string(*paper) : "") << "\n";
    } else {
        os << "program=" << in.tag << " n=" << in.graph.n() << " kind="
           << (positive_side ? "positive" : "negative") << " size=" << to_string(size) << " ("
           << format_double(size_float) << ")";
        if (paper)
            os << " paper-size=" << to_string(*paper)
               << " optimal<=paper=" << (size <= *paper ? "true" : "false");
        os << "\n";
        if (full) {
            if (positive_side) {
                for (const auto& [id, c] : pos->coefficients)
                    os << "  vector " << id << ": " << to_string(c) << "\n";
            } else {
                for (const auto& [i, c] : neg->functional.entries())
                    os << "  coord " << i << ": " << to_string(c) << "\n";
            }
        }
    }
    emit(opts, os.str());
    if (paper && !(size <= *paper)) return kExitPassFailure;
    return 0;
}

int run_bounds(const std::string& tag, const std::string& path, const CommonOptions& opts) {
    Graph g = read_graph_file(path, parse_format(opts.input_format));
    const auto reports = tag == "p1" ? verify_bounds_p1(g) : verify_bounds_p2(g);

    bool all_pass = true;
    std::ostringstream os;
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& r : reports) {
            rows.push_back(report_json(r));
            all_pass = all_pass && r.pass;
        }
        os << json{{"command", "bounds"}, {"rows", rows}, {"all_pass", all_pass}}.dump(2) << "\n";
    } else if (opts.format == "csv") {
        os << csv_header();
        for (const auto& r : reports) {
            os << csv_row(r);
            all_pass = all_pass && r.pass;
        }
    } else {
        for (const auto& r : reports) {
            os << r.program << " n=" << r.n << " " << r.input << " " << r.side << " ["
               << r.provenance << "] computed=" << to_string(r.computed) << " ("
               << format_double(r.computed_float()) << ") bound=" << to_string(r.bound)
               << " pass=" << (r.pass ? "true" : "false") << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    emit(opts, os.str());
    return all_pass ? 0 : kExitPassFailure;
}

int run_scan(const ScanConfig& config, const CommonOptions& opts) {
    std::vector<ScalingRow> rows;
    try {
        rows = scaling_scan(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    }
    const double slope = fit_loglog_slope(rows);
    bool all_pass = true;
    for (const auto& row : rows) all_pass = all_pass && row.pass;

    std::ostringstream os;
    if (opts.format == "json") {
        json jrows = json::array();
        for (const auto& row : rows)
            jrows.push_back(json{{"n", row.n},
                                 {"wsize1", format_double(row.wsize1)},
                                 {"wsize0", format_double(row.wsize0)},
                                 {"combined", format_double(row.combined)},
                                 {"bound", format_double(row.bound)},
                                 {"pass", row.pass}});
        os << json{{"command", "scan"},
                   {"program", config.program},
                   {"family", config.family},
                   {"rows", jrows},
                   {"loglog_slope", format_double(slope)},
                   {"all_pass", all_pass}}
                  .dump(2)
           << "\n";
    } else if (opts.format == "csv") {
        os << csv_header();
        for (const auto& row : rows)
            os << config.program << "," << row.n << "," << config.family << ",combined,"
               << format_double(row.combined) << "," << format_double(row.bound) << ","
               << (row.pass ? "true" : "false") << "\n";
        os << config.program << ",0," << config.family << ",loglog_slope,"
           << format_double(slope) << ",1.65," << (slope <= 1.65 ? "true" : "false") << "\n";
    } else {
        for (const auto& row : rows)
            os << "n=" << row.n << " wsize1=" << format_double(row.wsize1)
               << " wsize0=" << format_double(row.wsize0)
               << " combined=" << format_double(row.combined)
               << " bound=" << format_double(row.bound)
               << " pass=" << (row.pass ? "true" : "false") << "\n";
        os << "loglog_slope=" << format_double(slope) << "\n";
    }
    emit(opts, os.str());
    return all_pass ? 0 : kExitPassFailure;
}

struct GenOptions {
    std::string family;
    int n = 0;
    double p = 0.5;
    int a = 0, b = 0;
    uint64_t seed = 0;
};

int run_gen(const GenOptions& gen, const CommonOptions& opts) {
    std::optional<Graph> g;
    try {
        if (gen.family == "cycle") g = make_cycle(gen.n);
        else if (gen.family == "path") g = make_path(gen.n);
        else if (gen.family == "complete") g = make_complete(gen.n);
        else if (gen.family == "complete_bipartite") g = make_complete_bipartite(gen.a, gen.b);
        else if (gen.family == "gnp") g = random_gnp(gen.n, gen.p, gen.seed);
        else if (gen.family == "tree") g = random_tree(gen.n, gen.seed);
        else if (gen.family == "two_components")
            g = disjoint_union(random_tree(std::max(1, gen.n / 2), gen.seed),
                               random_tree(std::max(1, gen.n - gen.n / 2), gen.seed + 1));
        else throw std::invalid_argument("unknown family: " + gen.family);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    }
    std::ostringstream os;
    write_edge_list(os, *g);
    emit(opts, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Span-program toolkit for graph bipartiteness and connectivity"};
    app.require_subcommand(1);

    std::string program, graph_path, family;
    int s = 1, t = 2;
    bool full = false, compare_paper = false;
    std::string n_range = "3..13";
    GenOptions gen;
    ScanConfig scan_config;
    CommonOptions eval_opts, witness_opts, bounds_opts, scan_opts, gen_opts;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a span program on a graph");
    eval_cmd->add_option("--program", program, "p1, p2 or st")->required()
        ->check(CLI::IsMember({"p1", "p2", "st"}));
    eval_cmd->add_option("--graph", graph_path, "Graph file (edge list or adjacency matrix)")
        ->required();
    eval_cmd->add_option("--s", s, "Source vertex (st only)");
    eval_cmd->add_option("--t", t, "Target vertex (st only)");
    add_common(eval_cmd, eval_opts);

    auto* witness_cmd = app.add_subcommand("witness", "Compute the optimal witness for a graph");
    witness_cmd->add_option("--program", program, "p1, p2 or st")->required()
        ->check(CLI::IsMember({"p1", "p2", "st"}));
    witness_cmd->add_option("--graph", graph_path, "Graph file")->required();
    witness_cmd->add_option("--s", s, "Source vertex (st only)");
    witness_cmd->add_option("--t", t, "Target vertex (st only)");
    witness_cmd->add_flag("--full", full, "Print the full coefficient map");
    witness_cmd->add_flag("--compare-paper", compare_paper,
                          "Also report the paper-constructed witness size");
    add_common(witness_cmd, witness_opts);

    auto* bounds_cmd = app.add_subcommand("bounds", "Verify witness-size bounds for a graph");
    bounds_cmd->add_option("--program", program, "p1 or p2")->required()
        ->check(CLI::IsMember({"p1", "p2"}));
    bounds_cmd->add_option("--graph", graph_path, "Graph file")->required();
    add_common(bounds_cmd, bounds_opts);

    auto* scan_cmd = app.add_subcommand("scan", "Witness-size scaling scan over a graph family");
    scan_cmd->add_option("--program", scan_config.program, "p1 or p2")->required()
        ->check(CLI::IsMember({"p1", "p2"}));
    scan_cmd->add_option("--family", scan_config.family, "cycles (p1) or split_paths (p2)")
        ->required();
    scan_cmd->add_option("--n", n_range, "Vertex-count range, e.g. 3..13");
    scan_cmd->add_option("--samples", scan_config.samples, "Sample graphs per n");
    scan_cmd->add_option("--seed", scan_config.seed, "RNG seed for relabeled samples");
    add_common(scan_cmd, scan_opts);

    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph and write it as an edge list");
    gen_cmd->add_option("--family", gen.family,
                        "cycle, path, complete, complete_bipartite, gnp, tree or two_components")
        ->required();
    gen_cmd->add_option("--n", gen.n, "Vertex count");
    gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)");
    gen_cmd->add_option("--a", gen.a, "First part size (complete_bipartite)");
    gen_cmd->add_option("--b", gen.b, "Second part size (complete_bipartite)");
    gen_cmd->add_option("--seed", gen.seed, "RNG seed");
    add_common(gen_cmd, gen_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) return run_eval(program, graph_path, eval_opts, s, t);
        if (witness_cmd->parsed())
            return run_witness(program, graph_path, witness_opts, s, t, full, compare_paper);
        if (bounds_cmd->parsed()) return run_bounds(program, graph_path, bounds_opts);
        if (scan_cmd->parsed()) {
            const auto sep = n_range.find("..");
            if (sep == std::string::npos) {
                std::cerr << "error: --n expects a range like 3..13\n";
                return kExitInfeasible;
            }
            scan_config.n_min = std::stoi(n_range.substr(0, sep));
            scan_config.n_max = std::stoi(n_range.substr(sep + 2));
            return run_scan(scan_config, scan_opts);
        }
        if (gen_cmd->parsed()) return run_gen(gen, gen_opts);
    } catch (const GraphParseError& e) {
        std::cerr << "error: malformed graph file: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
