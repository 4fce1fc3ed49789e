#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spanprog {

// Simple undirected graph with vertices labeled 1..n, stored as a symmetric
// boolean adjacency matrix with a zero diagonal.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1, std::vector<bool>(n + 1, false)) {
        if (n < 1) throw std::invalid_argument("Graph: vertex count must be positive");
    }

    int n() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u][v];
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
        adj_[u][v] = adj_[v][u] = true;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (adj_[u][v]) out.emplace_back(u, v);
        return out;
    }

    int edge_count() const { return static_cast<int>(edges().size()); }

    std::vector<int> neighbors(int u) const {
        check_vertex(u);
        std::vector<int> out;
        for (int v = 1; v <= n_; ++v)
            if (adj_[u][v]) out.push_back(v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_;
    std::vector<std::vector<bool>> adj_;
};

// Odd closed walk with distinct vertices; every consecutive pair (cyclically)
// is an edge of the graph it was extracted from.
using OddCycle = std::vector<int>;

struct ComponentInfo {
    std::vector<int> component_of;  // 1-based; component_of[v] in [0..count)
    std::vector<int> sizes;         // per component id

    int count() const { return static_cast<int>(sizes.size()); }
    int component_size(int v) const { return sizes[component_of[v]]; }
    bool same_component(int u, int v) const { return component_of[u] == component_of[v]; }
    bool connected() const { return sizes.size() == 1; }
};

// BFS two-coloring; returns a simple odd cycle extracted from the first color
// conflict, or nullopt when the graph is bipartite.
std::optional<OddCycle> find_odd_cycle(const Graph& g);

ComponentInfo components(const Graph& g);

// BFS shortest path from s to t inclusive, or nullopt when disconnected.
std::optional<std::vector<int>> shortest_path(const Graph& g, int s, int t);

bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);

// --- generators (deterministic for a fixed seed) ---

Graph make_cycle(int d);                          // vertices 1..d in cyclic order
Graph make_path(int n);                           // 1-2-...-n
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);      // parts {1..a}, {a+1..a+b}
Graph random_gnp(int n, double p, uint64_t seed);
Graph random_tree(int n, uint64_t seed);          // uniform attachment tree
Graph disjoint_union(const Graph& a, const Graph& b);  // b's labels shifted by a.n()

// Applies a vertex relabeling; perm[v] is the new label of v (1-based).
Graph permute(const Graph& g, const std::vector<int>& perm);

// --- input encoding over unordered vertex pairs {u,v}, u < v ---

int pair_count(int n);
int pair_index(int n, int u, int v);
std::pair<int, int> pair_from_index(int n, int index);

std::vector<int> to_input_bits(const Graph& g);

// --- file formats ---
// Edge list: first line "n m", then m lines "u v" (1-based).
// Adjacency matrix: n lines of n space-separated 0/1 entries.

enum class GraphFormat { auto_detect, edge_list, adjacency_matrix };

struct GraphParseError : std::runtime_error {
    GraphParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

Graph read_graph(std::istream& in, GraphFormat format = GraphFormat::auto_detect);
Graph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::auto_detect);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace spanprog
