#include "spanprog/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>

namespace spanprog {

std::optional<OddCycle> find_odd_cycle(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n + 1, -1), parent(n + 1, 0), depth(n + 1, 0);
    for (int root = 1; root <= n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // Walk both endpoints up to their lowest common ancestor;
                    // the two tree paths plus the conflict edge form a simple
                    // odd cycle.
                    std::vector<int> up_u{u}, up_v{v};
                    int a = u, b = v;
                    while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
                    while (a != b) {
                        up_u.push_back(a = parent[a]);
                        up_v.push_back(b = parent[b]);
                    }
                    OddCycle cycle(up_u.begin(), up_u.end());  // u .. lca
                    for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it)
                        cycle.push_back(*it);                  // .. back down to v
                    return cycle;
                }
            }
        }
    }
    return std::nullopt;
}

bool is_bipartite(const Graph& g) { return !find_odd_cycle(g).has_value(); }

ComponentInfo components(const Graph& g) {
    const int n = g.n();
    ComponentInfo info;
    info.component_of.assign(n + 1, -1);
    for (int root = 1; root <= n; ++root) {
        if (info.component_of[root] != -1) continue;
        const int id = info.count();
        info.sizes.push_back(0);
        std::deque<int> queue{root};
        info.component_of[root] = id;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            ++info.sizes[id];
            for (int v : g.neighbors(u)) {
                if (info.component_of[v] == -1) {
                    info.component_of[v] = id;
                    queue.push_back(v);
                }
            }
        }
    }
    return info;
}

bool is_connected(const Graph& g) { return components(g).connected(); }

std::optional<std::vector<int>> shortest_path(const Graph& g, int s, int t) {
    if (s < 1 || s > g.n() || t < 1 || t > g.n())
        throw std::out_of_range("shortest_path: vertex out of range");
    std::vector<int> parent(g.n() + 1, 0);
    parent[s] = s;
    std::deque<int> queue{s};
    while (!queue.empty() && parent[t] == 0) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (parent[v] == 0) {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if (parent[t] == 0) return std::nullopt;
    std::vector<int> path{t};
    while (path.back() != s) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

Graph make_cycle(int d) {
    if (d < 3) throw std::invalid_argument("make_cycle: cycle length must be at least 3");
    Graph g(d);
    for (int v = 1; v < d; ++v) g.add_edge(v, v + 1);
    g.add_edge(d, 1);
    return g;
}

Graph make_path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("make_complete_bipartite: empty part");
    Graph g(a + b);
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v) g.add_edge(u, v);
    return g;
}

namespace {

// Platform-independent uniform [0,1) draw.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Graph random_gnp(int n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_gnp: p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (unit_draw(rng) < p) g.add_edge(u, v);
    return g;
}

Graph random_tree(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int v = 2; v <= n; ++v)
        g.add_edge(v, 1 + static_cast<int>(rng() % static_cast<uint64_t>(v - 1)));
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.n(), v + a.n());
    return g;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n())
        throw std::invalid_argument("permute: permutation length mismatch");
    std::vector<bool> hit(g.n() + 1, false);
    for (int x : perm) {
        if (x < 1 || x > g.n() || hit[x]) throw std::invalid_argument("permute: not a permutation");
        hit[x] = true;
    }
    Graph out(g.n());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u - 1], perm[v - 1]);
    return out;
}

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n || u == v) throw std::invalid_argument("pair_index: invalid pair");
    return (u - 1) * (2 * n - u) / 2 + (v - u - 1);
}

std::pair<int, int> pair_from_index(int n, int index) {
    if (index < 0 || index >= pair_count(n)) throw std::out_of_range("pair_from_index");
    int u = 1;
    while (index >= n - u) {
        index -= n - u;
        ++u;
    }
    return {u, u + 1 + index};
}

std::vector<int> to_input_bits(const Graph& g) {
    std::vector<int> bits(pair_count(g.n()), 0);
    for (auto [u, v] : g.edges()) bits[pair_index(g.n(), u, v)] = 1;
    return bits;
}

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        lines.push_back(std::move(tokens));
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

int parse_int(const std::string& tok, int line) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw GraphParseError("expected an integer, got '" + tok + "'", line);
    }
    if (pos != tok.size()) throw GraphParseError("expected an integer, got '" + tok + "'", line);
    return value;
}

Graph parse_edge_list(const std::vector<std::vector<std::string>>& lines) {
    if (lines.empty() || lines[0].size() != 2)
        throw GraphParseError("expected header 'n m'", 1);
    const int n = parse_int(lines[0][0], 1);
    const int m = parse_int(lines[0][1], 1);
    if (n < 1) throw GraphParseError("vertex count must be positive", 1);
    if (m < 0 || static_cast<int>(lines.size()) != m + 1)
        throw GraphParseError("expected exactly " + std::to_string(m) + " edge lines", 1);
    Graph g(n);
    for (int i = 1; i <= m; ++i) {
        if (lines[i].size() != 2) throw GraphParseError("expected 'u v'", i + 1);
        const int u = parse_int(lines[i][0], i + 1);
        const int v = parse_int(lines[i][1], i + 1);
        if (u < 1 || u > n || v < 1 || v > n)
            throw GraphParseError("vertex out of range", i + 1);
        if (u == v) throw GraphParseError("self-loop is not a simple-graph edge", i + 1);
        if (g.has_edge(u, v)) throw GraphParseError("duplicate edge", i + 1);
        g.add_edge(u, v);
    }
    return g;
}

Graph parse_adjacency_matrix(const std::vector<std::vector<std::string>>& lines) {
    if (lines.empty()) throw GraphParseError("empty input", 1);
    const int n = static_cast<int>(lines[0].size());
    if (n < 1 || static_cast<int>(lines.size()) != n)
        throw GraphParseError("expected an n x n 0/1 matrix", 1);
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(lines[i].size()) != n)
            throw GraphParseError("expected " + std::to_string(n) + " entries", i + 1);
        for (int j = 0; j < n; ++j) {
            const int x = parse_int(lines[i][j], i + 1);
            if (x != 0 && x != 1) throw GraphParseError("matrix entries must be 0 or 1", i + 1);
            a[i][j] = x;
        }
    }
    // The model is simple graphs: reject rather than repair bad matrices.
    for (int i = 0; i < n; ++i) {
        if (a[i][i] != 0) throw GraphParseError("nonzero diagonal entry", i + 1);
        for (int j = 0; j < n; ++j)
            if (a[i][j] != a[j][i]) throw GraphParseError("asymmetric adjacency matrix", i + 1);
    }
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[i][j]) g.add_edge(i + 1, j + 1);
    return g;
}

}  // namespace

Graph read_graph(std::istream& in, GraphFormat format) {
    const auto lines = tokenize_lines(in);
    switch (format) {
        case GraphFormat::edge_list:
            return parse_edge_list(lines);
        case GraphFormat::adjacency_matrix:
            return parse_adjacency_matrix(lines);
        case GraphFormat::auto_detect:
            break;
    }
    // A two-token first line reads as an edge-list header; anything else is
    // tried as a matrix. On failure fall through to the other parser.
    if (!lines.empty() && lines[0].size() == 2) {
        try {
            return parse_edge_list(lines);
        } catch (const GraphParseError&) {
            return parse_adjacency_matrix(lines);
        }
    }
    try {
        return parse_adjacency_matrix(lines);
    } catch (const GraphParseError&) {
        return parse_edge_list(lines);
    }
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in, format);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    const auto es = g.edges();
    out << g.n() << " " << es.size() << "\n";
    for (auto [u, v] : es) out << u << " " << v << "\n";
}

}  // namespace spanprog
