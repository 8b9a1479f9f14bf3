#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sci {

// Simple undirected graph with dense, stable edge ids 0..m-1.
// Immutable after construction; all operations on it are pure.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;             // edge id -> (u,v)
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge id)

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n || v >= n) return false;
        const auto& a = degree(u) <= degree(v) ? adj[u] : adj[v];
        int w = degree(u) <= degree(v) ? v : u;
        for (auto [x, id] : a)
            if (x == w) return true;
        return false;
    }

    // -1 when u,v are not adjacent
    int edge_id(int u, int v) const {
        if (u < 0 || v < 0 || u >= n || v >= n) return -1;
        const auto& a = degree(u) <= degree(v) ? adj[u] : adj[v];
        int w = degree(u) <= degree(v) ? v : u;
        for (auto [x, id] : a)
            if (x == w) return id;
        return -1;
    }

    bool connected() const;
    bool is_tree() const { return m() == n - 1 && connected(); }
};

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Edge coloring certificate: colors[e] in 0..k-1 for every edge id e.
struct StrongColoring {
    std::vector<int> colors;
    int k = 0;

    bool complete() const {
        for (int c : colors)
            if (c < 0 || c >= k) return false;
        return true;
    }
};

// Throws GraphError naming the offending pair on loops, duplicates or
// out-of-range endpoints.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_pairs);

// True iff the endpoints of e and f induce a P3, K3 or P4: the edges share
// an endpoint or some edge of g joins them.
bool edges_within_distance_one(const Graph& g, int e, int f);

// One vertex per edge of g, adjacent iff within distance one.
Graph line_graph_square(const Graph& g);

// Maximum-cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);

}  // namespace sci
