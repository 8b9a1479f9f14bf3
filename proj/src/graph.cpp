#include "sci/graph.hpp"

#include <algorithm>
#include <set>

namespace sci {

bool Graph::connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, id] : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                stack.push_back(u);
            }
        }
    }
    return cnt == n;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_pairs) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.resize(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_pairs) {
        std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range: " + pair);
        if (u == v) throw GraphError("loop edge: " + pair);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw GraphError("duplicate edge: " + pair);
        int id = g.m();
        g.edges.emplace_back(u, v);
        g.adj[u].emplace_back(v, id);
        g.adj[v].emplace_back(u, id);
    }
    return g;
}

bool edges_within_distance_one(const Graph& g, int e, int f) {
    if (e < 0 || f < 0 || e >= g.m() || f >= g.m())
        throw GraphError("edge id out of range");
    if (e == f) throw GraphError("edges_within_distance_one needs distinct edges");
    auto [a, b] = g.edges[e];
    auto [c, d] = g.edges[f];
    if (a == c || a == d || b == c || b == d) return true;
    for (int x : {a, b})
        for (int y : {c, d})
            if (g.has_edge(x, y)) return true;
    return false;
}

Graph line_graph_square(const Graph& g) {
    if (g.m() < 1) throw GraphError("line_graph_square needs at least one edge");
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < g.m(); ++e)
        for (int f = e + 1; f < g.m(); ++f)
            if (edges_within_distance_one(g, e, f)) pairs.emplace_back(e, f);
    return build_graph(g.m(), pairs);
}

bool is_chordal(const Graph& g) {
    int n = g.n;
    if (n <= 2) return true;
    // maximum cardinality search: pick order p_0..p_{n-1}
    std::vector<int> weight(n, 0), pick;
    std::vector<char> done(n, 0);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
        done[best] = 1;
        pos[best] = i;
        pick.push_back(best);
        for (auto [u, id] : g.adj[best])
            if (!done[u]) ++weight[u];
    }
    // reverse pick order is the elimination order; check it is perfect:
    // for each v, its already-picked neighbors minus the latest one must be
    // adjacent to that latest neighbor
    std::vector<std::set<int>> nb(n);
    for (auto [u, v] : g.edges) {
        nb[u].insert(v);
        nb[v].insert(u);
    }
    for (int i = n - 1; i >= 0; --i) {
        int v = pick[i];
        int parent = -1;
        for (int u : nb[v])
            if (pos[u] < i && (parent < 0 || pos[u] > pos[parent])) parent = u;
        if (parent < 0) continue;
        for (int u : nb[v]) {
            if (u == parent || pos[u] >= i) continue;
            if (!nb[parent].count(u)) return false;
        }
    }
    return true;
}

}  // namespace sci
