#include "sci/outerplanar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace sci {

MopRecognition recognize_mop(const Graph& g) {
    MopRecognition out;
    if (g.n < 3) {
        out.error = "too-few-vertices";
        return out;
    }
    if (!g.connected()) {
        out.error = "disconnected";
        return out;
    }
    if (g.m() != 2 * g.n - 3) {
        out.error = "wrong-edge-count";
        return out;
    }
    int n = g.n;
    std::vector<std::unordered_set<int>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    OuterplanarDual dual;
    std::map<std::pair<int, int>, std::pair<int, int>> tri_by_edge;  // edge -> (triangle, count)
    bool overfull = false;  // some edge lies in three triangles
    auto add_triangle = [&](int a, int b, int c) {
        std::array<int, 3> t{a, b, c};
        std::sort(t.begin(), t.end());
        int idx = static_cast<int>(dual.triangles.size());
        dual.triangles.push_back(t);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto key = std::make_pair(t[i], t[j]);
                auto it = tri_by_edge.find(key);
                if (it == tri_by_edge.end()) {
                    tri_by_edge[key] = {idx, 1};
                } else if (it->second.second == 1) {
                    dual.dual_edges.emplace_back(it->second.first, idx);
                    dual.shared_edge.push_back(g.edge_id(t[i], t[j]));
                    it->second = {idx, 2};
                } else {
                    overfull = true;
                }
            }
    };
    std::vector<char> alive(n, 1);
    // candidate ears by ascending vertex id, refreshed as degrees drop
    std::deque<int> cand;
    std::vector<char> queued(n, 0);
    for (int v = 0; v < n; ++v)
        if (adj[v].size() == 2) {
            cand.push_back(v);
            queued[v] = 1;
        }
    int remaining = n;
    while (remaining > 3) {
        if (cand.empty()) {
            out.error = "no-ear";
            return out;
        }
        int v = cand.front();
        cand.pop_front();
        queued[v] = 0;
        if (!alive[v] || adj[v].size() != 2) continue;
        auto it = adj[v].begin();
        int a = *it++;
        int b = *it;
        if (!adj[a].count(b)) {
            out.error = "no-ear";  // degree-2 vertex whose neighbors are not adjacent
            return out;
        }
        add_triangle(v, a, b);
        alive[v] = 0;
        adj[a].erase(v);
        adj[b].erase(v);
        adj[v].clear();
        --remaining;
        for (int u : {a, b})
            if (adj[u].size() == 2 && !queued[u]) {
                queued[u] = 1;
                cand.push_back(u);
            }
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (alive[v]) rest.push_back(v);
    if (rest.size() != 3 || !adj[rest[0]].count(rest[1]) || !adj[rest[0]].count(rest[2]) ||
        !adj[rest[1]].count(rest[2])) {
        out.error = "non-triangle-face";
        return out;
    }
    add_triangle(rest[0], rest[1], rest[2]);
    // the dual of a triangulated polygon is a tree with n-2 nodes
    if (overfull || static_cast<int>(dual.triangles.size()) != n - 2 ||
        static_cast<int>(dual.dual_edges.size()) != n - 3) {
        out.error = "dual-not-a-tree";
        return out;
    }
    int tn = static_cast<int>(dual.triangles.size());
    std::vector<std::vector<int>> dadj(tn);
    for (auto [x, y] : dual.dual_edges) {
        dadj[x].push_back(y);
        dadj[y].push_back(x);
        if (dadj[x].size() > 3 || dadj[y].size() > 3) {
            out.error = "dual-not-a-tree";
            return out;
        }
    }
    std::vector<char> seen(tn, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : dadj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                stack.push_back(u);
            }
    }
    if (cnt != tn) {
        out.error = "dual-not-a-tree";
        return out;
    }
    out.dual = std::move(dual);
    return out;
}

std::pair<int, ExtendedTriangle> extended_triangle_phi(const Graph& g,
                                                       const OuterplanarDual& dual) {
    int best = -1;
    ExtendedTriangle witness;
    for (const auto& t : dual.triangles) {
        int cnt = g.degree(t[0]) + g.degree(t[1]) + g.degree(t[2]) - 3;
        if (cnt > best) {
            best = cnt;
            witness.triangle = t;
        }
    }
    // materialize the witness edge set
    std::unordered_set<int> es;
    for (int v : witness.triangle)
        for (auto [u, id] : g.adj[v]) es.insert(id);
    witness.edge_set.assign(es.begin(), es.end());
    std::sort(witness.edge_set.begin(), witness.edge_set.end());
    return {best, witness};
}

StrongColoring greedy_strong_coloring(const Graph& g, const OuterplanarDual& dual) {
    int tn = static_cast<int>(dual.triangles.size());
    std::vector<std::vector<int>> dadj(tn);
    for (auto [x, y] : dual.dual_edges) {
        dadj[x].push_back(y);
        dadj[y].push_back(x);
    }
    for (auto& a : dadj) std::sort(a.begin(), a.end());
    int root = 0;
    for (int t = 0; t < tn; ++t)
        if (dadj[t].size() <= 1) {
            root = t;
            break;
        }
    auto [phi, witness] = extended_triangle_phi(g, dual);
    StrongColoring c;
    c.colors.assign(g.m(), -1);
    c.k = phi;
    std::deque<int> bfs{root};
    std::vector<char> seen(tn, 0);
    seen[root] = 1;
    std::vector<int> used_stamp(phi, -1);
    int stamp = 0;
    while (!bfs.empty()) {
        int t = bfs.front();
        bfs.pop_front();
        // edges of the extended triangle, in edge-id order
        std::vector<int> ext;
        for (int v : dual.triangles[t])
            for (auto [u, id] : g.adj[v]) ext.push_back(id);
        std::sort(ext.begin(), ext.end());
        ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
        ++stamp;
        for (int e : ext)
            if (c.colors[e] >= 0) used_stamp[c.colors[e]] = stamp;
        for (int e : ext) {
            if (c.colors[e] >= 0) continue;
            int col = 0;
            while (col < phi && used_stamp[col] == stamp) ++col;
            if (col >= phi) throw GraphError("extended triangle exceeds phi: internal error");
            c.colors[e] = col;
            used_stamp[col] = stamp;
        }
        for (int u : dadj[t])
            if (!seen[u]) {
                seen[u] = 1;
                bfs.push_back(u);
            }
    }
    return c;
}

}  // namespace sci
