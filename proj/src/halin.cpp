#include "sci/halin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sci/formulas.hpp"

namespace sci {

std::optional<std::string> validate_halin(const Graph& g, const HalinAnnotation& ann) {
    int n = g.n;
    if (n < 4) return "not-a-tree: a Halin graph needs at least 4 vertices";
    // tree edges: distinct, valid, n-1 of them, connected
    std::set<int> tset(ann.tree_edges.begin(), ann.tree_edges.end());
    if (static_cast<int>(tset.size()) != static_cast<int>(ann.tree_edges.size()))
        return "not-a-tree: duplicate tree edge ids";
    for (int e : ann.tree_edges)
        if (e < 0 || e >= g.m()) return "not-a-tree: tree edge id out of range";
    if (static_cast<int>(tset.size()) != n - 1) return "not-a-tree: tree needs n-1 edges";
    std::vector<std::vector<std::pair<int, int>>> tadj(n);
    for (int e : tset) {
        auto [u, v] = g.edges[e];
        tadj[u].push_back({v, e});
        tadj[v].push_back({u, e});
    }
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, e] : tadj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    ++cnt;
                    stack.push_back(u);
                }
        }
        if (cnt != n) return "not-a-tree: tree edges are not spanning";
    }
    for (int v = 0; v < n; ++v)
        if (tadj[v].size() == 2) return "degree-2-vertex: vertex " + std::to_string(v);
    // cycle order must list exactly the leaves
    std::vector<char> is_leaf(n, 0);
    int leaf_cnt = 0;
    for (int v = 0; v < n; ++v)
        if (tadj[v].size() == 1) {
            is_leaf[v] = 1;
            ++leaf_cnt;
        }
    if (static_cast<int>(ann.cycle_order.size()) != leaf_cnt)
        return "leaf-cycle-mismatch: cycle order size differs from leaf count";
    std::vector<char> seen_leaf(n, 0);
    for (int v : ann.cycle_order) {
        if (v < 0 || v >= n || !is_leaf[v]) return "leaf-cycle-mismatch: non-leaf in cycle order";
        if (seen_leaf[v]) return "leaf-cycle-mismatch: repeated leaf";
        seen_leaf[v] = 1;
    }
    if (leaf_cnt < 3) return "leaf-cycle-mismatch: fewer than 3 leaves";
    // cycle edges exist and, with the tree, partition E(G)
    std::vector<char> used(g.m(), 0);
    for (int e : tset) used[e] = 1;
    int L = leaf_cnt;
    for (int i = 0; i < L; ++i) {
        int e = g.edge_id(ann.cycle_order[i], ann.cycle_order[(i + 1) % L]);
        if (e < 0) return "leaf-cycle-mismatch: missing cycle edge";
        if (used[e]) return "leaf-cycle-mismatch: cycle edge already used";
        used[e] = 1;
    }
    for (int e = 0; e < g.m(); ++e)
        if (!used[e]) return "leaf-cycle-mismatch: extra edge " + std::to_string(e);
    // plane embedding: every subtree's leaves are contiguous in the order
    // obtained by rooting at the first leaf of the cycle
    int root = ann.cycle_order[0];
    std::vector<int> leaf_pos(n, -1);
    for (int i = 0; i < L; ++i) leaf_pos[ann.cycle_order[i]] = i;
    std::vector<int> parent(n, -2), order;
    parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto [u, e] : tadj[v])
            if (parent[u] == -2) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    std::vector<int> lo(n, -1), hi(n, -1), cnt(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (is_leaf[v]) {
            lo[v] = hi[v] = leaf_pos[v];
            cnt[v] = 1;
        }
        if (v == root) continue;
        int p = parent[v];
        if (lo[v] < 0) continue;  // internal with no leaves cannot happen in a tree
        lo[p] = lo[p] < 0 ? lo[v] : std::min(lo[p], lo[v]);
        hi[p] = std::max(hi[p], hi[v]);
        cnt[p] += cnt[v];
    }
    for (int v = 0; v < n; ++v) {
        if (v == root || is_leaf[v]) continue;
        if (hi[v] - lo[v] + 1 != cnt[v]) return "crossing: subtree at " + std::to_string(v);
    }
    return std::nullopt;
}

HalinStructure build_halin_structure(const Graph& g, const HalinAnnotation& ann) {
    if (auto err = validate_halin(g, ann)) throw GraphError("invalid halin annotation: " + *err);
    int n = g.n;
    HalinStructure hs;
    hs.root = ann.cycle_order[0];
    hs.parent.assign(n, -2);
    hs.parent_edge.assign(n, -1);
    hs.children.assign(n, {});
    hs.is_leaf.assign(n, 0);
    hs.leaf_pos.assign(n, -1);
    hs.arc_lo.assign(n, -1);
    hs.arc_hi.assign(n, -1);
    std::set<int> tset(ann.tree_edges.begin(), ann.tree_edges.end());
    std::vector<std::vector<std::pair<int, int>>> tadj(n);
    for (int e : tset) {
        auto [u, v] = g.edges[e];
        tadj[u].push_back({v, e});
        tadj[v].push_back({u, e});
    }
    for (int v = 0; v < n; ++v) hs.is_leaf[v] = tadj[v].size() == 1;
    int L = static_cast<int>(ann.cycle_order.size());
    hs.cycle_order = ann.cycle_order;
    hs.cycle_edge.resize(L);
    for (int i = 0; i < L; ++i) {
        hs.leaf_pos[ann.cycle_order[i]] = i;
        hs.cycle_edge[i] = g.edge_id(ann.cycle_order[i], ann.cycle_order[(i + 1) % L]);
    }
    hs.parent[hs.root] = -1;
    std::vector<int> stack{hs.root}, dfs_order;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        dfs_order.push_back(v);
        for (auto [u, e] : tadj[v])
            if (hs.parent[u] == -2) {
                hs.parent[u] = v;
                hs.parent_edge[u] = e;
                hs.children[v].push_back(u);
                stack.push_back(u);
            }
    }
    hs.root_child = hs.children[hs.root].at(0);
    for (auto it = dfs_order.rbegin(); it != dfs_order.rend(); ++it) {
        int v = *it;
        if (hs.is_leaf[v]) {
            hs.arc_lo[v] = hs.arc_hi[v] = hs.leaf_pos[v];
        } else {
            for (int c : hs.children[v]) {
                if (hs.arc_lo[v] < 0 || hs.arc_lo[c] < hs.arc_lo[v]) hs.arc_lo[v] = hs.arc_lo[c];
                hs.arc_hi[v] = std::max(hs.arc_hi[v], hs.arc_hi[c]);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        std::sort(hs.children[v].begin(), hs.children[v].end(),
                  [&](int a, int b) { return hs.arc_lo[a] < hs.arc_lo[b]; });
    // postorder with plane child order
    std::vector<std::pair<int, size_t>> st{{hs.root_child, 0}};
    while (!st.empty()) {
        auto& [v, i] = st.back();
        if (i < hs.children[v].size()) {
            int c = hs.children[v][i++];
            st.push_back({c, 0});
            continue;
        }
        hs.postorder.push_back(v);
        st.pop_back();
    }
    return hs;
}

std::vector<int> boundary_edges(const Graph& g, const HalinStructure& hs, int x) {
    if (x == hs.root) throw GraphError("boundary_edges: x must not be the root leaf");
    int L = static_cast<int>(hs.cycle_edge.size());
    std::set<int> b;
    int lo = hs.arc_lo[x], hi = hs.arc_hi[x];
    int left_outer = hs.cycle_edge[(lo - 1 + L) % L];
    int right_outer = hs.cycle_edge[hi % L];
    b.insert(hs.parent_edge[x]);
    b.insert(left_outer);
    b.insert(right_outer);
    // endpoints of those edges inside the subtree: x and the two arc end
    // leaves; add their remaining incident edges
    auto add_remaining = [&](int v, int except) {
        for (auto [u, e] : g.adj[v])
            if (e != except) b.insert(e);
    };
    add_remaining(x, hs.parent_edge[x]);
    add_remaining(hs.cycle_order[lo], left_outer);
    add_remaining(hs.cycle_order[hi], right_outer);
    return {b.begin(), b.end()};
}

namespace {

// Color a cyclic sequence under the sliding-window-3 constraint (any three
// consecutive entries pairwise distinct) with per-position allowed sets.
std::optional<std::vector<int>> color_cycle_lists(const std::vector<std::vector<int>>& allowed) {
    int n = static_cast<int>(allowed.size());
    if (n < 3) return std::nullopt;
    for (int c0 : allowed[0]) {
        for (int c1 : allowed[1]) {
            if (c1 == c0) continue;
            // DP over positions with state (prev, cur); keep one predecessor
            std::map<std::pair<int, int>, std::pair<int, int>> cur, nxt;
            cur[{c0, c1}] = {-1, -1};
            std::vector<std::map<std::pair<int, int>, std::pair<int, int>>> trail;
            trail.push_back(cur);
            for (int i = 2; i < n; ++i) {
                nxt.clear();
                for (const auto& [st, pre] : trail.back()) {
                    auto [a, bcol] = st;
                    for (int c : allowed[i]) {
                        if (c == a || c == bcol) continue;
                        nxt.emplace(std::make_pair(bcol, c), st);
                    }
                }
                if (nxt.empty()) break;
                trail.push_back(nxt);
            }
            if (static_cast<int>(trail.size()) != n - 1) continue;
            for (const auto& [st, pre] : trail.back()) {
                auto [a, bcol] = st;
                // wrap windows: (n-2, n-1, 0) and (n-1, 0, 1)
                if (a == bcol || bcol == c0 || a == c0) continue;
                if (bcol == c1) continue;
                // reconstruct
                std::vector<int> col(n);
                col[0] = c0;
                col[1] = c1;
                std::pair<int, int> s = st;
                for (int i = n - 1; i >= 2; --i) {
                    col[i] = s.second;
                    s = trail[i - 1].at(s);
                }
                return col;
            }
        }
    }
    return std::nullopt;
}

StrongColoring wheel_coloring(const Graph& g, const HalinStructure& hs) {
    int L = static_cast<int>(hs.cycle_order.size());
    StrongColoring c;
    c.k = wheel_index(L);
    c.colors.assign(g.m(), -1);
    auto rim = cycle_strong_coloring(L);
    // spokes: every leaf, including the root leaf, has one tree edge
    int spoke = 0;
    for (int i = 0; i < L; ++i) {
        int leaf = hs.cycle_order[i];
        int e = leaf == hs.root ? hs.parent_edge[hs.root_child] : hs.parent_edge[leaf];
        c.colors[e] = spoke++;
    }
    for (int i = 0; i < L; ++i) c.colors[hs.cycle_edge[i]] = L + rim[i];
    return c;
}

StrongColoring double_wheel_coloring(const Graph& g, const HalinStructure& hs, int k) {
    StrongColoring c;
    c.k = k;
    c.colors.assign(g.m(), -1);
    // tree edges pairwise conflict: give them distinct leading colors
    int next = 0;
    std::vector<int> tree_edges;
    for (int v = 0; v < g.n; ++v)
        if (v != hs.root && hs.parent_edge[v] >= 0) tree_edges.push_back(hs.parent_edge[v]);
    std::sort(tree_edges.begin(), tree_edges.end());
    for (int e : tree_edges) c.colors[e] = next++;
    // cycle edges by the window DP against the fixed tree colors
    int L = static_cast<int>(hs.cycle_order.size());
    std::vector<std::vector<int>> allowed(L);
    for (int i = 0; i < L; ++i) {
        std::vector<char> forb(k, 0);
        for (int e : tree_edges)
            if (edges_within_distance_one(g, hs.cycle_edge[i], e)) forb[c.colors[e]] = 1;
        for (int col = 0; col < k; ++col)
            if (!forb[col]) allowed[i].push_back(col);
    }
    auto capped = allowed;
    for (auto& a : capped)
        if (a.size() > 8) a.resize(8);
    auto sol = color_cycle_lists(capped);
    if (!sol) sol = color_cycle_lists(allowed);
    if (!sol) throw GraphError("double wheel cycle coloring failed: internal error");
    for (int i = 0; i < L; ++i) c.colors[hs.cycle_edge[i]] = (*sol)[i];
    return c;
}

Graph tree_of(const Graph& g, const HalinAnnotation& ann) {
    std::vector<std::pair<int, int>> pairs;
    for (int e : ann.tree_edges) pairs.push_back(g.edges[e]);
    return build_graph(g.n, pairs);
}

}  // namespace

OracleResult cubic_halin_index(const Graph& g, const HalinAnnotation& ann) {
    if (auto err = validate_halin(g, ann)) throw GraphError("invalid halin annotation: " + *err);
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 3) throw GraphError("cubic_halin_index needs a cubic graph");
    HalinStructure hs = build_halin_structure(g, ann);
    int lower = 3;
    if (g.m() <= 60) {
        lower = max_clique_lg2(g);
    } else {
        for (auto [u, v] : g.edges) lower = std::max(lower, g.degree(u) + g.degree(v) - 1);
    }
    lower = std::min(lower, 10);
    for (int k = lower; k <= 10; ++k) {
        auto col = cubic_halin_decide(g, hs, k);
        if (col) {
            if (verify_strong_coloring(g, *col))
                throw GraphError("cubic halin DP produced a bad coloring: internal error");
            return {k, *col};
        }
    }
    throw GraphError("no strong coloring within 10 colors: internal error");
}

OracleResult halin_index(const Graph& g, const HalinAnnotation& ann) {
    if (auto err = validate_halin(g, ann)) throw GraphError("invalid halin annotation: " + *err);
    HalinStructure hs = build_halin_structure(g, ann);
    std::vector<int> internals;
    for (int v = 0; v < g.n; ++v)
        if (!hs.is_leaf[v]) internals.push_back(v);
    if (internals.size() == 1) {
        int L = static_cast<int>(hs.cycle_order.size());
        StrongColoring c = wheel_coloring(g, hs);
        if (verify_strong_coloring(g, c))
            throw GraphError("wheel coloring failed verification: internal error");
        return {wheel_index(L), c};
    }
    Graph t = tree_of(g, ann);
    if (internals.size() == 2) {
        int da = t.degree(internals[0]), db = t.degree(internals[1]);
        DoubleWheelSpec spec{std::min(da, db), std::max(da, db)};
        int k = double_wheel_index(spec).total;
        StrongColoring c = double_wheel_coloring(g, hs, k);
        if (verify_strong_coloring(g, c))
            throw GraphError("double wheel coloring failed verification: internal error");
        return {k, c};
    }
    int tk = tree_index(t);
    for (int k = tk; k <= tk + 5; ++k) {
        auto col = general_halin_decide(g, hs, k);
        if (col) {
            if (verify_strong_coloring(g, *col))
                throw GraphError("halin DP produced a bad coloring: internal error");
            return {k, *col};
        }
    }
    throw GraphError("no strong coloring within tree_index+5 colors: internal error");
}

}  // namespace sci
