#include "sci/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace sci {

std::optional<Violation> verify_strong_coloring(const Graph& g, const StrongColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.m())
        throw GraphError("coloring size does not match edge count");
    for (int e = 0; e < g.m(); ++e)
        if (c.colors[e] < 0 || c.colors[e] >= c.k)
            throw GraphError("edge " + std::to_string(e) + " is uncolored or out of range");
    // shared endpoint: pairs of edges incident to a common vertex
    for (int v = 0; v < g.n; ++v) {
        const auto& a = g.adj[v];
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j)
                if (c.colors[a[i].second] == c.colors[a[j].second])
                    return Violation{std::min(a[i].second, a[j].second),
                                     std::max(a[i].second, a[j].second),
                                     Violation::Reason::shared_endpoint};
    }
    // distance one: disjoint pairs joined by an edge
    for (auto [u, v] : g.edges) {
        for (auto [x, e] : g.adj[u]) {
            for (auto [y, f] : g.adj[v]) {
                if (e == f || x == v || y == u || x == y) continue;
                if (c.colors[e] == c.colors[f])
                    return Violation{std::min(e, f), std::max(e, f),
                                     Violation::Reason::distance_one};
            }
        }
    }
    return std::nullopt;
}

namespace {

struct ConflictGraph {
    int m = 0;
    std::vector<std::vector<int>> adj;  // L(G)^2 adjacency over edge ids
};

ConflictGraph build_conflicts(const Graph& g) {
    ConflictGraph cg;
    cg.m = g.m();
    cg.adj.resize(cg.m);
    for (int e = 0; e < cg.m; ++e)
        for (int f = e + 1; f < cg.m; ++f)
            if (edges_within_distance_one(g, e, f)) {
                cg.adj[e].push_back(f);
                cg.adj[f].push_back(e);
            }
    return cg;
}

// DSATUR-style decision search: strong coloring with at most k colors.
struct DecisionSearch {
    const ConflictGraph& cg;
    int k;
    std::int64_t budget;
    std::vector<int> color;
    std::vector<std::vector<int>> forbid_cnt;  // vertex x color -> #colored neighbors
    bool found = false;

    DecisionSearch(const ConflictGraph& cg_, int k_, std::int64_t budget_)
        : cg(cg_), k(k_), budget(budget_), color(cg_.m, -1),
          forbid_cnt(cg_.m, std::vector<int>(k_, 0)) {}

    int saturation(int v) const {
        int s = 0;
        for (int c = 0; c < k; ++c)
            if (forbid_cnt[v][c] > 0) ++s;
        return s;
    }

    bool run(int colored, int max_used) {
        if (budget-- <= 0) throw BudgetError("oracle search budget exceeded");
        if (colored == cg.m) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < cg.m; ++v) {
            if (color[v] >= 0) continue;
            int s = saturation(v);
            int d = static_cast<int>(cg.adj[v].size());
            if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = d;
            }
        }
        // introducing a new color only as max_used+1 breaks color symmetry
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (forbid_cnt[pick][c] > 0) continue;
            color[pick] = c;
            for (int u : cg.adj[pick]) ++forbid_cnt[u][c];
            if (run(colored + 1, std::max(max_used, c))) return true;
            for (int u : cg.adj[pick]) --forbid_cnt[u][c];
            color[pick] = -1;
        }
        return false;
    }
};

std::optional<std::vector<int>> decide(const ConflictGraph& cg, int k, std::int64_t& budget) {
    if (k <= 0) {
        if (cg.m == 0) return std::vector<int>{};
        return std::nullopt;
    }
    DecisionSearch s(cg, k, budget);
    bool ok = s.run(0, -1);
    budget = s.budget;
    if (!ok) return std::nullopt;
    return s.color;
}

std::vector<int> greedy_coloring_degeneracy(const ConflictGraph& cg) {
    int m = cg.m;
    // degeneracy order (smallest remaining degree last)
    std::vector<int> deg(m), order;
    std::vector<char> removed(m, 0);
    for (int v = 0; v < m; ++v) deg[v] = static_cast<int>(cg.adj[v].size());
    for (int i = 0; i < m; ++i) {
        int best = -1;
        for (int v = 0; v < m; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        for (int u : cg.adj[best])
            if (!removed[u]) --deg[u];
    }
    std::reverse(order.begin(), order.end());
    std::vector<int> color(m, -1);
    for (int v : order) {
        std::vector<char> used(m + 1, 0);
        for (int u : cg.adj[v])
            if (color[u] >= 0) used[color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

struct CliqueSearch {
    const ConflictGraph& cg;
    std::int64_t budget;
    int best = 0;
    std::vector<int> best_set, cur;

    CliqueSearch(const ConflictGraph& cg_, std::int64_t budget_) : cg(cg_), budget(budget_) {}

    // greedy coloring bound on the candidate set
    int bound(const std::vector<int>& cand) const {
        int classes = 0;
        std::vector<int> cls(cand.size(), -1);
        for (size_t i = 0; i < cand.size(); ++i) {
            std::vector<char> used(classes + 1, 0);
            for (size_t j = 0; j < i; ++j)
                if (std::binary_search(cg.adj[cand[i]].begin(), cg.adj[cand[i]].end(), cand[j]))
                    used[cls[j]] = 1;
            int c = 0;
            while (c < classes && used[c]) ++c;
            cls[i] = c;
            classes = std::max(classes, c + 1);
        }
        return classes;
    }

    void expand(std::vector<int>& cand) {
        if (budget-- <= 0) throw BudgetError("clique search budget exceeded");
        if (cand.empty()) {
            if (static_cast<int>(cur.size()) > best) {
                best = static_cast<int>(cur.size());
                best_set = cur;
            }
            return;
        }
        if (static_cast<int>(cur.size()) + bound(cand) <= best) return;
        while (!cand.empty()) {
            if (static_cast<int>(cur.size()) + static_cast<int>(cand.size()) <= best) return;
            int v = cand.back();
            cand.pop_back();
            std::vector<int> next;
            for (int u : cand)
                if (std::binary_search(cg.adj[v].begin(), cg.adj[v].end(), u)) next.push_back(u);
            cur.push_back(v);
            expand(next);
            cur.pop_back();
        }
    }
};

int clique_number(const ConflictGraph& cg, std::int64_t budget) {
    ConflictGraph sorted = cg;
    for (auto& a : sorted.adj) std::sort(a.begin(), a.end());
    CliqueSearch cs(sorted, budget);
    std::vector<int> cand(cg.m);
    std::iota(cand.begin(), cand.end(), 0);
    cs.expand(cand);
    return cs.best;
}

}  // namespace

std::optional<StrongColoring> strong_coloring_with(const Graph& g, int k, std::int64_t budget) {
    ConflictGraph cg = build_conflicts(g);
    auto col = decide(cg, k, budget);
    if (!col) return std::nullopt;
    StrongColoring c;
    c.colors = *col;
    c.k = k;
    return c;
}

int max_clique_lg2(const Graph& g, std::int64_t budget) {
    if (g.m() < 1) throw GraphError("max_clique_lg2 needs at least one edge");
    return clique_number(build_conflicts(g), budget);
}

OracleResult exact_strong_index(const Graph& g, std::optional<int> upper_hint,
                                std::int64_t budget) {
    if (g.m() < 1) throw GraphError("exact_strong_index needs at least one edge");
    ConflictGraph cg = build_conflicts(g);
    int lb = clique_number(cg, budget);
    std::vector<int> greedy = greedy_coloring_degeneracy(cg);
    int greedy_k = *std::max_element(greedy.begin(), greedy.end()) + 1;
    int ub = greedy_k;
    if (upper_hint) ub = std::min(ub, *upper_hint);
    for (int k = lb; k <= ub; ++k) {
        if (k == greedy_k) return {k, StrongColoring{greedy, k}};
        auto col = decide(cg, k, budget);
        if (col) return {k, StrongColoring{*col, k}};
    }
    throw GraphError("upper_hint below the strong chromatic index");
}

}  // namespace sci
