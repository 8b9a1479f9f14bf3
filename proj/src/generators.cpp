#include "sci/generators.hpp"

#include <algorithm>
#include <map>

namespace sci {

namespace {

// splitmix64: stable across platforms, unlike the std distributions
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed + 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    int below(int bound) {
        std::uint64_t threshold = (~std::uint64_t{0} / bound) * bound;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= threshold);
        return static_cast<int>(r % bound);
    }
    double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }
};

Generated make_cycle(int n) {
    if (n < 3) throw GraphError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Generated{build_graph(n, e), std::nullopt, std::nullopt};
}

Generated make_wheel(int n) {
    if (n < 3) throw GraphError("wheel needs n >= 3 rim vertices");
    std::vector<std::pair<int, int>> e;
    int hub = n;
    std::vector<int> tree_ids, rim_ids;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) e.emplace_back(hub, i);
    Graph g = build_graph(n + 1, e);
    HalinAnnotation ann;
    for (int i = 0; i < n; ++i) ann.tree_edges.push_back(n + i);  // spokes
    for (int i = 0; i < n; ++i) ann.cycle_order.push_back(i);
    return Generated{g, ann, std::nullopt};
}

Generated make_double_wheel(int dx, int dy) {
    if (dx < 3 || dy < dx) throw GraphError("double wheel needs 3 <= dx <= dy");
    // hubs 0,1; x-leaves then y-leaves on the cycle
    std::vector<std::pair<int, int>> e;
    std::vector<int> tree_ids;
    e.emplace_back(0, 1);
    tree_ids.push_back(0);
    std::vector<int> xl, yl;
    int next = 2;
    for (int i = 0; i < dx - 1; ++i) xl.push_back(next++);
    for (int i = 0; i < dy - 1; ++i) yl.push_back(next++);
    for (int u : xl) {
        tree_ids.push_back(static_cast<int>(e.size()));
        e.emplace_back(0, u);
    }
    for (int u : yl) {
        tree_ids.push_back(static_cast<int>(e.size()));
        e.emplace_back(1, u);
    }
    std::vector<int> cyc = xl;
    cyc.insert(cyc.end(), yl.begin(), yl.end());
    for (size_t i = 0; i < cyc.size(); ++i)
        e.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    Graph g = build_graph(next, e);
    HalinAnnotation ann;
    ann.tree_edges = tree_ids;
    ann.cycle_order = cyc;
    return Generated{g, ann, std::nullopt};
}

// Caterpillar necklace Ne_h: spine of h vertices, one leaf per spine vertex
// plus an extra leaf on each end; Ne_2 is the prism.
Generated make_necklace(int h) {
    if (h < 2) throw GraphError("necklace needs h >= 2");
    std::vector<std::pair<int, int>> e;
    std::vector<int> tree_ids;
    for (int i = 0; i + 1 < h; ++i) {
        tree_ids.push_back(static_cast<int>(e.size()));
        e.emplace_back(i, i + 1);
    }
    int next = h;
    int front = next++;
    tree_ids.push_back(static_cast<int>(e.size()));
    e.emplace_back(0, front);
    std::vector<int> tops;
    for (int i = 0; i < h; ++i) {
        tops.push_back(next);
        tree_ids.push_back(static_cast<int>(e.size()));
        e.emplace_back(i, next++);
    }
    int back = next++;
    tree_ids.push_back(static_cast<int>(e.size()));
    e.emplace_back(h - 1, back);
    std::vector<int> cyc{front};
    cyc.insert(cyc.end(), tops.begin(), tops.end());
    cyc.push_back(back);
    for (size_t i = 0; i < cyc.size(); ++i)
        e.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    Graph g = build_graph(next, e);
    HalinAnnotation ann;
    ann.tree_edges = tree_ids;
    ann.cycle_order = cyc;
    return Generated{g, ann, std::nullopt};
}

// Random plane tree without degree-2 vertices: repeatedly turn a leaf into
// an internal vertex with >= 2 children, then connect leaves in plane order.
Generated make_halin(int target_n, int max_degree, std::uint64_t seed, bool cubic) {
    if (target_n < 4) throw GraphError("halin needs n >= 4");
    if (max_degree < 3) throw GraphError("halin needs max degree >= 3");
    Rng rng(seed * 2 + (cubic ? 1 : 0));
    // children lists of a tree rooted at vertex 0 (an internal vertex for
    // now; the final Halin root choice is per annotation, not here).
    std::vector<std::vector<int>> kids(1);
    int n = 1;
    int root_kids = cubic ? 3 : 3 + (max_degree > 3 ? rng.below(max_degree - 2) : 0);
    for (int i = 0; i < root_kids; ++i) {
        kids.push_back({});
        kids[0].push_back(n++);
    }
    std::vector<int> leaves;
    for (int v : kids[0]) leaves.push_back(v);
    while (n + 2 <= target_n) {
        // pick a random leaf and give it children
        int idx = rng.below(static_cast<int>(leaves.size()));
        int v = leaves[idx];
        int want = cubic ? 2 : 2 + rng.below(std::max(1, max_degree - 2));
        want = std::min(want, target_n - n);
        if (want < 2) break;
        leaves.erase(leaves.begin() + idx);
        for (int i = 0; i < want; ++i) {
            kids.push_back({});
            kids[v].push_back(n);
            leaves.push_back(n);
            ++n;
        }
    }
    // plane leaf order by DFS preserving child order
    std::vector<int> order;
    std::vector<std::pair<int, size_t>> st{{0, 0}};
    while (!st.empty()) {
        auto& [v, i] = st.back();
        if (kids[v].empty()) {
            order.push_back(v);
            st.pop_back();
            continue;
        }
        if (i == kids[v].size()) {
            st.pop_back();
            continue;
        }
        st.push_back({kids[v][i++], 0});
    }
    std::vector<std::pair<int, int>> e;
    std::vector<int> tree_ids;
    for (int v = 0; v < n; ++v)
        for (int c : kids[v]) {
            tree_ids.push_back(static_cast<int>(e.size()));
            e.emplace_back(v, c);
        }
    for (size_t i = 0; i < order.size(); ++i)
        e.emplace_back(order[i], order[(i + 1) % order.size()]);
    Graph g = build_graph(n, e);
    HalinAnnotation ann;
    ann.tree_edges = tree_ids;
    ann.cycle_order = order;
    return Generated{g, ann, std::nullopt};
}

Generated make_tree(int n, std::uint64_t seed) {
    if (n < 2) throw GraphError("tree needs n >= 2");
    Rng rng(seed * 3 + 17);
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(rng.below(v), v);
    return Generated{build_graph(n, e), std::nullopt, std::nullopt};
}

Generated make_dh(int n, std::uint64_t seed, double pp, double pf, double pt) {
    if (n < 2) throw GraphError("dh needs n >= 2");
    Rng rng(seed * 5 + 3);
    double total = pp + pf + pt;
    PruningSequence seq;
    seq.base = {0, 1};
    std::vector<std::vector<int>> adj(n);
    adj[0].push_back(1);
    adj[1].push_back(0);
    for (int v = 2; v < n; ++v) {
        double r = rng.unit() * total;
        int anchor = rng.below(v);
        PruningStep st;
        st.vertex = v;
        st.anchor = anchor;
        std::vector<int> nbrs;
        if (r < pp) {
            st.op = PruningStep::Op::pendant;
            nbrs = {anchor};
        } else if (r < pp + pf) {
            st.op = PruningStep::Op::false_twin;
            nbrs = adj[anchor];
        } else {
            st.op = PruningStep::Op::true_twin;
            nbrs = adj[anchor];
            nbrs.push_back(anchor);
        }
        for (int u : nbrs) {
            adj[v].push_back(u);
            adj[u].push_back(v);
        }
        seq.steps.push_back(st);
    }
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) e.emplace_back(u, v);
    return Generated{build_graph(n, e), std::nullopt, seq};
}

void cograph_rec(Rng& rng, std::vector<int> verts, bool join,
                 std::vector<std::pair<int, int>>& edges) {
    if (verts.size() <= 1) return;
    // random split into two nonempty halves
    int cut = 1 + rng.below(static_cast<int>(verts.size()) - 1);
    std::vector<int> a(verts.begin(), verts.begin() + cut);
    std::vector<int> b(verts.begin() + cut, verts.end());
    if (join)
        for (int u : a)
            for (int v : b) edges.emplace_back(u, v);
    // alternate op with some randomness; children of same op merge anyway
    bool ja = rng.unit() < 0.5, jb = rng.unit() < 0.5;
    cograph_rec(rng, a, ja, edges);
    cograph_rec(rng, b, jb, edges);
}

Generated make_cograph(int n, std::uint64_t seed) {
    if (n < 1) throw GraphError("cograph needs n >= 1");
    Rng rng(seed * 7 + 29);
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::vector<std::pair<int, int>> edges;
    cograph_rec(rng, verts, true, edges);  // join at the root keeps it connected
    std::sort(edges.begin(), edges.end());
    return Generated{build_graph(n, edges), std::nullopt, std::nullopt};
}

Generated make_mop(int n, std::uint64_t seed) {
    if (n < 3) throw GraphError("mop needs n >= 3");
    Rng rng(seed * 11 + 13);
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::pair<int, int>> boundary{{0, 1}, {1, 2}, {2, 0}};
    for (int v = 3; v < n; ++v) {
        int i = rng.below(static_cast<int>(boundary.size()));
        auto [a, b] = boundary[i];
        edges.emplace_back(a, v);
        edges.emplace_back(v, b);
        boundary[i] = {a, v};
        boundary.insert(boundary.begin() + i + 1, {v, b});
    }
    return Generated{build_graph(n, edges), std::nullopt, std::nullopt};
}

}  // namespace

Generated generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::cycle: return make_cycle(spec.n);
        case Family::wheel: return make_wheel(spec.n);
        case Family::double_wheel: return make_double_wheel(spec.dx, spec.dy);
        case Family::necklace: return make_necklace(spec.n);
        case Family::halin: return make_halin(spec.n, spec.max_degree, spec.seed, false);
        case Family::cubic_halin: return make_halin(spec.n, 3, spec.seed, true);
        case Family::tree: return make_tree(spec.n, spec.seed);
        case Family::dh: return make_dh(spec.n, spec.seed, spec.p_pendant, spec.p_false, spec.p_true);
        case Family::cograph: return make_cograph(spec.n, spec.seed);
        case Family::mop: return make_mop(spec.n, spec.seed);
    }
    throw GraphError("unknown family");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::cycle: return "cycle";
        case Family::wheel: return "wheel";
        case Family::double_wheel: return "double_wheel";
        case Family::necklace: return "necklace";
        case Family::halin: return "halin";
        case Family::cubic_halin: return "cubic_halin";
        case Family::tree: return "tree";
        case Family::dh: return "dh";
        case Family::cograph: return "cograph";
        case Family::mop: return "mop";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::cycle, Family::wheel, Family::double_wheel, Family::necklace,
                     Family::halin, Family::cubic_halin, Family::tree, Family::dh,
                     Family::cograph, Family::mop})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

}  // namespace sci
