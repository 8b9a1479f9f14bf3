#include "sci/dh.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace sci {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// adjacency with O(1) vertex removal via back-pointers
struct WorkGraph {
    std::vector<std::vector<int>> adj;   // neighbor lists
    std::vector<std::vector<int>> back;  // back[u][i] = index of u in adj[adj[u][i]]
    std::vector<char> alive;

    explicit WorkGraph(const Graph& g) {
        int n = g.n;
        adj.resize(n);
        back.resize(n);
        alive.assign(n, 1);
        std::vector<int> deg(n, 0);
        for (auto [u, v] : g.edges) {
            ++deg[u];
            ++deg[v];
        }
        for (int v = 0; v < n; ++v) {
            adj[v].reserve(deg[v]);
            back[v].reserve(deg[v]);
        }
        for (auto [u, v] : g.edges) {
            back[u].push_back(static_cast<int>(adj[v].size()));
            back[v].push_back(static_cast<int>(adj[u].size()));
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    void remove_from(int u, int idx) {
        int last = static_cast<int>(adj[u].size()) - 1;
        if (idx != last) {
            adj[u][idx] = adj[u][last];
            back[u][idx] = back[u][last];
            int w = adj[u][idx];
            back[w][back[u][idx]] = idx;
        }
        adj[u].pop_back();
        back[u].pop_back();
    }

    void remove_vertex(int x) {
        alive[x] = 0;
        while (!adj[x].empty()) {
            int u = adj[x].back();
            int pos_in_u = back[x].back();
            adj[x].pop_back();
            back[x].pop_back();
            remove_from(u, pos_in_u);
        }
    }
};

}  // namespace

DhRecognition recognize_dh(const Graph& g) {
    if (g.n < 2) throw GraphError("recognize_dh needs n >= 2");
    if (!g.connected()) throw GraphError("recognize_dh needs a connected graph");
    int n = g.n;
    WorkGraph wg(g);
    std::vector<std::uint64_t> key(n);
    for (int v = 0; v < n; ++v) key[v] = mix64(0xabcdef1234567890ULL ^ (std::uint64_t)v);
    std::vector<std::uint64_t> open_hash(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : wg.adj[v]) open_hash[v] += key[u];

    auto sorted_nbrs = [&](int v) {
        std::vector<int> s = wg.adj[v];
        std::sort(s.begin(), s.end());
        return s;
    };

    // buckets keyed by hash; entries may be stale, re-checked on use
    std::unordered_multimap<std::uint64_t, int> open_b, closed_b;
    std::vector<PruningStep> elim;  // elimination order
    std::deque<int> dirty;
    std::vector<char> queued(n, 0);
    for (int v = 0; v < n; ++v) {
        dirty.push_back(v);
        queued[v] = 1;
    }
    int alive_cnt = n;

    auto eliminate = [&](PruningStep st) {
        elim.push_back(st);
        int x = st.vertex;
        for (int u : wg.adj[x]) {
            open_hash[u] -= key[x];
            if (!queued[u]) {
                queued[u] = 1;
                dirty.push_back(u);
            }
        }
        wg.remove_vertex(x);
        --alive_cnt;
    };

    bool rescanned = false;
    while (alive_cnt > 2) {
        if (dirty.empty()) {
            if (rescanned) break;  // stuck
            rescanned = true;
            for (int v = 0; v < n; ++v)
                if (wg.alive[v] && !queued[v]) {
                    queued[v] = 1;
                    dirty.push_back(v);
                }
            if (dirty.empty()) break;
        }
        int v = dirty.front();
        dirty.pop_front();
        queued[v] = 0;
        if (!wg.alive[v]) continue;
        if (wg.degree(v) == 0) continue;  // disconnected remainder gets stuck
        if (wg.degree(v) == 1) {
            eliminate({PruningStep::Op::pendant, v, wg.adj[v][0]});
            rescanned = false;
            continue;
        }
        bool done = false;
        std::uint64_t oh = open_hash[v];
        auto range = open_b.equal_range(oh);
        for (auto it = range.first; it != range.second && !done; ++it) {
            int u = it->second;
            if (u == v || !wg.alive[u] || open_hash[u] != oh) continue;
            if (wg.degree(u) != wg.degree(v)) continue;
            if (sorted_nbrs(u) == sorted_nbrs(v)) {
                eliminate({PruningStep::Op::false_twin, std::max(u, v), std::min(u, v)});
                rescanned = false;
                done = true;
            }
        }
        if (done) continue;
        std::uint64_t ch = open_hash[v] + key[v];
        auto crange = closed_b.equal_range(ch);
        for (auto it = crange.first; it != crange.second && !done; ++it) {
            int u = it->second;
            if (u == v || !wg.alive[u] || open_hash[u] + key[u] != ch) continue;
            if (wg.degree(u) != wg.degree(v) || !g.has_edge(u, v)) continue;
            auto su = sorted_nbrs(u), sv = sorted_nbrs(v);
            su.erase(std::remove(su.begin(), su.end(), v), su.end());
            sv.erase(std::remove(sv.begin(), sv.end(), u), sv.end());
            if (su == sv) {
                eliminate({PruningStep::Op::true_twin, std::max(u, v), std::min(u, v)});
                rescanned = false;
                done = true;
            }
        }
        if (done) continue;
        open_b.emplace(oh, v);
        closed_b.emplace(ch, v);
    }

    DhRecognition out;
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (wg.alive[v]) last.push_back(v);
    if (alive_cnt > 2 || last.size() != 2 || !g.has_edge(last[0], last[1])) {
        out.stuck_vertices = last;
        return out;
    }
    PruningSequence seq;
    seq.base = {last[0], last[1]};
    seq.steps.assign(elim.rbegin(), elim.rend());
    out.sequence = seq;
    return out;
}

Graph replay_sequence(const PruningSequence& seq, int n) {
    std::vector<char> alive(n, 0);
    auto check = [&](int v) {
        if (v < 0 || v >= n) throw GraphError("sequence vertex out of range");
    };
    check(seq.base.first);
    check(seq.base.second);
    alive[seq.base.first] = alive[seq.base.second] = 1;
    std::vector<std::vector<int>> adj(n);
    adj[seq.base.first].push_back(seq.base.second);
    adj[seq.base.second].push_back(seq.base.first);
    for (const auto& st : seq.steps) {
        check(st.vertex);
        check(st.anchor);
        if (alive[st.vertex]) throw GraphError("sequence re-creates a vertex");
        if (!alive[st.anchor]) throw GraphError("sequence anchor not alive");
        std::vector<int> nbrs;
        if (st.op == PruningStep::Op::pendant) {
            nbrs = {st.anchor};
        } else {
            nbrs = adj[st.anchor];
            if (st.op == PruningStep::Op::true_twin) nbrs.push_back(st.anchor);
        }
        alive[st.vertex] = 1;
        for (int u : nbrs) {
            adj[st.vertex].push_back(u);
            adj[u].push_back(st.vertex);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    return build_graph(n, edges);
}

std::vector<int> TwinsetDecomposition::part_vertices(int node) const {
    std::vector<int> out;
    for (int i = nodes[node].lo; i < nodes[node].hi; ++i) out.push_back(leaf_order[i]);
    return out;
}

std::vector<int> TwinsetDecomposition::twinset_vertices(int node) const {
    const Node& e = nodes[node];
    if (e.vertex >= 0) return {e.vertex};
    std::vector<int> out;
    if (e.left_alive) {
        auto l = twinset_vertices(e.left);
        out.insert(out.end(), l.begin(), l.end());
    }
    if (e.right_alive) {
        auto r = twinset_vertices(e.right);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

TwinsetDecomposition build_decomposition(const Graph& g, const PruningSequence& seq) {
    int n = g.n;
    if (static_cast<int>(seq.steps.size()) + 2 != n)
        throw GraphError("sequence does not cover the vertex set");
    TwinsetDecomposition d;
    d.nodes.reserve(2 * n);
    auto new_leaf = [&](int v) {
        TwinsetDecomposition::Node nd;
        nd.vertex = v;
        d.nodes.push_back(nd);
        return static_cast<int>(d.nodes.size()) - 1;
    };
    std::vector<int> leaf_of(n, -1);
    int l0 = new_leaf(seq.base.first), l1 = new_leaf(seq.base.second);
    leaf_of[seq.base.first] = l0;
    leaf_of[seq.base.second] = l1;
    TwinsetDecomposition::Node root;
    root.left = l0;
    root.right = l1;
    d.nodes.push_back(root);
    d.root = static_cast<int>(d.nodes.size()) - 1;
    for (const auto& st : seq.steps) {
        if (st.anchor < 0 || st.anchor >= n || leaf_of[st.anchor] < 0)
            throw GraphError("sequence anchor unknown");
        if (st.vertex < 0 || st.vertex >= n || leaf_of[st.vertex] >= 0)
            throw GraphError("sequence vertex invalid or repeated");
        int a = leaf_of[st.anchor];
        int nl = new_leaf(st.anchor), nr = new_leaf(st.vertex);
        d.nodes[a].vertex = -1;
        d.nodes[a].left = nl;
        d.nodes[a].right = nr;
        leaf_of[st.anchor] = nl;
        leaf_of[st.vertex] = nr;
    }
    // leaf intervals plus a postorder by iterative DFS
    std::vector<std::pair<int, int>> st{{d.root, 0}};
    int pos = 0;
    std::vector<int> order;
    while (!st.empty()) {
        auto& [v, phase] = st.back();
        if (d.nodes[v].vertex >= 0) {
            d.nodes[v].lo = pos;
            d.nodes[v].hi = pos + 1;
            d.leaf_order.push_back(d.nodes[v].vertex);
            ++pos;
            order.push_back(v);
            st.pop_back();
            continue;
        }
        if (phase == 0) {
            phase = 1;
            st.push_back({d.nodes[v].left, 0});
        } else if (phase == 1) {
            phase = 2;
            st.push_back({d.nodes[v].right, 0});
        } else {
            d.nodes[v].lo = d.nodes[d.nodes[v].left].lo;
            d.nodes[v].hi = d.nodes[d.nodes[v].right].hi;
            order.push_back(v);
            st.pop_back();
        }
    }
    // neighbor position ranges per vertex; a twinset either fully keeps or
    // fully loses its outside neighbors, so one representative decides
    std::vector<int> vpos(n, -1);
    for (int i = 0; i < n; ++i) vpos[d.leaf_order[i]] = i;
    std::vector<int> min_nb(n, -1), max_nb(n, -1);
    for (int v = 0; v < n; ++v) {
        int lo = -1, hi = -1;
        for (auto [u, id] : g.adj[v]) {
            int p = vpos[u];
            if (lo < 0 || p < lo) lo = p;
            if (hi < 0 || p > hi) hi = p;
        }
        min_nb[v] = lo;
        max_nb[v] = hi;
    }
    std::vector<int> rep(d.nodes.size(), -1);
    for (int v : order) {
        auto& nd = d.nodes[v];
        if (nd.vertex >= 0) {
            rep[v] = nd.vertex;
            nd.twinset_size = 1;
            continue;
        }
        int rl = rep[nd.left], rr = rep[nd.right];
        nd.join = rl >= 0 && rr >= 0 && g.has_edge(rl, rr);
        auto survives = [&](int r) {
            if (r < 0 || min_nb[r] < 0) return false;
            return min_nb[r] < nd.lo || max_nb[r] >= nd.hi;
        };
        nd.left_alive = survives(rl);
        nd.right_alive = survives(rr);
        nd.twinset_size = (nd.left_alive ? d.nodes[nd.left].twinset_size : 0) +
                          (nd.right_alive ? d.nodes[nd.right].twinset_size : 0);
        rep[v] = nd.left_alive ? rl : (nd.right_alive ? rr : -1);
    }
    return d;
}

bool verify_twinset_invariant(const Graph& g, const TwinsetDecomposition& d) {
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        const auto& nd = d.nodes[i];
        auto part = d.part_vertices(static_cast<int>(i));
        std::unordered_set<int> inside(part.begin(), part.end());
        auto twin = d.twinset_vertices(static_cast<int>(i));
        std::vector<int> expected;
        std::vector<int> first_outside;
        bool first = true;
        for (int v : part) {
            std::vector<int> outside;
            for (auto [u, id] : g.adj[v])
                if (!inside.count(u)) outside.push_back(u);
            std::sort(outside.begin(), outside.end());
            if (!outside.empty()) {
                expected.push_back(v);
                if (first) {
                    first_outside = outside;
                    first = false;
                } else if (outside != first_outside) {
                    return false;
                }
            }
        }
        std::sort(expected.begin(), expected.end());
        std::vector<int> got(twin.begin(), twin.end());
        std::sort(got.begin(), got.end());
        if (static_cast<int>(i) != d.root && got != expected) return false;
        if (nd.vertex < 0) {
            auto lt = d.twinset_vertices(nd.left);
            auto rt = d.twinset_vertices(nd.right);
            for (int a : lt)
                for (int b : rt)
                    if (g.has_edge(a, b) != nd.join) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// twinset DP: omega(L(G)^2) over the decomposition
// ---------------------------------------------------------------------------

namespace {

constexpr long long kAbsent = std::numeric_limits<long long>::min() / 4;

// Non-increasing step function phi(p) on [0, domain]: breakpoints with
// ascending p and strictly decreasing values; phi(q) = value of the last
// breakpoint with p <= q.
struct Frontier {
    std::vector<std::pair<long long, long long>> bp;

    long long at(long long q) const {
        long long v = kAbsent;
        for (const auto& [p, val] : bp) {
            if (p > q) break;
            v = val;
        }
        return v;
    }

    void push(long long p, long long val) {
        if (!bp.empty()) {
            if (p <= bp.back().first) return;
            if (val >= bp.back().second) return;
        }
        bp.emplace_back(p, val);
    }
};

// f on [0, cut], floor beyond
Frontier truncate_extend(const Frontier& f, long long cut, long long floor_val) {
    Frontier out;
    for (auto [p, v] : f.bp) {
        if (p > cut) break;
        out.push(p, v);
    }
    if (out.at(cut) != floor_val) out.push(cut + 1, floor_val);
    return out;
}

Frontier pointwise_max(const std::vector<const Frontier*>& fs) {
    std::vector<long long> ps;
    for (const auto* f : fs)
        for (auto [p, v] : f->bp) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    Frontier out;
    for (long long p : ps) {
        long long v = kAbsent;
        for (const auto* f : fs) v = std::max(v, f->at(p));
        out.push(p, v);
    }
    return out;
}

struct DpOut {
    long long W = 0;
    long long tau = 0;
    long long ssize = 0;
    Frontier phi;
};

// suffix maxima over q in [p, cap] of q*factor + phi(q), as a function of p
Frontier side_term(const Frontier& phi, long long cap, long long factor) {
    const auto& bp = phi.bp;
    std::vector<std::pair<long long, long long>> cand;
    for (size_t i = 0; i < bp.size(); ++i) {
        long long pstart = bp[i].first;
        if (pstart > cap) break;
        long long pend = (i + 1 < bp.size()) ? std::min(bp[i + 1].first - 1, cap) : cap;
        cand.emplace_back(pstart, pend * factor + bp[i].second);
    }
    for (int i = static_cast<int>(cand.size()) - 2; i >= 0; --i)
        cand[i].second = std::max(cand[i].second, cand[i + 1].second);
    Frontier out;
    for (auto [p, v] : cand) out.push(p, v);
    return out;
}

DpOut merge_nodes(const TwinsetDecomposition& d, int node, const DpOut& L, const DpOut& R) {
    const auto& nd = d.nodes[node];
    DpOut o;
    o.ssize = nd.twinset_size;
    if (!nd.join) {
        o.W = std::max(L.W, R.W);
        o.tau = nd.left_alive && nd.right_alive ? std::max(L.tau, R.tau)
                : nd.left_alive                 ? L.tau
                : nd.right_alive                ? R.tau
                                                : 0;
        std::vector<Frontier> parts;
        if (nd.left_alive) parts.push_back(truncate_extend(L.phi, L.ssize, L.tau));
        if (nd.right_alive) parts.push_back(truncate_extend(R.phi, R.ssize, R.tau));
        Frontier body;
        if (!parts.empty()) {
            std::vector<const Frontier*> fs;
            for (const auto& f : parts) fs.push_back(&f);
            body = pointwise_max(fs);
        }
        o.phi.push(0, o.W);
        if (o.ssize >= 1) {
            std::vector<long long> qs{1};
            for (auto [p, v] : body.bp)
                if (p >= 1 && p <= o.ssize) qs.push_back(p);
            for (long long q : qs) {
                long long v = body.at(q);
                if (v > kAbsent / 2) o.phi.push(q, v);
            }
        }
        return o;
    }
    long long X = L.ssize * R.ssize;
    long long base = X + L.tau + R.tau;
    Frontier s1 = side_term(L.phi, L.ssize, R.ssize);
    Frontier s2 = side_term(R.phi, R.ssize, L.ssize);
    o.W = std::max({base, s1.at(0), s2.at(0)});
    o.tau = (nd.left_alive || nd.right_alive)
                ? X + (nd.left_alive ? L.tau : 0) + (nd.right_alive ? R.tau : 0)
                : 0;
    Frontier fbase;
    fbase.push(0, base);
    std::vector<Frontier> parts{fbase};
    if (nd.left_alive) parts.push_back(truncate_extend(s1, L.ssize, kAbsent));
    if (nd.right_alive) parts.push_back(truncate_extend(s2, R.ssize, kAbsent));
    std::vector<const Frontier*> fs;
    for (const auto& f : parts) fs.push_back(&f);
    Frontier body = pointwise_max(fs);
    o.phi.push(0, o.W);
    if (o.ssize >= 1) {
        std::vector<long long> qs{1};
        for (auto [p, v] : body.bp)
            if (p >= 1 && p <= o.ssize) qs.push_back(p);
        for (long long q : qs) {
            long long v = body.at(q);
            if (v > kAbsent / 2) o.phi.push(q, v);
        }
    }
    return o;
}

}  // namespace

int dh_strong_index_value(const Graph& g, const PruningSequence& seq) {
    if (g.m() == 0) return 0;
    TwinsetDecomposition d = build_decomposition(g, seq);
    std::vector<DpOut> out(d.nodes.size());
    std::vector<std::pair<int, int>> st{{d.root, 0}};
    while (!st.empty()) {
        auto& [v, phase] = st.back();
        const auto& nd = d.nodes[v];
        if (nd.vertex >= 0) {
            DpOut leaf;
            leaf.ssize = 1;
            leaf.phi.push(0, 0);
            out[v] = leaf;
            st.pop_back();
            continue;
        }
        if (phase == 0) {
            phase = 1;
            st.push_back({nd.left, 0});
        } else if (phase == 1) {
            phase = 2;
            st.push_back({nd.right, 0});
        } else {
            out[v] = merge_nodes(d, v, out[nd.left], out[nd.right]);
            out[nd.left] = DpOut{};  // drop child frontiers early
            out[nd.right] = DpOut{};
            st.pop_back();
        }
    }
    return static_cast<int>(out[d.root].W);
}

int dh_strong_index_value(const Graph& g) {
    auto rec = recognize_dh(g);
    if (!rec.sequence) throw GraphError("input graph is not distance hereditary");
    return dh_strong_index_value(g, *rec.sequence);
}

OracleResult dh_strong_index(const Graph& g) {
    auto rec = recognize_dh(g);
    if (!rec.sequence) throw GraphError("input graph is not distance hereditary");
    int k = dh_strong_index_value(g, *rec.sequence);
    if (g.m() == 0) return {0, StrongColoring{{}, 0}};
    // greedy coloring of L(G)^2 in maximum-cardinality-search order
    Graph lg2 = line_graph_square(g);
    int m = lg2.n;
    std::vector<int> weight(m, 0), order;
    std::vector<char> done(m, 0);
    for (int i = 0; i < m; ++i) {
        int best = -1;
        for (int v = 0; v < m; ++v)
            if (!done[v] &&
                (best < 0 || weight[v] > weight[best] ||
                 (weight[v] == weight[best] && lg2.degree(v) > lg2.degree(best))))
                best = v;
        done[best] = 1;
        order.push_back(best);
        for (auto [u, id] : lg2.adj[best])
            if (!done[u]) ++weight[u];
    }
    std::vector<int> color(m, -1);
    int used = 0;
    for (int v : order) {
        std::vector<char> forb(m + 1, 0);
        for (auto [u, id] : lg2.adj[v])
            if (color[u] >= 0) forb[color[u]] = 1;
        int c = 0;
        while (forb[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    if (used > k) {
        // rare: fall back to a bounded exact search at the DP value
        auto col = strong_coloring_with(g, k);
        if (!col) throw GraphError("twinset DP value is not colorable: internal error");
        return {k, *col};
    }
    if (used < k) throw GraphError("greedy beat the twinset DP value: internal error");
    return {k, StrongColoring{color, k}};
}

// ---------------------------------------------------------------------------
// cographs
// ---------------------------------------------------------------------------

namespace {

struct Cotree {
    struct Node {
        bool join = false;
        int vertex = -1;
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    int root = -1;
};

std::vector<std::vector<int>> induced_components(const Graph& g, const std::vector<int>& verts,
                                                 std::vector<int>& mark, int tag) {
    for (int v : verts) mark[v] = tag;
    std::vector<std::vector<int>> comps;
    std::unordered_set<int> seen;
    seen.reserve(verts.size());
    for (int s : verts) {
        if (seen.count(s)) continue;
        std::vector<int> comp{s}, stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, id] : g.adj[v]) {
                if (mark[u] != tag || seen.count(u)) continue;
                seen.insert(u);
                comp.push_back(u);
                stack.push_back(u);
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

// components of the complement of the induced subgraph; neighbors of the
// current vertex are sheltered, the rest of the unvisited pool moves
std::vector<std::vector<int>> complement_components(const Graph& g, const std::vector<int>& verts,
                                                    std::vector<int>& mark, int tag) {
    for (int v : verts) mark[v] = tag;
    std::unordered_set<int> unvisited(verts.begin(), verts.end());
    std::vector<std::vector<int>> comps;
    while (!unvisited.empty()) {
        int s = *unvisited.begin();
        unvisited.erase(unvisited.begin());
        std::vector<int> comp{s}, queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            std::vector<int> sheltered;
            for (auto [u, id] : g.adj[v]) {
                if (mark[u] == tag && unvisited.erase(u)) sheltered.push_back(u);
            }
            for (int u : unvisited) {
                comp.push_back(u);
                queue.push_back(u);
            }
            unvisited.clear();
            for (int u : sheltered) unvisited.insert(u);
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

int cotree_build(const Graph& g, Cotree& t, std::vector<int> verts, std::vector<int>& mark,
                 int& tag) {
    if (verts.size() == 1) {
        t.nodes.push_back({false, verts[0], {}});
        return static_cast<int>(t.nodes.size()) - 1;
    }
    auto comps = induced_components(g, verts, mark, ++tag);
    if (comps.size() > 1) {
        t.nodes.push_back({false, -1, {}});
        int self = static_cast<int>(t.nodes.size()) - 1;
        std::vector<int> kids;
        for (auto& c : comps) {
            int k = cotree_build(g, t, std::move(c), mark, tag);
            if (k < 0) return -1;
            kids.push_back(k);
        }
        t.nodes[self].children = kids;
        return self;
    }
    auto cocomps = complement_components(g, verts, mark, ++tag);
    if (cocomps.size() > 1) {
        t.nodes.push_back({true, -1, {}});
        int self = static_cast<int>(t.nodes.size()) - 1;
        std::vector<int> kids;
        for (auto& c : cocomps) {
            int k = cotree_build(g, t, std::move(c), mark, tag);
            if (k < 0) return -1;
            kids.push_back(k);
        }
        t.nodes[self].children = kids;
        return self;
    }
    return -1;  // connected and co-connected: a P4 lives here
}

std::optional<Cotree> try_cotree(const Graph& g) {
    if (g.n == 0) return std::nullopt;
    Cotree t;
    std::vector<int> verts(g.n);
    for (int i = 0; i < g.n; ++i) verts[i] = i;
    std::vector<int> mark(g.n, -1);
    int tag = 0;
    int root = cotree_build(g, t, verts, mark, tag);
    if (root < 0) return std::nullopt;
    t.root = root;
    return t;
}

struct CographDp {
    const Graph& g;
    const Cotree& t;
    std::vector<long long> value;
    std::vector<std::vector<int>> vert_of;

    CographDp(const Graph& g_, const Cotree& t_) : g(g_), t(t_) {
        value.assign(t.nodes.size(), 0);
        vert_of.assign(t.nodes.size(), {});
        compute(t.root);
    }

    void compute(int v) {
        const auto& nd = t.nodes[v];
        if (nd.vertex >= 0) {
            vert_of[v] = {nd.vertex};
            return;
        }
        long long total = 0, mx = 0, cross = 0, nsum = 0;
        for (int c : nd.children) {
            compute(c);
            total += value[c];
            mx = std::max(mx, value[c]);
            long long sz = static_cast<long long>(vert_of[c].size());
            cross += nsum * sz;
            nsum += sz;
            vert_of[v].insert(vert_of[v].end(), vert_of[c].begin(), vert_of[c].end());
        }
        value[v] = nd.join ? cross + total : mx;
    }

    void color(int v, int offset, std::vector<int>& out) const {
        const auto& nd = t.nodes[v];
        if (nd.vertex >= 0) return;
        if (!nd.join) {
            for (int c : nd.children) color(c, offset, out);
            return;
        }
        int next = offset;
        for (size_t i = 0; i < nd.children.size(); ++i)
            for (size_t j = i + 1; j < nd.children.size(); ++j)
                for (int a : vert_of[nd.children[i]])
                    for (int b : vert_of[nd.children[j]]) {
                        int e = g.edge_id(a, b);
                        if (e < 0) throw GraphError("cotree join edge missing");
                        out[e] = next++;
                    }
        for (int c : nd.children) {
            color(c, next, out);
            next += static_cast<int>(value[c]);
        }
    }
};

}  // namespace

bool is_cograph(const Graph& g) {
    if (g.n == 0) return true;
    return try_cotree(g).has_value();
}

int cograph_strong_index_value(const Graph& g) {
    auto t = try_cotree(g);
    if (!t) throw GraphError("input graph is not a cograph");
    CographDp dp(g, *t);
    return static_cast<int>(dp.value[t->root]);
}

OracleResult cograph_strong_index(const Graph& g) {
    auto t = try_cotree(g);
    if (!t) throw GraphError("input graph is not a cograph");
    CographDp dp(g, *t);
    int k = static_cast<int>(dp.value[t->root]);
    std::vector<int> colors(g.m(), -1);
    dp.color(t->root, 0, colors);
    for (int e = 0; e < g.m(); ++e)
        if (colors[e] < 0) throw GraphError("cotree coloring missed an edge");
    return {k, StrongColoring{colors, k}};
}

}  // namespace sci
