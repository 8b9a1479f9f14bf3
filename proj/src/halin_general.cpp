#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "sci/halin.hpp"

namespace sci {

// Type-signature DP over the boundary of each accumulated subtree block.
// Visible structure per state: a handful of individually tracked edges
// ("slots": the parent edge plus the cycle fringe of the block) and two
// anonymous color rows: V1 (colors on tree edges at the block's top vertex)
// and U (colors on edges at already-absorbed children, which only the
// pending parent edge still conflicts with). States are canonical up to
// color permutation: slot colors relabeled by first occurrence plus row
// flags and two counters.

namespace {

struct GState {
    std::vector<int> slot;   // color id per slot position
    std::vector<char> v1f;   // per slot-color id: color also lies in the V1 row
    std::vector<char> uf;    // per slot-color id: color also lies in the U row
    int nslotc = 0;          // distinct slot colors
    int nv1 = 0;             // anonymous colors in V1 only
    int nu = 0;              // anonymous colors in U only
    int prov = -1;
    int total() const { return nslotc + nv1 + nu; }
};

// Provenance of a state. Color ids live in the step's pre-compaction
// palette; compact sends them to the canonical state palette (-1 when a
// color retires entirely at this step).
struct Prov {
    enum class Kind { leaf, merge, close } kind = Kind::leaf;
    int a = -1, b = -1;            // arena indices of the source states
    std::vector<int> map_a, map_b; // source color id -> pre-compaction id
    std::vector<int> compact;      // pre-compaction id -> canonical id or -1
    int extra_edge = -1;           // close: the parent edge
    int extra_color = -1;          // close: its pre-compaction color id
    std::vector<std::pair<int, int>> emit;  // leaf: (edge id, pre id)
};

struct Arena {
    std::vector<GState> states;
    std::vector<Prov> provs;
    int add(GState s, Prov p) {
        provs.push_back(std::move(p));
        s.prov = static_cast<int>(provs.size()) - 1;
        states.push_back(std::move(s));
        return static_cast<int>(states.size()) - 1;
    }
};

std::string state_key(const GState& s) {
    std::string key;
    key.reserve(s.slot.size() + s.v1f.size() * 2 + 8);
    for (int c : s.slot) key.push_back(static_cast<char>(c));
    key.push_back(-1);
    for (size_t i = 0; i < s.v1f.size(); ++i)
        key.push_back(static_cast<char>(s.v1f[i] | (s.uf[i] << 1)));
    key.push_back(-1);
    key.push_back(static_cast<char>(s.nv1 & 0x7f));
    key.push_back(static_cast<char>((s.nv1 >> 7) & 0x7f));
    key.push_back(static_cast<char>(s.nu & 0x7f));
    key.push_back(static_cast<char>((s.nu >> 7) & 0x7f));
    return key;
}

struct GeneralDp {
    const Graph& g;
    const HalinStructure& hs;
    int k;
    Arena arena;

    GeneralDp(const Graph& g_, const HalinStructure& hs_, int kk) : g(g_), hs(hs_), k(kk) {}

    bool conflict(int e, int f) const {
        if (e == f) return false;
        return edges_within_distance_one(g, e, f);
    }

    bool incident(int e, int v) const {
        auto [a, b] = g.edges[e];
        return a == v || b == v;
    }

    bool endpoint_adjacent(int e, int v) const {
        auto [a, b] = g.edges[e];
        return g.has_edge(a, v) || g.has_edge(b, v);
    }

    // slot list of the block [lo, hi] in leaf positions (no parent edge)
    std::vector<int> block_slots(int lo, int hi) const {
        int L = static_cast<int>(hs.cycle_edge.size());
        std::set<int> s;
        int yleaf = hs.cycle_order[lo], zleaf = hs.cycle_order[hi];
        s.insert(hs.parent_edge[yleaf]);
        s.insert(hs.cycle_edge[(lo - 1 + L) % L]);
        s.insert(hs.cycle_edge[lo % L]);
        s.insert(hs.parent_edge[zleaf]);
        s.insert(hs.cycle_edge[(hi - 1 + L) % L]);
        s.insert(hs.cycle_edge[hi % L]);
        return {s.begin(), s.end()};
    }

    // canonicalize a raw joint state: relabel colors by first slot occurrence,
    // drop colors with no membership, order anonymous colors after slot colors
    GState canonicalize(const std::vector<int>& slots, const std::vector<int>& color,
                        const std::vector<char>& v1, const std::vector<char>& u,
                        int ncolors) const {
        (void)slots;
        std::vector<int> relabel(ncolors, -1);
        GState out;
        int next = 0;
        for (int c : color) {
            if (relabel[c] < 0) relabel[c] = next++;
        }
        out.nslotc = next;
        out.slot.resize(color.size());
        for (size_t i = 0; i < color.size(); ++i) out.slot[i] = relabel[color[i]];
        out.v1f.assign(next, 0);
        out.uf.assign(next, 0);
        for (int c = 0; c < ncolors; ++c) {
            if (relabel[c] >= 0) {
                out.v1f[relabel[c]] = v1[c];
                out.uf[relabel[c]] = u[c];
            } else if (v1[c] && u[c]) {
                throw GraphError("color in both V1 and U: internal error");
            } else if (v1[c]) {
                ++out.nv1;
            } else if (u[c]) {
                ++out.nu;
            }
            // colors with no membership vanish
        }
        return out;
    }

    // remap: old color id -> canonical id (anonymous olds map onto the counter
    // ranges in ascending order)
    std::vector<int> canonical_map(const std::vector<int>& color, const std::vector<char>& v1,
                                   const std::vector<char>& u, int ncolors,
                                   const GState& out) const {
        std::vector<int> relabel(ncolors, -1);
        int next = 0;
        for (int c : color)
            if (relabel[c] < 0) relabel[c] = next++;
        int v1next = out.nslotc, unext = out.nslotc + out.nv1;
        std::vector<int> m(ncolors, -1);
        for (int c = 0; c < ncolors; ++c) {
            if (relabel[c] >= 0) m[c] = relabel[c];
            else if (v1[c]) m[c] = v1next++;
            else if (u[c]) m[c] = unext++;
        }
        return m;
    }

    // ---- step results ----
    struct Step {
        std::vector<int> slots;       // shared context: sorted edge ids
        std::vector<int> states;      // arena indices
        std::map<std::string, int> dedup;
    };

    void insert_state(Step& step, const std::vector<int>& color, const std::vector<char>& v1,
                      const std::vector<char>& u, int ncolors, Prov prov) {
        // the pre-compaction palette is simultaneously alive: it must fit k
        if (ncolors > k) return;
        GState s = canonicalize(step.slots, color, v1, u, ncolors);
        auto key = state_key(s);
        if (step.dedup.count(key)) return;
        prov.compact = canonical_map(color, v1, u, ncolors, s);
        int idx = arena.add(std::move(s), std::move(prov));
        step.dedup.emplace(std::move(key), idx);
        step.states.push_back(idx);
    }

    Step leaf_piece(int leaf) {
        Step step;
        int pos = hs.leaf_pos[leaf];
        int L = static_cast<int>(hs.cycle_edge.size());
        std::set<int> s{hs.parent_edge[leaf], hs.cycle_edge[(pos - 1 + L) % L],
                        hs.cycle_edge[pos % L]};
        step.slots.assign(s.begin(), s.end());
        if (static_cast<int>(step.slots.size()) != 3)
            throw GraphError("leaf piece expects 3 distinct edges");
        if (k < 3) return step;
        std::vector<int> color{0, 1, 2};
        std::vector<char> v1(3, 0), u(3, 0);
        Prov p;
        p.kind = Prov::Kind::leaf;
        for (int i = 0; i < 3; ++i) p.emit.emplace_back(step.slots[i], i);
        insert_state(step, color, v1, u, 3, std::move(p));
        return step;
    }

    // retire slots not present in the target slot list: tree edges at v join
    // the V1 row, edges at a child of v join the U row, the rest settle
    void retire(const std::vector<int>& old_slots, const std::vector<int>& new_slots,
                const std::vector<int>& color, std::vector<char>& v1, std::vector<char>& u,
                int v) const {
        for (size_t i = 0; i < old_slots.size(); ++i) {
            int e = old_slots[i];
            if (std::binary_search(new_slots.begin(), new_slots.end(), e)) continue;
            int c = color[i];
            if (incident(e, v)) {
                v1[c] = 1;
            } else {
                auto [a, b] = g.edges[e];
                if (hs.parent[a] == v || hs.parent[b] == v) u[c] = 1;
            }
        }
    }

    // rebase the first child piece as the accumulation at v
    Step rebase(const Step& piece, int v, int lo, int hi) {
        Step step;
        step.slots = block_slots(lo, hi);
        for (int idx : piece.states) {
            const GState s = arena.states[idx];  // copy: the arena may reallocate
            int n = s.total();
            std::vector<int> color(step.slots.size(), -1);
            std::vector<char> v1(n, 0), u(n, 0);
            // piece colors: slots keep ids; piece V1 row converts to U
            for (int c = 0; c < s.nslotc; ++c) {
                if (s.v1f[c]) u[c] = 1;
                // piece U row is empty by construction
            }
            for (int c = s.nslotc; c < s.nslotc + s.nv1; ++c) u[c] = 1;
            for (size_t i = 0; i < step.slots.size(); ++i) {
                auto it = std::find(piece.slots.begin(), piece.slots.end(), step.slots[i]);
                if (it == piece.slots.end())
                    throw GraphError("rebase: block slot missing from piece: internal error");
                color[i] = s.slot[it - piece.slots.begin()];
            }
            retire(piece.slots, step.slots, slot_colors(piece, s), v1, u, v);
            Prov p;
            p.kind = Prov::Kind::merge;
            p.a = idx;
            p.b = -1;
            p.map_a.resize(n);
            for (int c = 0; c < n; ++c) p.map_a[c] = c;
            insert_state(step, color, v1, u, n, std::move(p));
        }
        return step;
    }

    std::vector<int> slot_colors(const Step& step, const GState& s) const {
        (void)step;
        return s.slot;
    }

    // merge the accumulated block with the next child piece
    Step merge(const Step& acc, const Step& piece, int v, int cj, int lo, int hi) {
        Step step;
        step.slots = block_slots(lo, hi);
        int an = static_cast<int>(acc.slots.size());
        int bn = static_cast<int>(piece.slots.size());
        // structural conflict data
        std::vector<char> b_conf_v1a(bn), b_conf_ua(bn), a_conf_v1b(an);
        for (int j = 0; j < bn; ++j) {
            b_conf_v1a[j] = incident(piece.slots[j], v) || endpoint_adjacent(piece.slots[j], v);
            b_conf_ua[j] = incident(piece.slots[j], v);
        }
        for (int i = 0; i < an; ++i)
            a_conf_v1b[i] = incident(acc.slots[i], cj) || endpoint_adjacent(acc.slots[i], cj);
        std::vector<std::vector<char>> slotconf(bn, std::vector<char>(an, 0));
        for (int j = 0; j < bn; ++j)
            for (int i = 0; i < an; ++i)
                if (piece.slots[j] != acc.slots[i])
                    slotconf[j][i] = conflict(piece.slots[j], acc.slots[i]);
        // forced identifications on shared edges
        std::vector<std::pair<int, int>> sharedpos;  // (acc slot idx, piece slot idx)
        for (int i = 0; i < an; ++i)
            for (int j = 0; j < bn; ++j)
                if (acc.slots[i] == piece.slots[j]) sharedpos.emplace_back(i, j);
        if (sharedpos.empty()) throw GraphError("merge without shared edge: internal error");

        for (int aidx : acc.states) {
            const GState sa = arena.states[aidx];  // copy: the arena may reallocate
            int A = sa.total();
            // membership of acc colors
            std::vector<std::vector<int>> a_slots(A);
            for (int i = 0; i < an; ++i) a_slots[sa.slot[i]].push_back(i);
            auto av1 = [&](int c) {
                return c < sa.nslotc ? sa.v1f[c] != 0 : c < sa.nslotc + sa.nv1;
            };
            auto au = [&](int c) { return c < sa.nslotc ? sa.uf[c] != 0 : c >= sa.nslotc + sa.nv1; };
            for (int bidx : piece.states) {
                const GState sb = arena.states[bidx];
                int B = sb.total();
                if (sb.nu != 0) throw GraphError("piece carries a U row: internal error");
                std::vector<std::vector<int>> b_slots(B);
                for (int j = 0; j < bn; ++j) b_slots[sb.slot[j]].push_back(j);
                auto bv1 = [&](int c) { return c < sb.nslotc ? sb.v1f[c] != 0 : true; };
                // forced targets from shared slots
                std::vector<int> forced(B, -1);
                bool bad = false;
                for (auto [i, j] : sharedpos) {
                    int bc = sb.slot[j], target = sa.slot[i];
                    if (forced[bc] >= 0 && forced[bc] != target) bad = true;
                    forced[bc] = target;
                }
                if (bad) continue;

                auto compat = [&](int bc, int ac) {
                    bool acc_v1 = av1(ac), acc_u = au(ac);
                    for (int j : b_slots[bc]) {
                        if (acc_v1 && b_conf_v1a[j]) return false;
                        if (acc_u && b_conf_ua[j]) return false;
                        for (int i : a_slots[ac])
                            if (slotconf[j][i]) return false;
                    }
                    if (bv1(bc)) {
                        if (acc_v1) return false;
                        for (int i : a_slots[ac])
                            if (a_conf_v1b[i]) return false;
                    }
                    return true;
                };

                // backtrack over piece colors in order; anonymous piece colors
                // (all V1-only) take strictly increasing targets
                std::vector<int> assign(B, -1);
                std::vector<char> taken(A, 0);
                int fresh = A;
                std::function<void(int, int)> rec = [&](int bc, int prev_anon_target) {
                    if (bc == B) {
                        emit_joint(step, acc, piece, sa, sb, aidx, bidx, assign, fresh, v,
                                   a_slots, b_slots, av1, au, bv1);
                        return;
                    }
                    bool anonymous = bc >= sb.nslotc;
                    if (forced[bc] >= 0) {
                        int t = forced[bc];
                        if (!taken[t] && compat(bc, t)) {
                            taken[t] = 1;
                            assign[bc] = t;
                            rec(bc + 1, prev_anon_target);
                            taken[t] = 0;
                            assign[bc] = -1;
                        }
                        return;
                    }
                    for (int t = 0; t < A; ++t) {
                        if (taken[t] || !compat(bc, t)) continue;
                        if (anonymous && t <= prev_anon_target) continue;
                        taken[t] = 1;
                        assign[bc] = t;
                        rec(bc + 1, anonymous ? t : prev_anon_target);
                        taken[t] = 0;
                        assign[bc] = -1;
                    }
                    // one fresh color (fresh identities are interchangeable)
                    if (fresh < k) {
                        assign[bc] = fresh;
                        ++fresh;
                        rec(bc + 1, anonymous ? A + 1000 : prev_anon_target);
                        --fresh;
                        assign[bc] = -1;
                    }
                };
                rec(0, -1);
            }
        }
        return step;
    }

    template <typename AV1, typename AU, typename BV1>
    void emit_joint(Step& step, const Step& acc, const Step& piece, const GState& sa,
                    const GState& sb, int aidx, int bidx, const std::vector<int>& assign,
                    int total_colors, int v, const std::vector<std::vector<int>>& a_slots,
                    const std::vector<std::vector<int>>& b_slots, AV1 av1, AU au, BV1 bv1) {
        (void)a_slots;
        (void)b_slots;
        int A = sa.total();
        std::vector<char> v1(total_colors, 0), u(total_colors, 0);
        for (int c = 0; c < A; ++c) {
            if (av1(c)) v1[c] = 1;
            if (au(c)) u[c] = 1;
        }
        for (int c = 0; c < sb.total(); ++c)
            if (bv1(c)) u[assign[c]] = 1;  // edges at the child join the U row
        // colors of the union slot list, pre-retirement
        std::vector<int> all_slots = acc.slots;
        all_slots.insert(all_slots.end(), piece.slots.begin(), piece.slots.end());
        std::sort(all_slots.begin(), all_slots.end());
        all_slots.erase(std::unique(all_slots.begin(), all_slots.end()), all_slots.end());
        std::vector<int> all_colors(all_slots.size(), -1);
        for (size_t i = 0; i < acc.slots.size(); ++i) {
            auto p = std::lower_bound(all_slots.begin(), all_slots.end(), acc.slots[i]) -
                     all_slots.begin();
            all_colors[p] = sa.slot[i];
        }
        for (size_t j = 0; j < piece.slots.size(); ++j) {
            auto p = std::lower_bound(all_slots.begin(), all_slots.end(), piece.slots[j]) -
                     all_slots.begin();
            int c = assign[sb.slot[j]];
            if (all_colors[p] >= 0 && all_colors[p] != c) return;  // shared edge disagreement
            all_colors[p] = c;
        }
        retire(all_slots, step.slots, all_colors, v1, u, v);
        std::vector<int> color(step.slots.size(), -1);
        for (size_t i = 0; i < step.slots.size(); ++i) {
            auto p = std::lower_bound(all_slots.begin(), all_slots.end(), step.slots[i]) -
                     all_slots.begin();
            if (p >= static_cast<long>(all_slots.size()) || all_slots[p] != step.slots[i])
                throw GraphError("merged block slot missing: internal error");
            color[i] = all_colors[p];
        }
        Prov prov;
        prov.kind = Prov::Kind::merge;
        prov.a = aidx;
        prov.b = bidx;
        prov.map_a.resize(A);
        for (int c = 0; c < A; ++c) prov.map_a[c] = c;
        prov.map_b.resize(sb.total());
        for (int c = 0; c < sb.total(); ++c) prov.map_b[c] = assign[c];
        insert_state(step, color, v1, u, total_colors, std::move(prov));
    }

    // color the parent edge of v and publish the piece
    Step close(const Step& acc, int v) {
        Step step;
        int pe = hs.parent_edge[v];
        std::set<int> s(acc.slots.begin(), acc.slots.end());
        s.insert(pe);
        step.slots.assign(s.begin(), s.end());
        for (int aidx : acc.states) {
            const GState sa = arena.states[aidx];  // copy: the arena may reallocate
            int A = sa.total();
            std::vector<char> pe_forb(A + 1, 0);
            for (int c = 0; c < sa.nslotc; ++c)
                if (sa.v1f[c] || sa.uf[c]) pe_forb[c] = 1;
            for (int c = sa.nslotc; c < A; ++c) pe_forb[c] = 1;  // anonymous rows
            for (size_t i = 0; i < acc.slots.size(); ++i)
                if (conflict(pe, acc.slots[i])) pe_forb[sa.slot[i]] = 1;
            int cmax = A < k ? A : A - 1;  // c == A is the one fresh choice
            for (int c = 0; c <= cmax; ++c) {
                if (c < A && pe_forb[c]) continue;
                // build the published piece: U row retires
                int total = c == A ? A + 1 : A;
                std::vector<char> v1(total, 0), u(total, 0);
                for (int cc = 0; cc < sa.nslotc; ++cc) v1[cc] = sa.v1f[cc];
                for (int cc = sa.nslotc; cc < sa.nslotc + sa.nv1; ++cc) v1[cc] = 1;
                // U flags dropped entirely
                std::vector<int> color(step.slots.size(), -1);
                for (size_t i = 0; i < step.slots.size(); ++i) {
                    if (step.slots[i] == pe) {
                        color[i] = c;
                        continue;
                    }
                    auto it = std::find(acc.slots.begin(), acc.slots.end(), step.slots[i]);
                    if (it == acc.slots.end())
                        throw GraphError("close: slot missing: internal error");
                    color[i] = sa.slot[it - acc.slots.begin()];
                }
                Prov prov;
                prov.kind = Prov::Kind::close;
                prov.a = aidx;
                prov.map_a.resize(A);
                for (int cc = 0; cc < A; ++cc) prov.map_a[cc] = cc;
                prov.extra_edge = pe;
                prov.extra_color = c;
                insert_state(step, color, v1, u, total, std::move(prov));
            }
        }
        return step;
    }

    std::optional<StrongColoring> run() {
        if (k < 3) return std::nullopt;
        std::vector<Step> piece_of(g.n);
        for (int x : hs.postorder) {
            if (hs.is_leaf[x]) {
                piece_of[x] = leaf_piece(x);
            } else {
                const auto& kids = hs.children[x];
                Step acc = rebase(piece_of[kids[0]], x, hs.arc_lo[kids[0]], hs.arc_hi[kids[0]]);
                piece_of[kids[0]] = Step{};
                int lo = hs.arc_lo[kids[0]];
                for (size_t j = 1; j < kids.size(); ++j) {
                    acc = merge(acc, piece_of[kids[j]], x, kids[j], lo, hs.arc_hi[kids[j]]);
                    piece_of[kids[j]] = Step{};
                    if (acc.states.empty()) return std::nullopt;
                }
                piece_of[x] = close(acc, x);
            }
            if (piece_of[x].states.empty()) return std::nullopt;
        }
        const Step& top = piece_of[hs.root_child];
        if (top.states.empty()) return std::nullopt;
        // reconstruct: walk the provenance top-down carrying canonical-id ->
        // global maps; colors that retired at a step get a fresh global
        // distinct from everything still visible there
        std::vector<int> colors(g.m(), -1);
        struct Item {
            int idx;
            std::vector<int> to_global;
        };
        std::vector<Item> stack;
        {
            int idx = top.states[0];
            const GState s = arena.states[idx];  // copy: the arena may reallocate
            std::vector<int> ident(s.total());
            for (int i = 0; i < s.total(); ++i) ident[i] = i;
            stack.push_back({idx, ident});
        }
        while (!stack.empty()) {
            Item it = std::move(stack.back());
            stack.pop_back();
            const Prov& p = arena.provs[arena.states[it.idx].prov];
            std::vector<int> pre_global(p.compact.size(), -1);
            std::vector<char> used(k, 0);
            for (size_t pre = 0; pre < p.compact.size(); ++pre)
                if (p.compact[pre] >= 0) {
                    pre_global[pre] = it.to_global[p.compact[pre]];
                    used[pre_global[pre]] = 1;
                }
            for (size_t pre = 0; pre < p.compact.size(); ++pre) {
                if (p.compact[pre] >= 0) continue;
                int c = 0;
                while (c < k && used[c]) ++c;
                if (c >= k) throw GraphError("witness palette overflow: internal error");
                pre_global[pre] = c;
                used[c] = 1;
            }
            auto compose = [&](const std::vector<int>& inner) {
                std::vector<int> out(inner.size(), -1);
                for (size_t i = 0; i < inner.size(); ++i)
                    if (inner[i] >= 0) out[i] = pre_global[inner[i]];
                return out;
            };
            switch (p.kind) {
                case Prov::Kind::leaf:
                    for (auto [e, c] : p.emit) colors[e] = pre_global[c];
                    break;
                case Prov::Kind::close:
                    colors[p.extra_edge] = pre_global[p.extra_color];
                    stack.push_back({p.a, compose(p.map_a)});
                    break;
                case Prov::Kind::merge:
                    stack.push_back({p.a, compose(p.map_a)});
                    if (p.b >= 0) stack.push_back({p.b, compose(p.map_b)});
                    break;
            }
        }
        for (int e = 0; e < g.m(); ++e)
            if (colors[e] < 0) throw GraphError("general DP witness left an edge uncolored");
        StrongColoring c;
        c.colors = colors;
        c.k = k;
        return c;
    }
};

}  // namespace

std::optional<StrongColoring> general_halin_decide(const Graph& g, const HalinStructure& hs,
                                                   int k) {
    GeneralDp dp(g, hs, k);
    return dp.run();
}

}  // namespace sci
