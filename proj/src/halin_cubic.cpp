#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "sci/halin.hpp"

namespace sci {

namespace {

// Boundary coloring table entry: the key is the coloring of B(x) in sorted
// edge order, canonical up to color permutation (first occurrence order).
// Provenance remembers one way to realize it for witness reconstruction.
struct Entry {
    int y_entry = -1;
    int z_entry = -1;
    std::vector<std::pair<int, int>> union_coloring;  // (edge id, color) over Bx u By u Bz
};

struct Table {
    std::vector<int> edges;                 // B(x), sorted
    std::vector<std::vector<int>> keys;     // canonical colorings
    std::vector<Entry> prov;
    std::map<std::vector<int>, int> index;

    int insert(const std::vector<int>& key, Entry e) {
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(keys.size());
        keys.push_back(key);
        prov.push_back(std::move(e));
        index.emplace(key, id);
        return id;
    }
};

std::vector<int> canonicalize(const std::vector<int>& colors) {
    std::vector<int> out(colors.size());
    std::map<int, int> relabel;
    int next = 0;
    for (size_t i = 0; i < colors.size(); ++i) {
        auto it = relabel.find(colors[i]);
        if (it == relabel.end()) it = relabel.emplace(colors[i], next++).first;
        out[i] = it->second;
    }
    return out;
}

struct CubicDp {
    const Graph& g;
    const HalinStructure& hs;
    int k;
    std::vector<Table> tables;  // per vertex

    CubicDp(const Graph& g_, const HalinStructure& hs_, int kk) : g(g_), hs(hs_), k(kk) {
        tables.resize(g.n);
    }

    bool conflict(int e, int f) const { return edges_within_distance_one(g, e, f); }

    void leaf_table(int x) {
        Table& t = tables[x];
        t.edges = boundary_edges(g, hs, x);
        // three edges sharing x: any coloring must use three distinct colors
        if (t.edges.size() != 3) throw GraphError("cubic leaf boundary is not 3 edges");
        if (k >= 3) {
            Entry e;
            for (int i = 0; i < 3; ++i) e.union_coloring.emplace_back(t.edges[i], i);
            t.insert({0, 1, 2}, std::move(e));
        }
    }

    // enumerate consistent joint colorings of B(x) u B(y) u B(z)
    void internal_table(int x) {
        if (hs.children[x].size() != 2)
            throw GraphError("cubic DP needs binary internal tree vertices");
        int y = hs.children[x][0], z = hs.children[x][1];
        Table& ty = tables[y];
        Table& tz = tables[z];
        Table& tx = tables[x];
        tx.edges = boundary_edges(g, hs, x);
        // union edge list
        std::vector<int> uni = tx.edges;
        uni.insert(uni.end(), ty.edges.begin(), ty.edges.end());
        uni.insert(uni.end(), tz.edges.begin(), tz.edges.end());
        std::sort(uni.begin(), uni.end());
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
        int un = static_cast<int>(uni.size());
        auto pos = [&](int e) {
            return static_cast<int>(std::lower_bound(uni.begin(), uni.end(), e) - uni.begin());
        };
        // B(x) must introduce nothing beyond the parent edge and the children
        // boundaries; the DP relies on that
        int pe = hs.parent_edge[x];
        for (int e : tx.edges)
            if (e != pe && !std::binary_search(ty.edges.begin(), ty.edges.end(), e) &&
                !std::binary_search(tz.edges.begin(), tz.edges.end(), e))
                throw GraphError("cubic boundary outside children boundaries: internal error");
        // conflict matrix over the union
        std::vector<std::vector<char>> conf(un, std::vector<char>(un, 0));
        for (int i = 0; i < un; ++i)
            for (int j = i + 1; j < un; ++j)
                conf[i][j] = conf[j][i] = conflict(uni[i], uni[j]) ? 1 : 0;

        std::vector<int> ypos, zpos;
        for (int e : ty.edges) ypos.push_back(pos(e));
        for (int e : tz.edges) zpos.push_back(pos(e));
        int pepos = pos(pe);

        // shared edges between the two children boundaries
        std::vector<std::pair<int, int>> shared;  // (index in ty.edges, index in tz.edges)
        for (size_t i = 0; i < ty.edges.size(); ++i)
            for (size_t j = 0; j < tz.edges.size(); ++j)
                if (ty.edges[i] == tz.edges[j]) shared.emplace_back(i, j);

        std::vector<int> unicol(un, -1);
        for (size_t yi = 0; yi < ty.keys.size(); ++yi) {
            const auto& ycol = ty.keys[yi];
            std::fill(unicol.begin(), unicol.end(), -1);
            int ymax = 0;
            for (size_t i = 0; i < ycol.size(); ++i) {
                unicol[ypos[i]] = ycol[i];
                ymax = std::max(ymax, ycol[i] + 1);
            }
            for (size_t zi = 0; zi < tz.keys.size(); ++zi) {
                const auto& zcol = tz.keys[zi];
                int zclasses = 0;
                for (int c : zcol) zclasses = std::max(zclasses, c + 1);
                // map z color classes into the joint palette
                std::vector<int> classmap(zclasses, -1);
                // anchors from shared edges
                bool bad = false;
                for (auto [i, j] : shared) {
                    int zc = zcol[j];
                    int target = ycol[i];
                    if (classmap[zc] >= 0 && classmap[zc] != target) {
                        bad = true;
                        break;
                    }
                    classmap[zc] = target;
                }
                if (bad) continue;
                // per-class forbidden joint colors from cross conflicts
                // gather z edges by class
                std::vector<std::vector<int>> class_edges(zclasses);
                for (size_t j = 0; j < zcol.size(); ++j) class_edges[zcol[j]].push_back(zpos[j]);
                // backtrack over classes
                std::vector<int> assignment(zclasses, -1);
                int fresh = ymax;
                auto fits = [&](int zc, int target) {
                    for (int ep : class_edges[zc]) {
                        for (size_t i = 0; i < ycol.size(); ++i)
                            if (conf[ep][ypos[i]] && ycol[i] == target) return false;
                        // also conflicts against already assigned z classes
                        for (int oc = 0; oc < zclasses; ++oc) {
                            if (assignment[oc] != target) continue;
                            for (int eq : class_edges[oc])
                                if (conf[ep][eq]) return false;
                        }
                    }
                    return true;
                };
                // verify anchored classes do not clash
                // distinct z classes stay distinct: the certified entry is for
                // exactly this partition of B(z)
                auto taken_before = [&](int zc, int target) {
                    for (int oc = 0; oc < zc; ++oc)
                        if (assignment[oc] == target) return true;
                    return false;
                };
                std::function<void(int, int)> rec = [&](int zc, int used) {
                    if (zc == zclasses) {
                        finish(x, yi, zi, ycol, zcol, unicol, uni, ypos, zpos, pepos, conf,
                               assignment, used);
                        return;
                    }
                    if (classmap[zc] >= 0) {
                        if (taken_before(zc, classmap[zc]) || !fits(zc, classmap[zc])) return;
                        assignment[zc] = classmap[zc];
                        rec(zc + 1, used);
                        assignment[zc] = -1;
                        return;
                    }
                    for (int target = 0; target < used; ++target) {
                        if (taken_before(zc, target)) continue;
                        // anchored classes later in the order hold their target
                        bool reserved = false;
                        for (int oc = zc + 1; oc < zclasses; ++oc)
                            if (classmap[oc] == target) reserved = true;
                        if (reserved) continue;
                        if (!fits(zc, target)) continue;
                        assignment[zc] = target;
                        rec(zc + 1, used);
                        assignment[zc] = -1;
                    }
                    if (used < k) {
                        assignment[zc] = used;
                        rec(zc + 1, used + 1);
                        assignment[zc] = -1;
                    }
                };
                (void)fresh;
                rec(0, ymax);
            }
        }
    }

    // complete a consistent (y,z) pairing: color the parent edge and record
    void finish(int x, size_t yi, size_t zi, const std::vector<int>& ycol,
                const std::vector<int>& zcol, std::vector<int>& unicol,
                const std::vector<int>& uni, const std::vector<int>& ypos,
                const std::vector<int>& zpos, int pepos,
                const std::vector<std::vector<char>>& conf, const std::vector<int>& assignment,
                int used) {
        (void)ypos;
        Table& tx = tables[x];
        // write z colors into the joint coloring (y colors are already there)
        std::vector<std::pair<int, int>> touched;
        bool bad = false;
        for (size_t j = 0; j < zcol.size() && !bad; ++j) {
            int p = zpos[j];
            int c = assignment[zcol[j]];
            if (unicol[p] >= 0 && unicol[p] != c) bad = true;
            if (unicol[p] < 0) {
                unicol[p] = c;
                touched.emplace_back(p, -1);
            }
        }
        if (!bad) {
            // color the parent edge of x
            std::vector<char> forb(k, 0);
            for (size_t i = 0; i < uni.size(); ++i)
                if (unicol[i] >= 0 && conf[pepos][i]) forb[unicol[i]] = 1;
            int pmax = std::min(used, k - 1);
            for (int c = 0; c <= pmax; ++c) {
                if (forb[c]) continue;
                unicol[pepos] = c;
                // restrict to B(x) and canonicalize
                std::vector<int> bx;
                for (int e : tx.edges) {
                    int p =
                        static_cast<int>(std::lower_bound(uni.begin(), uni.end(), e) - uni.begin());
                    bx.push_back(unicol[p]);
                }
                Entry ent;
                ent.y_entry = static_cast<int>(yi);
                ent.z_entry = static_cast<int>(zi);
                for (size_t i = 0; i < uni.size(); ++i)
                    if (unicol[i] >= 0) ent.union_coloring.emplace_back(uni[i], unicol[i]);
                tx.insert(canonicalize(bx), std::move(ent));
                unicol[pepos] = -1;
                if (c == used) break;  // fresh colors are interchangeable
            }
        }
        for (auto [p, c] : touched) unicol[p] = c;
        (void)ycol;
    }
};

}  // namespace

std::optional<StrongColoring> cubic_halin_decide(const Graph& g, const HalinStructure& hs, int k) {
    if (k < 3) return std::nullopt;
    CubicDp dp(g, hs, k);
    for (int x : hs.postorder) {
        if (hs.is_leaf[x])
            dp.leaf_table(x);
        else
            dp.internal_table(x);
        if (dp.tables[x].keys.empty()) return std::nullopt;
    }
    int top = hs.root_child;
    if (dp.tables[top].keys.empty()) return std::nullopt;
    // reconstruct a witness top-down
    std::vector<int> colors(g.m(), -1);
    struct Frame {
        int x;
        int entry;
        std::vector<int> bx_colors;  // concrete colors of B(x)
    };
    std::vector<Frame> stack;
    {
        std::vector<int> bx = dp.tables[top].keys[0];
        stack.push_back({top, 0, bx});
    }
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        Table& t = dp.tables[f.x];
        for (size_t i = 0; i < t.edges.size(); ++i) colors[t.edges[i]] = f.bx_colors[i];
        if (hs.is_leaf[f.x]) continue;
        const Entry& ent = t.prov[f.entry];
        // permutation linking the stored union coloring to the concrete one
        std::map<int, int> sigma;
        std::vector<char> target_used(k, 0);
        for (size_t i = 0; i < t.edges.size(); ++i) {
            int e = t.edges[i];
            for (auto [ue, uc] : ent.union_coloring)
                if (ue == e) {
                    sigma[uc] = f.bx_colors[i];
                    target_used[f.bx_colors[i]] = 1;
                }
        }
        int spare = 0;
        auto map_color = [&](int c) {
            auto it = sigma.find(c);
            if (it != sigma.end()) return it->second;
            while (spare < k && target_used[spare]) ++spare;
            if (spare >= k) throw GraphError("witness palette overflow: internal error");
            sigma[c] = spare;
            target_used[spare] = 1;
            return spare;
        };
        int y = hs.children[f.x][0], z = hs.children[f.x][1];
        for (int child : {y, z}) {
            Table& tc = dp.tables[child];
            Frame nf;
            nf.x = child;
            nf.entry = child == y ? ent.y_entry : ent.z_entry;
            for (int e : tc.edges) {
                int uc = -1;
                for (auto [ue, c] : ent.union_coloring)
                    if (ue == e) uc = c;
                if (uc < 0) throw GraphError("child boundary missing from union: internal error");
                nf.bx_colors.push_back(map_color(uc));
            }
            stack.push_back(std::move(nf));
        }
    }
    for (int e = 0; e < g.m(); ++e)
        if (colors[e] < 0) throw GraphError("cubic witness left an edge uncolored");
    StrongColoring c;
    c.colors = colors;
    c.k = k;
    return c;
}

}  // namespace sci
