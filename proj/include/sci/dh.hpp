#pragma once

#include <optional>

#include "sci/graph.hpp"
#include "sci/oracle.hpp"

namespace sci {

// Construction witness for a distance-hereditary graph: replaying the steps
// from the base edge reconstructs the graph exactly.
struct PruningStep {
    enum class Op { pendant, true_twin, false_twin } op;
    int vertex = -1;
    int anchor = -1;
};

struct PruningSequence {
    std::pair<int, int> base{0, 1};
    std::vector<PruningStep> steps;  // construction order
};

struct DhRecognition {
    std::optional<PruningSequence> sequence;
    std::vector<int> stuck_vertices;  // nonempty witness when not DH
};

// Rankwidth-one decomposition: a rooted binary tree whose leaves are the
// vertices. Parts are contiguous intervals of leaf_order; the twinset of a
// node is the union of the surviving children twinsets (all its vertices
// share the same neighborhood outside the part).
struct TwinsetDecomposition {
    struct Node {
        int left = -1, right = -1;     // -1 for leaves
        int vertex = -1;               // leaf payload
        bool join = false;             // children twinsets joined or union
        bool left_alive = false;       // left child twinset survives into S_e
        bool right_alive = false;
        int lo = 0, hi = 0;            // part = leaf_order[lo..hi)
        long long twinset_size = 0;
    };
    std::vector<Node> nodes;
    std::vector<int> leaf_order;  // leaf position -> vertex
    int root = -1;

    std::vector<int> part_vertices(int node) const;
    std::vector<int> twinset_vertices(int node) const;
};

// Exhaustive check of the twinset invariant at every node; desk scale.
bool verify_twinset_invariant(const Graph& g, const TwinsetDecomposition& d);

// Greedy pendant/twin elimination with incremental neighborhood hashing;
// exact (candidate pairs verified), near-linear in practice.
DhRecognition recognize_dh(const Graph& g);

// Rebuild a graph from a pruning sequence. Vertex ids are the ones named in
// the steps; edge ids follow creation order.
Graph replay_sequence(const PruningSequence& seq, int n);

TwinsetDecomposition build_decomposition(const Graph& g, const PruningSequence& seq);

// Cotree-based strong chromatic index of a cograph: join adds |X| = n1*n2 to
// the sum of the children values, union takes the max. Throws GraphError on
// non-cographs.
OracleResult cograph_strong_index(const Graph& g);
int cograph_strong_index_value(const Graph& g);
bool is_cograph(const Graph& g);

// Strong chromatic index of a distance-hereditary graph: omega(L(G)^2) by
// the bottom-up twinset DP, plus a greedy coloring in MCS order over L(G)^2
// (checked to use exactly k colors, with a bounded exact fallback).
OracleResult dh_strong_index(const Graph& g);
int dh_strong_index_value(const Graph& g);  // no coloring; used by bench
int dh_strong_index_value(const Graph& g, const PruningSequence& seq);

}  // namespace sci
