#pragma once

#include <optional>

#include "sci/graph.hpp"
#include "sci/oracle.hpp"

namespace sci {

// Certifies a Halin decomposition of G: a spanning tree T without degree-2
// vertices plus the cyclic order of its leaves; consecutive leaves are the
// cycle edges and the cycle crosses no tree edge in the implied embedding.
struct HalinAnnotation {
    std::vector<int> tree_edges;  // edge ids forming T
    std::vector<int> cycle_order; // leaves of T in cyclic order
};

// Rooted plane structure derived from a valid annotation. The tree is rooted
// at the first leaf of cycle_order; every other node knows its parent edge
// and the contiguous arc of leaves below it.
struct HalinStructure {
    int root = -1;                         // the root leaf r
    int root_child = -1;                   // unique neighbor of r in T
    std::vector<int> parent;               // -1 for root
    std::vector<int> parent_edge;          // tree edge id to parent
    std::vector<std::vector<int>> children;  // plane left-to-right order
    std::vector<char> is_leaf;             // leaf of T
    std::vector<int> leaf_pos;             // position in cycle_order, -1 otherwise
    std::vector<int> cycle_order;          // leaf position -> vertex
    std::vector<int> cycle_edge;           // cycle_edge[i]: edge between leaf i and leaf i+1 (mod L)
    std::vector<int> arc_lo, arc_hi;       // leaf arc of the subtree at each vertex
    std::vector<int> postorder;            // internal+leaf vertices, children before parents
};

// ok: empty optional. Violations are reported by name: not-a-tree,
// degree-2-vertex, leaf-cycle-mismatch, crossing.
std::optional<std::string> validate_halin(const Graph& g, const HalinAnnotation& ann);

// Requires a valid annotation.
HalinStructure build_halin_structure(const Graph& g, const HalinAnnotation& ann);

// Boundary of the subtree at x (x != root leaf): the parent tree edge, the
// two cycle edges joining the leaf arc below x to the rest of the cycle, and
// for each endpoint of those edges inside the subtree its remaining incident
// edges. At most 9 edges when G is cubic.
std::vector<int> boundary_edges(const Graph& g, const HalinStructure& hs, int x);

// Exact strong chromatic index of a cubic Halin graph via the boundary
// coloring tables, trying k ascending within [clique lower bound, 10].
OracleResult cubic_halin_index(const Graph& g, const HalinAnnotation& ann);

// Exact strong chromatic index of any Halin graph. Wheels and double wheels
// are dispatched to their closed forms; otherwise the type-signature DP runs
// over k in {tree_index(T), ..., tree_index(T)+5}.
OracleResult halin_index(const Graph& g, const HalinAnnotation& ann);

// Internal entry point shared by cubic/general paths and tests: decide
// whether a strong coloring with at most k colors exists, returning one.
std::optional<StrongColoring> cubic_halin_decide(const Graph& g, const HalinStructure& hs, int k);
std::optional<StrongColoring> general_halin_decide(const Graph& g, const HalinStructure& hs, int k);

}  // namespace sci
