#pragma once

#include <array>
#include <optional>

#include "sci/graph.hpp"
#include "sci/oracle.hpp"

namespace sci {

// Triangle list plus the dual tree of a maximal outerplanar graph: one node
// per triangle, an edge where two triangles share a graph edge. The dual is
// a tree with maximum degree 3.
struct OuterplanarDual {
    std::vector<std::array<int, 3>> triangles;        // vertex triples
    std::vector<std::pair<int, int>> dual_edges;      // triangle index pairs
    std::vector<int> shared_edge;                     // graph edge id per dual edge
};

struct ExtendedTriangle {
    std::array<int, 3> triangle{};
    std::vector<int> edge_set;  // every edge incident to a triangle vertex
};

struct MopRecognition {
    std::optional<OuterplanarDual> dual;
    std::string error;  // wrong-edge-count, no-ear, non-triangle-face, ...
};

// Iterated ear removal; produces the dual as ears come off.
MopRecognition recognize_mop(const Graph& g);

// phi = max number of edges over all extended triangles, with a witness.
std::pair<int, ExtendedTriangle> extended_triangle_phi(const Graph& g,
                                                       const OuterplanarDual& dual);

// Breadth-first greedy coloring over the dual rooted at a leaf; uses exactly
// phi colors and is a strong edge coloring.
StrongColoring greedy_strong_coloring(const Graph& g, const OuterplanarDual& dual);

}  // namespace sci
