#pragma once

#include <iosfwd>

#include "sci/dh.hpp"
#include "sci/graph.hpp"
#include "sci/halin.hpp"

namespace sci {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Shared text format: first line "n m", then m lines "u v" (0-based),
// '#'-lines are comments. Annotation blocks after the edge list:
//   #halin
//   tree: <edge ids>
//   cycle: <leaf vertices in cyclic order>
//   #dh
//   base: <u> <v>
//   seq: <pendant|true_twin|false_twin> <vertex> <anchor>
struct GraphFile {
    Graph graph;
    std::optional<HalinAnnotation> halin;
    std::optional<PruningSequence> dh_sequence;
};

GraphFile read_graph_text(std::istream& in);
GraphFile read_graph_file(const std::string& path);
void write_graph_text(std::ostream& out, const GraphFile& gf);
void write_graph_file(const std::string& path, const GraphFile& gf);

// Coloring files: one "edge_id color" line per edge.
StrongColoring read_coloring_file(const std::string& path, int m);
void write_coloring_file(const std::string& path, const StrongColoring& c);

// DOT export; edges colored from a fixed 16-name palette, cycling with a
// numeric suffix past 16.
void write_dot_file(const std::string& path, const Graph& g, const StrongColoring* c);
std::string dot_color_name(int index);

}  // namespace sci
