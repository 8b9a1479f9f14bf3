#pragma once

#include "sci/graph.hpp"

namespace sci {

// Double wheel: a Halin graph whose tree has exactly two internal vertices,
// of degrees dx <= dy (both >= 3).
struct DoubleWheelSpec {
    int dx = 3;
    int dy = 3;
};

struct DoubleWheelIndex {
    int tree_value = 0;  // s-chi' of the underlying tree
    int total = 0;       // s-chi' of the double wheel
};

// 3 if n = 0 mod 3, 5 if n = 5, 4 otherwise.
int cycle_index(int n);

// W_n has n rim vertices plus one hub. n+3 / n+5 / n+4 by the same cases.
int wheel_index(int n);

// tree_value = dx+dy-1; total = 9 when dx=dy=3, dy+4 when dy>dx=3,
// dx+dy when dx>3.
DoubleWheelIndex double_wheel_index(const DoubleWheelSpec& spec);

// max over edges (u,v) of d(u)+d(v)-1. Input must be a tree.
int tree_index(const Graph& t);

// 2*max_degree + 4
int halin_upper_bound(const Graph& g);

// Explicit strong coloring of C_n: color of edge (i, i+1 mod n) at index i,
// using exactly cycle_index(n) colors. Any three cyclically consecutive
// entries are pairwise distinct.
std::vector<int> cycle_strong_coloring(int n);

}  // namespace sci
