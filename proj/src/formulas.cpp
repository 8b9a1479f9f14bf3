#include "sci/formulas.hpp"

#include <algorithm>

namespace sci {

int cycle_index(int n) {
    if (n < 3) throw GraphError("cycle_index needs n >= 3");
    if (n % 3 == 0) return 3;
    if (n == 5) return 5;
    return 4;
}

int wheel_index(int n) {
    if (n < 3) throw GraphError("wheel_index needs n >= 3");
    if (n % 3 == 0) return n + 3;
    if (n == 5) return n + 5;
    return n + 4;
}

DoubleWheelIndex double_wheel_index(const DoubleWheelSpec& spec) {
    if (spec.dx < 3 || spec.dy < spec.dx)
        throw GraphError("double wheel needs 3 <= dx <= dy");
    DoubleWheelIndex r;
    r.tree_value = spec.dx + spec.dy - 1;
    if (spec.dx == 3 && spec.dy == 3)
        r.total = 9;
    else if (spec.dx == 3)
        r.total = spec.dy + 4;
    else
        r.total = spec.dx + spec.dy;
    return r;
}

int tree_index(const Graph& t) {
    if (t.m() < 1) throw GraphError("tree_index needs at least one edge");
    if (!t.is_tree()) throw GraphError("tree_index input is not a tree");
    int best = 0;
    for (auto [u, v] : t.edges)
        best = std::max(best, t.degree(u) + t.degree(v) - 1);
    return best;
}

int halin_upper_bound(const Graph& g) { return 2 * g.max_degree() + 4; }

std::vector<int> cycle_strong_coloring(int n) {
    int k = cycle_index(n);
    std::vector<int> col;
    col.reserve(n);
    if (n % 3 == 0) {
        for (int i = 0; i < n; ++i) col.push_back(i % 3);
    } else if (n == 5) {
        col = {0, 1, 2, 3, 4};
    } else if (n % 3 == 1) {
        // 012 repeated, closing with 0123
        for (int i = 0; i < n - 4; ++i) col.push_back(i % 3);
        for (int c : {0, 1, 2, 3}) col.push_back(c);
    } else {
        // 012 repeated, closing with 0123 0123
        for (int i = 0; i < n - 8; ++i) col.push_back(i % 3);
        for (int c : {0, 1, 2, 3, 0, 1, 2, 3}) col.push_back(c);
    }
    (void)k;
    return col;
}

}  // namespace sci
