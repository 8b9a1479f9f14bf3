#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sci/formulas.hpp"
#include "sci/generators.hpp"
#include "sci/oracle.hpp"

using namespace sci;

TEST_CASE("cycle_index cases") {
    CHECK(cycle_index(6) == 3);
    CHECK(cycle_index(5) == 5);
    CHECK(cycle_index(7) == 4);
    CHECK(cycle_index(3) == 3);
    CHECK(cycle_index(4) == 4);
    CHECK_THROWS_AS(cycle_index(2), GraphError);
}

TEST_CASE("wheel_index cases") {
    CHECK(wheel_index(3) == 6);
    CHECK(wheel_index(5) == 10);
    CHECK(wheel_index(7) == 11);
    CHECK(wheel_index(6) == 9);
    CHECK_THROWS_AS(wheel_index(2), GraphError);
}

TEST_CASE("double_wheel_index cases") {
    auto a = double_wheel_index({3, 3});
    CHECK(a.tree_value == 5);
    CHECK(a.total == 9);
    auto b = double_wheel_index({3, 5});
    CHECK(b.tree_value == 7);
    CHECK(b.total == 9);
    auto c = double_wheel_index({4, 4});
    CHECK(c.tree_value == 7);
    CHECK(c.total == 8);
    CHECK_THROWS_AS(double_wheel_index({2, 3}), GraphError);
    CHECK_THROWS_AS(double_wheel_index({4, 3}), GraphError);
}

TEST_CASE("tree_index formula") {
    Graph star = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(tree_index(star) == 5);
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(tree_index(p4) == 3);
    Graph c3 = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_THROWS_AS(tree_index(c3), GraphError);
    for (int seed = 0; seed < 8; ++seed) {
        GenSpec spec;
        spec.family = Family::tree;
        spec.n = 15;
        spec.seed = seed;
        Graph t = generate(spec).graph;
        CHECK(tree_index(t) == exact_strong_index(t).k);
    }
}

TEST_CASE("halin_upper_bound") {
    Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(halin_upper_bound(k4) == 10);
    CHECK(exact_strong_index(k4).k <= halin_upper_bound(k4));
    Graph star5 = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(halin_upper_bound(star5) == 14);
}

TEST_CASE("cycle_strong_coloring is valid and tight") {
    for (int n = 3; n <= 20; ++n) {
        auto col = cycle_strong_coloring(n);
        REQUIRE(static_cast<int>(col.size()) == n);
        int used = *std::max_element(col.begin(), col.end()) + 1;
        CHECK(used == cycle_index(n));
        for (int i = 0; i < n; ++i) {
            int a = col[i], b = col[(i + 1) % n], c = col[(i + 2) % n];
            CHECK(a != b);
            CHECK(b != c);
            CHECK(a != c);
        }
    }
}

TEST_CASE("formula values match the oracle on generated families") {
    for (int n = 3; n <= 10; ++n) {
        GenSpec spec;
        spec.family = Family::cycle;
        spec.n = n;
        CHECK(cycle_index(n) == exact_strong_index(generate(spec).graph).k);
    }
    for (int n = 3; n <= 6; ++n) {
        GenSpec spec;
        spec.family = Family::wheel;
        spec.n = n;
        CHECK(wheel_index(n) == exact_strong_index(generate(spec).graph).k);
    }
    for (int dx = 3; dx <= 4; ++dx)
        for (int dy = dx; dy <= 4; ++dy) {
            GenSpec spec;
            spec.family = Family::double_wheel;
            spec.dx = dx;
            spec.dy = dy;
            Graph w = generate(spec).graph;
            CHECK(double_wheel_index({dx, dy}).total == exact_strong_index(w).k);
        }
}
