#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sci/dh.hpp"
#include "sci/generators.hpp"
#include "sci/halin.hpp"
#include "sci/io.hpp"
#include "sci/outerplanar.hpp"

using namespace sci;

namespace {

// brute-force isomorphism check for small graphs
bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges)
            if (!b.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::string serialize(const Generated& g) {
    std::ostringstream os;
    GraphFile gf{g.graph, g.halin, g.dh_sequence};
    write_graph_text(os, gf);
    return os.str();
}

}  // namespace

TEST_CASE("necklace Ne_2 is the prism") {
    GenSpec spec;
    spec.family = Family::necklace;
    spec.n = 2;
    Graph ne2 = generate(spec).graph;
    CHECK(ne2.n == 6);
    CHECK(ne2.m() == 9);
    std::vector<std::pair<int, int>> pe;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j - i != 1 && j - i != 5) pe.emplace_back(i, j);
    Graph prism = build_graph(6, pe);
    CHECK(isomorphic(ne2, prism));
}

TEST_CASE("necklaces are cubic Halin graphs") {
    for (int h = 2; h <= 5; ++h) {
        GenSpec spec;
        spec.family = Family::necklace;
        spec.n = h;
        auto gen = generate(spec);
        REQUIRE(gen.halin.has_value());
        CHECK_FALSE(validate_halin(gen.graph, *gen.halin).has_value());
        for (int v = 0; v < gen.graph.n; ++v) CHECK(gen.graph.degree(v) == 3);
    }
}

TEST_CASE("wheel W5 has 6 vertices and 10 edges") {
    GenSpec spec;
    spec.family = Family::wheel;
    spec.n = 5;
    auto gen = generate(spec);
    CHECK(gen.graph.n == 6);
    CHECK(gen.graph.m() == 10);
    REQUIRE(gen.halin.has_value());
    CHECK_FALSE(validate_halin(gen.graph, *gen.halin).has_value());
}

TEST_CASE("generated families pass their validators") {
    for (int seed = 0; seed < 12; ++seed) {
        GenSpec halin;
        halin.family = Family::halin;
        halin.n = 6 + seed;
        halin.seed = seed;
        auto gh = generate(halin);
        REQUIRE(gh.halin.has_value());
        CHECK_FALSE(validate_halin(gh.graph, *gh.halin).has_value());

        GenSpec cubic;
        cubic.family = Family::cubic_halin;
        cubic.n = 6 + seed;
        cubic.seed = seed;
        auto gc = generate(cubic);
        CHECK_FALSE(validate_halin(gc.graph, *gc.halin).has_value());
        for (int v = 0; v < gc.graph.n; ++v) CHECK(gc.graph.degree(v) == 3);

        GenSpec dh;
        dh.family = Family::dh;
        dh.n = 12;
        dh.seed = seed;
        auto gd = generate(dh);
        CHECK(recognize_dh(gd.graph).sequence.has_value());

        GenSpec mop;
        mop.family = Family::mop;
        mop.n = 12;
        mop.seed = seed;
        CHECK(recognize_mop(generate(mop).graph).dual.has_value());

        GenSpec cog;
        cog.family = Family::cograph;
        cog.n = 12;
        cog.seed = seed;
        CHECK(is_cograph(generate(cog).graph));
    }
}

TEST_CASE("generation is deterministic") {
    for (Family f : {Family::halin, Family::dh, Family::mop, Family::cograph, Family::tree}) {
        GenSpec spec;
        spec.family = f;
        spec.n = 14;
        spec.seed = 42;
        CHECK(serialize(generate(spec)) == serialize(generate(spec)));
    }
}

TEST_CASE("replay_sequence base cases") {
    PruningSequence seq;
    seq.base = {0, 1};
    Graph k2 = replay_sequence(seq, 2);
    CHECK(k2.m() == 1);

    // C4 via two false twins from an edge: 0-1, add 2 as false twin of 0,
    // then 3 as false twin of 1
    PruningSequence c4seq;
    c4seq.base = {0, 1};
    c4seq.steps.push_back({PruningStep::Op::false_twin, 2, 0});
    c4seq.steps.push_back({PruningStep::Op::false_twin, 3, 1});
    Graph c4 = replay_sequence(c4seq, 4);
    CHECK(c4.m() == 4);
    CHECK(c4.has_edge(0, 1));
    CHECK(c4.has_edge(2, 1));
    CHECK(c4.has_edge(0, 3));
    CHECK(c4.has_edge(2, 3));

    PruningSequence bad;
    bad.base = {0, 1};
    bad.steps.push_back({PruningStep::Op::pendant, 2, 7});
    CHECK_THROWS_AS(replay_sequence(bad, 3), GraphError);
}

TEST_CASE("recognize then replay reconstructs the graph") {
    for (int seed = 0; seed < 40; ++seed) {
        GenSpec spec;
        spec.family = Family::dh;
        spec.n = 4 + seed % 10;
        spec.seed = 900 + seed;
        Graph g = generate(spec).graph;
        auto rec = recognize_dh(g);
        REQUIRE(rec.sequence.has_value());
        Graph h = replay_sequence(*rec.sequence, g.n);
        CHECK(h.n == g.n);
        REQUIRE(h.m() == g.m());
        for (auto [u, v] : g.edges) CHECK(h.has_edge(u, v));
    }
}

TEST_CASE("generated dh sequence replays to the generated graph") {
    for (int seed = 0; seed < 15; ++seed) {
        GenSpec spec;
        spec.family = Family::dh;
        spec.n = 11;
        spec.seed = seed;
        auto gen = generate(spec);
        REQUIRE(gen.dh_sequence.has_value());
        Graph h = replay_sequence(*gen.dh_sequence, gen.graph.n);
        REQUIRE(h.m() == gen.graph.m());
        for (auto [u, v] : gen.graph.edges) CHECK(h.has_edge(u, v));
    }
}

TEST_CASE("parameter validation") {
    GenSpec bad;
    bad.family = Family::cycle;
    bad.n = 2;
    CHECK_THROWS_AS(generate(bad), GraphError);
    GenSpec dw;
    dw.family = Family::double_wheel;
    dw.dx = 2;
    dw.dy = 3;
    CHECK_THROWS_AS(generate(dw), GraphError);
}
