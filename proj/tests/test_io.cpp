#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sci/generators.hpp"
#include "sci/io.hpp"

using namespace sci;

TEST_CASE("read_graph_text parses the shared format") {
    std::istringstream in(
        "# a triangle\n"
        "3 3\n"
        "0 1\n"
        "1 2\n"
        "2 0\n");
    GraphFile gf = read_graph_text(in);
    CHECK(gf.graph.n == 3);
    CHECK(gf.graph.m() == 3);
    CHECK_FALSE(gf.halin.has_value());
    CHECK_FALSE(gf.dh_sequence.has_value());
}

TEST_CASE("parse errors are reported") {
    std::istringstream a("3\n");
    CHECK_THROWS_AS(read_graph_text(a), ParseError);
    std::istringstream b("2 1\n0 5\n");
    CHECK_THROWS_AS(read_graph_text(b), ParseError);
    std::istringstream c("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph_text(c), ParseError);
    std::istringstream d("3 1\n0 1\n1 2\n");
    CHECK_THROWS_AS(read_graph_text(d), ParseError);
    std::istringstream e("");
    CHECK_THROWS_AS(read_graph_text(e), ParseError);
}

TEST_CASE("halin annotation round trip") {
    GenSpec spec;
    spec.family = Family::halin;
    spec.n = 10;
    spec.seed = 5;
    auto gen = generate(spec);
    GraphFile gf{gen.graph, gen.halin, std::nullopt};
    std::ostringstream os;
    write_graph_text(os, gf);
    std::istringstream is(os.str());
    GraphFile back = read_graph_text(is);
    REQUIRE(back.halin.has_value());
    CHECK(back.halin->tree_edges == gen.halin->tree_edges);
    CHECK(back.halin->cycle_order == gen.halin->cycle_order);
    CHECK(back.graph.edges == gen.graph.edges);
}

TEST_CASE("dh annotation round trip") {
    GenSpec spec;
    spec.family = Family::dh;
    spec.n = 9;
    spec.seed = 2;
    auto gen = generate(spec);
    GraphFile gf{gen.graph, std::nullopt, gen.dh_sequence};
    std::ostringstream os;
    write_graph_text(os, gf);
    std::istringstream is(os.str());
    GraphFile back = read_graph_text(is);
    REQUIRE(back.dh_sequence.has_value());
    CHECK(back.dh_sequence->base == gen.dh_sequence->base);
    REQUIRE(back.dh_sequence->steps.size() == gen.dh_sequence->steps.size());
    for (size_t i = 0; i < back.dh_sequence->steps.size(); ++i) {
        CHECK(back.dh_sequence->steps[i].op == gen.dh_sequence->steps[i].op);
        CHECK(back.dh_sequence->steps[i].vertex == gen.dh_sequence->steps[i].vertex);
        CHECK(back.dh_sequence->steps[i].anchor == gen.dh_sequence->steps[i].anchor);
    }
}

TEST_CASE("coloring file round trip") {
    StrongColoring c{{2, 0, 1}, 3};
    std::string path = "io_test_coloring.tmp";
    write_coloring_file(path, c);
    StrongColoring back = read_coloring_file(path, 3);
    CHECK(back.colors == c.colors);
    CHECK(back.k == 3);
    std::remove(path.c_str());
}

TEST_CASE("coloring file with a hole is rejected") {
    std::string path = "io_test_hole.tmp";
    {
        std::ofstream out(path);
        out << "0 1\n2 0\n";
    }
    CHECK_THROWS_AS(read_coloring_file(path, 3), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("dot palette cycles with numeric suffixes") {
    CHECK(dot_color_name(0) == "red");
    CHECK(dot_color_name(15) == "lime");
    CHECK(dot_color_name(16) == "red2");
    CHECK(dot_color_name(33) == "blue3");
}
