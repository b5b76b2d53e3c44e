#include <doctest.h>

#include "opl/graph6.hpp"
#include "opl/verify.hpp"

using namespace opl;

TEST_CASE("graph6 decode") {
    Graph p2 = parse_graph("A_", GraphFormat::graph6);
    CHECK(p2.n() == 2);
    CHECK(p2.adjacent(0, 1));

    Graph empty = parse_graph("?", GraphFormat::graph6);
    CHECK(empty.n() == 0);

    Graph e5 = parse_graph("D??", GraphFormat::graph6);
    CHECK(e5.n() == 5);
    CHECK(e5.m() == 0);
}

TEST_CASE("graph6 encode") {
    CHECK(write_graph(path_graph(2), GraphFormat::graph6) == "A_");
    CHECK(write_graph(Graph(0), GraphFormat::graph6) == "?");
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph("D??xy", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("A", GraphFormat::graph6), ParseError);   // truncated
    CHECK_THROWS_AS(parse_graph("", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("A\x19", GraphFormat::graph6), ParseError);  // byte < 63
    // Padding bits past the last vertex pair must be zero.
    CHECK_THROWS_AS(parse_graph("A\x7f", GraphFormat::graph6), ParseError);
    try {
        parse_graph("D??xy", GraphFormat::graph6);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
}

TEST_CASE("edge-list format") {
    Graph p2 = parse_graph("2\n0 1\n", GraphFormat::edge_list);
    CHECK(p2.n() == 2);
    CHECK(p2.adjacent(0, 1));
    CHECK(write_graph(path_graph(2), GraphFormat::edge_list) == "2\n0 1");
    CHECK_THROWS_AS(parse_graph("2\n0 5\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("x\n", GraphFormat::edge_list), ParseError);
}

TEST_CASE("round-trip over every graph up to 7 vertices") {
    for (int n = 0; n <= 7; ++n) {
        auto corpus = n == 0 ? std::vector<Graph>{Graph(0)} : enumerate_graphs(n);
        for (const auto& g : corpus) {
            std::string s = write_graph(g, GraphFormat::graph6);
            Graph back = parse_graph(s, GraphFormat::graph6);
            CHECK(back == g);
            CHECK(write_graph(back, GraphFormat::graph6) == s);

            std::string el = write_graph(g, GraphFormat::edge_list);
            CHECK(parse_graph(el, GraphFormat::edge_list) == g);
        }
    }
}

TEST_CASE("round-trip at the wide-header boundary") {
    for (int n : {62, 63, 64, 100}) {
        Graph g = path_graph(n);
        Graph back = parse_graph(write_graph(g, GraphFormat::graph6),
                                 GraphFormat::graph6);
        CHECK(back == g);
    }
}

TEST_CASE("graph6 streams") {
    std::vector<Graph> graphs = {path_graph(2), path_graph(6), Graph(3)};
    std::string text = write_graph6_stream(graphs);
    auto back = parse_graph6_stream(text);
    REQUIRE(back.size() == 3);
    for (size_t i = 0; i < 3; ++i) CHECK(back[i] == graphs[i]);
    CHECK(parse_graph6_stream("A_\n\nA_\n").size() == 2);  // blank line skipped
}
