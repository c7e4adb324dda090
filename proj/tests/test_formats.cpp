#include "hcp3/formats.hpp"
#include "hcp3/generators.hpp"

#include <doctest.h>

#include <string>

using namespace hcp3;

TEST_CASE("parse basic instances") {
    graph tri = parse_graph("hcp undirected 3\n0 1\n1 2\n0 2\n");
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK_FALSE(tri.directed());

    graph arc = parse_graph("hcp directed 2\n0 1\n");
    CHECK(arc.directed());
    CHECK(arc.edge_count() == 1);

    graph commented = parse_graph("# comment\n\nhcp undirected 2\n# another\n0 1\n");
    CHECK(commented.edge_count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    auto message = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const graph_error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("hcp undirected 2\n0 2\n").find("line 2") != std::string::npos);
    CHECK(message("hcp sideways 2\n").find("line 1") != std::string::npos);
    CHECK(message("hcp undirected 3\n0 x\n").find("line 2") != std::string::npos);
    CHECK(message("hcp undirected 3\n0 1\n0 1\n").find("duplicate") !=
          std::string::npos);
    CHECK_THROWS_AS(parse_graph(""), graph_error);
}

TEST_CASE("serialize round trip") {
    for (const char* name : {"k10", "goldner-harary", "knight-8x8"}) {
        graph g = named(name);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    graph d(graph_mode::directed, 3, {{0, 1}, {1, 0}, {2, 1}});
    CHECK(parse_graph(serialize_graph(d)) == d);
}

TEST_CASE("trace round trip") {
    provenance p;
    p.stage_label = "karp";
    p.input_vertex_count = 2;
    p.origin = {0, 0, 0, 1, 1, 1};
    provenance q = parse_trace(serialize_trace(p));
    CHECK(q.stage_label == p.stage_label);
    CHECK(q.input_vertex_count == 2);
    CHECK(q.origin == p.origin);

    CHECK_THROWS_AS(parse_trace("trace t 2 3\n0 0\n1 1\n"), graph_error);
    CHECK_THROWS_AS(parse_trace("trace t 2 2\n0 0\n0 1\n"), graph_error);
}

TEST_CASE("dot export") {
    graph tri(graph_mode::undirected, 3, {{0, 1}, {1, 2}, {0, 2}});
    std::string dot = export_dot(tri);
    CHECK(dot.find("graph") == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);

    graph arc(graph_mode::directed, 2, {{0, 1}});
    std::string ddot = export_dot(arc);
    CHECK(ddot.find("digraph") == 0);
    CHECK(ddot.find("0 -> 1") != std::string::npos);

    graph empty(graph_mode::undirected, 0, {});
    CHECK(export_dot(empty) == "graph g {\n}\n");
}

TEST_CASE("tsplib reader") {
    const char* text =
        "NAME: tiny\nTYPE: HCP\nDIMENSION: 3\nEDGE_DATA_FORMAT: EDGE_LIST\n"
        "EDGE_DATA_SECTION\n1 2\n2 3\n1 3\n-1\nEOF\n";
    graph g = parse_tsplib(text);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 2));
}
