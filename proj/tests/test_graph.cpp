#include "hcp3/graph.hpp"

#include <doctest.h>

using namespace hcp3;

TEST_CASE("graph validation") {
    CHECK_NOTHROW(graph(graph_mode::undirected, 3, {{0, 1}, {1, 2}, {2, 0}}));
    // Antiparallel arcs are two distinct directed edges.
    graph d(graph_mode::directed, 2, {{0, 1}, {1, 0}});
    CHECK(d.edge_count() == 2);
    // In undirected mode they canonicalize to the same edge.
    CHECK_THROWS_AS(graph(graph_mode::undirected, 2, {{0, 1}, {1, 0}}),
                    graph_error);
    CHECK_THROWS_AS(graph(graph_mode::undirected, 2, {{0, 0}}), graph_error);
    CHECK_THROWS_AS(graph(graph_mode::undirected, 2, {{0, 2}}), graph_error);
    CHECK_THROWS_AS(graph(graph_mode::directed, 3, {{0, 1}, {0, 1}}), graph_error);
}

TEST_CASE("canonical edge order") {
    graph a(graph_mode::undirected, 3, {{2, 1}, {1, 0}, {0, 2}});
    graph b(graph_mode::undirected, 3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(a == b);
    CHECK(a.edges() == std::vector<edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("degrees and k") {
    graph k10(graph_mode::undirected, 10, [] {
        std::vector<edge> e;
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j) e.push_back({i, j});
        return e;
    }());
    degree_profile p = degrees(k10);
    for (int v = 0; v < 10; ++v) CHECK(p.degree[v] == 9);
    CHECK(p.k == 180);  // 4e with e = 45

    graph single(graph_mode::undirected, 1, {});
    CHECK(degrees(single).k == 0);

    graph c3(graph_mode::directed, 3, {{0, 1}, {1, 2}, {2, 0}});
    degree_profile q = degrees(c3);
    for (int v = 0; v < 3; ++v) {
        CHECK(q.in_degree[v] == 1);
        CHECK(q.out_degree[v] == 1);
    }
    CHECK(q.k == 6);
}

TEST_CASE("cycle and path validation") {
    graph c4(graph_mode::undirected, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(is_hamiltonian_cycle(c4, {0, 1, 2, 3}));
    CHECK(is_hamiltonian_cycle(c4, {2, 3, 0, 1}));
    CHECK_FALSE(is_hamiltonian_cycle(c4, {0, 2, 1, 3}));
    CHECK_FALSE(is_hamiltonian_cycle(c4, {0, 1, 2}));
    CHECK(is_hamiltonian_path(c4, {0, 1, 2, 3}));
    CHECK_FALSE(is_hamiltonian_path(c4, {0, 2, 1, 3}));

    graph single(graph_mode::undirected, 1, {});
    CHECK_FALSE(is_hamiltonian_cycle(single, {0}));
    CHECK(is_hamiltonian_path(single, {0}));

    graph two(graph_mode::directed, 2, {{0, 1}, {1, 0}});
    CHECK(is_hamiltonian_cycle(two, {0, 1}));

    graph arc(graph_mode::directed, 3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_hamiltonian_cycle(arc, {0, 1, 2}));
    CHECK_FALSE(is_hamiltonian_cycle(arc, {0, 2, 1}));
}
