#include "hcp3/gadgets.hpp"
#include "hcp3/generators.hpp"
#include "hcp3/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hcp3;

namespace {

// Degree of a gadget vertex counting its external edge if it is an attachment.
std::vector<int> full_degrees(const gadget& gd) {
    graph g = gd.internal_graph();
    std::vector<int> deg(gd.vertex_count, 0);
    for (int v = 0; v < gd.vertex_count; ++v)
        deg[v] = gd.mode == graph_mode::directed
                     ? g.in_degree(v) + g.out_degree(v)
                     : g.degree(v);
    for (const auto& a : gd.attachments) ++deg[a.vertex];
    return deg;
}

} // namespace

TEST_CASE("diamond") {
    gadget d = diamond();
    CHECK(d.vertex_count == 4);
    CHECK(d.edges.size() == 5);
    CHECK(d.attachments.size() == 2);
    for (int deg : full_degrees(d)) CHECK(deg == 3);

    // Exactly two Hamiltonian traversals between the attachments: count
    // a-d Hamiltonian paths via the cycle extension trick.
    graph internal = d.internal_graph();
    std::vector<edge> edges = internal.edges();
    edges.push_back({0, 4});
    edges.push_back({3, 4});
    graph aug(graph_mode::undirected, 5, std::move(edges));
    CHECK(count_hc(aug).count == 2);

    CHECK(ham_path(internal, 0, 3).outcome == search_outcome::found);
    // No Hamiltonian path between the two interior vertices.
    CHECK(ham_path(internal, 1, 2).outcome == search_outcome::exhausted_none);
}

TEST_CASE("s_gate structure") {
    CHECK_THROWS_AS(s_gate(3), graph_error);

    gadget g4 = s_gate(4);
    CHECK(g4.vertex_count == 11);
    CHECK(g4.edges.size() == 14);
    std::vector<int> att;
    for (const auto& a : g4.attachments) att.push_back(a.vertex);
    CHECK(att == std::vector<int>{0, 1, 8, 10});

    gadget g5 = s_gate(5);
    CHECK(g5.vertex_count == 13);
    CHECK(g5.edges.size() == 17);
    CHECK(full_degrees(g5)[0] == 4);  // top vertex degree s-1

    gadget g9 = s_gate(9);
    CHECK(g9.vertex_count == 21);
    CHECK(g9.edges.size() == 29);

    for (int s = 4; s <= 50; ++s) {
        gadget g = s_gate(s);
        CHECK(g.vertex_count == 2 * s + 3);
        CHECK(static_cast<int>(g.edges.size()) == 3 * s + 2);
        CHECK(static_cast<int>(g.attachments.size()) == s);
        std::vector<int> deg = full_degrees(g);
        CHECK(deg[0] == s - 1);
        CHECK(std::count(deg.begin(), deg.end(), 2) == 1);
        CHECK(deg[5] == 2);  // the gate's unique internal degree-2 vertex
        for (int v = 0; v < g.vertex_count; ++v)
            if (v != 0 && v != 5) CHECK(deg[v] == 3);
    }
}

TEST_CASE("s_gate traversal paths from the construction") {
    graph g4 = s_gate(4).internal_graph();
    // Top edge to left edge.
    CHECK(is_hamiltonian_path(g4, {0, 2, 3, 5, 6, 7, 8, 9, 10, 4, 1}));
    // Top edge to right edge, then left edge to right edge.
    CHECK(is_hamiltonian_path(g4, {0, 2, 1, 4, 3, 5, 6, 7, 8, 9, 10}));
    CHECK(is_hamiltonian_path(g4, {1, 2, 0, 7, 6, 5, 3, 4, 10, 9, 8}));

    graph g5 = s_gate(5).internal_graph();
    CHECK(ham_path(g5, 10, 12).outcome == search_outcome::found);
}

TEST_CASE("expanded_s_gate formulas") {
    gadget e4 = expanded_s_gate(4);
    CHECK(e4.vertex_count == 11);
    CHECK(e4.edges.size() + e4.attachments.size() == 18);

    gadget e5 = expanded_s_gate(5);
    CHECK(e5.vertex_count == 23);
    CHECK(e5.edges.size() + e5.attachments.size() == 36);

    CHECK(expanded_s_gate(9).vertex_count == 91);

    for (int s = 4; s <= 20; ++s) {
        gadget g = expanded_s_gate(s);
        CHECK(g.vertex_count == s * s + 3 * s - 17);
        CHECK(static_cast<int>(2 * (g.edges.size() + g.attachments.size())) ==
              3 * s * s + 9 * s - 48);
        std::vector<int> deg = full_degrees(g);
        CHECK(std::count(deg.begin(), deg.end(), 2) == s - 3);
        CHECK(*std::max_element(deg.begin(), deg.end()) == 3);
    }
}

TEST_CASE("sr_gate") {
    CHECK_THROWS_AS(sr_gate(1, 2), graph_error);
    gadget g = sr_gate(2, 2);
    CHECK(g.mode == graph_mode::directed);
    CHECK(g.vertex_count == 11);
    int ins = 0, outs = 0;
    for (const auto& a : g.attachments) {
        if (a.dir == orientation::in) ++ins;
        if (a.dir == orientation::out) ++outs;
    }
    CHECK(ins == 2);
    CHECK(outs == 2);
    CHECK(sr_gate(3, 2).vertex_count == 23);
}

TEST_CASE("split family") {
    gadget s = split_gadget();
    CHECK(s.vertex_count == 2);
    CHECK(s.edges == std::vector<edge>{{0, 1}});

    gadget in_s = in_split_gadget();
    CHECK(in_s.vertex_count == 3);
    graph g = in_s.internal_graph();
    CHECK(is_hamiltonian_path(g, {0, 1, 2}));
    CHECK(is_hamiltonian_path(g, {1, 0, 2}));

    gadget out_s = out_split_gadget();
    graph h = out_s.internal_graph();
    CHECK(is_hamiltonian_path(h, {0, 1, 2}));
    CHECK(is_hamiltonian_path(h, {0, 2, 1}));
}

TEST_CASE("petersen") {
    graph p = petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(find_hc(p).outcome == search_outcome::exhausted_none);
}

TEST_CASE("replace_vertex") {
    // Wheel on 5 vertices: hub 0 of degree 4.
    graph wheel(graph_mode::undirected, 5,
                {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    gadget gate = s_gate(4);
    auto [out, prov] = replace_vertex(wheel, 0, gate);
    CHECK(out.vertex_count() == 15);  // grows by 10
    CHECK(out.edge_count() == wheel.edge_count() + 14);
    CHECK(prov.origin.size() == 15);
    for (int v = 4; v < 15; ++v) CHECK(prov.origin[v] == 0);
    CHECK(prov.origin[0] == 1);

    // Determinism: identical inputs give identical graphs.
    auto [out2, prov2] = replace_vertex(wheel, 0, gate);
    CHECK(out == out2);

    // Attachment count mismatch.
    CHECK_THROWS_AS(replace_vertex(wheel, 1, gate), graph_error);

    // Degree-2 vertex with a diamond: +3 vertices, +5 edges.
    graph c3(graph_mode::undirected, 3, {{0, 1}, {1, 2}, {0, 2}});
    auto [dia_out, dia_prov] = replace_vertex(c3, 1, diamond());
    CHECK(dia_out.vertex_count() == 6);
    CHECK(dia_out.edge_count() == 8);

    // Hamiltonicity preserved when one K5 vertex becomes a gate.
    graph k5(graph_mode::undirected, 5,
             {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
              {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto [gated, gated_prov] = replace_vertex(k5, 2, expanded_s_gate(4));
    equivalence_result eq = check_equivalence(k5, gated, gated_prov);
    CHECK(eq.status == verdict::holds);
}

TEST_CASE("replace_vertex split distribution") {
    // Center vertex 0 with 7 incoming and 2 outgoing arcs.
    std::vector<edge> arcs;
    for (int u = 1; u <= 7; ++u) arcs.push_back({u, 0});
    arcs.push_back({0, 8});
    arcs.push_back({0, 9});
    graph g(graph_mode::directed, 10, arcs);
    auto [out, prov] = replace_vertex(g, 0, in_split_gadget());
    // Locals are appended after the 9 survivors: vertices 9, 10, 11.
    CHECK(out.vertex_count() == 12);
    CHECK(out.in_degree(9) == 4 + 1);   // ceil(7/2) external + arc from 10
    CHECK(out.in_degree(10) == 3 + 1);  // floor(7/2) external + arc from 9
    CHECK(out.out_degree(11) == 2);
}
