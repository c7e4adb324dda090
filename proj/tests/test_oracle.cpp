#include "hcp3/gadgets.hpp"
#include "hcp3/generators.hpp"
#include "hcp3/oracle.hpp"
#include "hcp3/reductions.hpp"

#include "corpus.hpp"

#include <doctest.h>

using namespace hcp3;
using namespace hcp3::tests;

TEST_CASE("find_hc basics") {
    CHECK(find_hc(complete(5)).outcome == search_outcome::found);
    CHECK(is_hamiltonian_cycle(complete(5), find_hc(complete(5)).witness));
    CHECK(find_hc(petersen()).outcome == search_outcome::exhausted_none);

    graph single(graph_mode::undirected, 1, {});
    CHECK(find_hc(single).outcome == search_outcome::exhausted_none);

    graph c3(graph_mode::directed, 3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(find_hc(c3).outcome == search_outcome::found);
    CHECK(find_hc(c3).witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("budget exceeded is distinguished") {
    search_result r = find_hc(petersen(), search_budget{1});
    CHECK(r.outcome == search_outcome::budget_exceeded);
    count_result c = count_hc(named("sheehan-40"), search_budget{5});
    CHECK_FALSE(c.complete);
}

TEST_CASE("count conventions") {
    // C5: one cycle under rotation+reflection.
    graph c5(graph_mode::undirected, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(count_hc(c5).count == 1);

    // K5: 12 with reflection; the rotation-only count is 24.
    CHECK(count_hc(complete(5)).count == 12);
    CHECK(naive_count_hc(complete(5)) == 12);

    graph d3(graph_mode::directed, 3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(count_hc(d3).count == 1);
    auto [karp3, p3] = to_undirected(d3);
    CHECK(count_hc(karp3).count == 1);

    graph two(graph_mode::directed, 2, {{0, 1}, {1, 0}});
    CHECK(count_hc(two).count == 1);
}

TEST_CASE("count_hc matches the naive permutation oracle") {
    for (const graph& g : small_connected_graphs()) {
        count_result r = count_hc(g);
        REQUIRE(r.complete);
        CHECK(r.count == naive_count_hc(g));
    }
    for (const graph& g : small_tournaments()) {
        count_result r = count_hc(g);
        REQUIRE(r.complete);
        CHECK(r.count == naive_count_hc(g));
    }
}

TEST_CASE("ham_path") {
    graph g4 = s_gate(4).internal_graph();
    search_result r = ham_path(g4, 0, 1);
    REQUIRE(r.outcome == search_outcome::found);
    CHECK(r.witness.front() == 0);
    CHECK(r.witness.back() == 1);
    CHECK(is_hamiltonian_path(g4, r.witness));

    graph g5 = s_gate(5).internal_graph();
    CHECK(ham_path(g5, 10, 12).outcome == search_outcome::found);

    // Directed path respects arc direction.
    graph d(graph_mode::directed, 3, {{0, 1}, {1, 2}});
    CHECK(ham_path(d, 0, 2).outcome == search_outcome::found);
    CHECK(ham_path(d, 2, 0).outcome == search_outcome::exhausted_none);
}

TEST_CASE("gadget traversal verdicts") {
    CHECK(check_gadget_traversal(s_gate(4)) == verdict::holds);
    CHECK(check_gadget_traversal(s_gate(5)) == verdict::holds);
    CHECK(check_gadget_traversal(split_gadget()) == verdict::holds);
    CHECK(check_gadget_traversal(in_split_gadget()) == verdict::holds);
    CHECK(check_gadget_traversal(out_split_gadget()) == verdict::holds);

    // A broken gadget fails: a path of 3 vertices with ends as attachments
    // and an isolated middle attachment cannot be traversed between every
    // pair.
    gadget bad;
    bad.name = "bad";
    bad.vertex_count = 3;
    bad.edges = {{0, 1}, {1, 2}};
    bad.attachments = {{0, orientation::undirected},
                       {1, orientation::undirected},
                       {2, orientation::undirected}};
    CHECK(check_gadget_traversal(bad) == verdict::fails);
}

TEST_CASE("gadget blocking verdicts") {
    CHECK(check_gadget_blocking(s_gate(4)) == verdict::holds);
    CHECK(check_gadget_blocking(split_gadget()) == verdict::holds);
    CHECK(check_gadget_blocking(in_split_gadget()) == verdict::holds);
    CHECK(check_gadget_blocking(out_split_gadget()) == verdict::holds);

    // A 4-cycle with all four vertices as attachments is coverable by two
    // disjoint attachment-to-attachment paths, so blocking fails.
    gadget c4;
    c4.name = "c4";
    c4.vertex_count = 4;
    c4.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    c4.attachments = {{0, orientation::undirected},
                      {1, orientation::undirected},
                      {2, orientation::undirected},
                      {3, orientation::undirected}};
    CHECK(check_gadget_blocking(c4) == verdict::fails);
}

TEST_CASE("check_equivalence") {
    graph c5(graph_mode::undirected, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto [cubic, prov] = cubify(c5);
    equivalence_result eq = check_equivalence(c5, cubic, prov);
    CHECK(eq.status == verdict::holds);
    CHECK(eq.cycle_lifted);
    CHECK(count_hc(cubic).count == 32);  // 2^5 traversal choices

    conversion q = quick_3hcp(petersen());
    CHECK(check_equivalence(petersen(), q.result, q.prov).status ==
          verdict::holds);

    // A deliberately wrong provenance is caught.
    provenance wrong = prov;
    for (auto& o : wrong.origin) o = 0;
    CHECK(check_equivalence(c5, cubic, wrong).status == verdict::fails);
}
