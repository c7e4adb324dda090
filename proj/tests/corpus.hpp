#ifndef HCP3_TESTS_CORPUS_HPP
#define HCP3_TESTS_CORPUS_HPP

#include "hcp3/graph.hpp"

#include <vector>

namespace hcp3::tests {

/// All connected undirected graphs on 1..6 vertices, one per isomorphism
/// class (143 graphs).
const std::vector<graph>& small_connected_graphs();

/// All tournaments on 1..5 vertices, one per isomorphism class (20).
const std::vector<graph>& small_tournaments();

/// Deterministic pseudo-random undirected graphs on 7-8 vertices.
std::vector<graph> random_corpus(int count = 50, unsigned seed = 20240601);

/// Independent Hamiltonian-cycle counter: plain permutation enumeration,
/// no pruning. Directed counts rotation classes; undirected also quotients
/// by reflection.
long long naive_count_hc(const graph& g);

} // namespace hcp3::tests

#endif
