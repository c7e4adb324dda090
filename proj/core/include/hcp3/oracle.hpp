#ifndef HCP3_ORACLE_HPP
#define HCP3_ORACLE_HPP

#include "hcp3/gadgets.hpp"
#include "hcp3/graph.hpp"
#include "hcp3/provenance.hpp"

#include <string>

namespace hcp3 {

struct search_budget {
    long long node_limit = 100'000'000;  // backtracking node expansions
};

enum class search_outcome { found, exhausted_none, budget_exceeded };

struct search_result {
    search_outcome outcome = search_outcome::exhausted_none;
    std::vector<int> witness;  // cycle or path when outcome == found
    long long nodes_expanded = 0;
};

struct count_result {
    bool complete = false;  // false iff the budget ran out
    long long count = 0;
    long long nodes_expanded = 0;
};

/// Exact backtracking Hamiltonian cycle search with live-edge pruning and
/// forced-move propagation. exhausted_none certifies absence.
search_result find_hc(const graph& g, const search_budget& budget = {});

/// Exact Hamiltonian cycle count. Conventions: directed graphs count cyclic
/// sequences up to rotation; undirected graphs up to rotation and reflection.
count_result count_hc(const graph& g, const search_budget& budget = {});

/// Hamiltonian u..w path (directed: from u to w following arcs).
search_result ham_path(const graph& g, int u, int w,
                       const search_budget& budget = {});

enum class verdict { holds, fails, inconclusive };

std::string to_string(verdict v);

/// True gate behavior, half 1: for every admissible attachment pair
/// (every unordered pair when undirected; every in x out pair when
/// oriented) the gadget has a Hamiltonian path between the attachments.
verdict check_gadget_traversal(const gadget& gd,
                               const search_budget& budget = {});

/// True gate behavior, half 2: no family of m >= 2 vertex-disjoint paths,
/// each with both endpoints at distinct attachment vertices (all 2m
/// endpoints distinct, orientations respected), covers every gadget vertex.
verdict check_gadget_blocking(const gadget& gd,
                              const search_budget& budget = {});

struct equivalence_result {
    verdict status = verdict::inconclusive;
    bool original_hamiltonian = false;
    bool converted_hamiltonian = false;
    bool cycle_lifted = false;  // a converted HC projected to a valid HC
    std::string detail;
};

/// Checks that conversion preserved HC existence and that a found converted
/// cycle projects back to a Hamiltonian cycle of the original.
equivalence_result check_equivalence(const graph& original,
                                     const graph& converted,
                                     const provenance& prov,
                                     const search_budget& budget = {});

} // namespace hcp3

#endif
