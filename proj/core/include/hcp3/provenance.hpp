#ifndef HCP3_PROVENANCE_HPP
#define HCP3_PROVENANCE_HPP

#include "hcp3/graph.hpp"

#include <string>
#include <vector>

namespace hcp3 {

/// Maps each vertex of a converted graph back to the vertex of the
/// conversion's input graph it came from. Composable across stages.
///
/// A collapsed provenance (degenerate input replaced wholesale by the
/// Petersen graph) has an empty origin map and collapsed == true.
struct provenance {
    std::string stage_label;
    int input_vertex_count = 0;
    std::vector<int> origin;  // index = output vertex id
    bool collapsed = false;

    int output_vertex_count() const { return static_cast<int>(origin.size()); }
};

provenance identity_provenance(int n, std::string label = "identity");

/// outer maps final vertices to mid-stage vertices, inner maps mid-stage
/// vertices to origin vertices; result maps final vertices to origins.
provenance compose(const provenance& outer, const provenance& inner);

/// Project a Hamiltonian cycle of the converted graph back onto the origin
/// graph: map every vertex through the origin map and collapse runs of
/// consecutive duplicates (cyclically). Throws graph_error if the result is
/// not a valid Hamiltonian cycle of origin_graph, which indicates a broken
/// conversion rather than bad input.
cycle project_cycle(const provenance& p, const cycle& converted_cycle,
                    const graph& origin_graph);

} // namespace hcp3

#endif
