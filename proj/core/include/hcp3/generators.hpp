#ifndef HCP3_GENERATORS_HPP
#define HCP3_GENERATORS_HPP

#include "hcp3/graph.hpp"

#include <string>
#include <vector>

namespace hcp3 {

graph complete(int n);

/// Andrasfai circulant on 3k-1 vertices: i ~ i+j for all j = 1 (mod 3).
graph andrasfai(int k);

/// Paley graph: i ~ j iff i-j is a nonzero quadratic residue mod q.
/// Requires q prime with q = 1 (mod 4).
graph paley(int q);

/// Knight-move adjacency on a rows x cols board, row-major vertex ids.
graph knight(int rows, int cols);

/// Benchmark instance catalog. Instances with closed-form constructions
/// are generated; the rest ship as embedded edge lists validated against
/// the published vertex/edge/degree signature.
struct named_instance {
    std::string name;
    int vertices = 0;
    int edges = 0;
    int max_degree = 0;
    double mean_degree = 0.0;
    long long expected_sgate_vertices = 0;
    // Vertex counts reported by the original authors' implementation of the
    // quick pipeline; tie-breaking there is unspecified, so these are
    // comparison targets, not contracts.
    long long reported_quick_vertices = 0;
};

const std::vector<named_instance>& instance_catalog();

/// Build any catalog instance by name (generated or embedded); validates
/// the result against the catalog signature. Throws on unknown names.
graph named(const std::string& name);

} // namespace hcp3

#endif
