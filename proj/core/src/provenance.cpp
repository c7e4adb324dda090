#include "hcp3/provenance.hpp"

#include <algorithm>
#include <numeric>

namespace hcp3 {

provenance identity_provenance(int n, std::string label) {
    provenance p;
    p.stage_label = std::move(label);
    p.input_vertex_count = n;
    p.origin.resize(n);
    std::iota(p.origin.begin(), p.origin.end(), 0);
    return p;
}

provenance compose(const provenance& outer, const provenance& inner) {
    provenance result;
    result.stage_label = inner.stage_label + "+" + outer.stage_label;
    result.input_vertex_count = inner.input_vertex_count;
    result.collapsed = outer.collapsed || inner.collapsed;
    if (result.collapsed) return result;
    if (outer.input_vertex_count != static_cast<int>(inner.origin.size()))
        throw graph_error("provenance compose: outer stage expects " +
                          std::to_string(outer.input_vertex_count) +
                          " input vertices but inner stage produced " +
                          std::to_string(inner.origin.size()));
    result.origin.reserve(outer.origin.size());
    for (int mid : outer.origin) {
        if (mid < 0 || mid >= static_cast<int>(inner.origin.size()))
            throw graph_error("provenance compose: origin id out of range");
        result.origin.push_back(inner.origin[mid]);
    }
    return result;
}

cycle project_cycle(const provenance& p, const cycle& converted_cycle,
                    const graph& origin_graph) {
    if (p.collapsed)
        throw graph_error("cannot project a cycle through a collapsed conversion");
    cycle projected;
    projected.reserve(origin_graph.vertex_count());
    for (int v : converted_cycle) {
        if (v < 0 || v >= static_cast<int>(p.origin.size()))
            throw graph_error("projected cycle visits vertex " + std::to_string(v) +
                              " outside the provenance map");
        int o = p.origin[v];
        if (projected.empty() || projected.back() != o) projected.push_back(o);
    }
    // collapse the cyclic seam too
    while (projected.size() > 1 && projected.front() == projected.back())
        projected.pop_back();
    if (!is_hamiltonian_cycle(origin_graph, projected)) {
        // The converted cycle has no preferred direction; a directed origin
        // accepts only one of the two traversals.
        std::reverse(projected.begin(), projected.end());
        if (!is_hamiltonian_cycle(origin_graph, projected))
            throw graph_error(
                "cycle projection did not yield a Hamiltonian cycle "
                "of the origin graph");
    }
    return projected;
}

} // namespace hcp3
