#ifndef HCP3_REDUCTIONS_HPP
#define HCP3_REDUCTIONS_HPP

#include "hcp3/graph.hpp"
#include "hcp3/provenance.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hcp3 {

struct conversion_report {
    graph_mode input_mode = graph_mode::undirected;
    int input_vertices = 0;
    int input_edges = 0;
    long long k = 0;  // sum of in+out degrees, undirected edges as arc pairs
    int output_vertices = 0;
    int output_edges = 0;
    int output_max_degree = 0;  // max(in,out) for directed outputs
    bool collapsed = false;
    bool within_25k = false;
    bool within_100e = false;  // meaningful for undirected inputs only
    bool within_150e = false;
    std::vector<std::pair<std::string, int>> stage_vertex_counts;

    std::string to_text() const;  // plain key:value lines
};

struct conversion {
    graph result;
    provenance prov;
    conversion_report report;
};

/// Each undirected edge materialized as two antiparallel arcs
/// (identity provenance). Directed input is returned unchanged.
std::pair<graph, provenance> directed_view(const graph& g);

/// Karp's directed-to-undirected conversion: vertex v becomes the triple
/// 3v (in), 3v+1 (middle), 3v+2 (out); arc (u,w) becomes edge (3u+2, 3w).
/// Output: 3N vertices, e+2N edges, Hamiltonian cycles in 1-1
/// correspondence.
std::pair<graph, provenance> to_undirected(const graph& g);

/// Sub-cubic to cubic: each degree-2 vertex replaced by a diamond. Inputs
/// with a degree <= 1 vertex or fewer than 3 vertices are trivially
/// non-Hamiltonian and collapse to the Petersen graph (provenance flagged
/// collapsed). Multiplies the HC count by 2^(#degree-2 vertices).
std::pair<graph, provenance> cubify(const graph& g);

/// Undirected HCP to cubic HCP: every degree-s vertex (s >= 4) replaced by
/// an expanded s-gate, then cubify. Output vertex count is exactly
/// sum over v of f(deg v) with f(2)=4, f(3)=1, f(s)=s^2+6s-26.
conversion sgate_pipeline(const graph& g);

/// Splitting Procedure on one vertex: replace v by a split, then reduce
/// in-degrees above t with in-splits and out-degrees above t with
/// out-splits (FIFO). Preserves the HC count. For t >= 4 the replacing
/// subgraph has at most 8*max(in,out)/(t-3) - 1 vertices.
std::pair<graph, provenance> split_vertex(const graph& g, int v, int t);

/// split_vertex applied to every vertex with in- or out-degree above t,
/// ascending original id. Output max in/out degree <= t; HC count unchanged.
conversion bound_degree(const graph& g, int t);

/// General pipeline (d >= 4): directed view -> bound_degree(d) -> (s,r)-gates
/// on vertices with in+out >= 4 -> Karp -> 4-gates on degree-4 vertices ->
/// cubify. Output cubic, Hamilton-equivalent.
conversion hcp_to_3hcp(const graph& g, int d);

/// Quick pipeline: directed view -> bound_degree(3) -> Karp -> 4-gates on
/// degree-4 vertices -> cubify. Output cubic with at most 25k vertices
/// (100e vertices / 150e edges for an undirected input with e edges).
conversion quick_3hcp(const graph& g);

conversion_report make_report(const graph& in, const graph& out,
                              const provenance& prov);

} // namespace hcp3

#endif
