#ifndef HCP3_GADGETS_HPP
#define HCP3_GADGETS_HPP

#include "hcp3/graph.hpp"
#include "hcp3/provenance.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hcp3 {

enum class orientation { in, undirected, out };

struct attachment {
    int vertex = 0;
    orientation dir = orientation::undirected;
};

/// How external edges are distributed over attachment vertices when the
/// gadget replaces a vertex. Normal gadgets need an exact attachment-per-edge
/// match; the split family accepts any number of external arcs and shares
/// them between designated receiving vertices.
enum class attachment_rule { exact, split, in_split, out_split };

/// A subgraph template spliced into a graph in place of one vertex.
/// Internal vertices are 0-based; in directed mode undirected internal
/// structure is expressed as explicit antiparallel arc pairs.
struct gadget {
    std::string name;
    graph_mode mode = graph_mode::undirected;
    int vertex_count = 0;
    std::vector<edge> edges;
    std::vector<attachment> attachments;
    attachment_rule rule = attachment_rule::exact;

    /// Internal structure as a graph (external edges not included).
    graph internal_graph() const;
};

/// 4-vertex cubic replacement for a degree-2 vertex; exactly two
/// Hamiltonian traversals between its two attachments.
gadget diamond();

/// Gate with s undirected external edges behaving like one degree-s vertex.
/// 2s+3 vertices, 3s+2 internal edges; vertex 0 (the top attachment) has
/// degree s-1 counting its external edge. Requires s >= 4.
gadget s_gate(int s);

/// Fully sub-cubic gate: s_gate(s) with its high-degree top vertex
/// recursively replaced by smaller gates down to a 4-gate.
/// s^2+3s-17 vertices, (3s^2+9s-48)/2 edges counting the s externals,
/// exactly s-3 degree-2 vertices. Requires s >= 4.
gadget expanded_s_gate(int s);

/// Directed gate: the expanded (s_in+r_out)-gate with the first s_in
/// attachments oriented in and the rest out; internal edges become
/// antiparallel arc pairs. Requires s_in + r_out >= 4.
gadget sr_gate(int s_in, int r_out);

/// Degree-reduction gadgets for directed graphs. Labels follow the
/// convention: split = {0,1} with arc (0,1); in-split and out-split are
/// the 3-vertex variants. External arcs are shared per the gadget's rule.
gadget split_gadget();
gadget in_split_gadget();
gadget out_split_gadget();

/// The Petersen graph: 10 vertices, 15 edges, cubic, non-Hamiltonian.
graph petersen();

/// Splice a gadget into g in place of vertex v. Surviving vertices keep
/// their relative order (ids above v shift down by one); gadget vertices are
/// appended in internal label order. Incident edges are matched to
/// attachments canonically: per orientation class, ascending neighbor id,
/// against the attachments of that orientation in declared order.
std::pair<graph, provenance> replace_vertex(const graph& g, int v,
                                            const gadget& gd);

/// Replace several vertices at once (single rebuild). Equivalent to the
/// canonical batch order: all listed vertices removed together, survivors
/// compacted, gadgets appended by ascending replaced id, incident edges
/// sorted by original neighbor id.
std::pair<graph, provenance>
replace_vertices(const graph& g,
                 const std::vector<std::pair<int, const gadget*>>& jobs);

} // namespace hcp3

#endif
