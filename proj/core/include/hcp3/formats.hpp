#ifndef HCP3_FORMATS_HPP
#define HCP3_FORMATS_HPP

#include "hcp3/graph.hpp"
#include "hcp3/provenance.hpp"

#include <string>

namespace hcp3 {

/// Instance text format: line 1 = "hcp <directed|undirected> <N>",
/// then one "<u> <v>" edge per line (0-based). '#' comments and blank
/// lines are ignored. Parse errors report the offending line number.
graph parse_graph(const std::string& text);
std::string serialize_graph(const graph& g);

graph read_graph_file(const std::string& path);
void write_graph_file(const graph& g, const std::string& path);

/// Trace format: line 1 = "trace <stage_label> <input_N> <output_N>",
/// then "<new_id> <origin_id>" per output vertex.
provenance parse_trace(const std::string& text);
std::string serialize_trace(const provenance& p);

provenance read_trace_file(const std::string& path);
void write_trace_file(const provenance& p, const std::string& path);

/// Graphviz text; digraph with arrows in directed mode.
std::string export_dot(const graph& g);

/// TSPLIB HCP reader (EDGE_DATA_FORMAT EDGE_LIST only, 1-based ids).
graph parse_tsplib(const std::string& text);

} // namespace hcp3

#endif
