#include "hcp3/gadgets.hpp"

#include <algorithm>
#include <map>

namespace hcp3 {

graph gadget::internal_graph() const {
    return graph(mode, vertex_count, edges);
}

gadget diamond() {
    gadget g;
    g.name = "diamond";
    g.mode = graph_mode::undirected;
    g.vertex_count = 4;
    g.edges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    g.attachments = {{0, orientation::undirected}, {3, orientation::undirected}};
    return g;
}

gadget s_gate(int s) {
    if (s < 4) throw graph_error("s_gate requires s >= 4, got " + std::to_string(s));
    gadget g;
    g.name = std::to_string(s) + "-gate";
    g.mode = graph_mode::undirected;
    g.vertex_count = 2 * s + 3;
    // Core on vertices 0..9 (labels 1..10 in the construction's figures).
    g.edges = {{0, 2}, {0, 7}, {1, 2}, {1, 4}, {2, 3}, {3, 4},
               {3, 5}, {5, 6}, {6, 7}, {6, 9}, {7, 8}, {8, 9}};
    // Bottom row b_1..b_{2s-7} at ids 10..2s+2, path-connected.
    const int bottom = 2 * s - 7;
    for (int j = 1; j < bottom; ++j)
        g.edges.push_back({9 + j, 10 + j});
    // Connectors to the core, and the top vertex's edges to even-index
    // bottom vertices (these give vertex 0 its degree s-1).
    g.edges.push_back({4, 10});
    g.edges.push_back({9, 9 + bottom});
    for (int j = 2; j <= bottom; j += 2)
        g.edges.push_back({0, 9 + j});
    // Attachment order: top, left, right, then odd bottom vertices.
    g.attachments = {{0, orientation::undirected},
                     {1, orientation::undirected},
                     {8, orientation::undirected}};
    for (int j = 1; j <= bottom; j += 2)
        g.attachments.push_back({9 + j, orientation::undirected});
    return g;
}

namespace {

// Replace vertex 0 of `outer` (the high-degree top vertex of an s-gate)
// with `inner`, a gate with one fewer attachment. The outer external top
// edge moves to inner's top attachment; vertex 0's internal neighbors,
// ascending, take inner's remaining attachments in declared order.
gadget splice_top(const gadget& outer, const gadget& inner) {
    const int off = outer.vertex_count - 1;  // inner ids start here
    gadget g;
    g.mode = graph_mode::undirected;
    g.vertex_count = off + inner.vertex_count;

    std::vector<int> top_neighbors;
    for (const auto& e : outer.edges) {
        if (e.u == 0) top_neighbors.push_back(e.v);
        else if (e.v == 0) top_neighbors.push_back(e.u);
        else g.edges.push_back({e.u - 1, e.v - 1});
    }
    std::sort(top_neighbors.begin(), top_neighbors.end());
    if (top_neighbors.size() + 1 != inner.attachments.size())
        throw graph_error("gate expansion attachment mismatch");
    for (size_t i = 0; i < top_neighbors.size(); ++i)
        g.edges.push_back({top_neighbors[i] - 1,
                           off + inner.attachments[i + 1].vertex});
    for (const auto& e : inner.edges)
        g.edges.push_back({off + e.u, off + e.v});

    g.attachments = {{off + inner.attachments[0].vertex, orientation::undirected}};
    for (size_t i = 1; i < outer.attachments.size(); ++i)
        g.attachments.push_back({outer.attachments[i].vertex - 1,
                                 orientation::undirected});
    return g;
}

} // namespace

gadget expanded_s_gate(int s) {
    if (s < 4)
        throw graph_error("expanded_s_gate requires s >= 4, got " + std::to_string(s));
    gadget g = s_gate(4);
    for (int i = 5; i <= s; ++i) g = splice_top(s_gate(i), g);
    g.name = "expanded-" + std::to_string(s) + "-gate";
    return g;
}

gadget sr_gate(int s_in, int r_out) {
    if (s_in < 0 || r_out < 0 || s_in + r_out < 4)
        throw graph_error("sr_gate requires s_in + r_out >= 4");
    gadget g = expanded_s_gate(s_in + r_out);
    g.name = "(" + std::to_string(s_in) + "," + std::to_string(r_out) + ")-gate";
    g.mode = graph_mode::directed;
    // Internal undirected edges become antiparallel arc pairs.
    std::vector<edge> arcs;
    arcs.reserve(g.edges.size() * 2);
    for (const auto& e : g.edges) {
        arcs.push_back({e.u, e.v});
        arcs.push_back({e.v, e.u});
    }
    g.edges = std::move(arcs);
    for (int i = 0; i < static_cast<int>(g.attachments.size()); ++i)
        g.attachments[i].dir = i < s_in ? orientation::in : orientation::out;
    return g;
}

gadget split_gadget() {
    gadget g;
    g.name = "split";
    g.mode = graph_mode::directed;
    g.vertex_count = 2;
    g.edges = {{0, 1}};
    g.attachments = {{0, orientation::in}, {1, orientation::out}};
    g.rule = attachment_rule::split;
    return g;
}

gadget in_split_gadget() {
    gadget g;
    g.name = "in-split";
    g.mode = graph_mode::directed;
    g.vertex_count = 3;
    g.edges = {{0, 1}, {0, 2}, {1, 0}, {1, 2}};
    g.attachments = {{0, orientation::in}, {1, orientation::in},
                     {2, orientation::out}};
    g.rule = attachment_rule::in_split;
    return g;
}

gadget out_split_gadget() {
    gadget g;
    g.name = "out-split";
    g.mode = graph_mode::directed;
    g.vertex_count = 3;
    g.edges = {{0, 1}, {0, 2}, {1, 2}, {2, 1}};
    g.attachments = {{0, orientation::in}, {1, orientation::out},
                     {2, orientation::out}};
    g.rule = attachment_rule::out_split;
    return g;
}

graph petersen() {
    std::vector<edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        edges.push_back({i, 5 + i});                // spokes
    }
    return graph(graph_mode::undirected, 10, std::move(edges));
}

namespace {

struct incident_arc {
    int neighbor;      // original neighbor id
    orientation dir;   // relative to the replaced vertex
};

// Assign each incident external edge of a replaced vertex to an internal
// gadget vertex, per the gadget's attachment rule.
std::vector<std::pair<incident_arc, int>>
assign_attachments(int v, const gadget& gd,
                   std::vector<incident_arc> incident) {
    auto rank = [](orientation o) {
        return o == orientation::in ? 0 : o == orientation::undirected ? 1 : 2;
    };
    std::sort(incident.begin(), incident.end(),
              [&](const incident_arc& a, const incident_arc& b) {
                  if (rank(a.dir) != rank(b.dir)) return rank(a.dir) < rank(b.dir);
                  return a.neighbor < b.neighbor;
              });
    std::vector<std::pair<incident_arc, int>> out;
    out.reserve(incident.size());

    if (gd.rule == attachment_rule::exact) {
        std::vector<attachment> atts[3];
        for (const auto& a : gd.attachments) atts[rank(a.dir)].push_back(a);
        size_t used[3] = {0, 0, 0};
        for (const auto& arc : incident) {
            auto& pool = atts[rank(arc.dir)];
            auto& idx = used[rank(arc.dir)];
            if (idx >= pool.size())
                throw graph_error("vertex " + std::to_string(v) +
                                  " has more incident edges than gadget '" +
                                  gd.name + "' has attachments");
            out.push_back({arc, pool[idx++].vertex});
        }
        for (int r = 0; r < 3; ++r)
            if (used[r] != atts[r].size())
                throw graph_error("vertex " + std::to_string(v) +
                                  " leaves unused attachments of gadget '" +
                                  gd.name + "'");
        return out;
    }

    // Split family: any number of external arcs, shared per the rule.
    std::vector<incident_arc> ins, outs;
    for (const auto& arc : incident)
        (arc.dir == orientation::in ? ins : outs).push_back(arc);
    const size_t half_in = (ins.size() + 1) / 2;
    const size_t half_out = (outs.size() + 1) / 2;
    for (size_t i = 0; i < ins.size(); ++i) {
        int target = 0;
        if (gd.rule == attachment_rule::in_split && i >= half_in) target = 1;
        out.push_back({ins[i], target});
    }
    for (size_t i = 0; i < outs.size(); ++i) {
        int source = gd.rule == attachment_rule::split ? 1
                   : gd.rule == attachment_rule::in_split ? 2
                   : (i < half_out ? 1 : 2);
        out.push_back({outs[i], source});
    }
    return out;
}

} // namespace

std::pair<graph, provenance>
replace_vertices(const graph& g,
                 const std::vector<std::pair<int, const gadget*>>& jobs_in) {
    auto jobs = jobs_in;
    std::sort(jobs.begin(), jobs.end());
    const int n = g.vertex_count();
    std::vector<const gadget*> replaced(n, nullptr);
    for (size_t i = 0; i < jobs.size(); ++i) {
        auto [v, gd] = jobs[i];
        if (v < 0 || v >= n)
            throw graph_error("replace_vertices: vertex " + std::to_string(v) +
                              " out of range");
        if (i > 0 && jobs[i - 1].first == v)
            throw graph_error("replace_vertices: vertex " + std::to_string(v) +
                              " listed twice");
        if (gd->mode != g.mode())
            throw graph_error("gadget '" + gd->name + "' mode does not match graph");
        replaced[v] = gd;
    }

    // Survivors keep relative order; gadgets are appended in ascending
    // replaced-vertex order.
    std::vector<int> new_id(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!replaced[v]) new_id[v] = next++;
    std::vector<int> base(n, -1);
    provenance prov;
    prov.stage_label = "replace";
    prov.input_vertex_count = n;
    prov.origin.resize(next);
    for (int v = 0; v < n; ++v)
        if (!replaced[v]) prov.origin[new_id[v]] = v;
    for (const auto& [v, gd] : jobs) {
        base[v] = next;
        next += gd->vertex_count;
        prov.origin.insert(prov.origin.end(), gd->vertex_count, v);
    }

    // Per replaced vertex, the internal endpoint serving each incident edge.
    // Key: neighbor * 2 + (incoming ? 0 : 1); undirected uses slot 0.
    std::vector<std::map<int, int>> endpoint(n);
    const bool dir = g.directed();
    for (const auto& [v, gd] : jobs) {
        std::vector<incident_arc> incident;
        if (dir) {
            for (int u : g.in_neighbors(v))
                incident.push_back({u, orientation::in});
            for (int w : g.out_neighbors(v))
                incident.push_back({w, orientation::out});
        } else {
            for (int u : g.neighbors(v))
                incident.push_back({u, orientation::undirected});
        }
        for (const auto& [arc, internal] : assign_attachments(v, *gd, incident)) {
            int slot = arc.dir == orientation::out ? 1 : 0;
            endpoint[v][arc.neighbor * 2 + slot] = base[v] + internal;
        }
    }

    std::vector<edge> edges;
    edges.reserve(g.edge_count() + jobs.size() * 8);
    for (const auto& e : g.edges()) {
        // For arc (u,v): an endpoint at a replaced u uses u's outgoing slot.
        int nu = replaced[e.u] ? endpoint[e.u].at(e.v * 2 + (dir ? 1 : 0))
                               : new_id[e.u];
        int nv = replaced[e.v] ? endpoint[e.v].at(e.u * 2 + 0) : new_id[e.v];
        edges.push_back({nu, nv});
    }
    for (const auto& [v, gd] : jobs)
        for (const auto& e : gd->edges)
            edges.push_back({base[v] + e.u, base[v] + e.v});

    return {graph(g.mode(), next, std::move(edges)), std::move(prov)};
}

std::pair<graph, provenance> replace_vertex(const graph& g, int v,
                                            const gadget& gd) {
    return replace_vertices(g, {{v, &gd}});
}

} // namespace hcp3
