#include "hcp3/reductions.hpp"

#include "hcp3/gadgets.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hcp3 {

std::string conversion_report::to_text() const {
    std::ostringstream out;
    out << "input_mode: " << hcp3::to_string(input_mode) << '\n'
        << "input_vertices: " << input_vertices << '\n'
        << "input_edges: " << input_edges << '\n'
        << "k: " << k << '\n'
        << "output_vertices: " << output_vertices << '\n'
        << "output_edges: " << output_edges << '\n'
        << "output_max_degree: " << output_max_degree << '\n'
        << "collapsed: " << (collapsed ? "true" : "false") << '\n'
        << "within_25k: " << (within_25k ? "true" : "false") << '\n';
    if (input_mode == graph_mode::undirected)
        out << "within_100e: " << (within_100e ? "true" : "false") << '\n'
            << "within_150e: " << (within_150e ? "true" : "false") << '\n';
    for (const auto& [stage, count] : stage_vertex_counts)
        out << "stage_" << stage << "_vertices: " << count << '\n';
    return out.str();
}

conversion_report make_report(const graph& in, const graph& out,
                              const provenance& prov) {
    conversion_report r;
    r.input_mode = in.mode();
    r.input_vertices = in.vertex_count();
    r.input_edges = in.edge_count();
    r.k = degrees(in).k;
    r.output_vertices = out.vertex_count();
    r.output_edges = out.edge_count();
    r.output_max_degree = degrees(out).max_degree;
    r.collapsed = prov.collapsed;
    r.within_25k = r.output_vertices <= 25 * r.k;
    if (!in.directed()) {
        r.within_100e = r.output_vertices <= 100LL * r.input_edges;
        r.within_150e = r.output_edges <= 150LL * r.input_edges;
    }
    return r;
}

std::pair<graph, provenance> directed_view(const graph& g) {
    if (g.directed()) return {g, identity_provenance(g.vertex_count(), "directed-view")};
    std::vector<edge> arcs;
    arcs.reserve(g.edge_count() * 2);
    for (const auto& e : g.edges()) {
        arcs.push_back({e.u, e.v});
        arcs.push_back({e.v, e.u});
    }
    return {graph(graph_mode::directed, g.vertex_count(), std::move(arcs)),
            identity_provenance(g.vertex_count(), "directed-view")};
}

std::pair<graph, provenance> to_undirected(const graph& g) {
    if (!g.directed())
        throw graph_error("to_undirected requires a directed graph");
    const int n = g.vertex_count();
    std::vector<edge> edges;
    edges.reserve(g.edge_count() + 2 * n);
    for (int v = 0; v < n; ++v) {
        edges.push_back({3 * v, 3 * v + 1});
        edges.push_back({3 * v + 1, 3 * v + 2});
    }
    for (const auto& a : g.edges()) edges.push_back({3 * a.u + 2, 3 * a.v});
    provenance p;
    p.stage_label = "karp";
    p.input_vertex_count = n;
    p.origin.resize(3 * n);
    for (int v = 0; v < n; ++v)
        p.origin[3 * v] = p.origin[3 * v + 1] = p.origin[3 * v + 2] = v;
    return {graph(graph_mode::undirected, 3 * n, std::move(edges)), std::move(p)};
}

namespace {

provenance collapsed_provenance(int input_n, std::string label) {
    provenance p;
    p.stage_label = std::move(label);
    p.input_vertex_count = input_n;
    p.collapsed = true;
    return p;
}

} // namespace

std::pair<graph, provenance> cubify(const graph& g) {
    if (g.directed()) throw graph_error("cubify requires an undirected graph");
    const int n = g.vertex_count();
    bool degenerate = n < 3;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 3)
            throw graph_error("cubify requires max degree 3; vertex " +
                              std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)));
        if (g.degree(v) <= 1) degenerate = true;
    }
    if (degenerate)
        return {petersen(), collapsed_provenance(n, "cubify-collapsed")};

    static const gadget dia = diamond();
    std::vector<std::pair<int, const gadget*>> jobs;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2) jobs.push_back({v, &dia});
    if (jobs.empty()) return {g, identity_provenance(n, "cubify")};
    auto [out, prov] = replace_vertices(g, jobs);
    prov.stage_label = "cubify";
    return {std::move(out), std::move(prov)};
}

conversion sgate_pipeline(const graph& g) {
    if (g.directed())
        throw graph_error("sgate_pipeline requires an undirected graph");
    std::map<int, gadget> gates;
    std::vector<std::pair<int, const gadget*>> jobs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int s = g.degree(v);
        if (s < 4) continue;
        auto it = gates.find(s);
        if (it == gates.end()) it = gates.emplace(s, expanded_s_gate(s)).first;
        jobs.push_back({v, &it->second});
    }
    auto [gated, p1] = replace_vertices(g, jobs);
    p1.stage_label = "sgate";
    auto [out, p2] = cubify(gated);
    conversion c;
    c.prov = compose(p2, p1);
    c.report = make_report(g, out, c.prov);
    c.report.stage_vertex_counts = {{"input", g.vertex_count()},
                                    {"sgate", gated.vertex_count()},
                                    {"cubify", out.vertex_count()}};
    c.result = std::move(out);
    return c;
}

namespace {

// Local simulation of the Splitting Procedure on one vertex. Arc endpoints
// are either external (original graph vertices) or local (subgraph vertices
// created during the procedure).
struct local_end {
    bool external;
    int id;  // original vertex id, or local creation index
};

struct local_arc {
    local_end from, to;
};

struct split_state {
    std::vector<local_arc> arcs;
    std::vector<char> alive;   // by local creation index
    std::vector<int> in_deg;   // maintained incrementally
    std::vector<int> out_deg;

    int new_local() {
        alive.push_back(1);
        in_deg.push_back(0);
        out_deg.push_back(0);
        return static_cast<int>(alive.size()) - 1;
    }

    void add_arc(local_end from, local_end to) {
        if (!from.external) ++out_deg[from.id];
        if (!to.external) ++in_deg[to.id];
        arcs.push_back({from, to});
    }

    // Ordering of shared edges: external endpoints by original id first,
    // then local endpoints by creation order (matching final graph ids,
    // where locals are appended after the survivors).
    static bool end_less(const local_end& a, const local_end& b) {
        if (a.external != b.external) return a.external;
        return a.id < b.id;
    }

    // Replace live local `l` with an in-split or out-split.
    void apply_split(int l, bool in_side) {
        int a = new_local(), b = new_local(), c = new_local();
        std::vector<local_arc*> shared;
        for (auto& arc : arcs) {
            if (in_side) {
                if (!arc.to.external && arc.to.id == l) shared.push_back(&arc);
                else if (!arc.from.external && arc.from.id == l) {
                    arc.from.id = c;
                    ++out_deg[c];
                }
            } else {
                if (!arc.from.external && arc.from.id == l) shared.push_back(&arc);
                else if (!arc.to.external && arc.to.id == l) {
                    arc.to.id = a;
                    ++in_deg[a];
                }
            }
        }
        std::stable_sort(shared.begin(), shared.end(),
                         [&](const local_arc* x, const local_arc* y) {
                             return in_side ? end_less(x->from, y->from)
                                            : end_less(x->to, y->to);
                         });
        const size_t first_half = (shared.size() + 1) / 2;
        for (size_t i = 0; i < shared.size(); ++i) {
            if (in_side) {
                int tgt = i < first_half ? a : b;
                shared[i]->to.id = tgt;
                ++in_deg[tgt];
            } else {
                int src = i < first_half ? b : c;
                shared[i]->from.id = src;
                ++out_deg[src];
            }
        }
        auto loc = [](int id) { return local_end{false, id}; };
        if (in_side) {
            add_arc(loc(a), loc(b));
            add_arc(loc(a), loc(c));
            add_arc(loc(b), loc(a));
            add_arc(loc(b), loc(c));
        } else {
            add_arc(loc(a), loc(b));
            add_arc(loc(a), loc(c));
            add_arc(loc(b), loc(c));
            add_arc(loc(c), loc(b));
        }
        alive[l] = 0;
        in_deg[l] = out_deg[l] = 0;
    }
};

} // namespace

std::pair<graph, provenance> split_vertex(const graph& g, int v, int t) {
    if (!g.directed()) throw graph_error("split_vertex requires a directed graph");
    if (t < 3) throw graph_error("split_vertex requires threshold t >= 3");
    if (v < 0 || v >= g.vertex_count())
        throw graph_error("split_vertex: vertex out of range");

    split_state st;
    int s1 = st.new_local(), s2 = st.new_local();
    for (int u : g.in_neighbors(v)) st.add_arc({true, u}, {false, s1});
    for (int w : g.out_neighbors(v)) st.add_arc({false, s2}, {true, w});
    st.add_arc({false, s1}, {false, s2});

    // FIFO over creation order: first reduce in-degrees, then out-degrees.
    // Splitting a vertex only appends new locals, so a single forward scan
    // per phase processes offenders in creation order.
    for (int phase = 0; phase < 2; ++phase)
        for (int l = 0; l < static_cast<int>(st.alive.size()); ++l) {
            if (!st.alive[l]) continue;
            int d = phase == 0 ? st.in_deg[l] : st.out_deg[l];
            if (d > t) st.apply_split(l, phase == 0);
        }

    // Splice: survivors shift down past v; live locals appended in
    // creation order.
    const int n = g.vertex_count();
    std::vector<int> local_id(st.alive.size(), -1);
    int next = n - 1;
    for (size_t l = 0; l < st.alive.size(); ++l)
        if (st.alive[l]) local_id[l] = next++;
    auto map_end = [&](const local_end& e) {
        if (e.external) return e.id < v ? e.id : e.id - 1;
        return local_id[e.id];
    };

    std::vector<edge> edges;
    edges.reserve(g.edge_count() + st.arcs.size());
    for (const auto& e : g.edges())
        if (e.u != v && e.v != v)
            edges.push_back({e.u < v ? e.u : e.u - 1, e.v < v ? e.v : e.v - 1});
    for (const auto& a : st.arcs)
        edges.push_back({map_end(a.from), map_end(a.to)});

    provenance p;
    p.stage_label = "split";
    p.input_vertex_count = n;
    p.origin.resize(next);
    for (int u = 0; u < n; ++u)
        if (u != v) p.origin[u < v ? u : u - 1] = u;
    for (size_t l = 0; l < st.alive.size(); ++l)
        if (st.alive[l]) p.origin[local_id[l]] = v;
    return {graph(graph_mode::directed, next, std::move(edges)), std::move(p)};
}

conversion bound_degree(const graph& g, int t) {
    if (!g.directed()) throw graph_error("bound_degree requires a directed graph");
    if (t < 3) throw graph_error("bound_degree requires threshold t >= 3");
    const int n = g.vertex_count();
    graph cur = g;
    provenance prov = identity_provenance(n, "bound-degree");
    std::vector<int> cur_id(n);
    for (int v = 0; v < n; ++v) cur_id[v] = v;
    for (int v = 0; v < n; ++v) {
        if (g.in_degree(v) <= t && g.out_degree(v) <= t) continue;
        auto [next_g, p] = split_vertex(cur, cur_id[v], t);
        for (int u = 0; u < n; ++u)
            if (u != v && cur_id[u] > cur_id[v]) --cur_id[u];
        cur_id[v] = -1;
        prov = compose(p, prov);
        cur = std::move(next_g);
    }
    prov.stage_label = "bound-degree";
    conversion c;
    c.report = make_report(g, cur, prov);
    c.prov = std::move(prov);
    c.result = std::move(cur);
    return c;
}

namespace {

// Trivially non-Hamiltonian inputs are replaced wholesale by the Petersen
// graph: undirected with a vertex of degree <= 1 or fewer than 3 vertices;
// directed with an in- or out-degree of 0 or fewer than 2 vertices.
bool trivially_non_hamiltonian(const graph& g) {
    const int n = g.vertex_count();
    if (g.directed()) {
        if (n < 2) return true;
        for (int v = 0; v < n; ++v)
            if (g.in_degree(v) == 0 || g.out_degree(v) == 0) return true;
    } else {
        if (n < 3) return true;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) <= 1) return true;
    }
    return false;
}

conversion collapse_pipeline(const graph& g, const std::string& label) {
    conversion c;
    c.result = petersen();
    c.prov = collapsed_provenance(g.vertex_count(), label + "-collapsed");
    c.report = make_report(g, c.result, c.prov);
    c.report.stage_vertex_counts = {{"input", g.vertex_count()},
                                    {"collapsed", 10}};
    return c;
}

// Shared tail of both pipelines: Karp conversion, 4-gates on the degree-4
// vertices it leaves, then cubify.
struct tail_result {
    graph result;
    provenance prov;  // relative to the tail's directed input
    int karp_vertices = 0;
    int gate_vertices = 0;
};

tail_result karp_gate_cubify(const graph& directed_in) {
    auto [karp, pk] = to_undirected(directed_in);
    static const gadget four_gate = s_gate(4);
    std::vector<std::pair<int, const gadget*>> jobs;
    for (int v = 0; v < karp.vertex_count(); ++v)
        if (karp.degree(v) == 4) jobs.push_back({v, &four_gate});
    auto [gated, pg] = replace_vertices(karp, jobs);
    pg.stage_label = "4-gate";
    auto [cubic, pc] = cubify(gated);
    tail_result t{std::move(cubic), compose(pc, compose(pg, pk)),
                  karp.vertex_count(), gated.vertex_count()};
    return t;
}

} // namespace

conversion quick_3hcp(const graph& g) {
    if (trivially_non_hamiltonian(g)) return collapse_pipeline(g, "quick-3hcp");
    auto [dir, p0] = directed_view(g);
    conversion bounded = bound_degree(dir, 3);
    tail_result t = karp_gate_cubify(bounded.result);
    conversion c;
    c.prov = compose(t.prov, compose(bounded.prov, p0));
    c.prov.stage_label = "quick-3hcp";
    c.report = make_report(g, t.result, c.prov);
    c.report.stage_vertex_counts = {
        {"input", g.vertex_count()},
        {"bound_degree", bounded.result.vertex_count()},
        {"karp", t.karp_vertices},
        {"4gate", t.gate_vertices},
        {"cubify", t.result.vertex_count()}};
    c.result = std::move(t.result);
    return c;
}

conversion hcp_to_3hcp(const graph& g, int d) {
    if (d < 4) throw graph_error("hcp_to_3hcp requires d >= 4");
    if (trivially_non_hamiltonian(g)) return collapse_pipeline(g, "hcp-3hcp");
    auto [dir, p0] = directed_view(g);
    conversion bounded = bound_degree(dir, d);

    std::map<std::pair<int, int>, gadget> gates;
    std::vector<std::pair<int, const gadget*>> jobs;
    const graph& b = bounded.result;
    for (int v = 0; v < b.vertex_count(); ++v) {
        int s = b.in_degree(v), r = b.out_degree(v);
        if (s + r < 4) continue;
        auto key = std::make_pair(s, r);
        auto it = gates.find(key);
        if (it == gates.end()) it = gates.emplace(key, sr_gate(s, r)).first;
        jobs.push_back({v, &it->second});
    }
    auto [gated, pg] = replace_vertices(b, jobs);
    pg.stage_label = "sr-gate";

    tail_result t = karp_gate_cubify(gated);
    conversion c;
    c.prov = compose(t.prov, compose(pg, compose(bounded.prov, p0)));
    c.prov.stage_label = "hcp-3hcp";
    c.report = make_report(g, t.result, c.prov);
    c.report.stage_vertex_counts = {
        {"input", g.vertex_count()},
        {"bound_degree", b.vertex_count()},
        {"sr_gate", gated.vertex_count()},
        {"karp", t.karp_vertices},
        {"4gate", t.gate_vertices},
        {"cubify", t.result.vertex_count()}};
    c.result = std::move(t.result);
    return c;
}

} // namespace hcp3
