#include "hcp3/graph.hpp"

#include <algorithm>

namespace hcp3 {

std::string to_string(graph_mode mode) {
    return mode == graph_mode::directed ? "directed" : "undirected";
}

namespace {

std::string edge_str(const edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

} // namespace

graph::graph(graph_mode mode, int vertex_count, std::vector<edge> edges)
    : mode_(mode), n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0)
        throw graph_error("negative vertex count");
    for (auto& e : edges_) {
        if (e.u == e.v)
            throw graph_error("self-loop " + edge_str(e));
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw graph_error("endpoint out of range in edge " + edge_str(e));
        if (mode_ == graph_mode::undirected && e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw graph_error("duplicate edge " + edge_str(*dup));

    adj_off_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++adj_off_[e.u + 1];
        if (mode_ == graph_mode::undirected) ++adj_off_[e.v + 1];
    }
    for (int v = 0; v < n_; ++v) adj_off_[v + 1] += adj_off_[v];
    adj_.resize(adj_off_[n_]);
    {
        std::vector<int> fill(adj_off_.begin(), adj_off_.end() - 1);
        for (const auto& e : edges_) {
            adj_[fill[e.u]++] = e.v;
            if (mode_ == graph_mode::undirected) adj_[fill[e.v]++] = e.u;
        }
    }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_.begin() + adj_off_[v], adj_.begin() + adj_off_[v + 1]);

    if (mode_ == graph_mode::directed) {
        radj_off_.assign(n_ + 1, 0);
        for (const auto& e : edges_) ++radj_off_[e.v + 1];
        for (int v = 0; v < n_; ++v) radj_off_[v + 1] += radj_off_[v];
        radj_.resize(radj_off_[n_]);
        std::vector<int> fill(radj_off_.begin(), radj_off_.end() - 1);
        for (const auto& e : edges_) radj_[fill[e.v]++] = e.u;
        for (int v = 0; v < n_; ++v)
            std::sort(radj_.begin() + radj_off_[v], radj_.begin() + radj_off_[v + 1]);
    }
}

bool graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::span<const int> graph::neighbors(int v) const {
    return {adj_.data() + adj_off_[v], adj_.data() + adj_off_[v + 1]};
}

std::span<const int> graph::in_neighbors(int v) const {
    if (mode_ == graph_mode::undirected) return neighbors(v);
    return {radj_.data() + radj_off_[v], radj_.data() + radj_off_[v + 1]};
}

degree_profile degrees(const graph& g) {
    degree_profile p;
    const int n = g.vertex_count();
    if (g.directed()) {
        p.in_degree.resize(n);
        p.out_degree.resize(n);
        for (int v = 0; v < n; ++v) {
            p.in_degree[v] = g.in_degree(v);
            p.out_degree[v] = g.out_degree(v);
            p.max_in = std::max(p.max_in, p.in_degree[v]);
            p.max_out = std::max(p.max_out, p.out_degree[v]);
            p.k += p.in_degree[v] + p.out_degree[v];
        }
        p.max_degree = std::max(p.max_in, p.max_out);
    } else {
        p.degree.resize(n);
        for (int v = 0; v < n; ++v) {
            p.degree[v] = g.degree(v);
            p.max_degree = std::max(p.max_degree, p.degree[v]);
            // each undirected edge counts as two antiparallel arcs
            p.k += 2LL * p.degree[v];
        }
    }
    return p;
}

bool is_hamiltonian_cycle(const graph& g, const cycle& c) {
    const int n = g.vertex_count();
    // A directed 2-cycle (antiparallel arc pair) is a legitimate Hamiltonian
    // cycle; an undirected edge is not (it would be reused).
    const int min_n = g.directed() ? 2 : 3;
    if (static_cast<int>(c.size()) != n || n < min_n) return false;
    std::vector<char> seen(n, 0);
    for (int v : c) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(c[i], c[(i + 1) % n])) return false;
    return true;
}

bool is_hamiltonian_path(const graph& g, const path& p) {
    const int n = g.vertex_count();
    if (static_cast<int>(p.size()) != n || n < 1) return false;
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i + 1 < n; ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

} // namespace hcp3
