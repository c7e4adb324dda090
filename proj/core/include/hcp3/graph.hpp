#ifndef HCP3_GRAPH_HPP
#define HCP3_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcp3 {

/// Error raised by graph construction, parsing and conversion preconditions.
class graph_error : public std::runtime_error {
public:
    explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

enum class graph_mode { directed, undirected };

std::string to_string(graph_mode mode);

struct edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const edge&) const = default;
};

/// A simple graph, directed or undirected depending on the mode flag.
///
/// Immutable after construction. Edges are stored canonically: in
/// undirected mode each edge is kept with u < v, and the edge list is
/// sorted lexicographically, so identical graphs serialize identically.
class graph {
public:
    graph() = default;
    graph(graph_mode mode, int vertex_count, std::vector<edge> edges);

    graph_mode mode() const { return mode_; }
    bool directed() const { return mode_ == graph_mode::directed; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;

    /// Undirected neighbours, or out-neighbours in directed mode.
    std::span<const int> neighbors(int v) const;
    std::span<const int> out_neighbors(int v) const { return neighbors(v); }
    std::span<const int> in_neighbors(int v) const;

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

    bool operator==(const graph& other) const {
        return mode_ == other.mode_ && n_ == other.n_ && edges_ == other.edges_;
    }

private:
    graph_mode mode_ = graph_mode::undirected;
    int n_ = 0;
    std::vector<edge> edges_;
    // CSR adjacency. adj_ = out-neighbours (or plain neighbours);
    // radj_ = in-neighbours, built for directed graphs only.
    std::vector<int> adj_off_, adj_;
    std::vector<int> radj_off_, radj_;
};

/// Per-vertex degree accounting plus the size parameter k: the sum of
/// in-degrees and out-degrees with undirected edges counted as two
/// antiparallel arcs (so k = 4e for an undirected graph).
struct degree_profile {
    std::vector<int> degree;      // undirected mode
    std::vector<int> in_degree;   // directed mode
    std::vector<int> out_degree;
    int max_degree = 0;
    int max_in = 0;
    int max_out = 0;
    long long k = 0;
};

degree_profile degrees(const graph& g);

using cycle = std::vector<int>;
using path = std::vector<int>;

/// True iff c is a Hamiltonian cycle of g (all vertices once, consecutive
/// adjacency, closing edge). A 1-vertex graph has no Hamiltonian cycle.
bool is_hamiltonian_cycle(const graph& g, const cycle& c);

/// True iff p is a Hamiltonian path of g from p.front() to p.back().
bool is_hamiltonian_path(const graph& g, const path& p);

} // namespace hcp3

#endif
