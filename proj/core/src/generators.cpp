#include "hcp3/generators.hpp"

#include "hcp3/formats.hpp"
#include "hcp3/named_data.hpp"

#include <cmath>
#include <vector>

namespace hcp3 {

graph complete(int n) {
    if (n < 1) throw graph_error("complete(n) requires n >= 1");
    std::vector<edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return graph(graph_mode::undirected, n, std::move(edges));
}

graph andrasfai(int k) {
    if (k < 1) throw graph_error("andrasfai(k) requires k >= 1");
    const int n = 3 * k - 1;
    std::vector<edge> edges;
    // Circulant: i ~ i+j whenever j = 1 (mod 3). Because n = 2 (mod 3) the
    // connection set is symmetric, so scanning j = 1 mod 3 over i < j
    // covers every edge exactly once.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((j - i) % 3 == 1) edges.push_back({i, j});
    return graph(graph_mode::undirected, n, std::move(edges));
}

graph paley(int q) {
    if (q < 5) throw graph_error("paley(q) requires a prime q = 1 (mod 4)");
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            throw graph_error("paley(q): " + std::to_string(q) + " is not prime");
    if (q % 4 != 1)
        throw graph_error("paley(q): " + std::to_string(q) + " is not 1 mod 4");
    std::vector<char> residue(q, 0);
    for (int x = 1; x < q; ++x) residue[(x * x) % q] = 1;
    std::vector<edge> edges;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (residue[(j - i) % q]) edges.push_back({i, j});
    return graph(graph_mode::undirected, q, std::move(edges));
}

graph knight(int rows, int cols) {
    if (rows < 1 || cols < 1) throw graph_error("knight board must be nonempty");
    static const int dr[] = {1, 1, -1, -1, 2, 2, -2, -2};
    static const int dc[] = {2, -2, 2, -2, 1, -1, 1, -1};
    std::vector<edge> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            for (int m = 0; m < 8; ++m) {
                int r2 = r + dr[m], c2 = c + dc[m];
                if (r2 < 0 || r2 >= rows || c2 < 0 || c2 >= cols) continue;
                int u = r * cols + c, v = r2 * cols + c2;
                if (u < v) edges.push_back({u, v});
            }
    return graph(graph_mode::undirected, rows * cols, std::move(edges));
}

const std::vector<named_instance>& instance_catalog() {
    static const std::vector<named_instance> catalog = {
        {"k10", 10, 45, 9, 9.0, 1090, 3560},
        {"goldner-harary", 11, 27, 8, 54.0 / 11, 336, 1594},
        {"sousselier", 16, 27, 5, 3.375, 96, 932},
        {"andrasfai-6", 17, 51, 6, 6.0, 782, 3502},
        {"24-cell", 24, 96, 8, 8.0, 2064, 7344},
        {"paley-29", 29, 203, 14, 14.0, 7366, 17574},
        {"foster-cage", 30, 75, 5, 5.0, 870, 4680},
        {"sheehan-40", 40, 401, 39, 20.05, 24784, 36316},
        {"sims-gewirtz", 56, 280, 10, 10.0, 7504, 22736},
        {"knight-8x8", 64, 168, 8, 5.25, 2416, 10592},
        {"sheehan-80", 80, 1601, 79, 40.025, 186324, 152556},
        {"k100", 100, 4950, 99, 99.0, 1036900, 485600},
    };
    return catalog;
}

namespace {

graph build_named(const std::string& name) {
    if (name == "k10") return complete(10);
    if (name == "k100") return complete(100);
    if (name == "andrasfai-6") return andrasfai(6);
    if (name == "paley-29") return paley(29);
    if (name == "knight-8x8") return knight(8, 8);
    if (name == "goldner-harary") return parse_graph(data::goldner_harary);
    if (name == "sousselier") return parse_graph(data::sousselier);
    if (name == "24-cell") return parse_graph(data::twenty_four_cell);
    if (name == "foster-cage") return parse_graph(data::foster_cage);
    if (name == "sims-gewirtz") return parse_graph(data::sims_gewirtz);
    if (name == "sheehan-40") return parse_graph(data::sheehan_40);
    if (name == "sheehan-80") return parse_graph(data::sheehan_80);
    throw graph_error("unknown instance '" + name + "'");
}

} // namespace

graph named(const std::string& name) {
    graph g = build_named(name);
    for (const auto& inst : instance_catalog()) {
        if (inst.name != name) continue;
        degree_profile p = degrees(g);
        double mean = g.vertex_count() ? 2.0 * g.edge_count() / g.vertex_count() : 0.0;
        if (g.vertex_count() != inst.vertices || g.edge_count() != inst.edges ||
            p.max_degree != inst.max_degree ||
            std::abs(mean - inst.mean_degree) > 1e-9)
            throw graph_error("instance '" + name +
                              "' does not match its catalog signature");
        break;
    }
    return g;
}

} // namespace hcp3
