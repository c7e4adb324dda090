#include "hcp3/formats.hpp"

#include <fstream>
#include <sstream>

namespace hcp3 {

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw graph_error("line " + std::to_string(line_no) + ": " + msg);
}

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < INT32_MIN || v > INT32_MAX) return false;
        out = static_cast<int>(v);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

// Yields (line_no, trimmed content) for each meaningful line.
template <class Fn>
void for_each_line(const std::string& text, Fn&& fn) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        fn(line_no, line.substr(start));
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw graph_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw graph_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw graph_error("write failed: " + path);
}

} // namespace

graph parse_graph(const std::string& text) {
    bool have_header = false;
    graph_mode mode = graph_mode::undirected;
    int n = 0;
    std::vector<edge> edges;
    for_each_line(text, [&](int line_no, const std::string& line) {
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag, mode_str, n_str, extra;
            ls >> tag >> mode_str >> n_str;
            if (tag != "hcp" || (ls >> extra))
                fail(line_no, "malformed header, expected 'hcp <directed|undirected> <N>'");
            if (mode_str == "directed") mode = graph_mode::directed;
            else if (mode_str == "undirected") mode = graph_mode::undirected;
            else fail(line_no, "unknown mode '" + mode_str + "'");
            if (!parse_int(n_str, n) || n < 0)
                fail(line_no, "bad vertex count '" + n_str + "'");
            have_header = true;
            return;
        }
        std::string u_str, v_str, extra;
        ls >> u_str >> v_str;
        int u, v;
        if (v_str.empty() || (ls >> extra) || !parse_int(u_str, u) || !parse_int(v_str, v))
            fail(line_no, "expected '<u> <v>'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(line_no, "endpoint out of range in edge (" + u_str + "," + v_str + ")");
        if (u == v) fail(line_no, "self-loop (" + u_str + "," + v_str + ")");
        edges.push_back({u, v});
    });
    if (!have_header) throw graph_error("missing 'hcp' header line");
    try {
        return graph(mode, n, std::move(edges));
    } catch (const graph_error& e) {
        throw graph_error(std::string(e.what()) + " in instance text");
    }
}

std::string serialize_graph(const graph& g) {
    std::ostringstream out;
    out << "hcp " << to_string(g.mode()) << ' ' << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

graph read_graph_file(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const graph_error& e) {
        throw graph_error(path + ": " + e.what());
    }
}

void write_graph_file(const graph& g, const std::string& path) {
    write_file(path, serialize_graph(g));
}

provenance parse_trace(const std::string& text) {
    provenance p;
    bool have_header = false;
    int output_n = 0;
    std::vector<char> seen;
    for_each_line(text, [&](int line_no, const std::string& line) {
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag, label, in_str, out_str, extra;
            ls >> tag >> label >> in_str >> out_str;
            if (tag != "trace" || (ls >> extra))
                fail(line_no, "malformed header, expected 'trace <label> <input_N> <output_N>'");
            int in_n;
            if (!parse_int(in_str, in_n) || in_n < 0 ||
                !parse_int(out_str, output_n) || output_n < 0)
                fail(line_no, "bad vertex count in trace header");
            p.stage_label = label;
            p.input_vertex_count = in_n;
            p.origin.assign(output_n, -1);
            seen.assign(output_n, 0);
            have_header = true;
            return;
        }
        std::string new_str, org_str, extra;
        ls >> new_str >> org_str;
        int new_id, origin_id;
        if (org_str.empty() || (ls >> extra) ||
            !parse_int(new_str, new_id) || !parse_int(org_str, origin_id))
            fail(line_no, "expected '<new_id> <origin_id>'");
        if (new_id < 0 || new_id >= output_n)
            fail(line_no, "new id " + new_str + " out of range");
        if (origin_id < 0 || origin_id >= p.input_vertex_count)
            fail(line_no, "origin id " + org_str + " out of range");
        if (seen[new_id]) fail(line_no, "duplicate entry for vertex " + new_str);
        seen[new_id] = 1;
        p.origin[new_id] = origin_id;
    });
    if (!have_header) throw graph_error("missing 'trace' header line");
    for (int v = 0; v < output_n; ++v)
        if (!seen[v])
            throw graph_error("trace missing entry for vertex " + std::to_string(v));
    return p;
}

std::string serialize_trace(const provenance& p) {
    std::ostringstream out;
    std::string label = p.stage_label.empty() ? "unnamed" : p.stage_label;
    for (char& c : label)
        if (c == ' ' || c == '\t') c = '_';
    out << "trace " << label << ' ' << p.input_vertex_count << ' '
        << p.origin.size() << '\n';
    for (size_t v = 0; v < p.origin.size(); ++v)
        out << v << ' ' << p.origin[v] << '\n';
    return out.str();
}

provenance read_trace_file(const std::string& path) {
    try {
        return parse_trace(read_file(path));
    } catch (const graph_error& e) {
        throw graph_error(path + ": " + e.what());
    }
}

void write_trace_file(const provenance& p, const std::string& path) {
    write_file(path, serialize_trace(p));
}

std::string export_dot(const graph& g) {
    std::ostringstream out;
    const bool dir = g.directed();
    out << (dir ? "digraph" : "graph") << " g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& e : g.edges())
        out << "  " << e.u << (dir ? " -> " : " -- ") << e.v << ";\n";
    out << "}\n";
    return out.str();
}

graph parse_tsplib(const std::string& text) {
    int n = -1;
    bool in_edges = false;
    std::vector<edge> edges;
    std::vector<int> pending;
    for_each_line(text, [&](int line_no, const std::string& line) {
        if (!in_edges) {
            auto colon = line.find(':');
            std::string key = line.substr(0, colon == std::string::npos ? line.size() : colon);
            while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
            if (key == "DIMENSION") {
                if (!parse_int([&] {
                        std::istringstream vs(line.substr(colon + 1));
                        std::string tok;
                        vs >> tok;
                        return tok;
                    }(), n) || n < 0)
                    fail(line_no, "bad DIMENSION");
            } else if (key == "EDGE_DATA_FORMAT") {
                std::istringstream vs(line.substr(colon + 1));
                std::string fmt;
                vs >> fmt;
                if (fmt != "EDGE_LIST")
                    fail(line_no, "unsupported EDGE_DATA_FORMAT '" + fmt + "'");
            } else if (key == "EDGE_DATA_SECTION") {
                if (n < 0) fail(line_no, "EDGE_DATA_SECTION before DIMENSION");
                in_edges = true;
            }
            return;
        }
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "-1" || tok == "EOF") {
                in_edges = false;
                return;
            }
            int v;
            if (!parse_int(tok, v)) fail(line_no, "non-integer token '" + tok + "'");
            if (v < 1 || v > n)
                fail(line_no, "vertex " + tok + " out of range (1-based)");
            pending.push_back(v - 1);
        }
    });
    if (n < 0) throw graph_error("missing DIMENSION");
    if (pending.size() % 2 != 0) throw graph_error("odd number of edge endpoints");
    for (size_t i = 0; i + 1 < pending.size(); i += 2)
        edges.push_back({pending[i], pending[i + 1]});
    return graph(graph_mode::undirected, n, std::move(edges));
}

} // namespace hcp3
