#include "hcp3/formats.hpp"
#include "hcp3/generators.hpp"
#include "hcp3/oracle.hpp"
#include "hcp3/reductions.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hcp3;

graph read_input(const std::string& path, const std::string& format) {
    if (format == "tsplib") {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw graph_error("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_tsplib(buf.str());
    }
    return read_graph_file(path);
}

// Accepts catalog names plus the parametric forms kN, andrasfai:K,
// paley:Q and knight:RxC.
graph generate(const std::string& spec) {
    auto num = [&](const std::string& s) {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw graph_error("bad number '" + s + "' in '" + spec + "'");
        return v;
    };
    if (spec.size() > 1 && (spec[0] == 'k' || spec[0] == 'K') &&
        isdigit(static_cast<unsigned char>(spec[1])))
        return complete(num(spec.substr(1)));
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
        if (kind == "andrasfai") return andrasfai(num(arg));
        if (kind == "paley") return paley(num(arg));
        if (kind == "knight") {
            auto x = arg.find('x');
            if (x == std::string::npos)
                throw graph_error("knight expects RxC, got '" + arg + "'");
            return knight(num(arg.substr(0, x)), num(arg.substr(x + 1)));
        }
        throw graph_error("unknown generator '" + kind + "'");
    }
    return named(spec);
}

conversion run_pipeline(const std::string& pipeline, const graph& g) {
    auto wrap = [&](std::pair<graph, provenance> r) {
        conversion c;
        c.report = make_report(g, r.first, r.second);
        c.result = std::move(r.first);
        c.prov = std::move(r.second);
        return c;
    };
    if (pipeline == "karp") return wrap(to_undirected(g));
    if (pipeline == "cubify") return wrap(cubify(g));
    if (pipeline == "sgate") return sgate_pipeline(g);
    if (pipeline == "quick") return quick_3hcp(g);
    if (pipeline.rfind("bound:", 0) == 0)
        return bound_degree(g, std::stoi(pipeline.substr(6)));
    if (pipeline.rfind("3hcp:", 0) == 0)
        return hcp_to_3hcp(g, std::stoi(pipeline.substr(5)));
    throw graph_error("unknown pipeline '" + pipeline +
                      "' (expected karp|cubify|sgate|bound:D|3hcp:D|quick)");
}

int cmd_table1(bool run_quick) {
    bool all_match = true;
    std::printf("%-16s %14s %14s %6s", "instance", "sgate-expected",
                "sgate-actual", "match");
    if (run_quick) std::printf(" %14s %14s", "quick-reported", "quick-actual");
    std::printf("\n");
    for (const auto& inst : instance_catalog()) {
        graph g = named(inst.name);
        conversion sg = sgate_pipeline(g);
        bool match = sg.report.output_vertices == inst.expected_sgate_vertices;
        all_match = all_match && match;
        std::printf("%-16s %14lld %14d %6s", inst.name.c_str(),
                    inst.expected_sgate_vertices, sg.report.output_vertices,
                    match ? "yes" : "NO");
        if (run_quick) {
            conversion q = quick_3hcp(g);
            std::printf(" %14lld %14d", inst.reported_quick_vertices,
                        q.report.output_vertices);
        }
        std::printf("\n");
    }
    return all_match ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian cycle problem conversions to cubic instances"};
    app.require_subcommand(1);

    std::string gen_spec, out_path, in_path, conv_path, trace_path, report_path;
    std::string pipeline, format = "hcp";
    long long budget_nodes = search_budget{}.node_limit;
    bool do_count = false, quick_col = false;

    auto* gen = app.add_subcommand("gen", "Generate a catalog or parametric instance");
    gen->add_option("name", gen_spec,
                    "instance: catalog name, kN, andrasfai:K, paley:Q, knight:RxC")
        ->required();
    gen->add_option("-o,--output", out_path, "output .hcp file")->required();

    auto* conv = app.add_subcommand("convert", "Run a conversion pipeline");
    conv->add_option("-p,--pipeline", pipeline,
                     "karp|cubify|sgate|bound:D|3hcp:D|quick")->required();
    conv->add_option("-i,--input", in_path, "input file")->required();
    conv->add_option("-o,--output", out_path, "output .hcp file")->required();
    conv->add_option("--trace", trace_path, "write composed trace file");
    conv->add_option("--report", report_path, "write conversion report");
    conv->add_option("--format", format, "input format: hcp (default) or tsplib");

    auto* verify = app.add_subcommand(
        "verify", "Check a conversion for Hamiltonicity equivalence");
    verify->add_option("-i,--input", in_path, "original instance")->required();
    verify->add_option("-c,--converted", conv_path, "converted instance")->required();
    verify->add_option("--trace", trace_path, "trace file")->required();
    verify->add_flag("--count", do_count, "also count Hamiltonian cycles");
    verify->add_option("--budget", budget_nodes, "search node budget");

    auto* stats = app.add_subcommand("stats", "Print instance statistics");
    stats->add_option("-i,--input", in_path, "input file")->required();
    stats->add_option("--format", format, "input format: hcp (default) or tsplib");

    auto* dot = app.add_subcommand("dot", "Export an instance as DOT");
    dot->add_option("-i,--input", in_path, "input file")->required();
    dot->add_option("-o,--output", out_path, "output .dot file")->required();

    auto* table1 = app.add_subcommand(
        "table1", "Reproduce published cubic-conversion sizes for the catalog");
    table1->add_flag("--quick", quick_col, "also run the quick pipeline");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            write_graph_file(generate(gen_spec), out_path);
        } else if (conv->parsed()) {
            graph g = read_input(in_path, format);
            conversion c = run_pipeline(pipeline, g);
            write_graph_file(c.result, out_path);
            if (!trace_path.empty()) write_trace_file(c.prov, trace_path);
            if (!report_path.empty()) {
                std::ofstream r(report_path);
                if (!r) throw graph_error("cannot open " + report_path);
                r << c.report.to_text();
            }
        } else if (verify->parsed()) {
            graph g = read_graph_file(in_path);
            graph c = read_graph_file(conv_path);
            provenance p = read_trace_file(trace_path);
            search_budget budget{budget_nodes};
            equivalence_result res = check_equivalence(g, c, p, budget);
            std::cout << "verdict: " << to_string(res.status) << '\n'
                      << "original_hamiltonian: "
                      << (res.original_hamiltonian ? "true" : "false") << '\n'
                      << "converted_hamiltonian: "
                      << (res.converted_hamiltonian ? "true" : "false") << '\n';
            if (!res.detail.empty()) std::cout << "detail: " << res.detail << '\n';
            if (do_count) {
                count_result a = count_hc(g, budget);
                count_result b = count_hc(c, budget);
                std::cout << "original_hc_count: " << a.count
                          << (a.complete ? "" : " (incomplete)") << '\n'
                          << "converted_hc_count: " << b.count
                          << (b.complete ? "" : " (incomplete)") << '\n';
            }
            return res.status == verdict::holds ? 0
                 : res.status == verdict::fails ? 1 : 2;
        } else if (stats->parsed()) {
            graph g = read_input(in_path, format);
            degree_profile p = degrees(g);
            std::cout << "mode: " << to_string(g.mode()) << '\n'
                      << "vertices: " << g.vertex_count() << '\n'
                      << "edges: " << g.edge_count() << '\n'
                      << "k: " << p.k << '\n';
            if (g.directed())
                std::cout << "max_in_degree: " << p.max_in << '\n'
                          << "max_out_degree: " << p.max_out << '\n';
            else
                std::cout << "max_degree: " << p.max_degree << '\n';
        } else if (dot->parsed()) {
            graph g = read_graph_file(in_path);
            std::ofstream out(out_path);
            if (!out) throw graph_error("cannot open " + out_path);
            out << export_dot(g);
        } else if (table1->parsed()) {
            return cmd_table1(quick_col);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
