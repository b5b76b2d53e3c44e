// opl: exact open-packing toolkit.
//
// Subcommands: solve, recognize, generate, reduce, verify.
// Exit codes: 0 success, 1 domain/precondition error, 2 usage or parse
// error, 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "opl/graph6.hpp"
#include "opl/reductions.hpp"
#include "opl/solvers.hpp"
#include "opl/tree_ops.hpp"
#include "opl/verify.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

opl::Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "edge-list") return opl::parse_graph(text, opl::GraphFormat::edge_list);
    // graph6 input: first non-empty line
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty()) return opl::parse_graph(line, opl::GraphFormat::graph6);
    }
    throw opl::ParseError("empty input", 0);
}

json set_to_json(const opl::VertexSet& s) { return json(s); }

int cmd_solve(const std::string& invariant, const std::string& path,
              const std::string& format, bool enumerate) {
    opl::Graph g = load_graph(path, format);
    opl::SolverResult res;
    if (invariant == "rho-o") res = opl::max_open_packing(g, enumerate);
    else if (invariant == "rho") res = opl::max_two_packing(g, enumerate);
    else if (invariant == "alpha") res = opl::max_independent_set(g, enumerate);
    else if (invariant == "alpha-prime") res = opl::max_matching(g);
    else res = opl::total_domination_number(g);

    json out{{"schema", 1}, {"invariant", invariant}, {"value", res.value},
             {"unique", res.unique}};
    if (invariant == "alpha-prime") {
        json edges = json::array();
        for (auto [u, v] : res.edge_witness) edges.push_back({u, v});
        out["witness"] = edges;
    } else {
        out["witness"] = set_to_json(res.witness);
    }
    if (res.all_witnesses) {
        json all = json::array();
        for (const auto& w : *res.all_witnesses) all.push_back(set_to_json(w));
        out["witnesses"] = all;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_recognize(const std::string& path, const std::string& format,
                  const std::string& trace_path) {
    opl::Graph g = load_graph(path, format);
    if (!opl::is_tree(g)) {
        std::cerr << "recognize: input is not a tree\n";
        return 1;
    }
    auto trace = opl::recognize_tree(g);
    json out{{"schema", 1}, {"member", trace.has_value()}};
    if (trace) {
        json steps = json::array();
        std::vector<opl::OperationStep> resolved;
        opl::replay_trace(*trace, &resolved);
        for (const auto& step : resolved) {
            json s{{"op", static_cast<int>(step.kind)},
                   {"anchor", step.kind == opl::OpKind::Op4
                                  ? json::array({step.anchor_u, step.anchor_v})
                                  : json(step.anchor_u)},
                   {"new", step.new_vertices}};
            steps.push_back(s);
        }
        out["base"] = "P" + std::to_string(trace->base);
        out["trace"] = steps;
        if (!trace_path.empty()) {
            std::ofstream tf(trace_path);
            tf << opl::write_trace(*trace);
        }
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_generate(int max_n, const std::string& trace_path) {
    auto members = opl::generate_class_O(max_n);
    std::ofstream tf;
    if (!trace_path.empty()) tf.open(trace_path);
    for (const auto& member : members) {
        std::cout << opl::write_graph(member.tree, opl::GraphFormat::graph6) << "\n";
        if (tf.is_open()) {
            tf << "# " << opl::write_graph(member.tree, opl::GraphFormat::graph6)
               << "\n" << opl::write_trace(member.trace);
        }
    }
    return 0;
}

int cmd_reduce(const std::string& kind, const std::string& path,
               const std::string& format) {
    opl::Graph g = load_graph(path, format);
    opl::ReductionOutput out;
    if (kind == "subdivision") out = opl::subdivision(g);
    else if (kind == "clique-ext") out = opl::clique_extension(g);
    else if (kind == "gadget-plus") out = opl::gadget_plus(g);
    else if (kind == "product-gadget") out = opl::product_gadget(g);
    else if (kind == "square") out = opl::square(g);
    else if (kind.rfind("join:", 0) == 0) {
        int r = std::stoi(kind.substr(5));
        out.graph = opl::join_empty(g, r);
        for (int v = 0; v < g.n(); ++v)
            out.vertex_roles[v] = "orig:" + std::to_string(v);
        for (int k = 0; k < r; ++k)
            out.vertex_roles[g.n() + k] = "join:" + std::to_string(k);
    } else {
        throw CLI::ValidationError("unknown reduction kind: " + kind);
    }
    std::cout << opl::write_graph(out.graph, opl::GraphFormat::graph6) << "\n";
    json roles{{"schema", 1}, {"vertex_map", json::object()}};
    for (const auto& [v, role] : out.vertex_roles)
        roles["vertex_map"][std::to_string(v)] = role;
    std::cout << roles.dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const opl::VerifyOptions& opt) {
    std::vector<opl::VerificationReport> reports;
    if (suite == "all") {
        reports = opl::run_all(opt);
    } else {
        if (!opl::is_registered_check(suite)) {
            std::cerr << "unknown suite: " << suite << "\n";
            return 2;
        }
        reports.push_back(opl::run_check(suite, opt));
    }
    bool ok = true;
    for (const auto& report : reports) {
        std::cout << opl::report_to_json(report) << "\n";
        ok = ok && report.passed();
    }
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers and constructions for open packings"};
    app.require_subcommand(1);

    std::string input, format = "graph6", invariant, trace_path, kind, suite = "all";
    bool enumerate = false;
    int max_n = 6;
    opl::VerifyOptions vopt;
    if (const char* jobs_env = std::getenv("OPL_JOBS")) vopt.jobs = std::atoi(jobs_env);
    if (vopt.jobs < 1) vopt.jobs = 1;
    std::string corpus_path;

    auto* solve = app.add_subcommand("solve", "compute an exact invariant");
    solve->add_option("invariant", invariant, "rho-o|rho|alpha|alpha-prime|gamma-t")
        ->required()
        ->check(CLI::IsMember({"rho-o", "rho", "alpha", "alpha-prime", "gamma-t"}));
    solve->add_option("input", input, "graph file ('-' or omit for stdin)");
    solve->add_option("--format", format, "graph6|edge-list")
        ->check(CLI::IsMember({"graph6", "edge-list"}));
    solve->add_flag("--enumerate", enumerate, "list every maximum set");

    auto* recognize = app.add_subcommand("recognize", "tree class membership + trace");
    recognize->add_option("input", input, "tree file ('-' or omit for stdin)");
    recognize->add_option("--format", format, "graph6|edge-list")
        ->check(CLI::IsMember({"graph6", "edge-list"}));
    recognize->add_option("--trace-file", trace_path, "write trace sidecar here");

    auto* generate = app.add_subcommand("generate", "emit all class members up to max-n");
    generate->add_option("--max-n", max_n, "maximum tree order")->required();
    generate->add_option("--traces", trace_path, "write trace sidecar file");

    auto* reduce = app.add_subcommand("reduce", "apply a graph construction");
    reduce
        ->add_option("kind", kind,
                     "subdivision|clique-ext|gadget-plus|product-gadget|square|join:r")
        ->required();
    reduce->add_option("input", input, "graph file ('-' or omit for stdin)");
    reduce->add_option("--format", format, "graph6|edge-list")
        ->check(CLI::IsMember({"graph6", "edge-list"}));

    auto* verify = app.add_subcommand("verify", "run registered theorem checks");
    verify->add_option("--suite", suite, "check id or 'all'");
    verify->add_option("--max-tree-n", vopt.max_tree_n, "tree corpus cap");
    verify->add_option("--max-graph-n", vopt.max_graph_n, "graph corpus cap");
    verify->add_option("--corpus", corpus_path, "graph6 corpus file");
    verify->add_option("--jobs", vopt.jobs, "parallel check workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(invariant, input, format, enumerate);
        if (recognize->parsed()) return cmd_recognize(input, format, trace_path);
        if (generate->parsed()) return cmd_generate(max_n, trace_path);
        if (reduce->parsed()) return cmd_reduce(kind, input, format);
        if (verify->parsed()) {
            if (!corpus_path.empty())
                vopt.graph_corpus = opl::parse_graph6_stream(read_input(corpus_path));
            return cmd_verify(suite, vopt);
        }
    } catch (const opl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
