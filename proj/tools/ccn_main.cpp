// Command line front end: exact zeta on graph files, family generators,
// formula-versus-oracle verification sweeps, and balanced-partition values.
//
// Exit codes: 0 success, 1 input or domain error, 2 discrepancy found under
// verify --strict, 3 size guard exceeded (rerun with --force).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccn/completion.hpp"
#include "ccn/families.hpp"
#include "ccn/graph_io.hpp"
#include "ccn/partition.hpp"
#include "ccn/report.hpp"

namespace {

struct GlobalOpts {
    std::string format = "text";
    bool one_based = false;
    bool force = false;
    double timeout = -1.0;
};

ccn::SolverLimits make_limits(const GlobalOpts& g) {
    ccn::SolverLimits lim;
    lim.force = g.force;
    lim.timeout_seconds = g.timeout;
    return lim;
}

std::string classes_text(const ccn::Coloring& col) {
    std::ostringstream out;
    bool first_class = true;
    for (const auto& cls : col.classes()) {
        if (!first_class) out << ' ';
        first_class = false;
        out << '{';
        for (size_t i = 0; i < cls.size(); ++i) {
            if (i) out << ' ';
            out << cls[i];
        }
        out << '}';
    }
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

int run_zeta(const GlobalOpts& g, const std::string& input,
             const std::string& witness_out) {
    ccn::Graph graph = ccn::read_graph_file(input, g.one_based, &std::cerr);
    ccn::CompletionResult res = ccn::solve_zeta(graph, make_limits(g));
    if (g.format == "json") {
        std::cout << ccn::to_json(res) << '\n';
    } else {
        std::cout << "zeta: " << res.zeta << '\n'
                  << "exact: " << (res.exact ? "true" : "false") << '\n'
                  << "classes: " << classes_text(res.witness) << '\n'
                  << "completion-edges: " << res.completion_edges.size() << '\n'
                  << "explored: " << res.explored << '\n';
    }
    if (!witness_out.empty()) {
        ccn::Graph extra(graph.order(), res.completion_edges);
        write_file(witness_out, ccn::write_graph(extra, ccn::GraphFormat::edge_list,
                                                 g.one_based));
    }
    return 0;
}

std::vector<int> parse_part_list(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad part list '" + text + "'");
        }
        if (used != piece.size())
            throw std::invalid_argument("bad part list '" + text + "'");
        parts.push_back(value);
    }
    if (parts.empty())
        throw std::invalid_argument("bad part list '" + text + "'");
    return parts;
}

int run_family(const GlobalOpts& g, const std::string& name,
               const std::string& param, int depth, bool want_zeta,
               bool want_formula, bool emit) {
    auto family = ccn::family_from_name(name);
    if (!family) throw std::invalid_argument("unknown family '" + name + "'");

    ccn::Graph graph(1);
    int n = 0;
    if (*family == ccn::Family::complete_multipartite) {
        auto parts = parse_part_list(param);
        graph = ccn::gen_complete_multipartite(parts);
        n = graph.order();
    } else {
        size_t used = 0;
        try {
            n = std::stoi(param, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad parameter '" + param + "'");
        }
        if (used != param.size())
            throw std::invalid_argument("bad parameter '" + param + "'");
        if (*family == ccn::Family::nested_join)
            graph = ccn::gen_nested_join(ccn::gen_cycle(n), depth);
        else
            graph = ccn::make_instance(*family, n).graph;
    }

    std::optional<ccn::FormulaValue> formula;
    if (want_formula) {
        formula = ccn::formula_zeta(*family, n);
        if (!formula)
            throw std::invalid_argument("family '" + name +
                                        "' has no closed form");
    }
    std::optional<ccn::CompletionResult> res;
    if (want_zeta) res = ccn::solve_zeta(graph, make_limits(g));

    bool outside = !ccn::formula_in_stated_domain(*family, n);
    if (g.format == "json") {
        nlohmann::ordered_json doc;
        doc["family"] = ccn::family_name(*family);
        doc["n"] = n;
        doc["order"] = graph.order();
        doc["size"] = graph.size();
        if (formula) {
            doc["formula"] = ccn::to_string(formula->value);
            doc["formula_integral"] = formula->integral;
            if (outside) doc["outside_stated_domain"] = true;
        }
        if (res) {
            doc["zeta"] = res->zeta;
            doc["exact"] = res->exact;
            doc["classes"] = res->witness.classes();
        }
        if (emit)
            doc["graph"] = nlohmann::ordered_json::parse(
                ccn::write_graph(graph, ccn::GraphFormat::json, g.one_based));
        std::cout << doc.dump() << '\n';
        return 0;
    }

    // In text mode --emit keeps the output a valid edge-list document by
    // turning the summary into comment lines.
    const char* prefix = emit ? "# " : "";
    std::cout << prefix << "family: " << ccn::family_name(*family)
              << " n=" << n << " order=" << graph.order()
              << " size=" << graph.size() << '\n';
    if (formula) {
        std::cout << prefix << "formula: " << ccn::to_string(formula->value);
        if (!formula->integral) std::cout << " (non-integral)";
        if (outside) std::cout << " (outside stated domain)";
        std::cout << '\n';
    }
    if (res) {
        std::cout << prefix << "zeta: " << res->zeta
                  << (res->exact ? "" : " (not exact, timed out)") << '\n';
        std::cout << prefix << "classes: " << classes_text(res->witness)
                  << '\n';
    }
    if (emit)
        std::cout << ccn::write_graph(graph, ccn::GraphFormat::edge_list,
                                      g.one_based);
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& name, int lo, int hi,
               const std::string& out_path, bool strict) {
    auto family = ccn::family_from_name(name);
    if (!family) throw std::invalid_argument("unknown family '" + name + "'");
    auto rows = ccn::verify_range(*family, lo, hi, make_limits(g));

    std::string rendered;
    if (g.format == "json") {
        rendered = ccn::report_to_json(rows) + "\n";
    } else {
        std::ostringstream buf;
        ccn::write_report_csv(buf, rows);
        rendered = buf.str();
    }
    if (out_path.empty())
        std::cout << rendered;
    else
        write_file(out_path, rendered);
    if (strict && ccn::any_discrepancy(rows)) return 2;
    return 0;
}

std::string partition_text(const ccn::PartitionSpec& p) {
    std::ostringstream out;
    out << '(';
    for (int i = 0; i < p.length(); ++i) {
        if (i) out << ',';
        out << p.parts()[i];
    }
    out << ')';
    return out.str();
}

int run_partition(const GlobalOpts& g, int n, int l, bool oracle) {
    ccn::PartitionSpec balanced = ccn::completion_partition(n, l);
    long long value = ccn::pairwise_product_sum(balanced);
    std::optional<ccn::MaxPartitionResult> check;
    if (oracle) check = ccn::max_partition_oracle(n, l);

    if (g.format == "json") {
        nlohmann::ordered_json doc;
        doc["n"] = n;
        doc["l"] = l;
        doc["partition"] = balanced.parts();
        doc["value"] = value;
        if (check) {
            nlohmann::ordered_json argmax = nlohmann::ordered_json::array();
            for (const auto& p : check->argmax) argmax.push_back(p.parts());
            doc["oracle"] = {{"max", check->value},
                             {"argmax", argmax},
                             {"agree", check->value == value}};
        }
        std::cout << doc.dump() << '\n';
        return 0;
    }
    std::cout << "completion partition: " << partition_text(balanced) << '\n'
              << "sum-product: " << value << '\n';
    if (check) {
        std::cout << "oracle max: " << check->value << '\n' << "oracle argmax:";
        for (const auto& p : check->argmax)
            std::cout << ' ' << partition_text(p);
        std::cout << '\n'
                  << "agreement: " << (check->value == value ? "true" : "false")
                  << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic completion number toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--one-based", g.one_based,
                 "graph files use 1-based vertex ids");
    app.add_flag("--force", g.force, "bypass the solver order guard");
    app.add_option("--timeout", g.timeout,
                   "solver deadline in seconds (best effort result)");

    auto* zeta_cmd =
        app.add_subcommand("zeta", "exact zeta of a graph read from a file");
    zeta_cmd->fallthrough();
    std::string input;
    std::string witness_out;
    zeta_cmd->add_option("input", input, "edge-list or json graph file")
        ->required();
    zeta_cmd->add_option("--witness-out", witness_out,
                         "write the completion edges here as an edge list");

    auto* family_cmd =
        app.add_subcommand("family", "generate a family instance");
    family_cmd->fallthrough();
    std::string family_arg;
    std::string param_arg;
    int depth = 1;
    bool want_zeta = false, want_formula = false, emit = false;
    family_cmd
        ->add_option("name", family_arg,
                     "cycle path sunlet wheel sun helm complete multipartite "
                     "nested-join")
        ->required();
    family_cmd
        ->add_option("param", param_arg,
                     "n, or a part list like 2,2,1 for multipartite")
        ->required();
    family_cmd->add_option("--depth", depth, "cones for nested-join");
    family_cmd->add_flag("--zeta", want_zeta, "run the exact solver");
    family_cmd->add_flag("--formula", want_formula, "evaluate the closed form");
    family_cmd->add_flag("--emit", emit, "print the graph itself");

    auto* verify_cmd = app.add_subcommand(
        "verify", "compare closed forms against the exact solver");
    verify_cmd->fallthrough();
    std::string verify_family;
    int lo = 0, hi = 0;
    std::string out_path;
    bool strict = false;
    verify_cmd->add_option("name", verify_family, "family to sweep")
        ->required();
    verify_cmd->add_option("lo", lo, "first n")->required();
    verify_cmd->add_option("hi", hi, "last n")->required();
    verify_cmd->add_option("--out", out_path, "write the report here");
    verify_cmd->add_flag("--strict", strict,
                         "exit 2 on any mismatch or non-integral row");

    auto* partition_cmd = app.add_subcommand(
        "partition", "balanced partition and its sum-product");
    partition_cmd->fallthrough();
    int part_n = 0, part_l = 0;
    bool oracle = false;
    partition_cmd->add_option("n", part_n, "total")->required();
    partition_cmd->add_option("l", part_l, "number of parts")->required();
    partition_cmd->add_flag("--oracle", oracle,
                            "exhaustive maximum and argmax set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (zeta_cmd->parsed()) return run_zeta(g, input, witness_out);
        if (family_cmd->parsed())
            return run_family(g, family_arg, param_arg, depth, want_zeta,
                              want_formula, emit);
        if (verify_cmd->parsed())
            return run_verify(g, verify_family, lo, hi, out_path, strict);
        if (partition_cmd->parsed())
            return run_partition(g, part_n, part_l, oracle);
    } catch (const ccn::GuardError& e) {
        std::cerr << "guard: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
