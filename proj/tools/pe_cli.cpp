// Command-line front end. Talks to the library only through pe.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pe.h"

namespace {

enum Exit { kSolved = 0, kNegative = 1, kUsage = 2, kResource = 3, kInternal = 4 };

struct GraphDeleter {
    void operator()(pe_graph* g) const { pe_graph_free(g); }
};
struct FormulaDeleter {
    void operator()(pe_formula* f) const { pe_formula_free(f); }
};
using GraphPtr = std::unique_ptr<pe_graph, GraphDeleter>;
using FormulaPtr = std::unique_ptr<pe_formula, FormulaDeleter>;

struct Failure {
    int code;
};

int exit_for(pe_status status)
{
    switch (status) {
    case PE_OK:
        return kSolved;
    case PE_ERR_INPUT:
    case PE_ERR_PARSE:
        return kUsage;
    case PE_ERR_RESOURCE:
    case PE_ERR_SPLITTER_BUDGET:
        return kResource;
    default:
        return kInternal;
    }
}

void check(pe_status status, const std::string& context)
{
    if (status == PE_OK)
        return;
    std::cerr << "error: " << context << ": " << pe_status_name(status) << ": " << pe_last_error() << '\n';
    throw Failure{exit_for(status)};
}

std::string read_file(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << '\n';
        throw Failure{kUsage};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write " << path << '\n';
        throw Failure{kUsage};
    }
}

GraphPtr load_graph(const std::string& path)
{
    pe_graph* g = nullptr;
    check(pe_graph_parse(read_file(path).c_str(), &g), path);
    return GraphPtr(g);
}

FormulaPtr load_formula(const std::string& path)
{
    pe_formula* f = nullptr;
    check(pe_formula_parse(read_file(path).c_str(), &f), path);
    return FormulaPtr(f);
}

// Takes ownership of a library string.
std::string take(char* s)
{
    std::string out = s ? s : "";
    pe_string_free(s);
    return out;
}

// Prints a result object; negative decisions map to exit code 1.
int emit(char* raw)
{
    const std::string text = take(raw);
    std::cout << text << '\n';
    const auto result = nlohmann::json::parse(text);
    const std::string decision = result.value("decision", "");
    return decision == "NO_SOLUTION" || decision == "NOT_EXISTS" ? kNegative : kSolved;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Progressive exploration solvers for distance-r domination and independence"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pe_version()));

    std::string graph_path, formula_path, bipartite_path, config_path, out_path, scaling_path;
    std::string family, params = "{}", strategy = "ball_max_degree";
    unsigned k = 1, r = 1, m = 1, depth_budget = 20, p = 1;
    std::uint64_t seed = 0;
    bool as_json = false, no_timing = false;

    auto* domset = app.add_subcommand("solve-domset", "distance-r dominating set of size <= k (semi-ladder algorithm)");
    domset->add_option("--graph", graph_path, "edge-list or DIMACS file ('-' for stdin)")->required();
    domset->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    domset->add_option("--r", r)->required();

    auto* domset_formula = app.add_subcommand("solve-domset-formula", "domination-type problem for a distance formula");
    domset_formula->add_option("--graph", graph_path)->required();
    domset_formula->add_option("--formula", formula_path, "JSON formula file")->required();

    auto* ladder = app.add_subcommand("solve-ladder", "existence via the ladder algorithm with parameter p");
    ladder->add_option("--graph", graph_path)->required();
    ladder->add_option("--formula", formula_path)->required();
    ladder->add_option("--p", p)->required()->check(CLI::PositiveNumber);

    auto* indep = app.add_subcommand("solve-indep", "distance-r independent set of size k (pre-core solver)");
    indep->add_option("--graph", graph_path)->required();
    indep->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    indep->add_option("--r", r)->required();
    indep->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"ball_max_degree", "connector_echo", "bfs_center"}));
    indep->add_option("--depth-budget", depth_budget);

    auto* core = app.add_subcommand("coverage-core", "coverage core of the formula's search space");
    core->add_option("--graph", graph_path)->required();
    core->add_option("--formula", formula_path)->required();

    auto* indices = app.add_subcommand("measure-indices", "ladder, semi-ladder and co-matching indices");
    indices->add_option("--bipartite", bipartite_path, "\"L R m\" file")->required();

    auto* profiles = app.add_subcommand("measure-profiles", "maximum number of distance-r profiles on m pivots");
    profiles->add_option("--graph", graph_path)->required();
    profiles->add_option("--r", r)->required();
    profiles->add_option("--m", m)->required();
    profiles->add_option("--seed", seed);

    auto* generate = app.add_subcommand("generate", "write a generated graph as an edge list");
    generate->add_option("--family", family)->required();
    generate->add_option("--params", params, "JSON object, or @file");
    generate->add_option("--seed", seed);
    generate->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* bench = app.add_subcommand("bench", "benchmark suite; CSV records on stdout");
    bench->add_option("--config", config_path, "JSON config")->required();
    bench->add_option("--out", out_path, "records file (stdout when omitted)");
    bench->add_option("--scaling", scaling_path, "scaling table CSV file");
    bench->add_flag("--json", as_json, "emit JSON instead of CSV");
    bench->add_flag("--no-timing", no_timing, "omit timing columns (deterministic output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        char* result = nullptr;
        if (*domset) {
            auto g = load_graph(graph_path);
            check(pe_solve_domset(g.get(), k, r, &result), "solve-domset");
            return emit(result);
        }
        if (*domset_formula) {
            auto g = load_graph(graph_path);
            auto f = load_formula(formula_path);
            check(pe_solve_formula(g.get(), f.get(), &result), "solve-domset-formula");
            return emit(result);
        }
        if (*ladder) {
            auto g = load_graph(graph_path);
            auto f = load_formula(formula_path);
            check(pe_solve_ladder(g.get(), f.get(), p, &result), "solve-ladder");
            return emit(result);
        }
        if (*indep) {
            auto g = load_graph(graph_path);
            check(pe_solve_indep(g.get(), k, r, strategy.c_str(), depth_budget, &result), "solve-indep");
            return emit(result);
        }
        if (*core) {
            auto g = load_graph(graph_path);
            auto f = load_formula(formula_path);
            check(pe_coverage_core(g.get(), f.get(), &result), "coverage-core");
            return emit(result);
        }
        if (*indices) {
            check(pe_measure_indices(read_file(bipartite_path).c_str(), &result), bipartite_path);
            return emit(result);
        }
        if (*profiles) {
            auto g = load_graph(graph_path);
            check(pe_measure_profiles(g.get(), r, m, seed, &result), "measure-profiles");
            return emit(result);
        }
        if (*generate) {
            const std::string params_text = !params.empty() && params[0] == '@' ? read_file(params.substr(1)) : params;
            pe_graph* raw = nullptr;
            check(pe_graph_generate(family.c_str(), params_text.c_str(), seed, &raw), "generate");
            GraphPtr g(raw);
            check(pe_graph_to_text(g.get(), &result), "generate");
            write_file(out_path, take(result));
            return kSolved;
        }
        if (*bench) {
            const std::string config = read_file(config_path);
            char* csv = nullptr;
            char* scaling = nullptr;
            char* json = nullptr;
            check(pe_bench_run(config.c_str(), no_timing ? 0 : 1, as_json ? nullptr : &csv,
                               scaling_path.empty() ? nullptr : &scaling, as_json ? &json : nullptr),
                  "bench");
            const std::string body = as_json ? take(json) + "\n" : take(csv);
            const std::string scaling_text = take(scaling);
            write_file(out_path, body);
            if (!scaling_path.empty())
                write_file(scaling_path, scaling_text);
            return kSolved;
        }
    } catch (const Failure& f) {
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
