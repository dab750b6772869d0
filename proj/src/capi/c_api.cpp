#include "pe.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "core/bench.hpp"
#include "core/bipartite.hpp"
#include "core/errors.hpp"
#include "core/formula.hpp"
#include "core/generators.hpp"
#include "core/precore.hpp"
#include "core/profiles.hpp"
#include "core/solvers.hpp"

struct pe_graph {
    pe::Graph graph;
    std::vector<std::string> labels;
};

struct pe_formula {
    pe::DistanceFormula formula;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

pe_status fail(pe_status status, const std::string& message)
{
    last_error = message;
    return status;
}

template <typename Fn>
pe_status guarded(Fn&& fn)
{
    try {
        fn();
        last_error.clear();
        return PE_OK;
    } catch (const pe::ParseError& e) {
        return fail(PE_ERR_PARSE, e.what());
    } catch (const pe::SplitterBudgetError& e) {
        return fail(PE_ERR_SPLITTER_BUDGET, e.what());
    } catch (const pe::RoundLimitError& e) {
        return fail(PE_ERR_RESOURCE,
                    std::string(e.what()) + " after " + std::to_string(e.transcript().rounds) + " rounds");
    } catch (const pe::ResourceError& e) {
        return fail(PE_ERR_RESOURCE, e.what());
    } catch (const pe::InputError& e) {
        return fail(PE_ERR_INPUT, e.what());
    } catch (const pe::InvariantError& e) {
        return fail(PE_ERR_INVARIANT, e.what());
    } catch (const json::parse_error& e) {
        return fail(PE_ERR_PARSE, std::string("invalid JSON: ") + e.what());
    } catch (const json::exception& e) {
        return fail(PE_ERR_INPUT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PE_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(PE_ERR_INTERNAL, e.what());
    }
}

char* duplicate(const std::string& text)
{
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void require(const void* ptr, const char* what)
{
    if (!ptr)
        throw pe::InputError(std::string(what) + " must not be NULL");
}

json tuples_json(const std::vector<pe::Tuple>& tuples)
{
    json out = json::array();
    for (const auto& t : tuples)
        out.push_back(t);
    return out;
}

json transcript_json(const pe::RunTranscript& t)
{
    json witnesses = json::array();
    for (const auto& round : t.witnesses)
        witnesses.push_back(tuples_json(round));
    return {{"rounds", t.rounds},
            {"candidates", tuples_json(t.candidates)},
            {"witnesses", std::move(witnesses)},
            {"oracle_calls",
             {{"candidate", t.oracle_calls.candidate},
              {"weak_witness", t.oracle_calls.weak_witness},
              {"strong_witness", t.oracle_calls.strong_witness},
              {"extension", t.oracle_calls.extension},
              {"profile_nodes", t.oracle_calls.profile_nodes}}},
            {"outcome", t.outcome},
            {"seconds", t.seconds}};
}

json header(const char* command, const pe_graph* g)
{
    return {{"schema", pe::kSchema},
            {"command", command},
            {"n", g->graph.vertex_count()},
            {"m", g->graph.edge_count()}};
}

// Labels of the given vertices when the input used non-default names.
void add_labels(json& out, const char* key, const pe_graph* g, const std::vector<pe::Vertex>& vertices)
{
    bool plain = true;
    for (std::size_t v = 0; v < g->labels.size() && plain; ++v)
        plain = g->labels[v] == std::to_string(v);
    if (plain)
        return;
    json labels = json::array();
    for (auto v : vertices)
        labels.push_back(g->labels[v]);
    out[key] = std::move(labels);
}

json decision_json(const char* command, const pe_graph* g, const pe::DistanceFormula& f, const pe::Decision& d)
{
    json out = header(command, g);
    out["formula"] = pe::to_string(f);
    out["decision"] = pe::to_string(d.kind);
    if (d.kind == pe::DecisionKind::Solution) {
        out["solution"] = d.solution;
        add_labels(out, "solution_labels", g, d.solution);
    }
    if (d.kind == pe::DecisionKind::NoSolution || d.kind == pe::DecisionKind::NotExists)
        out["witnesses"] = tuples_json(d.witnesses);
    out["rounds"] = d.transcript.rounds;
    out["transcript"] = transcript_json(d.transcript);
    return out;
}

json obstruction_json(const pe::IndexResult& result)
{
    return {{"a", result.witness.a_seq}, {"b", result.witness.b_seq}, {"states", result.states}};
}

}  // namespace

extern "C" {

const char* pe_last_error(void) { return last_error.c_str(); }

const char* pe_version(void) { return "1.0.0"; }

const char* pe_status_name(pe_status status)
{
    switch (status) {
    case PE_OK:
        return "ok";
    case PE_ERR_INPUT:
        return "input_error";
    case PE_ERR_PARSE:
        return "parse_error";
    case PE_ERR_RESOURCE:
        return "resource_error";
    case PE_ERR_SPLITTER_BUDGET:
        return "splitter_budget";
    case PE_ERR_INVARIANT:
        return "invariant_violation";
    case PE_ERR_INTERNAL:
        return "internal_error";
    }
    return "unknown";
}

void pe_string_free(char* s) { std::free(s); }

pe_status pe_graph_parse(const char* text, pe_graph** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        auto parsed = pe::parse_graph(text);
        *out = new pe_graph{std::move(parsed.graph), std::move(parsed.labels)};
    });
}

pe_status pe_graph_generate(const char* family, const char* params_json, uint64_t seed, pe_graph** out)
{
    return guarded([&] {
        require(family, "family");
        require(out, "out");
        const json params = params_json && *params_json ? json::parse(params_json) : json::object();
        auto g = pe::generate(family, params, seed);
        std::vector<std::string> labels(g.vertex_count());
        for (std::size_t v = 0; v < labels.size(); ++v)
            labels[v] = std::to_string(v);
        *out = new pe_graph{std::move(g), std::move(labels)};
    });
}

void pe_graph_free(pe_graph* g) { delete g; }

size_t pe_graph_vertex_count(const pe_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t pe_graph_edge_count(const pe_graph* g) { return g ? g->graph.edge_count() : 0; }

pe_status pe_graph_to_text(const pe_graph* g, char** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = duplicate(pe::to_edge_list(g->graph));
    });
}

pe_status pe_formula_parse(const char* text, pe_formula** out)
{
    return guarded([&] {
        require(text, "json");
        require(out, "out");
        *out = new pe_formula{pe::parse_formula(text)};
    });
}

pe_status pe_formula_delta(unsigned k, unsigned r, pe_formula** out)
{
    return guarded([&] {
        require(out, "out");
        *out = new pe_formula{pe::build_delta(k, r)};
    });
}

pe_status pe_formula_eta(unsigned k, unsigned r, pe_formula** out)
{
    return guarded([&] {
        require(out, "out");
        *out = new pe_formula{pe::build_eta(k, r)};
    });
}

void pe_formula_free(pe_formula* f) { delete f; }

pe_status pe_formula_to_json(const pe_formula* f, char** out)
{
    return guarded([&] {
        require(f, "formula");
        require(out, "out");
        *out = duplicate(pe::serialize(f->formula));
    });
}

pe_status pe_solve_domset(const pe_graph* g, unsigned k, unsigned r, char** result_json)
{
    return guarded([&] {
        require(g, "graph");
        require(result_json, "result_json");
        const auto f = pe::build_delta(k, r);
        const auto d = pe::semi_ladder_solve(pe::ImplicitBipartite(g->graph, f));
        json out = decision_json("solve-domset", g, f, d);
        out["k"] = k;
        out["r"] = r;
        if (d.kind == pe::DecisionKind::Solution) {
            if (!pe::is_distance_dominating(g->graph, pe::make_vertex_set(d.solution), r))
                throw pe::InvariantError("solution failed the direct domination check");
            out["verified"] = true;
        }
        *result_json = duplicate(out.dump());
    });
}

pe_status pe_solve_formula(const pe_graph* g, const pe_formula* f, char** result_json)
{
    return guarded([&] {
        require(g, "graph");
        require(f, "formula");
        require(result_json, "result_json");
        pe::ImplicitBipartite ib(g->graph, f->formula);
        const auto d = pe::semi_ladder_solve(ib);
        json out = decision_json("solve-domset-formula", g, f->formula, d);
        if (d.kind == pe::DecisionKind::Solution) {
            if (pe::weak_witness_oracle(ib, d.solution))
                throw pe::InvariantError("solution is defeated by a witness");
            out["verified"] = true;
        }
        *result_json = duplicate(out.dump());
    });
}

pe_status pe_solve_ladder(const pe_graph* g, const pe_formula* f, unsigned p, char** result_json)
{
    return guarded([&] {
        require(g, "graph");
        require(f, "formula");
        require(result_json, "result_json");
        const auto d = pe::ladder_solve(pe::ImplicitBipartite(g->graph, f->formula), p);
        json out = decision_json("solve-ladder", g, f->formula, d);
        out["p"] = p;
        *result_json = duplicate(out.dump());
    });
}

pe_status pe_solve_indep(const pe_graph* g, unsigned k, unsigned r, const char* strategy, unsigned depth_budget,
                         char** result_json)
{
    return guarded([&] {
        require(g, "graph");
        require(result_json, "result_json");
        pe::IndependentSetOptions options;
        if (strategy && *strategy)
            options.precore.strategy = pe::parse_splitter_strategy(strategy);
        options.precore.depth_budget = depth_budget;
        const auto result = pe::independent_set_solve(g->graph, k, r, options);
        json out = header("solve-indep", g);
        out["k"] = k;
        out["r"] = r;
        out["strategy"] = pe::to_string(options.precore.strategy);
        out["depth_budget"] = depth_budget;
        out["decision"] = pe::to_string(result.kind);
        if (result.kind == pe::DecisionKind::Solution) {
            if (!pe::is_distance_independent(g->graph, result.solution, r))
                throw pe::InvariantError("solution failed the direct independence check");
            out["solution"] = result.solution;
            add_labels(out, "solution_labels", g, result.solution);
            out["verified"] = true;
        }
        out["core"] = result.core;
        out["exchanges"] = result.exchanges;
        out["precore"] = {{"calls", result.precore_stats.calls},
                          {"memo_hits", result.precore_stats.memo_hits},
                          {"max_depth", result.precore_stats.max_depth}};
        out["seconds"] = result.seconds;
        *result_json = duplicate(out.dump());
    });
}

pe_status pe_coverage_core(const pe_graph* g, const pe_formula* f, char** result_json)
{
    return guarded([&] {
        require(g, "graph");
        require(f, "formula");
        require(result_json, "result_json");
        const auto result = pe::coverage_core(pe::ImplicitBipartite(g->graph, f->formula));
        json out = header("coverage-core", g);
        out["formula"] = pe::to_string(f->formula);
        out["core"] = tuples_json(result.core);
        out["rounds"] = result.transcript.rounds;
        out["transcript"] = transcript_json(result.transcript);
        *result_json = duplicate(out.dump());
    });
}

pe_status pe_measure_indices(const char* bipartite_text, char** result_json)
{
    return guarded([&] {
        require(bipartite_text, "bipartite_text");
        require(result_json, "result_json");
        const auto h = pe::BipartiteGraph::parse(bipartite_text);
        const auto ladder = pe::index_of(h, pe::ObstructionKind::Ladder);
        const auto semi = pe::index_of(h, pe::ObstructionKind::Semiladder);
        const auto comatching = pe::index_of(h, pe::ObstructionKind::Comatching);
        json out = {{"schema", pe::kSchema},
                    {"command", "measure-indices"},
                    {"left", h.left_size()},
                    {"right", h.right_size()},
                    {"edges", h.edge_count()},
                    {"ladder", ladder.index},
                    {"semiladder", semi.index},
                    {"comatching", comatching.index},
                    {"obstructions",
                     {{"ladder", obstruction_json(ladder)},
                      {"semiladder", obstruction_json(semi)},
                      {"comatching", obstruction_json(comatching)}}}};
        if (auto cover = pe::coverage_bruteforce(h))
            out["coverage"] = *cover;
        else
            out["coverage"] = nullptr;
        try {
            out["weak_helly_p"] = pe::min_weak_helly(h);
        } catch (const pe::ResourceError&) {
            out["weak_helly_p"] = nullptr;
        }
        *result_json = duplicate(out.dump());
    });
}

pe_status pe_measure_profiles(const pe_graph* g, unsigned r, unsigned m, uint64_t seed, char** result_json)
{
    return guarded([&] {
        require(g, "graph");
        require(result_json, "result_json");
        if (m > g->graph.vertex_count())
            throw pe::InputError("m exceeds the number of vertices");
        const auto c = pe::measure_profile_complexity(g->graph, r, m, 1000, seed);
        json out = header("measure-profiles", g);
        out["r"] = r;
        out["m"] = m;
        out["max_profiles"] = c.max_profiles;
        out["exact"] = c.exact;
        out["sets_examined"] = c.sets_examined;
        out["best_pivot"] = c.best_pivot;
        *result_json = duplicate(out.dump());
    });
}

pe_status pe_bench_run(const char* config_json, int include_timing, char** records_csv, char** scaling_csv,
                       char** json_out)
{
    return guarded([&] {
        require(config_json, "config_json");
        const auto config = pe::parse_bench_config(config_json);
        const auto records = pe::run_bench(config);
        const bool timing = include_timing != 0;
        const auto scaling = pe::scaling_table(records);
        std::string csv = records_csv ? pe::bench_to_csv(records, timing) : std::string();
        std::string scaling_text = scaling_csv ? pe::scaling_to_csv(scaling) : std::string();
        std::string json_text;
        if (json_out) {
            json out = pe::bench_to_json(records, timing);
            if (timing) {
                json rows = json::array();
                for (const auto& row : scaling)
                    rows.push_back({{"family", row.family},
                                    {"problem", row.problem},
                                    {"k", row.k},
                                    {"r", row.r},
                                    {"n", row.n},
                                    {"size", row.size},
                                    {"seconds", row.seconds},
                                    {"size_ratio", row.size_ratio},
                                    {"time_ratio", row.time_ratio},
                                    {"within_linear", row.within_linear}});
                out["scaling"] = std::move(rows);
            }
            json_text = out.dump();
        }
        // Allocate last so a failure above leaks nothing.
        if (records_csv)
            *records_csv = duplicate(csv);
        if (scaling_csv)
            *scaling_csv = duplicate(scaling_text);
        if (json_out)
            *json_out = duplicate(json_text);
    });
}

}  // extern "C"
