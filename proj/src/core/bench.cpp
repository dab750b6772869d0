#include "core/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "core/bipartite.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/precore.hpp"
#include "core/solvers.hpp"

namespace pe {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError((where.empty() ? "/" : where) + ": missing \"" + key + "\"");
    return obj.at(key);
}

std::uint64_t as_count(const json& value, const std::string& where)
{
    if (!value.is_number_integer() || value.get<long long>() < 0)
        throw ParseError(where + ": expected a non-negative integer");
    return value.get<std::uint64_t>();
}

bool as_flag(const json& obj, const char* key, bool fallback)
{
    if (!obj.contains(key))
        return fallback;
    if (!obj.at(key).is_boolean())
        throw ParseError(std::string("/") + key + ": expected a boolean");
    return obj.at(key).get<bool>();
}

std::vector<std::uint64_t> parse_seeds(const json& value, const std::string& where)
{
    if (!value.is_array())
        throw ParseError(where + ": expected an array");
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(as_count(value[i], where + "/" + std::to_string(i)));
    return out;
}

const char* problem_name(BenchProblem p)
{
    switch (p) {
    case BenchProblem::Domset:
        return "domset";
    case BenchProblem::Indep:
        return "indep";
    case BenchProblem::Formula:
        return "formula";
    }
    return "?";
}

struct Job {
    std::string instance;
    std::string family;
    const json* params;
    std::uint64_t seed;
    const BenchProblemSpec* problem;
};

std::string describe(const BenchProblemSpec& spec)
{
    switch (spec.problem) {
    case BenchProblem::Domset:
        return "delta(" + std::to_string(spec.k) + "," + std::to_string(spec.r) + ")";
    case BenchProblem::Indep:
        return "eta(" + std::to_string(spec.k) + "," + std::to_string(spec.r) + ")";
    case BenchProblem::Formula:
        return to_string(*spec.formula);
    }
    return "";
}

void copy_counters(BenchRecord& rec, const OracleCounters& c)
{
    rec.candidate_calls = c.candidate;
    rec.weak_witness_calls = c.weak_witness;
    rec.strong_witness_calls = c.strong_witness;
    rec.extension_calls = c.extension;
}

// Direct check of a formula solution against every witness tuple.
bool formula_solution_holds(const ImplicitBipartite& ib, const Tuple& a)
{
    const std::size_t n = ib.graph().vertex_count();
    const unsigned d = ib.formula().witness_arity();
    std::size_t total = 1;
    for (unsigned j = 0; j < d; ++j)
        total *= n;
    for (std::size_t index = 0; index < total; ++index)
        if (!ib.agrees(a, decode_tuple(index, d, n)))
            return false;
    return true;
}

void solve_semi_ladder(const BenchConfig& config, const Graph& g, const DistanceFormula& f, bool domination,
                       std::size_t k, unsigned r, BenchRecord& rec)
{
    ImplicitBipartite ib(g, f);
    Decision decision;
    double best = -1.0;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(config.repeats, 1); ++rep) {
        decision = semi_ladder_solve(ib);
        if (best < 0 || decision.transcript.seconds < best)
            best = decision.transcript.seconds;
    }
    rec.seconds = best;
    rec.decision = to_string(decision.kind);
    rec.rounds = decision.transcript.rounds;
    copy_counters(rec, decision.transcript.oracle_calls);

    const bool solved = decision.kind == DecisionKind::Solution;
    if (solved) {
        const bool ok = domination ? is_distance_dominating(g, make_vertex_set(decision.solution), r)
                                   : !weak_witness_oracle(ib, decision.solution).has_value();
        if (!ok)
            throw InvariantError("returned solution failed verification");
    }
    if (config.cross_validate && g.vertex_count() <= config.cross_validate_max_n) {
        if (domination) {
            rec.brute_force_agrees = brute_force_dominating(g, k, r).has_value() == solved;
        } else {
            const auto h = materialize(g, f);
            const bool exists = coverage_bruteforce(h).has_value();
            rec.brute_force_agrees = exists == solved && (!solved || formula_solution_holds(ib, decision.solution));
        }
    }
    if (config.bound_check) {
        const std::size_t n = g.vertex_count();
        double pairs = 1.0;
        for (unsigned i = 0; i < f.candidate_arity() + f.witness_arity(); ++i)
            pairs *= static_cast<double>(n);
        if (pairs <= static_cast<double>(config.bound_max_pairs)) {
            try {
                const auto h = materialize(g, f, config.bound_max_pairs);
                rec.bound = index_of(h, ObstructionKind::Semiladder).index;
                rec.bound_respected = rec.rounds <= *rec.bound;
            } catch (const ResourceError&) {
                // Index search too large; the bound stays unreported.
            }
        }
    }
}

void solve_indep(const BenchConfig& config, const Graph& g, std::size_t k, unsigned r, BenchRecord& rec)
{
    IndependentSetResult result;
    double best = -1.0;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(config.repeats, 1); ++rep) {
        result = independent_set_solve(g, k, r);
        if (best < 0 || result.seconds < best)
            best = result.seconds;
    }
    rec.seconds = best;
    rec.decision = to_string(result.kind);
    rec.rounds = result.exchanges;
    rec.precore_calls = result.precore_stats.calls;
    const bool solved = result.kind == DecisionKind::Solution;
    if (solved && !is_distance_independent(g, result.solution, r))
        throw InvariantError("returned solution failed verification");
    if (config.cross_validate && g.vertex_count() <= config.cross_validate_max_n)
        rec.brute_force_agrees = brute_force_independent(g, k, r).has_value() == solved;
}

BenchRecord run_job(const BenchConfig& config, const Job& job)
{
    BenchRecord rec;
    rec.instance = job.instance;
    rec.family = job.family;
    rec.seed = job.seed;
    rec.problem = problem_name(job.problem->problem);
    rec.k = job.problem->k;
    rec.r = job.problem->r;
    rec.formula = describe(*job.problem);
    try {
        const Graph g = generate(job.family, *job.params, job.seed);
        rec.n = g.vertex_count();
        rec.m = g.edge_count();
        const auto& spec = *job.problem;
        switch (spec.problem) {
        case BenchProblem::Domset:
            solve_semi_ladder(config, g, build_delta(spec.k, spec.r), true, spec.k, spec.r, rec);
            break;
        case BenchProblem::Formula:
            solve_semi_ladder(config, g, *spec.formula, false, 0, spec.formula->radius(), rec);
            break;
        case BenchProblem::Indep:
            solve_indep(config, g, spec.k, spec.r, rec);
            break;
        }
    } catch (const SplitterBudgetError& e) {
        rec.decision = "SPLITTER_BUDGET";
        rec.error = e.what();
    } catch (const ResourceError& e) {
        rec.decision = "RESOURCE";
        rec.error = e.what();
    } catch (const std::exception& e) {
        rec.decision = "ERROR";
        rec.error = e.what();
    }
    return rec;
}

std::string flag(const std::optional<bool>& value)
{
    return value ? (*value ? "true" : "false") : "";
}

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string seconds_text(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", s);
    return buf;
}

}  // namespace

BenchConfig parse_bench_config(std::string_view json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ParseError("/: expected an object");
    if (root.contains("schema") && root.at("schema") != kSchema)
        throw ParseError("/schema: unsupported schema");

    BenchConfig config;
    std::vector<std::uint64_t> default_seeds{0};
    if (root.contains("seeds"))
        default_seeds = parse_seeds(root.at("seeds"), "/seeds");
    if (root.contains("workers"))
        config.workers = std::max<std::size_t>(as_count(root.at("workers"), "/workers"), 1);
    if (root.contains("repeats"))
        config.repeats = std::max<std::size_t>(as_count(root.at("repeats"), "/repeats"), 1);
    if (root.contains("cross_validate_max_n"))
        config.cross_validate_max_n = as_count(root.at("cross_validate_max_n"), "/cross_validate_max_n");
    config.cross_validate = as_flag(root, "cross_validate", false);
    config.bound_check = as_flag(root, "bound_check", false);

    const json& instances = require(root, "instances", "");
    if (!instances.is_array())
        throw ParseError("/instances: expected an array");
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const std::string where = "/instances/" + std::to_string(i);
        const json& item = instances[i];
        const json& family = require(item, "family", where);
        if (!family.is_string())
            throw ParseError(where + "/family: expected a string");
        std::vector<json> param_list;
        const json params = item.value("params", json::object());
        if (params.is_array())
            param_list.assign(params.begin(), params.end());
        else
            param_list.push_back(params);
        const auto seeds = item.contains("seeds") ? parse_seeds(item.at("seeds"), where + "/seeds") : default_seeds;
        for (std::size_t p = 0; p < param_list.size(); ++p) {
            if (!param_list[p].is_object())
                throw ParseError(where + "/params: expected an object");
            config.instances.push_back({family.get<std::string>(), param_list[p], seeds});
        }
    }

    const json& problems = require(root, "problems", "");
    if (!problems.is_array())
        throw ParseError("/problems: expected an array");
    for (std::size_t i = 0; i < problems.size(); ++i) {
        const std::string where = "/problems/" + std::to_string(i);
        const json& item = problems[i];
        const json& name = require(item, "problem", where);
        BenchProblemSpec spec;
        if (name == "domset")
            spec.problem = BenchProblem::Domset;
        else if (name == "indep")
            spec.problem = BenchProblem::Indep;
        else if (name == "formula")
            spec.problem = BenchProblem::Formula;
        else
            throw ParseError(where + "/problem: unknown problem");
        if (spec.problem == BenchProblem::Formula) {
            try {
                spec.formula = parse_formula(require(item, "formula", where).dump());
            } catch (const ParseError& e) {
                throw ParseError(where + "/formula" + e.what());
            }
            spec.r = spec.formula->radius();
        } else {
            spec.k = as_count(require(item, "k", where), where + "/k");
            spec.r = static_cast<unsigned>(as_count(require(item, "r", where), where + "/r"));
            if (spec.k == 0)
                throw ParseError(where + "/k: must be at least 1");
        }
        config.problems.push_back(std::move(spec));
    }
    return config;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config)
{
    std::vector<Job> jobs;
    std::map<std::string, std::size_t> family_counter;
    for (const auto& inst : config.instances) {
        const std::size_t index = family_counter[inst.family]++;
        for (auto seed : inst.seeds)
            for (const auto& problem : config.problems)
                jobs.push_back({inst.family + "-" + std::to_string(index) + "-s" + std::to_string(seed), inst.family,
                                &inst.params, seed, &problem});
    }
    std::vector<BenchRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
            records[i] = run_job(config, jobs[i]);
    };
    const std::size_t threads = std::min(config.workers, std::max<std::size_t>(jobs.size(), 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return records;
}

std::string bench_to_csv(const std::vector<BenchRecord>& records, bool include_timing)
{
    std::ostringstream out;
    out << "instance,family,seed,n,m,problem,formula,k,r,decision,rounds,candidate_calls,weak_witness_calls,"
           "strong_witness_calls,extension_calls,precore_calls,";
    if (include_timing)
        out << "seconds,";
    out << "bound,bound_respected,brute_force_agrees,error\n";
    for (const auto& rec : records) {
        out << csv_field(rec.instance) << ',' << csv_field(rec.family) << ',' << rec.seed << ',' << rec.n << ','
            << rec.m << ',' << rec.problem << ',' << csv_field(rec.formula) << ',' << rec.k << ',' << rec.r << ','
            << rec.decision << ',' << rec.rounds << ',' << rec.candidate_calls << ',' << rec.weak_witness_calls
            << ',' << rec.strong_witness_calls << ',' << rec.extension_calls << ',' << rec.precore_calls << ',';
        if (include_timing)
            out << seconds_text(rec.seconds) << ',';
        out << (rec.bound ? std::to_string(*rec.bound) : "") << ',' << flag(rec.bound_respected) << ','
            << flag(rec.brute_force_agrees) << ',' << csv_field(rec.error) << '\n';
    }
    return out.str();
}

json bench_to_json(const std::vector<BenchRecord>& records, bool include_timing)
{
    json list = json::array();
    for (const auto& rec : records) {
        json item = {{"instance", rec.instance},
                     {"family", rec.family},
                     {"seed", rec.seed},
                     {"n", rec.n},
                     {"m", rec.m},
                     {"problem", rec.problem},
                     {"formula", rec.formula},
                     {"k", rec.k},
                     {"r", rec.r},
                     {"decision", rec.decision},
                     {"rounds", rec.rounds},
                     {"oracle_calls",
                      {{"candidate", rec.candidate_calls},
                       {"weak_witness", rec.weak_witness_calls},
                       {"strong_witness", rec.strong_witness_calls},
                       {"extension", rec.extension_calls}}},
                     {"precore_calls", rec.precore_calls}};
        if (include_timing)
            item["seconds"] = rec.seconds;
        if (rec.bound)
            item["bound"] = *rec.bound;
        if (rec.bound_respected)
            item["bound_respected"] = *rec.bound_respected;
        if (rec.brute_force_agrees)
            item["brute_force_agrees"] = *rec.brute_force_agrees;
        if (!rec.error.empty())
            item["error"] = rec.error;
        list.push_back(std::move(item));
    }
    return {{"schema", kSchema}, {"records", std::move(list)}};
}

std::vector<ScalingRow> scaling_table(const std::vector<BenchRecord>& records)
{
    using Group = std::tuple<std::string, std::string, std::size_t, unsigned>;
    struct Sum {
        std::size_t n = 0;
        double seconds = 0.0;
        std::size_t count = 0;
    };
    std::map<Group, std::map<std::size_t, Sum>> groups;
    for (const auto& rec : records) {
        if (!rec.error.empty())
            continue;
        auto& cell = groups[{rec.family, rec.problem, rec.k, rec.r}][rec.n + rec.m];
        cell.n = rec.n;
        cell.seconds += rec.seconds;
        ++cell.count;
    }
    std::vector<ScalingRow> rows;
    for (const auto& [group, sizes] : groups) {
        std::optional<ScalingRow> prev;
        for (const auto& [size, sum] : sizes) {
            ScalingRow row;
            std::tie(row.family, row.problem, row.k, row.r) = group;
            row.n = sum.n;
            row.size = size;
            row.seconds = sum.seconds / static_cast<double>(sum.count);
            if (prev) {
                row.size_ratio = static_cast<double>(size) / static_cast<double>(prev->size);
                row.time_ratio = prev->seconds > 0 ? row.seconds / prev->seconds : 0.0;
                row.within_linear = row.time_ratio <= 1.5 * row.size_ratio;
            }
            rows.push_back(row);
            prev = row;
        }
    }
    return rows;
}

std::string scaling_to_csv(const std::vector<ScalingRow>& rows)
{
    std::ostringstream out;
    out << "family,problem,k,r,n,size,seconds,size_ratio,time_ratio,within_linear\n";
    for (const auto& row : rows)
        out << csv_field(row.family) << ',' << row.problem << ',' << row.k << ',' << row.r << ',' << row.n << ','
            << row.size << ',' << seconds_text(row.seconds) << ',' << seconds_text(row.size_ratio) << ','
            << seconds_text(row.time_ratio) << ',' << (row.within_linear ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace pe
