#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core/formula.hpp"
#include "core/graph.hpp"

namespace pe {

inline constexpr const char* kSchema = "pe/1";

enum class BenchProblem {
    Domset,   ///< semi-ladder algorithm on delta^k_r
    Indep,    ///< pre-core based independent set solver
    Formula,  ///< semi-ladder algorithm on a caller-supplied formula
};

struct BenchProblemSpec {
    BenchProblem problem = BenchProblem::Domset;
    std::size_t k = 1;
    unsigned r = 1;
    std::optional<DistanceFormula> formula;
};

struct BenchInstanceSpec {
    std::string family;
    nlohmann::json params;
    std::vector<std::uint64_t> seeds;
};

/// JSON config:
///   {"instances": [{"family": "grid", "params": {..} or [{..}, ..], "seeds": [..]}],
///    "problems": [{"problem": "domset"|"indep"|"formula", "k": 3, "r": 1, "formula": {..}}],
///    "seeds": [..], "workers": 1, "repeats": 1, "cross_validate": false, "bound_check": false}
/// Instance seeds default to the top-level seeds, which default to [0].
struct BenchConfig {
    std::vector<BenchInstanceSpec> instances;
    std::vector<BenchProblemSpec> problems;
    std::size_t workers = 1;
    std::size_t repeats = 1;
    bool cross_validate = false;
    bool bound_check = false;
    /// Brute-force cross-validation is skipped above this many vertices.
    std::size_t cross_validate_max_n = 12;
    /// Bounds are computed only when materialization stays within this many pairs.
    std::size_t bound_max_pairs = 100'000;
};

/// Throws ParseError with a JSON-pointer location on schema violations.
BenchConfig parse_bench_config(std::string_view json_text);

struct BenchRecord {
    std::string instance;
    std::string family;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string problem;
    std::string formula;
    std::size_t k = 0;
    unsigned r = 0;
    std::string decision;
    std::size_t rounds = 0;
    std::size_t candidate_calls = 0;
    std::size_t weak_witness_calls = 0;
    std::size_t strong_witness_calls = 0;
    std::size_t extension_calls = 0;
    std::size_t precore_calls = 0;
    /// Minimum over repeats.
    double seconds = 0.0;
    /// Semi-ladder index of the materialized graph, when computed.
    std::optional<std::size_t> bound;
    std::optional<bool> bound_respected;
    std::optional<bool> brute_force_agrees;
    std::string error;
};

/// Runs every (instance, seed, problem) combination in config order. Per
/// instance errors are recorded in the record and the suite continues.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Header plus one line per record. Timing columns are omitted when
/// `include_timing` is false, which makes the output deterministic.
std::string bench_to_csv(const std::vector<BenchRecord>& records, bool include_timing = true);
nlohmann::json bench_to_json(const std::vector<BenchRecord>& records, bool include_timing = true);

struct ScalingRow {
    std::string family;
    std::string problem;
    std::size_t k = 0;
    unsigned r = 0;
    std::size_t n = 0;
    std::size_t size = 0;  ///< n + m
    double seconds = 0.0;
    /// Relative to the previous (smaller) row of the same group; 0 for the first.
    double size_ratio = 0.0;
    double time_ratio = 0.0;
    /// time_ratio <= 1.5 * size_ratio (always true for the first row).
    bool within_linear = true;
};

/// Time against n + m per (family, problem, k, r), averaged over seeds and
/// sorted by size. Failed records are skipped.
std::vector<ScalingRow> scaling_table(const std::vector<BenchRecord>& records);
std::string scaling_to_csv(const std::vector<ScalingRow>& rows);

}  // namespace pe
