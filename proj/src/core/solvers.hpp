#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/bipartite.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/oracles.hpp"

namespace pe {

/// Per-solve record of the progressive exploration.
struct RunTranscript {
    /// Completed full rounds (a candidate was found and then defeated).
    std::size_t rounds = 0;
    /// Candidate found in each round; the final, undefeated one comes last.
    std::vector<Tuple> candidates;
    /// Witnesses added in each full round (one for the semi-ladder and core
    /// algorithms, up to p for the ladder algorithm).
    std::vector<std::vector<Tuple>> witnesses;
    OracleCounters oracle_calls;
    std::string outcome;
    double seconds = 0.0;
};

enum class DecisionKind { Solution, NoSolution, Exists, NotExists };

const char* to_string(DecisionKind kind);

struct Decision {
    DecisionKind kind = DecisionKind::NoSolution;
    /// Set for Solution.
    Tuple solution;
    /// For NoSolution / NotExists: witnesses no candidate agrees with simultaneously.
    std::vector<Tuple> witnesses;
    RunTranscript transcript;
};

/// A progressive algorithm exceeded its round limit; carries the partial transcript.
class RoundLimitError : public ResourceError {
public:
    RoundLimitError(const std::string& what, RunTranscript transcript)
        : ResourceError(what), transcript_(std::move(transcript)) {}

    const RunTranscript& transcript() const noexcept { return transcript_; }

private:
    RunTranscript transcript_;
};

inline constexpr std::size_t kDefaultMaxRounds = 1'000'000;

/// Candidate oracle, then weak witness oracle, until one of them gives up.
Decision semi_ladder_solve(const ImplicitBipartite& ib, std::size_t max_rounds = kDefaultMaxRounds);

/// Candidate oracle on the gathered witnesses, then the strong witness oracle
/// on all candidates so far. Decides existence only (Exists / NotExists).
/// Correct when phi(G) has the weak p-Helly property; requires p >= 1.
Decision ladder_solve(const ImplicitBipartite& ib, std::size_t p, std::size_t max_rounds = kDefaultMaxRounds);

/// The ladder algorithm performs fewer full rounds than this when phi(G) has
/// the given ladder index (so l = ladder_index + 1 bounds it strictly). Uses
/// max(p, 2) colours since the closed form needs at least two.
BigInt ladder_round_bound(std::size_t p, std::size_t ladder_index);

struct CoreResult {
    /// The coverage core B: any candidate agreeing with all of B is a solution.
    std::vector<Tuple> core;
    RunTranscript transcript;
};

/// Repeated semi-ladder extension; each round adds one witness to B.
CoreResult coverage_core(const ImplicitBipartite& ib, std::size_t max_rounds = kDefaultMaxRounds,
                         ExtensionBudget budget = {});

/// Smallest set of at most k vertices distance-r dominating g (lexicographic
/// first among the smallest). An empty graph yields the empty set.
/// Throws ResourceError when more than `budget` subsets would be examined.
std::optional<VertexSet> brute_force_dominating(const Graph& g, std::size_t k, unsigned r,
                                                std::size_t budget = 50'000'000);

/// Lexicographically first set of k vertices pairwise more than r apart.
std::optional<VertexSet> brute_force_independent(const Graph& g, std::size_t k, unsigned r,
                                                 std::size_t budget = 50'000'000);

/// Direct checks by multi-source BFS.
bool is_distance_dominating(const Graph& g, const VertexSet& set, unsigned r);
bool is_distance_independent(const Graph& g, const VertexSet& set, unsigned r);

}  // namespace pe
