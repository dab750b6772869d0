#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "core/formula.hpp"
#include "core/graph.hpp"

namespace pe {

/// Assignment of vertices to candidate (length c) or witness (length d) variables.
using Tuple = std::vector<Vertex>;

/// phi(G) seen only through oracle calls. Holds a reference to the graph,
/// which must outlive it.
class ImplicitBipartite {
public:
    ImplicitBipartite(const Graph& graph, DistanceFormula formula);

    const Graph& graph() const noexcept { return *graph_; }
    const DistanceFormula& formula() const noexcept { return formula_; }

    /// Direct evaluation of phi(a; b) by BFS, for verification.
    bool agrees(const Tuple& a, const Tuple& b) const;

private:
    const Graph* graph_;
    DistanceFormula formula_;
};

struct OracleCounters {
    std::size_t candidate = 0;
    std::size_t weak_witness = 0;
    std::size_t strong_witness = 0;
    std::size_t extension = 0;
    /// Profile-tuple prefixes visited across all calls.
    std::size_t profile_nodes = 0;
};

/// A candidate agreeing with every witness of B, or nullopt. Profiles are
/// taken on the vertices of B; the lexicographically first profile tuple wins.
std::optional<Tuple> candidate_oracle(const ImplicitBipartite& ib, const std::vector<Tuple>& witnesses,
                                      OracleCounters* counters = nullptr);

/// A witness disagreeing with `candidate`, or nullopt when it is a solution.
std::optional<Tuple> weak_witness_oracle(const ImplicitBipartite& ib, const Tuple& candidate,
                                         OracleCounters* counters = nullptr);

/// At most p witnesses such that every candidate of A disagrees with one of
/// them, or nullopt when no such set exists. Requires A nonempty and p >= 1.
std::optional<std::vector<Tuple>> strong_witness_oracle(const ImplicitBipartite& ib,
                                                        const std::vector<Tuple>& candidates, std::size_t p,
                                                        OracleCounters* counters = nullptr);

struct ExtensionBudget {
    unsigned max_witness_arity = 2;
    std::size_t max_witness_tuples = 1'000'000;
};

/// A candidate agreeing with all of B together with a witness outside B that
/// it disagrees with, or nullopt. Witness tuples are scanned in lexicographic
/// order; throws ResourceError when n^d exceeds the budget.
std::optional<std::pair<Tuple, Tuple>> semiladder_extension_oracle(const ImplicitBipartite& ib,
                                                                   const std::vector<Tuple>& witnesses,
                                                                   OracleCounters* counters = nullptr,
                                                                   ExtensionBudget budget = {});

}  // namespace pe
