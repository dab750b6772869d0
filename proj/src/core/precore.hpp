#pragma once

#include <cstddef>
#include <span>

#include "core/graph.hpp"
#include "core/solvers.hpp"
#include "core/splitter.hpp"

namespace pe {

enum class DichotomyKind {
    Independent,  ///< |set| = k + 1 and pairwise more than 2r apart
    Dominated,    ///< |set| <= k and every vertex of X is within 2r of it
};

struct DichotomyResult {
    DichotomyKind kind = DichotomyKind::Dominated;
    VertexSet set;
};

/// Greedy scan of X in ascending order, keeping v when it is more than 2r
/// from everything kept so far. Distances are taken in g restricted to
/// `alive` (all of g when empty); X must consist of live vertices.
DichotomyResult greedy_dichotomy(const Graph& g, const VertexSet& x, unsigned r, std::size_t k,
                                 std::span<const char> alive = {});

struct PrecoreOptions {
    SplitterStrategy strategy = SplitterStrategy::BallMaxDegree;
    /// Overrides `strategy` when set.
    SplitterRule rule;
    std::size_t depth_budget = 20;
    /// Recursive calls allowed before giving up with ResourceError.
    std::size_t call_budget = 2'000'000;
};

struct PrecoreStats {
    std::size_t calls = 0;
    std::size_t memo_hits = 0;
    std::size_t max_depth = 0;
};

struct PrecoreResult {
    VertexSet q;
    PrecoreStats stats;
};

/// Distance-r dependence pre-core for (g, A, k): for every D with |D| <= k
/// dominating A at distance r and every a in A, some q in Q has
/// dist(a, q) + dist(q, D) <= r. Recursion on splitter-game arenas; throws
/// SplitterBudgetError when the depth budget runs out.
PrecoreResult compute_precore(const Graph& g, const VertexSet& a, std::size_t k, unsigned r,
                              const PrecoreOptions& options = {});

struct IndependentSetOptions {
    PrecoreOptions precore;
    /// Partial profile multisets explored before giving up with ResourceError.
    std::size_t multiset_budget = 50'000'000;
};

struct IndependentSetResult {
    DecisionKind kind = DecisionKind::NoSolution;
    /// k vertices pairwise more than r apart (Solution only).
    VertexSet solution;
    /// The pre-core for k - 1; certifies NoSolution.
    VertexSet core;
    std::size_t exchanges = 0;
    PrecoreStats precore_stats;
    double seconds = 0.0;
};

/// Distance-r independent set of size k via a pre-core for k - 1, a search
/// over profile multisets on it, and the exchange argument that turns a
/// free set into an independent one. Requires k >= 1.
IndependentSetResult independent_set_solve(const Graph& g, std::size_t k, unsigned r,
                                           const IndependentSetOptions& options = {});

}  // namespace pe
