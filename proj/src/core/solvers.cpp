#include "core/solvers.hpp"

#include <algorithm>
#include <chrono>

namespace pe {

namespace {

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Number of k-subsets of n, saturating just above `limit`.
std::size_t subsets_capped(std::size_t n, std::size_t k, std::size_t limit)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 value = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        value = value * (n - k + i) / i;
        if (value > limit)
            return limit + 1;
    }
    return static_cast<std::size_t>(value);
}

template <typename Accept>
std::optional<VertexSet> first_subset(std::size_t n, std::size_t k, Accept&& accept)
{
    if (k > n)
        return std::nullopt;
    VertexSet pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = static_cast<Vertex>(i);
    while (true) {
        if (accept(pick))
            return pick;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return std::nullopt;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

const char* to_string(DecisionKind kind)
{
    switch (kind) {
    case DecisionKind::Solution:
        return "SOLUTION";
    case DecisionKind::NoSolution:
        return "NO_SOLUTION";
    case DecisionKind::Exists:
        return "EXISTS";
    case DecisionKind::NotExists:
        return "NOT_EXISTS";
    }
    return "?";
}

Decision semi_ladder_solve(const ImplicitBipartite& ib, std::size_t max_rounds)
{
    if (max_rounds < 1)
        throw InputError("max_rounds must be at least 1");
    Stopwatch clock;
    Decision decision;
    RunTranscript& t = decision.transcript;
    std::vector<Tuple> b_set;
    while (true) {
        auto candidate = candidate_oracle(ib, b_set, &t.oracle_calls);
        if (!candidate) {
            decision.kind = DecisionKind::NoSolution;
            decision.witnesses = b_set;
            break;
        }
        t.candidates.push_back(*candidate);
        auto witness = weak_witness_oracle(ib, *candidate, &t.oracle_calls);
        if (!witness) {
            decision.kind = DecisionKind::Solution;
            decision.solution = *candidate;
            break;
        }
        b_set.push_back(*witness);
        t.witnesses.push_back({*witness});
        ++t.rounds;
        if (t.rounds >= max_rounds) {
            t.outcome = "ROUND_LIMIT";
            t.seconds = clock.seconds();
            throw RoundLimitError("semi-ladder algorithm hit its round limit", t);
        }
    }
    t.outcome = to_string(decision.kind);
    t.seconds = clock.seconds();
    return decision;
}

Decision ladder_solve(const ImplicitBipartite& ib, std::size_t p, std::size_t max_rounds)
{
    if (p < 1)
        throw InputError("ladder algorithm needs p >= 1");
    if (max_rounds < 1)
        throw InputError("max_rounds must be at least 1");
    Stopwatch clock;
    Decision decision;
    RunTranscript& t = decision.transcript;
    std::vector<Tuple> a_set;
    std::vector<Tuple> b_set;
    while (true) {
        auto candidate = candidate_oracle(ib, b_set, &t.oracle_calls);
        if (!candidate) {
            decision.kind = DecisionKind::NotExists;
            decision.witnesses = b_set;
            break;
        }
        a_set.push_back(*candidate);
        t.candidates.push_back(*candidate);
        auto hitting = strong_witness_oracle(ib, a_set, p, &t.oracle_calls);
        if (!hitting) {
            decision.kind = DecisionKind::Exists;
            break;
        }
        b_set.insert(b_set.end(), hitting->begin(), hitting->end());
        t.witnesses.push_back(*hitting);
        ++t.rounds;
        if (t.rounds >= max_rounds) {
            t.outcome = "ROUND_LIMIT";
            t.seconds = clock.seconds();
            throw RoundLimitError("ladder algorithm hit its round limit", t);
        }
    }
    t.outcome = to_string(decision.kind);
    t.seconds = clock.seconds();
    return decision;
}

BigInt ladder_round_bound(std::size_t p, std::size_t ladder_index)
{
    const auto colours = static_cast<unsigned>(std::max<std::size_t>(p, 2));
    return ramsey_bound(colours, static_cast<unsigned>(2 * (ladder_index + 1)));
}

CoreResult coverage_core(const ImplicitBipartite& ib, std::size_t max_rounds, ExtensionBudget budget)
{
    if (max_rounds < 1)
        throw InputError("max_rounds must be at least 1");
    Stopwatch clock;
    CoreResult result;
    RunTranscript& t = result.transcript;
    while (true) {
        if (t.rounds >= max_rounds) {
            t.outcome = "ROUND_LIMIT";
            t.seconds = clock.seconds();
            throw RoundLimitError("coverage core algorithm hit its round limit", t);
        }
        ++t.rounds;
        auto pair = semiladder_extension_oracle(ib, result.core, &t.oracle_calls, budget);
        if (!pair)
            break;
        t.candidates.push_back(pair->first);
        t.witnesses.push_back({pair->second});
        result.core.push_back(pair->second);
    }
    t.outcome = "CORE";
    t.seconds = clock.seconds();
    return result;
}

bool is_distance_dominating(const Graph& g, const VertexSet& set, unsigned r)
{
    if (g.vertex_count() == 0)
        return true;
    if (set.empty())
        return false;
    auto dist = bfs_capped_multi(g, set, r);
    return std::all_of(dist.begin(), dist.end(), [&](Distance d) { return d <= r; });
}

bool is_distance_independent(const Graph& g, const VertexSet& set, unsigned r)
{
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (!g.contains(set[i]))
            return false;
        auto dist = bfs_capped(g, set[i], r);
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[j] == set[i] || dist[set[j]] <= r)
                return false;
    }
    return true;
}

std::optional<VertexSet> brute_force_dominating(const Graph& g, std::size_t k, unsigned r, std::size_t budget)
{
    const std::size_t n = g.vertex_count();
    if (n == 0)
        return VertexSet{};
    std::size_t total = 0;
    for (std::size_t s = 1; s <= std::min(k, n); ++s) {
        total += subsets_capped(n, s, budget);
        if (total > budget)
            throw ResourceError("brute-force domination exceeds its subset budget");
    }
    // Balls as bitsets turn each subset test into a few word operations.
    std::vector<Bitset> balls(n, Bitset(n));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : ball(g, v, r))
            balls[v].set(u);
    for (std::size_t s = 1; s <= std::min(k, n); ++s) {
        auto found = first_subset(n, s, [&](const VertexSet& pick) {
            Bitset covered(n);
            for (Vertex v : pick)
                covered |= balls[v];
            return covered.all();
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

std::optional<VertexSet> brute_force_independent(const Graph& g, std::size_t k, unsigned r, std::size_t budget)
{
    const std::size_t n = g.vertex_count();
    if (subsets_capped(n, k, budget) > budget)
        throw ResourceError("brute-force independence exceeds its subset budget");
    std::vector<Bitset> balls(n, Bitset(n));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : ball(g, v, r))
            balls[v].set(u);
    return first_subset(n, k, [&](const VertexSet& pick) {
        for (std::size_t i = 0; i < pick.size(); ++i)
            for (std::size_t j = i + 1; j < pick.size(); ++j)
                if (balls[pick[i]].test(pick[j]))
                    return false;
        return true;
    });
}

}  // namespace pe
