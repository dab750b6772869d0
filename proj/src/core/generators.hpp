#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core/graph.hpp"

namespace pe {

/// Platform-independent seeded RNG: raw mt19937_64 output, no std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    /// True with probability numerator / denominator.
    bool chance(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }

    template <typename T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_star(std::size_t leaves);
Graph make_grid(std::size_t rows, std::size_t cols);
Graph make_complete(std::size_t n);
/// Left part 0..a-1, right part a..a+b-1.
Graph make_complete_bipartite(std::size_t a, std::size_t b);
/// Random tree: vertex i > 0 attaches to a uniformly chosen earlier vertex
/// whose depth is below max_depth (depth of vertex 0 is 0).
Graph make_random_tree(std::size_t n, std::size_t max_depth, Rng& rng);
/// Random edges kept only while both endpoints have degree < max_degree.
Graph make_bounded_degree_random(std::size_t n, std::size_t max_degree, std::size_t attempts, Rng& rng);
/// Random graph (each pair considered once, in random order, with probability
/// numerator/denominator) that rejects every edge completing a K_{t,t}.
Graph make_ktt_free_random(std::size_t n, std::size_t t, std::uint64_t numerator, std::uint64_t denominator,
                           Rng& rng);
/// Random connected graph: random spanning tree plus extra random edges.
Graph make_random_connected(std::size_t n, std::size_t extra_edges, Rng& rng);

/// Would adding {u, v} to g complete a K_{t,t} containing that edge?
bool edge_completes_ktt(const Graph& g, Vertex u, Vertex v, std::size_t t);
/// Exhaustive K_{t,t} subgraph test (not necessarily induced); small graphs only.
bool contains_ktt_bruteforce(const Graph& g, std::size_t t);

/// Known families: grid, path, cycle, star, tree, bounded_degree_random,
/// complete_bipartite, ktt_free_random, power_of, half_square_of_planar_bipartite.
const std::vector<std::string>& generator_families();

/// Deterministic for a fixed seed. Instances with at most 14 vertices are
/// re-validated against the family predicate; a failure throws InvariantError.
Graph generate(std::string_view family, const nlohmann::json& params, std::uint64_t seed);

/// Family predicate used by generate(); exposed for tests.
bool satisfies_family(const Graph& g, std::string_view family, const nlohmann::json& params, std::uint64_t seed);

}  // namespace pe
