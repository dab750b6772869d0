#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's BFS or profile code; distances come from Floyd-Warshall.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "core/generators.hpp"
#include "core/graph.hpp"

namespace ref {

inline constexpr unsigned kFar = std::numeric_limits<unsigned>::max() / 4;

struct Dist {
    std::size_t n = 0;
    std::vector<unsigned> d;
    unsigned operator()(std::size_t u, std::size_t v) const { return d[u * n + v]; }
};

inline Dist floyd(const pe::Graph& g)
{
    Dist out;
    out.n = g.vertex_count();
    out.d.assign(out.n * out.n, kFar);
    for (std::size_t v = 0; v < out.n; ++v)
        out.d[v * out.n + v] = 0;
    for (auto [u, v] : g.edges()) {
        out.d[u * out.n + v] = 1;
        out.d[v * out.n + u] = 1;
    }
    for (std::size_t k = 0; k < out.n; ++k)
        for (std::size_t i = 0; i < out.n; ++i)
            for (std::size_t j = 0; j < out.n; ++j)
                out.d[i * out.n + j] = std::min(out.d[i * out.n + j], out.d[i * out.n + k] + out.d[k * out.n + j]);
    return out;
}

/// Erdos-Renyi style graph with edge probability num/den.
inline pe::Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, pe::Rng& rng)
{
    std::vector<pe::Edge> edges;
    for (pe::Vertex u = 0; u < n; ++u)
        for (pe::Vertex v = u + 1; v < n; ++v)
            if (rng.chance(num, den))
                edges.emplace_back(u, v);
    return pe::Graph(n, edges);
}

inline bool dominates(const Dist& d, const std::vector<pe::Vertex>& set, unsigned r)
{
    for (std::size_t v = 0; v < d.n; ++v) {
        bool hit = false;
        for (auto s : set)
            hit = hit || d(s, v) <= r;
        if (!hit)
            return false;
    }
    return true;
}

inline bool independent(const Dist& d, const std::vector<pe::Vertex>& set, unsigned r)
{
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || d(set[i], set[j]) <= r)
                return false;
    return true;
}

/// Calls fn on every k-subset of {0..n-1} in lexicographic order until it returns true.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn)
{
    if (k > n)
        return false;
    std::vector<pe::Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = static_cast<pe::Vertex>(i);
    while (true) {
        if (fn(pick))
            return true;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return false;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

/// Some set of at most k vertices distance-r dominating the graph.
inline bool has_dominating_set(const Dist& d, std::size_t k, unsigned r)
{
    if (d.n == 0)
        return true;
    for (std::size_t s = 1; s <= k && s <= d.n; ++s)
        if (for_each_subset(d.n, s, [&](const auto& set) { return dominates(d, set, r); }))
            return true;
    return false;
}

inline bool has_independent_set(const Dist& d, std::size_t k, unsigned r)
{
    return for_each_subset(d.n, k, [&](const auto& set) { return independent(d, set, r); });
}

}  // namespace ref

namespace ref {

/// Q captures (D, a) for every D of size 1..k dominating A and every a in A,
/// where capture means d(a, q) + d(q, x) <= r for some q in Q and x in D.
inline bool precore_captures(const Dist& d, const std::vector<pe::Vertex>& a, std::size_t k, unsigned r,
                             const std::vector<pe::Vertex>& q)
{
    bool ok = true;
    for (std::size_t s = 1; s <= k && s <= d.n && ok; ++s)
        for_each_subset(d.n, s, [&](const std::vector<pe::Vertex>& set) {
            for (auto v : a) {
                bool near = false;
                for (auto x : set)
                    near = near || d(v, x) <= r;
                if (!near)
                    return false;
            }
            for (auto v : a) {
                bool captured = false;
                for (auto y : q)
                    for (auto x : set)
                        captured = captured || d(v, y) + d(y, x) <= r;
                if (!captured) {
                    ok = false;
                    return true;
                }
            }
            return false;
        });
    return ok;
}

}  // namespace ref
