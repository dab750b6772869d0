#include "core/profiles.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "core/errors.hpp"
#include "core/generators.hpp"

namespace pe {

namespace {

void check_radius(unsigned radius)
{
    if (radius > kMaxProfileRadius)
        throw InputError("profile radius must be at most " + std::to_string(kMaxProfileRadius));
}

void check_pivot(const Graph& g, const VertexSet& pivot)
{
    for (std::size_t i = 0; i < pivot.size(); ++i) {
        if (!g.contains(pivot[i]))
            throw InputError("pivot vertex " + std::to_string(pivot[i]) + " out of range");
        if (i > 0 && pivot[i - 1] >= pivot[i])
            throw InputError("pivot set must be strictly increasing");
    }
}

// Binomial coefficient saturating at `limit + 1`.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t limit)
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

}  // namespace

std::vector<std::uint8_t> distance_column(const Graph& g, Vertex pivot, unsigned radius)
{
    check_radius(radius);
    auto dist = bfs_capped(g, pivot, radius);
    return std::vector<std::uint8_t>(dist.begin(), dist.end());
}

DistanceProfile profile_of_vertex(const Graph& g, const VertexSet& pivot, unsigned radius, Vertex v)
{
    check_radius(radius);
    check_pivot(g, pivot);
    if (!g.contains(v))
        throw InputError("vertex " + std::to_string(v) + " out of range");
    auto dist = bfs_capped(g, v, radius);
    DistanceProfile out{static_cast<std::uint8_t>(radius), {}};
    out.values.reserve(pivot.size());
    for (Vertex s : pivot)
        out.values.push_back(static_cast<std::uint8_t>(dist[s]));
    return out;
}

DistanceProfile profile_of_set(const Graph& g, const VertexSet& pivot, unsigned radius, const VertexSet& set)
{
    if (set.empty())
        throw InputError("profile of an empty set is undefined");
    check_radius(radius);
    check_pivot(g, pivot);
    auto dist = bfs_capped_multi(g, set, radius);
    DistanceProfile out{static_cast<std::uint8_t>(radius), {}};
    for (Vertex s : pivot)
        out.values.push_back(static_cast<std::uint8_t>(dist[s]));
    return out;
}

ProfileTable ProfileTable::from_columns(VertexSet pivot, unsigned radius,
                                        std::span<const std::vector<std::uint8_t>> columns, std::size_t n)
{
    check_radius(radius);
    if (columns.size() != pivot.size())
        throw InputError("one distance column per pivot vertex is required");
    ProfileTable table;
    table.pivot_ = std::move(pivot);
    table.radius_ = radius;
    table.vertex_to_entry_.resize(n);

    const std::size_t width = table.pivot_.size();
    std::unordered_map<std::string, std::uint32_t> index;
    std::string key(width, '\0');
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < width; ++i)
            key[i] = static_cast<char>(columns[i][v]);
        auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(table.entries_.size()));
        if (inserted) {
            DistanceProfile profile{static_cast<std::uint8_t>(radius),
                                    std::vector<std::uint8_t>(key.begin(), key.end())};
            table.entries_.push_back(Entry{std::move(profile), v, 0});
        }
        table.entries_[it->second].count += 1;
        table.vertex_to_entry_[v] = it->second;
    }
    return table;
}

std::size_t ProfileTable::pivot_index(Vertex v) const
{
    auto it = std::lower_bound(pivot_.begin(), pivot_.end(), v);
    if (it == pivot_.end() || *it != v)
        throw InputError("vertex " + std::to_string(v) + " is not a pivot");
    return static_cast<std::size_t>(it - pivot_.begin());
}

std::vector<Vertex> ProfileTable::members(std::size_t e) const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_to_entry_.size(); ++v)
        if (vertex_to_entry_[v] == e)
            out.push_back(v);
    return out;
}

ProfileTable build_profile_table(const Graph& g, const VertexSet& pivot, unsigned radius)
{
    check_radius(radius);
    check_pivot(g, pivot);
    std::vector<std::vector<std::uint8_t>> columns;
    columns.reserve(pivot.size());
    for (Vertex s : pivot)
        columns.push_back(distance_column(g, s, radius));
    return ProfileTable::from_columns(pivot, radius, columns, g.vertex_count());
}

ProfileComplexity measure_profile_complexity(const Graph& g, unsigned radius, std::size_t m, std::size_t trials,
                                             std::uint64_t seed, std::size_t budget)
{
    check_radius(radius);
    const std::size_t n = g.vertex_count();
    if (m > n)
        throw InputError("pivot size m exceeds the vertex count");
    ProfileComplexity result;
    if (n == 0)
        return result;

    // Columns for all vertices are reused across pivot sets.
    std::vector<std::vector<std::uint8_t>> all_columns(n);
    for (Vertex v = 0; v < n; ++v)
        all_columns[v] = distance_column(g, v, radius);

    auto examine = [&](const VertexSet& pivot) {
        std::vector<std::vector<std::uint8_t>> columns;
        columns.reserve(pivot.size());
        for (Vertex s : pivot)
            columns.push_back(all_columns[s]);
        auto table = ProfileTable::from_columns(pivot, radius, columns, n);
        ++result.sets_examined;
        if (result.sets_examined == 1 || table.size() > result.max_profiles) {
            result.max_profiles = table.size();
            result.best_pivot = pivot;
        }
    };

    const std::size_t total = binomial_capped(n, m, budget);
    if (total <= budget) {
        result.exact = true;
        VertexSet pivot(m);
        for (std::size_t i = 0; i < m; ++i)
            pivot[i] = static_cast<Vertex>(i);
        while (true) {
            examine(pivot);
            std::size_t i = m;
            while (i > 0 && pivot[i - 1] == n - m + i - 1)
                --i;
            if (i == 0)
                break;
            ++pivot[i - 1];
            for (std::size_t j = i; j < m; ++j)
                pivot[j] = pivot[j - 1] + 1;
        }
    } else {
        Rng rng(seed);
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v)
            all[v] = v;
        for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
            // Partial Fisher-Yates for a uniform m-subset.
            for (std::size_t i = 0; i < m; ++i)
                std::swap(all[i], all[i + rng.below(n - i)]);
            examine(make_vertex_set(std::vector<Vertex>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m))));
        }
    }
    return result;
}

}  // namespace pe
