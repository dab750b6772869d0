#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace pe {

/// Capped distance vector of a vertex (or set) on a pivot set S, in S's order.
/// Entries are 0..radius, with radius + 1 meaning "farther than radius".
struct DistanceProfile {
    std::uint8_t radius = 0;
    std::vector<std::uint8_t> values;

    std::size_t pivot_size() const noexcept { return values.size(); }
    std::uint8_t inf() const noexcept { return static_cast<std::uint8_t>(radius + 1); }
    bool is_inf(std::size_t i) const noexcept { return values[i] > radius; }

    friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;
};

/// Largest radius a profile can carry (entries are bytes, INF = r + 1).
inline constexpr unsigned kMaxProfileRadius = 254;

/// One capped BFS column: column[v] = min(dist(pivot, v), radius + 1).
std::vector<std::uint8_t> distance_column(const Graph& g, Vertex pivot, unsigned radius);

DistanceProfile profile_of_vertex(const Graph& g, const VertexSet& pivot, unsigned radius, Vertex v);
/// Pointwise minimum over a nonempty set U.
DistanceProfile profile_of_set(const Graph& g, const VertexSet& pivot, unsigned radius, const VertexSet& set);

/// Deduplicated distance profiles of every vertex on a pivot set.
///
/// Entries appear in order of their lowest realizing vertex, so the
/// representative of entry i is the smallest vertex with that profile and
/// entry 0 is the profile of vertex 0.
class ProfileTable {
public:
    struct Entry {
        DistanceProfile profile;
        Vertex representative;
        std::size_t count;
    };

    ProfileTable() = default;

    /// Builds from precomputed columns (columns[i] belongs to pivot[i]).
    static ProfileTable from_columns(VertexSet pivot, unsigned radius,
                                     std::span<const std::vector<std::uint8_t>> columns, std::size_t n);

    const VertexSet& pivot() const noexcept { return pivot_; }
    unsigned radius() const noexcept { return radius_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t entry_of(Vertex v) const { return vertex_to_entry_[v]; }
    /// Position of a pivot vertex within pivot(); throws if absent.
    std::size_t pivot_index(Vertex v) const;
    /// Capped distance between the vertices of entry `e` and pivot position `p`.
    std::uint8_t value(std::size_t e, std::size_t p) const { return entries_[e].profile.values[p]; }
    /// All vertices realizing entry `e`, ascending.
    std::vector<Vertex> members(std::size_t e) const;

private:
    VertexSet pivot_;
    unsigned radius_ = 0;
    std::vector<Entry> entries_;
    std::vector<std::uint32_t> vertex_to_entry_;
};

/// One capped BFS per pivot vertex followed by hashing of the packed rows.
ProfileTable build_profile_table(const Graph& g, const VertexSet& pivot, unsigned radius);

struct ProfileComplexity {
    std::size_t max_profiles = 0;
    bool exact = false;       ///< every pivot set of the requested size was enumerated
    std::size_t sets_examined = 0;
    VertexSet best_pivot;
};

/// Maximum number of realized radius-r profiles over pivot sets of size <= m.
/// The count is monotone under adding pivots, so only sets of size
/// min(m, n) are examined: all of them when there are at most `budget`,
/// otherwise `trials` uniformly sampled ones (a lower bound).
ProfileComplexity measure_profile_complexity(const Graph& g, unsigned radius, std::size_t m, std::size_t trials,
                                             std::uint64_t seed, std::size_t budget = 100'000);

}  // namespace pe
