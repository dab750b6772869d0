#include "core/precore.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <string>

#include "core/bipartite.hpp"
#include "core/errors.hpp"
#include "core/profiles.hpp"

namespace pe {

DichotomyResult greedy_dichotomy(const Graph& g, const VertexSet& x, unsigned r, std::size_t k,
                                 std::span<const char> alive)
{
    std::vector<char> covered(g.vertex_count(), 0);
    DichotomyResult result;
    for (Vertex v : x) {
        if (!g.contains(v) || (!alive.empty() && !alive[v]))
            throw InputError("greedy dichotomy: vertex " + std::to_string(v) + " is not available");
        if (covered[v])
            continue;
        result.set.push_back(v);
        if (result.set.size() == k + 1) {
            result.kind = DichotomyKind::Independent;
            return result;
        }
        for (Vertex u : ball(g, v, 2 * r, alive))
            covered[u] = 1;
    }
    result.kind = DichotomyKind::Dominated;
    return result;
}

namespace {

VertexSet map_to(const std::vector<Vertex>& to_parent, const VertexSet& local)
{
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local)
        out.push_back(to_parent[v]);
    return out;
}

// Position of each parent id inside a sorted list of parent ids.
VertexSet map_from(const VertexSet& sorted_parent_ids, const VertexSet& parent_set)
{
    VertexSet out;
    out.reserve(parent_set.size());
    for (Vertex v : parent_set) {
        auto it = std::lower_bound(sorted_parent_ids.begin(), sorted_parent_ids.end(), v);
        out.push_back(static_cast<Vertex>(it - sorted_parent_ids.begin()));
    }
    return out;
}

class PrecoreSearch {
public:
    PrecoreSearch(std::size_t k, unsigned r, const PrecoreOptions& options)
        : k_(k), r_(r), options_(options),
          rule_(options.rule ? options.rule : make_splitter_rule(options.strategy))
    {
    }

    // Arena ids map to original ids through `to_orig` (increasing).
    VertexSet run(const Graph& arena, const std::vector<Vertex>& to_orig, const VertexSet& s, const VertexSet& a,
                  std::size_t depth)
    {
        if (++stats_.calls > options_.call_budget)
            throw ResourceError("pre-core recursion exceeded its call budget");
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (s.size() == arena.vertex_count())
            return to_orig;
        if (a.empty() || k_ == 0)
            return map_to(to_orig, s);
        if (depth >= options_.depth_budget)
            throw SplitterBudgetError("splitter strategy did not clear the arena within " +
                                      std::to_string(options_.depth_budget) + " rounds");

        std::vector<Vertex> key = to_orig;
        key.push_back(kSeparator);
        for (Vertex v : s)
            key.push_back(to_orig[v]);
        key.push_back(kSeparator);
        for (Vertex v : a)
            key.push_back(to_orig[v]);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats_.memo_hits;
            return it->second;
        }
        VertexSet q = expand(arena, to_orig, s, a, depth);
        memo_.emplace(std::move(key), q);
        return q;
    }

    const PrecoreStats& stats() const noexcept { return stats_; }

private:
    static constexpr Vertex kSeparator = ~Vertex{0};

    VertexSet expand(const Graph& arena, const std::vector<Vertex>& to_orig, const VertexSet& s, const VertexSet& a,
                     std::size_t depth)
    {
        const std::size_t n = arena.vertex_count();
        std::vector<char> alive(n, 1);
        for (Vertex v : s)
            alive[v] = 0;

        std::vector<std::vector<std::uint8_t>> columns;
        columns.reserve(s.size());
        for (Vertex v : s)
            columns.push_back(distance_column(arena, v, r_));
        const auto table = ProfileTable::from_columns(s, r_, columns, n);

        // Vertices of A inside S are captured by S itself.
        VertexSet open;
        for (Vertex v : a)
            if (alive[v])
                open.push_back(v);

        // Localization: every pair not captured by S has its a near Z.
        std::map<std::size_t, VertexSet> classes;
        for (Vertex v : open)
            classes[table.entry_of(v)].push_back(v);
        std::vector<Vertex> z_all;
        for (const auto& [entry, members] : classes) {
            auto split = greedy_dichotomy(arena, members, r_, k_, alive);
            if (split.kind == DichotomyKind::Dominated)
                z_all.insert(z_all.end(), split.set.begin(), split.set.end());
        }
        const VertexSet z_set = make_vertex_set(std::move(z_all));

        // far[e]: vertices of `open` with no walk of length <= r through S to
        // a vertex of profile e. A set D leaves exactly the intersection of
        // its members' rows, so only intersections of at most k rows matter.
        std::vector<Bitset> far(table.size(), Bitset(open.size()));
        for (std::size_t e = 0; e < table.size(); ++e)
            for (std::size_t i = 0; i < open.size(); ++i) {
                const std::size_t ea = table.entry_of(open[i]);
                bool apart = true;
                for (std::size_t p = 0; p < s.size() && apart; ++p)
                    apart = table.value(ea, p) + table.value(e, p) > static_cast<int>(r_);
                if (apart)
                    far[e].set(i);
            }
        const auto filters = intersections(far);

        VertexSet q = map_to(to_orig, s);
        for (Vertex z : z_set) {
            const SplitterMove move = splitter_game_round(arena, s, z, 3 * r_, rule_);
            VertexSet arena_z = move.ball;
            arena_z.insert(arena_z.end(), s.begin(), s.end());
            arena_z = make_vertex_set(std::move(arena_z));
            const Subgraph sub = induced_subgraph(arena, arena_z);
            std::vector<Vertex> sub_to_orig = map_to(to_orig, sub.to_parent);
            VertexSet s_z = s;
            s_z.push_back(move.w);
            s_z = map_from(arena_z, make_vertex_set(std::move(s_z)));

            std::vector<char> near(n, 0);
            for (Vertex v : ball(arena, z, 2 * r_, alive))
                near[v] = 1;
            std::set<VertexSet> seen;
            for (const Bitset& filter : filters) {
                VertexSet a_t;
                for (std::size_t i = filter.find_first(); i != Bitset::npos; i = filter.find_next(i))
                    if (near[open[i]])
                        a_t.push_back(open[i]);
                if (a_t.empty() || !seen.insert(a_t).second)
                    continue;
                const VertexSet sub_q = run(sub.graph, sub_to_orig, s_z, map_from(arena_z, a_t), depth + 1);
                q.insert(q.end(), sub_q.begin(), sub_q.end());
            }
        }
        return make_vertex_set(std::move(q));
    }

    // Distinct intersections of 1..k of the given rows.
    std::vector<Bitset> intersections(const std::vector<Bitset>& rows) const
    {
        std::set<Bitset> all;
        std::vector<Bitset> frontier;
        for (const auto& row : rows)
            if (all.insert(row).second)
                frontier.push_back(row);
        for (std::size_t size = 2; size <= k_ && !frontier.empty(); ++size) {
            std::vector<Bitset> next;
            for (const auto& partial : frontier)
                for (const auto& row : rows) {
                    Bitset meet = partial & row;
                    if (all.insert(meet).second)
                        next.push_back(std::move(meet));
                }
            frontier = std::move(next);
        }
        return {all.begin(), all.end()};
    }

    std::size_t k_;
    unsigned r_;
    const PrecoreOptions& options_;
    SplitterRule rule_;
    PrecoreStats stats_;
    std::map<std::vector<Vertex>, VertexSet> memo_;
};

}  // namespace

PrecoreResult compute_precore(const Graph& g, const VertexSet& a, std::size_t k, unsigned r,
                              const PrecoreOptions& options)
{
    if (r > kMaxProfileRadius)
        throw InputError("radius exceeds the supported maximum");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!g.contains(a[i]) || (i > 0 && a[i] <= a[i - 1]))
            throw InputError("A must be a strictly increasing list of vertices");
    std::vector<Vertex> identity(g.vertex_count());
    for (Vertex v = 0; v < identity.size(); ++v)
        identity[v] = v;
    PrecoreSearch search(k, r, options);
    PrecoreResult result;
    result.q = search.run(g, identity, {}, a, 0);
    result.stats = search.stats();
    return result;
}

namespace {

// Lexicographically first multiset of profile entries of size k, with
// multiplicities bounded by realizing counts, whose pairs are all free.
class MultisetSearch {
public:
    MultisetSearch(const ProfileTable& table, std::size_t k, std::size_t budget)
        : table_(table), k_(k), budget_(budget), free_(table.size() * table.size(), 0)
    {
        const std::size_t m = table.size();
        const int r = static_cast<int>(table.radius());
        for (std::size_t e = 0; e < m; ++e)
            for (std::size_t f = e; f < m; ++f) {
                bool ok = true;
                for (std::size_t p = 0; p < table.pivot().size() && ok; ++p)
                    ok = table.value(e, p) + table.value(f, p) > r;
                free_[e * m + f] = free_[f * m + e] = ok;
            }
    }

    bool search() { return extend(0); }
    const std::vector<std::size_t>& picked() const noexcept { return picked_; }

private:
    bool extend(std::size_t from)
    {
        if (picked_.size() == k_)
            return true;
        const std::size_t m = table_.size();
        for (std::size_t e = from; e < m; ++e) {
            if (++nodes_ > budget_)
                throw ResourceError("independent set: profile multiset search exceeded its budget");
            const std::size_t used = static_cast<std::size_t>(std::count(picked_.begin(), picked_.end(), e));
            if (used >= table_.entries()[e].count)
                continue;
            bool ok = true;
            for (std::size_t f : picked_)
                if (!free_[e * m + f]) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            picked_.push_back(e);
            if (extend(e))
                return true;
            picked_.pop_back();
        }
        return false;
    }

    const ProfileTable& table_;
    std::size_t k_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<char> free_;
    std::vector<std::size_t> picked_;
};

// Number of members of X having another member within distance r.
std::size_t crowded_count(const Graph& g, const VertexSet& x, unsigned r, Vertex* lowest)
{
    std::size_t count = 0;
    bool found = false;
    for (Vertex v : x) {
        const auto dist = bfs_capped(g, v, r);
        const bool crowded = std::any_of(x.begin(), x.end(), [&](Vertex u) { return u != v && dist[u] <= r; });
        if (crowded) {
            ++count;
            if (!found && lowest) {
                *lowest = v;
                found = true;
            }
        }
    }
    return count;
}

}  // namespace

IndependentSetResult independent_set_solve(const Graph& g, std::size_t k, unsigned r,
                                           const IndependentSetOptions& options)
{
    if (k == 0)
        throw InputError("independent set needs k >= 1");
    const auto start = std::chrono::steady_clock::now();
    IndependentSetResult result;
    auto finish = [&]() -> IndependentSetResult& {
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    };
    const std::size_t n = g.vertex_count();
    VertexSet everything(n);
    for (Vertex v = 0; v < n; ++v)
        everything[v] = v;
    auto precore = compute_precore(g, everything, k - 1, r, options.precore);
    result.core = std::move(precore.q);
    result.precore_stats = precore.stats;

    const auto table = build_profile_table(g, result.core, r);
    MultisetSearch multisets(table, k, options.multiset_budget);
    if (!multisets.search()) {
        result.kind = DecisionKind::NoSolution;
        return finish();
    }

    // Distinct realizing vertices, lowest ids first within each profile.
    VertexSet x;
    for (std::size_t i = 0; i < multisets.picked().size();) {
        const std::size_t e = multisets.picked()[i];
        std::size_t j = i;
        while (j < multisets.picked().size() && multisets.picked()[j] == e)
            ++j;
        const auto members = table.members(e);
        x.insert(x.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(j - i));
        i = j;
    }
    x = make_vertex_set(std::move(x));

    Vertex w = 0;
    std::size_t crowded = crowded_count(g, x, r, &w);
    while (crowded > 0) {
        VertexSet rest;
        for (Vertex v : x)
            if (v != w)
                rest.push_back(v);
        const auto dist = bfs_capped_multi(g, rest, r);
        auto far = std::find_if(dist.begin(), dist.end(), [&](Distance d) { return d > r; });
        if (far == dist.end())
            throw InvariantError("exchange step: the remaining set dominates the graph, so the pre-core is invalid");
        rest.push_back(static_cast<Vertex>(far - dist.begin()));
        x = make_vertex_set(std::move(rest));
        const std::size_t next = crowded_count(g, x, r, &w);
        if (next >= crowded)
            throw InvariantError("exchange step did not decrease the number of crowded vertices");
        crowded = next;
        ++result.exchanges;
    }
    if (!is_distance_independent(g, x, r) || x.size() != k)
        throw InvariantError("exchange loop produced a set that is not distance-r independent");
    result.kind = DecisionKind::Solution;
    result.solution = std::move(x);
    return finish();
}

}  // namespace pe
