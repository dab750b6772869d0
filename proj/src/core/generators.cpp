#include "core/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "core/errors.hpp"

namespace pe {

namespace {

using nlohmann::json;

std::size_t param(const json& params, const char* key)
{
    if (!params.is_object() || !params.contains(key))
        throw InputError(std::string("missing generator parameter '") + key + "'");
    const auto& value = params.at(key);
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
        throw InputError(std::string("generator parameter '") + key + "' must be a non-negative integer");
    return value.get<std::size_t>();
}

std::size_t param_or(const json& params, const char* key, std::size_t fallback)
{
    return params.is_object() && params.contains(key) ? param(params, key) : fallback;
}

class EdgeSet {
public:
    explicit EdgeSet(std::size_t n) : adjacency_(n) {}

    bool has(Vertex u, Vertex v) const { return adjacency_[u].count(v) > 0; }
    void add(Vertex u, Vertex v)
    {
        adjacency_[u].insert(v);
        adjacency_[v].insert(u);
    }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    Graph build() const
    {
        std::vector<std::vector<Vertex>> lists(adjacency_.size());
        for (std::size_t v = 0; v < adjacency_.size(); ++v)
            lists[v].assign(adjacency_[v].begin(), adjacency_[v].end());
        return Graph::from_adjacency(std::move(lists));
    }

private:
    std::vector<std::set<Vertex>> adjacency_;
};

bool connected(const Graph& g)
{
    if (g.vertex_count() == 0)
        return true;
    auto dist = bfs_capped(g, 0, static_cast<Distance>(g.vertex_count()));
    return std::all_of(dist.begin(), dist.end(), [&](Distance d) { return d <= g.vertex_count(); });
}

bool two_colourable(const Graph& g)
{
    std::vector<int> colour(g.vertex_count(), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : g.neighbors(u)) {
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    stack.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::size_t max_degree(const Graph& g)
{
    std::size_t best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

// Enumerates all size-`t` subsets of `pool` and calls `fn` until it returns true.
template <typename Fn>
bool any_subset(const std::vector<Vertex>& pool, std::size_t t, Fn&& fn)
{
    if (t > pool.size())
        return false;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i)
        idx[i] = i;
    std::vector<Vertex> chosen(t);
    while (true) {
        for (std::size_t i = 0; i < t; ++i)
            chosen[i] = pool[idx[i]];
        if (fn(chosen))
            return true;
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == pool.size() - t + i - 1)
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

std::size_t common_neighbors_excluding(const Graph& g, const std::vector<Vertex>& set, Vertex extra,
                                       Vertex excluded)
{
    std::size_t count = 0;
    for (Vertex w : g.neighbors(extra)) {
        if (w == excluded)
            continue;
        bool all = true;
        for (Vertex b : set)
            if (!g.adjacent(w, b)) {
                all = false;
                break;
            }
        count += all;
    }
    return count;
}

Graph half_square_of_grid(std::size_t rows, std::size_t cols)
{
    Graph grid = make_grid(rows, cols);
    VertexSet side;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if ((i + j) % 2 == 0)
                side.push_back(static_cast<Vertex>(i * cols + j));
    return half_square(grid, side);
}

VertexSet even_side_of_tree(const Graph& tree)
{
    VertexSet side;
    if (tree.vertex_count() == 0)
        return side;
    auto dist = bfs_capped(tree, 0, static_cast<Distance>(tree.vertex_count()));
    for (Vertex v = 0; v < tree.vertex_count(); ++v)
        if (dist[v] % 2 == 0)
            side.push_back(v);
    return side;
}

}  // namespace

Graph make_path(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    return Graph(n, edges);
}

Graph make_cycle(std::size_t n)
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph(n, edges);
}

Graph make_star(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.emplace_back(0, static_cast<Vertex>(i));
    return Graph(leaves + 1, edges);
}

Graph make_grid(std::size_t rows, std::size_t cols)
{
    std::vector<Edge> edges;
    auto id = [cols](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * cols + j); };
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (j + 1 < cols)
                edges.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < rows)
                edges.emplace_back(id(i, j), id(i + 1, j));
        }
    return Graph(rows * cols, edges);
}

Graph make_complete(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph make_complete_bipartite(std::size_t a, std::size_t b)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
    return Graph(a + b, edges);
}

Graph make_random_tree(std::size_t n, std::size_t max_depth, Rng& rng)
{
    if (n > 1 && max_depth == 0)
        throw InputError("a tree with more than one vertex needs max_depth >= 1");
    std::vector<std::size_t> depth(n, 0);
    std::vector<Vertex> open;  // vertices that may still receive children
    std::vector<Edge> edges;
    if (n > 0)
        open.push_back(0);
    for (std::size_t v = 1; v < n; ++v) {
        Vertex parent = open[rng.below(open.size())];
        depth[v] = depth[parent] + 1;
        edges.emplace_back(parent, static_cast<Vertex>(v));
        if (depth[v] < max_depth)
            open.push_back(static_cast<Vertex>(v));
    }
    return Graph(n, edges);
}

Graph make_bounded_degree_random(std::size_t n, std::size_t max_degree, std::size_t attempts, Rng& rng)
{
    EdgeSet set(n);
    if (n >= 2)
        for (std::size_t i = 0; i < attempts; ++i) {
            auto u = static_cast<Vertex>(rng.below(n));
            auto v = static_cast<Vertex>(rng.below(n));
            if (u == v || set.has(u, v) || set.degree(u) >= max_degree || set.degree(v) >= max_degree)
                continue;
            set.add(u, v);
        }
    return set.build();
}

bool edge_completes_ktt(const Graph& g, Vertex u, Vertex v, std::size_t t)
{
    if (t == 0)
        return true;
    std::vector<Vertex> pool;
    for (Vertex w : g.neighbors(u))
        if (w != v)
            pool.push_back(w);
    return any_subset(pool, t - 1, [&](const std::vector<Vertex>& others) {
        return common_neighbors_excluding(g, others, v, u) >= t - 1;
    });
}

bool contains_ktt_bruteforce(const Graph& g, std::size_t t)
{
    if (t == 0)
        return true;
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v)
        all[v] = v;
    return any_subset(all, t, [&](const std::vector<Vertex>& side) {
        std::size_t common = 0;
        for (Vertex w = 0; w < g.vertex_count(); ++w) {
            bool all_adjacent = true;
            for (Vertex a : side)
                if (!g.adjacent(w, a)) {
                    all_adjacent = false;
                    break;
                }
            common += all_adjacent;
        }
        return common >= t;
    });
}

Graph make_ktt_free_random(std::size_t n, std::size_t t, std::uint64_t numerator, std::uint64_t denominator,
                           Rng& rng)
{
    if (t == 0)
        throw InputError("K_{t,t}-free generation needs t >= 1");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    rng.shuffle(pairs);
    Graph current(n, std::vector<Edge>{});
    std::vector<Edge> kept;
    for (auto [u, v] : pairs) {
        if (!rng.chance(numerator, denominator))
            continue;
        if (edge_completes_ktt(current, u, v, t))
            continue;
        kept.emplace_back(u, v);
        current = Graph(n, kept);
    }
    return current;
}

Graph make_random_connected(std::size_t n, std::size_t extra_edges, Rng& rng)
{
    EdgeSet set(n);
    for (std::size_t v = 1; v < n; ++v)
        set.add(static_cast<Vertex>(rng.below(v)), static_cast<Vertex>(v));
    const std::size_t max_edges = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::size_t added = 0, tries = 0;
    while (added < extra_edges && n - 1 + added < max_edges && tries < 100 * (extra_edges + 1)) {
        ++tries;
        auto u = static_cast<Vertex>(rng.below(n));
        auto v = static_cast<Vertex>(rng.below(n));
        if (u == v || set.has(u, v))
            continue;
        set.add(u, v);
        ++added;
    }
    return set.build();
}

const std::vector<std::string>& generator_families()
{
    static const std::vector<std::string> families{
        "grid", "path", "cycle", "star", "tree", "bounded_degree_random", "complete_bipartite",
        "ktt_free_random", "power_of", "half_square_of_planar_bipartite", "random_connected"};
    return families;
}

Graph generate(std::string_view family, const nlohmann::json& params, std::uint64_t seed)
{
    Rng rng(seed);
    Graph g;
    if (family == "grid") {
        g = make_grid(param(params, "rows"), param(params, "cols"));
    } else if (family == "path") {
        g = make_path(param(params, "n"));
    } else if (family == "cycle") {
        g = make_cycle(param(params, "n"));
    } else if (family == "star") {
        g = make_star(param(params, "leaves"));
    } else if (family == "tree") {
        const auto n = param(params, "n");
        g = make_random_tree(n, param_or(params, "max_depth", n), rng);
    } else if (family == "bounded_degree_random") {
        const auto n = param(params, "n");
        const auto d = param(params, "max_degree");
        g = make_bounded_degree_random(n, d, param_or(params, "attempts", n * d), rng);
    } else if (family == "complete_bipartite") {
        g = make_complete_bipartite(param(params, "a"), param(params, "b"));
    } else if (family == "ktt_free_random") {
        double p = params.is_object() && params.contains("p") ? params.at("p").get<double>() : 0.5;
        if (!(p >= 0.0 && p <= 1.0))
            throw InputError("generator parameter 'p' must lie in [0, 1]");
        g = make_ktt_free_random(param(params, "n"), param(params, "t"),
                                 static_cast<std::uint64_t>(std::llround(p * 1e6)), 1'000'000, rng);
    } else if (family == "random_connected") {
        g = make_random_connected(param(params, "n"), param_or(params, "extra_edges", 0), rng);
    } else if (family == "power_of") {
        if (!params.is_object() || !params.contains("base") || !params.at("base").contains("family"))
            throw InputError("power_of needs {\"base\":{\"family\":..., \"params\":...}, \"s\":...}");
        const auto& base = params.at("base");
        Graph inner = generate(base.at("family").get<std::string>(), base.value("params", json::object()), seed);
        g = graph_power(inner, static_cast<unsigned>(param(params, "s")));
    } else if (family == "half_square_of_planar_bipartite") {
        const std::string base = params.is_object() ? params.value("base", std::string("grid")) : "grid";
        if (base == "grid") {
            g = half_square_of_grid(param(params, "rows"), param(params, "cols"));
        } else if (base == "tree") {
            Graph tree = make_random_tree(param(params, "n"), param_or(params, "max_depth", param(params, "n")), rng);
            g = half_square(tree, even_side_of_tree(tree));
        } else {
            throw InputError("half_square_of_planar_bipartite base must be 'grid' or 'tree'");
        }
    } else {
        throw InputError("unknown generator family '" + std::string(family) + "'");
    }

    if (g.vertex_count() <= 14 && !satisfies_family(g, family, params, seed))
        throw InvariantError("generated instance violates the '" + std::string(family) + "' predicate");
    return g;
}

bool satisfies_family(const Graph& g, std::string_view family, const nlohmann::json& params, std::uint64_t seed)
{
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (family == "grid") {
        const auto r = param(params, "rows"), c = param(params, "cols");
        const std::size_t expected = r * (c ? c - 1 : 0) + c * (r ? r - 1 : 0);
        return n == r * c && m == expected && connected(g) && two_colourable(g) && max_degree(g) <= 4;
    }
    if (family == "path")
        return connected(g) && m + (n > 0) == n && max_degree(g) <= 2;
    if (family == "cycle") {
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) != 2)
                return false;
        return connected(g);
    }
    if (family == "star")
        return m + 1 == n && (n <= 1 || g.degree(0) == n - 1);
    if (family == "tree" || family == "random_connected") {
        if (!connected(g))
            return false;
        if (family == "random_connected")
            return true;
        if (m + (n > 0) != n)
            return false;
        const auto limit = param_or(params, "max_depth", n);
        auto dist = n ? bfs_capped(g, 0, static_cast<Distance>(n)) : std::vector<Distance>{};
        return std::all_of(dist.begin(), dist.end(), [&](Distance d) { return d <= limit; });
    }
    if (family == "bounded_degree_random")
        return max_degree(g) <= param(params, "max_degree");
    if (family == "complete_bipartite") {
        const auto a = param(params, "a");
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (g.adjacent(u, v) != ((u < a) != (v < a)))
                    return false;
        return true;
    }
    if (family == "ktt_free_random")
        return !contains_ktt_bruteforce(g, param(params, "t"));
    if (family == "power_of") {
        const auto& base = params.at("base");
        Graph inner = generate(base.at("family").get<std::string>(), base.value("params", nlohmann::json::object()), seed);
        if (inner.vertex_count() != n)
            return false;
        const auto s = static_cast<Distance>(param(params, "s"));
        auto dist = all_pairs_capped(inner, s);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v && g.adjacent(u, v) != (dist[u * n + v] <= s))
                    return false;
        return true;
    }
    if (family == "half_square_of_planar_bipartite") {
        const std::string base = params.is_object() ? params.value("base", std::string("grid")) : "grid";
        if (base != "grid")
            return true;
        const auto rows = param(params, "rows"), cols = param(params, "cols");
        Graph grid = make_grid(rows, cols);
        VertexSet side;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if ((i + j) % 2 == 0)
                    side.push_back(static_cast<Vertex>(i * cols + j));
        if (side.size() != n)
            return false;
        auto dist = all_pairs_capped(grid, 2);
        const std::size_t big = grid.vertex_count();
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j)
                if (i != j && g.adjacent(i, j) != (dist[side[i] * big + side[j]] == 2))
                    return false;
        return true;
    }
    return false;
}

}  // namespace pe
