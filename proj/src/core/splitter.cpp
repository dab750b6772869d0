#include "core/splitter.hpp"

#include <algorithm>
#include <string>

#include "core/errors.hpp"

namespace pe {

namespace {

std::vector<char> alive_mask(const Graph& arena, const VertexSet& excluded)
{
    std::vector<char> alive(arena.vertex_count(), 1);
    for (Vertex s : excluded) {
        if (!arena.contains(s))
            throw InputError("excluded vertex " + std::to_string(s) + " is not in the arena");
        alive[s] = 0;
    }
    return alive;
}

Vertex max_degree_in_ball(const Graph& arena, const VertexSet& excluded, Vertex v, unsigned r)
{
    const auto alive = alive_mask(arena, excluded);
    Vertex best = v;
    std::size_t best_degree = 0;
    bool first = true;
    for (Vertex u : ball(arena, v, r, alive)) {
        std::size_t degree = 0;
        for (Vertex x : arena.neighbors(u))
            degree += alive[x] ? 1 : 0;
        if (first || degree > best_degree) {
            best = u;
            best_degree = degree;
            first = false;
        }
    }
    return best;
}

Vertex center_of_ball(const Graph& arena, const VertexSet& excluded, Vertex v, unsigned r)
{
    const auto alive = alive_mask(arena, excluded);
    const VertexSet members = ball(arena, v, r, alive);
    std::vector<char> inside(arena.vertex_count(), 0);
    for (Vertex u : members)
        inside[u] = 1;
    // The ball has diameter at most 2r, so capping there loses nothing.
    const Distance cap = 2 * r;
    Vertex best = v;
    Distance best_ecc = cap + 2;
    for (Vertex u : members) {
        const auto dist = bfs_capped(arena, u, cap, inside);
        Distance ecc = 0;
        for (Vertex x : members)
            ecc = std::max(ecc, dist[x]);
        if (ecc < best_ecc) {
            best = u;
            best_ecc = ecc;
        }
    }
    return best;
}

}  // namespace

const char* to_string(SplitterStrategy strategy)
{
    switch (strategy) {
    case SplitterStrategy::ConnectorEcho:
        return "connector_echo";
    case SplitterStrategy::BallMaxDegree:
        return "ball_max_degree";
    case SplitterStrategy::BfsCenter:
        return "bfs_center";
    }
    return "?";
}

SplitterStrategy parse_splitter_strategy(std::string_view name)
{
    for (auto s : {SplitterStrategy::ConnectorEcho, SplitterStrategy::BallMaxDegree, SplitterStrategy::BfsCenter})
        if (name == to_string(s))
            return s;
    throw InputError("unknown splitter strategy \"" + std::string(name) + "\"");
}

SplitterRule make_splitter_rule(SplitterStrategy strategy)
{
    switch (strategy) {
    case SplitterStrategy::ConnectorEcho:
        return [](const Graph&, const VertexSet&, Vertex v, unsigned) { return v; };
    case SplitterStrategy::BallMaxDegree:
        return max_degree_in_ball;
    case SplitterStrategy::BfsCenter:
        return center_of_ball;
    }
    throw InputError("unknown splitter strategy");
}

SplitterMove splitter_game_round(const Graph& arena, const VertexSet& excluded, Vertex v, unsigned r,
                                 const SplitterRule& rule)
{
    const auto alive = alive_mask(arena, excluded);
    if (!arena.contains(v) || !alive[v])
        throw InputError("connector move " + std::to_string(v) + " is not a live arena vertex");
    SplitterMove move;
    move.ball = ball(arena, v, r, alive);
    move.w = rule(arena, excluded, v, r);
    if (!std::binary_search(move.ball.begin(), move.ball.end(), move.w))
        throw InvariantError("splitter answered " + std::to_string(move.w) + ", outside the radius-" +
                             std::to_string(r) + " ball of " + std::to_string(v));
    VertexSet rest;
    rest.reserve(move.ball.size() - 1);
    for (Vertex u : move.ball)
        if (u != move.w)
            rest.push_back(u);
    move.next = induced_subgraph(arena, rest);
    return move;
}

}  // namespace pe
