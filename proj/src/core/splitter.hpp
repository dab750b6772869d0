#pragma once

#include <functional>
#include <string_view>

#include "core/graph.hpp"

namespace pe {

enum class SplitterStrategy {
    ConnectorEcho,   ///< w = v
    BallMaxDegree,   ///< highest degree in the arena among the ball, ties to lowest id
    BfsCenter,       ///< smallest eccentricity inside the ball, ties to lowest id
};

const char* to_string(SplitterStrategy strategy);
/// Accepts "connector_echo", "ball_max_degree", "bfs_center"; throws InputError.
SplitterStrategy parse_splitter_strategy(std::string_view name);

/// Splitter's answer w to Connector's move v in the radius-r game played on
/// arena - excluded. Must lie in that radius-r ball of v.
using SplitterRule = std::function<Vertex(const Graph& arena, const VertexSet& excluded, Vertex v, unsigned r)>;

SplitterRule make_splitter_rule(SplitterStrategy strategy);

struct SplitterMove {
    Vertex w = 0;
    /// N_r(v) in arena - excluded, in arena ids.
    VertexSet ball;
    /// arena[ball - {w}], with ids mapped back to the arena.
    Subgraph next;
};

/// One round of the splitter game. Throws InputError when v is not a live
/// vertex and InvariantError when the rule answers outside the ball.
SplitterMove splitter_game_round(const Graph& arena, const VertexSet& excluded, Vertex v, unsigned r,
                                 const SplitterRule& rule);

}  // namespace pe
