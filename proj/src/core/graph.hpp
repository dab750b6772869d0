#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pe {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Strictly increasing list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates in place, returning the result.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable after construction. The constructor validates that the edge list
/// has no self-loops, no duplicates (in either orientation), and no
/// out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::span<const Edge> edges);

    /// Builds from adjacency lists that are already symmetric; validated.
    static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    /// n + m, the usual size measure for linear-time bounds.
    std::size_t size() const noexcept { return vertex_count() + edge_count(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v < adjacency_.size(); }

    /// Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Capped distance where the value `cap + 1` stands for "farther than cap".
using Distance = std::uint32_t;

/// BFS from `source`; entries are exact distances <= cap, or cap + 1.
std::vector<Distance> bfs_capped(const Graph& g, Vertex source, Distance cap);

/// Same as bfs_capped but only walks vertices with `alive[v] != 0`.
/// The source must be alive.
std::vector<Distance> bfs_capped(const Graph& g, Vertex source, Distance cap,
                                 std::span<const char> alive);

/// Multi-source variant: distance to the nearest source.
std::vector<Distance> bfs_capped_multi(const Graph& g, std::span<const Vertex> sources, Distance cap,
                                       std::span<const char> alive = {});

/// Vertices within distance `radius` of `center`, ascending.
VertexSet ball(const Graph& g, Vertex center, Distance radius, std::span<const char> alive = {});

/// All-pairs distances capped at `cap` (row-major n x n), for small graphs.
std::vector<Distance> all_pairs_capped(const Graph& g, Distance cap);

/// G^s: u ~ v iff 1 <= dist_G(u, v) <= s.
Graph graph_power(const Graph& g, unsigned s);

/// Graph on `side` (relabelled by position) with u ~ v iff dist_h(u, v) = 2.
/// `side` must be one colour class of a proper 2-colouring of h.
Graph half_square(const Graph& h, const VertexSet& side);

/// An induced subgraph together with the map back to its parent's ids.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

/// Induced subgraph on `vertices` (must be a VertexSet of g). Local id i
/// corresponds to vertices[i].
Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Output of a parser: the graph and the original label of every vertex.
struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels;
};

/// Edge-list text: "n m" header then m lines "u v" (0-based).
ParsedGraph parse_edge_list(std::string_view text);
/// DIMACS .col text: "c" comments, "p edge n m", "e u v" lines (1-based).
ParsedGraph parse_dimacs(std::string_view text);
/// Dispatches on content: a "p " line selects DIMACS, otherwise edge list.
ParsedGraph parse_graph(std::string_view text);

std::string to_edge_list(const Graph& g);

}  // namespace pe
