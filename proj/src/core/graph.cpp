#include "core/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>
#include <sstream>

#include "core/errors.hpp"

namespace pe {

VertexSet make_vertex_set(std::vector<Vertex> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n)
{
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge endpoint out of range");
        if (u == v)
            throw InputError("self-loop on vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw InputError("duplicate edge");
    }
    edge_count_ = edges.size();
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < adjacency.size(); ++u)
        for (Vertex v : adjacency[u]) {
            if (v >= adjacency.size())
                throw InputError("neighbor out of range");
            if (u < v)
                edges.emplace_back(u, v);
            else if (u == v)
                throw InputError("self-loop on vertex " + std::to_string(u));
        }
    Graph g(adjacency.size(), edges);
    for (Vertex u = 0; u < adjacency.size(); ++u)
        if (g.degree(u) != adjacency[u].size())
            throw InputError("adjacency lists are not symmetric");
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<Distance> bfs_capped_multi(const Graph& g, std::span<const Vertex> sources, Distance cap,
                                       std::span<const char> alive)
{
    const Distance inf = cap + 1;
    std::vector<Distance> dist(g.vertex_count(), inf);
    std::vector<Vertex> frontier;
    for (Vertex s : sources) {
        if (!g.contains(s))
            throw InputError("invalid vertex id " + std::to_string(s));
        if (!alive.empty() && !alive[s])
            continue;
        if (dist[s] != 0) {
            dist[s] = 0;
            frontier.push_back(s);
        }
    }
    std::vector<Vertex> next;
    for (Distance d = 1; d <= cap && !frontier.empty(); ++d) {
        next.clear();
        for (Vertex u : frontier)
            for (Vertex v : g.neighbors(u))
                if (dist[v] == inf && (alive.empty() || alive[v])) {
                    dist[v] = d;
                    next.push_back(v);
                }
        frontier.swap(next);
    }
    return dist;
}

std::vector<Distance> bfs_capped(const Graph& g, Vertex source, Distance cap)
{
    return bfs_capped_multi(g, std::span<const Vertex>(&source, 1), cap);
}

std::vector<Distance> bfs_capped(const Graph& g, Vertex source, Distance cap, std::span<const char> alive)
{
    if (g.contains(source) && !alive.empty() && !alive[source])
        throw InputError("BFS source is not in the arena");
    return bfs_capped_multi(g, std::span<const Vertex>(&source, 1), cap, alive);
}

VertexSet ball(const Graph& g, Vertex center, Distance radius, std::span<const char> alive)
{
    auto dist = alive.empty() ? bfs_capped(g, center, radius) : bfs_capped(g, center, radius, alive);
    VertexSet out;
    for (Vertex v = 0; v < dist.size(); ++v)
        if (dist[v] <= radius)
            out.push_back(v);
    return out;
}

std::vector<Distance> all_pairs_capped(const Graph& g, Distance cap)
{
    const std::size_t n = g.vertex_count();
    std::vector<Distance> out(n * n);
    for (Vertex u = 0; u < n; ++u) {
        auto row = bfs_capped(g, u, cap);
        std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(u * n));
    }
    return out;
}

Graph graph_power(const Graph& g, unsigned s)
{
    if (s == 0)
        throw InputError("graph power exponent must be at least 1");
    std::vector<std::vector<Vertex>> adjacency(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : ball(g, u, s))
            if (v != u)
                adjacency[u].push_back(v);
    return Graph::from_adjacency(std::move(adjacency));
}

Graph half_square(const Graph& h, const VertexSet& side)
{
    const std::size_t n = h.vertex_count();
    std::vector<char> in_side(n, 0);
    std::vector<Vertex> position(n, 0);
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (!h.contains(side[i]))
            throw InputError("bipartition side contains an invalid vertex");
        if (i > 0 && side[i - 1] >= side[i])
            throw InputError("bipartition side must be strictly increasing");
        in_side[side[i]] = 1;
        position[side[i]] = static_cast<Vertex>(i);
    }
    for (auto [u, v] : h.edges())
        if (in_side[u] == in_side[v])
            throw InputError("graph is not bipartite with respect to the given side");

    std::vector<std::vector<Vertex>> adjacency(side.size());
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < side.size(); ++i) {
        Vertex u = side[i];
        std::vector<Vertex> touched;
        for (Vertex mid : h.neighbors(u))
            for (Vertex w : h.neighbors(mid))
                if (w != u && !seen[w]) {
                    seen[w] = 1;
                    touched.push_back(w);
                    adjacency[i].push_back(position[w]);
                }
        for (Vertex w : touched)
            seen[w] = 0;
    }
    return Graph::from_adjacency(std::move(adjacency));
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices)
{
    constexpr Vertex absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> local(g.vertex_count(), absent);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<Vertex>(i);
    std::vector<std::vector<Vertex>> adjacency(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i]))
            if (local[w] != absent)
                adjacency[i].push_back(local[w]);
    return Subgraph{Graph::from_adjacency(std::move(adjacency)), vertices};
}

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    bool next(std::string_view& line)
    {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            if (line.find_first_not_of(" \t") != std::string_view::npos)
                return true;
        }
        return false;
    }
};

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t to_uint(std::string_view token, std::size_t line)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line);
    return value;
}

ParsedGraph finish(std::size_t n, std::vector<Edge> edges, std::vector<std::size_t> lines, Vertex label_offset)
{
    // Duplicates are reported with the line of the second occurrence.
    std::vector<std::pair<Edge, std::size_t>> keyed;
    keyed.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        keyed.push_back({{std::min(u, v), std::max(u, v)}, lines[i]});
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].first == keyed[i - 1].first)
            throw ParseError("duplicate edge " + std::to_string(keyed[i].first.first + label_offset) + " " +
                                 std::to_string(keyed[i].first.second + label_offset),
                             std::max(keyed[i].second, keyed[i - 1].second));
    ParsedGraph out{Graph(n, edges), {}};
    out.labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        out.labels.push_back(std::to_string(v + label_offset));
    return out;
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text)
{
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line))
        throw ParseError("empty input: expected header 'n m'", 1);
    auto header = split_ws(line);
    if (header.size() != 2)
        throw ParseError("header must be 'n m'", reader.line_no);
    const auto n = to_uint(header[0], reader.line_no);
    const auto m = to_uint(header[1], reader.line_no);
    if (n > std::numeric_limits<Vertex>::max() / 2)
        throw ParseError("vertex count too large", reader.line_no);

    std::vector<Edge> edges;
    std::vector<std::size_t> lines;
    while (reader.next(line)) {
        auto tokens = split_ws(line);
        if (tokens.size() != 2)
            throw ParseError("edge line must be 'u v'", reader.line_no);
        const auto u = to_uint(tokens[0], reader.line_no);
        const auto v = to_uint(tokens[1], reader.line_no);
        if (u >= n || v >= n)
            throw ParseError("vertex id out of range [0, " + std::to_string(n) + ")", reader.line_no);
        if (u == v)
            throw ParseError("self-loop on vertex " + std::to_string(u), reader.line_no);
        if (edges.size() == m)
            throw ParseError("more edge lines than declared (" + std::to_string(m) + ")", reader.line_no);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        lines.push_back(reader.line_no);
    }
    if (edges.size() != m)
        throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                         reader.line_no + 1);
    return finish(n, std::move(edges), std::move(lines), 0);
}

ParsedGraph parse_dimacs(std::string_view text)
{
    LineReader reader{text};
    std::string_view line;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> lines;
    while (reader.next(line)) {
        auto tokens = split_ws(line);
        if (tokens[0] == "c")
            continue;
        if (tokens[0] == "p") {
            if (have_header)
                throw ParseError("second 'p' line", reader.line_no);
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
                throw ParseError("header must be 'p edge n m'", reader.line_no);
            n = to_uint(tokens[2], reader.line_no);
            m = to_uint(tokens[3], reader.line_no);
            have_header = true;
            continue;
        }
        if (tokens[0] == "e") {
            if (!have_header)
                throw ParseError("edge line before 'p' header", reader.line_no);
            if (tokens.size() != 3)
                throw ParseError("edge line must be 'e u v'", reader.line_no);
            const auto u = to_uint(tokens[1], reader.line_no);
            const auto v = to_uint(tokens[2], reader.line_no);
            if (u == 0 || v == 0 || u > n || v > n)
                throw ParseError("vertex id out of range [1, " + std::to_string(n) + "]", reader.line_no);
            if (u == v)
                throw ParseError("self-loop on vertex " + std::to_string(u), reader.line_no);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            lines.push_back(reader.line_no);
            continue;
        }
        throw ParseError("unknown line type '" + std::string(tokens[0]) + "'", reader.line_no);
    }
    if (!have_header)
        throw ParseError("missing 'p edge n m' header", reader.line_no + 1);
    if (edges.size() != m)
        throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                         reader.line_no + 1);
    return finish(n, std::move(edges), std::move(lines), 1);
}

ParsedGraph parse_graph(std::string_view text)
{
    LineReader reader{text};
    std::string_view line;
    while (reader.next(line)) {
        auto tokens = split_ws(line);
        if (tokens[0] == "c" || tokens[0] == "p")
            return parse_dimacs(text);
        break;
    }
    return parse_edge_list(text);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace pe
