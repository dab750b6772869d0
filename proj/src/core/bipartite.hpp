#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "core/formula.hpp"
#include "core/graph.hpp"

namespace pe {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Explicit bipartite graph; one bitset over the right part per left vertex.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::size_t left_size, std::size_t right_size);

    std::size_t left_size() const noexcept { return rows_.size(); }
    std::size_t right_size() const noexcept { return right_size_; }
    std::size_t edge_count() const;

    void add_edge(std::size_t l, std::size_t r);
    bool has_edge(std::size_t l, std::size_t r) const { return rows_[l].test(r); }
    const Bitset& row(std::size_t l) const { return rows_[l]; }

    /// "L R m" header followed by m lines "l r".
    static BipartiteGraph parse(std::string_view text);
    std::string to_text() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    std::size_t right_size_ = 0;
    std::vector<Bitset> rows_;
};

/// (a_i, b_j) in E iff i != j.
BipartiteGraph make_comatching_pattern(std::size_t n);
/// (a_i, b_j) in E iff i > j.
BipartiteGraph make_ladder_pattern(std::size_t n);

enum class ObstructionKind { Comatching, Ladder, Semiladder };

const char* to_string(ObstructionKind kind);

struct Obstruction {
    ObstructionKind kind = ObstructionKind::Semiladder;
    std::vector<std::size_t> a_seq;
    std::vector<std::size_t> b_seq;

    std::size_t order() const noexcept { return a_seq.size(); }
};

/// Checks the defining pattern of `obs.kind` on h (order 0 is always valid).
bool is_valid_obstruction(const BipartiteGraph& h, const Obstruction& obs);

struct IndexResult {
    std::size_t index = 0;
    Obstruction witness;
    std::size_t states = 0;
};

/// Exact maximum order of an obstruction of the given kind, with a witness.
/// Memoized search; throws ResourceError after `state_budget` states.
IndexResult index_of(const BipartiteGraph& h, ObstructionKind kind, std::size_t state_budget = 2'000'000);

enum class HellyVariant { Weak, Full, Strong };

struct HellyResult {
    bool holds = true;
    /// On failure: A (left vertices) and B (right vertices) violating the property.
    std::vector<std::size_t> a_set;
    std::vector<std::size_t> b_set;
};

/// p-Helly check for (A, B): B is covered by A, or some subset of B of size at
/// most p is not. Weak: (L, R) only; full: (L, B) for every B; strong: every
/// (A, B). The right part is limited to 20 vertices.
HellyResult check_p_helly(const BipartiteGraph& h, std::size_t p, HellyVariant variant);

/// Smallest p for which the weak p-Helly property holds.
std::size_t min_weak_helly(const BipartiteGraph& h);

/// Lowest left vertex adjacent to every right vertex.
std::optional<std::size_t> coverage_bruteforce(const BipartiteGraph& h);

using BigInt = boost::multiprecision::cpp_int;

/// c^(c*l - 1); requires c >= 2 and l >= 1.
BigInt ramsey_bound(unsigned c, unsigned l);

/// Symmetric edge colouring of K_n with colours 0..colors-1.
class EdgeColoring {
public:
    EdgeColoring(std::size_t n, unsigned colors);

    std::size_t vertex_count() const noexcept { return n_; }
    unsigned colors() const noexcept { return colors_; }
    unsigned color(std::size_t u, std::size_t v) const { return cells_[u * n_ + v]; }
    void set_color(std::size_t u, std::size_t v, unsigned color);

private:
    std::size_t n_;
    unsigned colors_;
    std::vector<std::uint8_t> cells_;
};

/// Extracts l vertices spanning a single colour by the greedy sequence
/// argument: repeatedly take the lowest remaining vertex and keep its largest
/// colour class. Returns nullopt when the extraction fails, which can only
/// happen below ramsey_bound(colors, l). The result is validated.
std::optional<std::vector<std::size_t>> find_monochromatic(const EdgeColoring& coloring, unsigned l);

/// Index of a tuple over {0..n-1}^arity in lexicographic order, and back.
std::size_t encode_tuple(std::span<const Vertex> tuple, std::size_t n);
std::vector<Vertex> decode_tuple(std::size_t index, std::size_t arity, std::size_t n);

/// phi(G) with left part V^c and right part V^d, both in lexicographic order.
/// Throws ResourceError when n^c * n^d exceeds `pair_budget`.
BipartiteGraph materialize(const Graph& g, const DistanceFormula& f, std::size_t pair_budget = 1'000'000);

}  // namespace pe
