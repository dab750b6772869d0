#include "core/oracles.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "core/bipartite.hpp"
#include "core/errors.hpp"
#include "core/profiles.hpp"

namespace pe {

namespace {

void check_tuple(const Graph& g, const Tuple& t, std::size_t arity, const char* what)
{
    if (t.size() != arity)
        throw InputError(std::string(what) + " tuple has length " + std::to_string(t.size()) + ", expected " +
                         std::to_string(arity));
    for (Vertex v : t)
        if (!g.contains(v))
            throw InputError(std::string(what) + " tuple contains invalid vertex " + std::to_string(v));
}

VertexSet vertices_of(const std::vector<Tuple>& tuples)
{
    std::vector<Vertex> all;
    for (const auto& t : tuples)
        all.insert(all.end(), t.begin(), t.end());
    return make_vertex_set(std::move(all));
}

std::vector<std::size_t> positions(const ProfileTable& table, const Tuple& t)
{
    std::vector<std::size_t> out;
    out.reserve(t.size());
    for (Vertex v : t)
        out.push_back(table.pivot_index(v));
    return out;
}

Tuple representatives(const ProfileTable& table, const std::vector<std::size_t>& entries)
{
    Tuple out;
    out.reserve(entries.size());
    for (std::size_t e : entries)
        out.push_back(table.entries()[e].representative);
    return out;
}

// Depth-first search over tuples of profile entries in lexicographic order.
// `viable(prefix)` must return false only when no completion can succeed;
// on a full-length tuple it decides acceptance.
template <typename Viable>
bool search_entries(std::size_t entry_count, std::size_t arity, std::vector<std::size_t>& picked, Viable& viable,
                    std::size_t& nodes)
{
    if (picked.size() == arity)
        return true;
    for (std::size_t e = 0; e < entry_count; ++e) {
        picked.push_back(e);
        ++nodes;
        if (viable(picked) && search_entries(entry_count, arity, picked, viable, nodes))
            return true;
        picked.pop_back();
    }
    return false;
}

// Truth of phi(candidate profile prefix; fixed witness) where the witness is
// given by pivot positions.
Truth candidate_side(const DistanceFormula& f, const ProfileTable& table, const std::vector<std::size_t>& picked,
                     const std::vector<std::size_t>& witness_pos)
{
    return f.evaluate_with([&](unsigned i, unsigned j) -> long {
        if (i >= picked.size())
            return -1;
        return table.value(picked[i], witness_pos[j]);
    });
}

// Truth of phi(fixed candidate; witness profile prefix).
Truth witness_side(const DistanceFormula& f, const ProfileTable& table, const std::vector<std::size_t>& picked,
                   const std::vector<std::size_t>& candidate_pos)
{
    return f.evaluate_with([&](unsigned i, unsigned j) -> long {
        if (j >= picked.size())
            return -1;
        return table.value(picked[j], candidate_pos[i]);
    });
}

struct Tally {
    OracleCounters* counters;
    std::size_t nodes = 0;
    ~Tally()
    {
        if (counters)
            counters->profile_nodes += nodes;
    }
};

}  // namespace

ImplicitBipartite::ImplicitBipartite(const Graph& graph, DistanceFormula formula)
    : graph_(&graph), formula_(std::move(formula))
{
    if (formula_.radius() > kMaxProfileRadius)
        throw InputError("formula radius exceeds the supported maximum");
}

bool ImplicitBipartite::agrees(const Tuple& a, const Tuple& b) const
{
    check_tuple(*graph_, a, formula_.candidate_arity(), "candidate");
    check_tuple(*graph_, b, formula_.witness_arity(), "witness");
    std::vector<std::vector<Distance>> rows;
    for (Vertex v : a)
        rows.push_back(bfs_capped(*graph_, v, formula_.radius()));
    return formula_.evaluate_with([&](unsigned i, unsigned j) { return static_cast<long>(rows[i][b[j]]); }) ==
           Truth::True;
}

std::optional<Tuple> candidate_oracle(const ImplicitBipartite& ib, const std::vector<Tuple>& witnesses,
                                      OracleCounters* counters)
{
    const Graph& g = ib.graph();
    const DistanceFormula& f = ib.formula();
    for (const auto& b : witnesses)
        check_tuple(g, b, f.witness_arity(), "witness");
    if (counters)
        ++counters->candidate;
    if (g.vertex_count() == 0)
        return std::nullopt;

    const auto table = build_profile_table(g, vertices_of(witnesses), f.radius());
    std::vector<std::vector<std::size_t>> constraint_pos;
    for (const auto& b : witnesses)
        constraint_pos.push_back(positions(table, b));

    auto viable = [&](const std::vector<std::size_t>& picked) {
        for (const auto& pos : constraint_pos)
            if (candidate_side(f, table, picked, pos) == Truth::False)
                return false;
        return true;
    };
    Tally tally{counters};
    std::vector<std::size_t> picked;
    if (!search_entries(table.size(), f.candidate_arity(), picked, viable, tally.nodes))
        return std::nullopt;
    return representatives(table, picked);
}

std::optional<Tuple> weak_witness_oracle(const ImplicitBipartite& ib, const Tuple& candidate,
                                         OracleCounters* counters)
{
    const Graph& g = ib.graph();
    const DistanceFormula& f = ib.formula();
    check_tuple(g, candidate, f.candidate_arity(), "candidate");
    if (counters)
        ++counters->weak_witness;

    const auto table = build_profile_table(g, make_vertex_set(candidate), f.radius());
    const auto pos = positions(table, candidate);
    auto viable = [&](const std::vector<std::size_t>& picked) {
        return witness_side(f, table, picked, pos) != Truth::True;
    };
    Tally tally{counters};
    std::vector<std::size_t> picked;
    if (!search_entries(table.size(), f.witness_arity(), picked, viable, tally.nodes))
        return std::nullopt;
    return representatives(table, picked);
}

std::optional<std::vector<Tuple>> strong_witness_oracle(const ImplicitBipartite& ib,
                                                        const std::vector<Tuple>& candidates, std::size_t p,
                                                        OracleCounters* counters)
{
    const Graph& g = ib.graph();
    const DistanceFormula& f = ib.formula();
    if (candidates.empty())
        throw InputError("strong witness oracle needs a nonempty candidate set");
    if (p < 1)
        throw InputError("strong witness oracle needs p >= 1");
    for (const auto& a : candidates)
        check_tuple(g, a, f.candidate_arity(), "candidate");
    if (counters)
        ++counters->strong_witness;

    const auto table = build_profile_table(g, vertices_of(candidates), f.radius());
    std::vector<std::vector<std::size_t>> cand_pos;
    for (const auto& a : candidates)
        cand_pos.push_back(positions(table, a));

    // Every witness profile tuple, reduced to the set of candidates it defeats.
    // Identical hit sets are kept once (first in lexicographic order).
    const std::size_t m = candidates.size();
    std::vector<Bitset> hits;
    std::vector<std::vector<std::size_t>> hit_tuples;
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    {
        Tally tally{counters};
        std::vector<std::size_t> picked;
        auto collect = [&](const std::vector<std::size_t>& prefix) {
            bool any_open = false;
            for (const auto& pos : cand_pos)
                if (witness_side(f, table, prefix, pos) != Truth::True) {
                    any_open = true;
                    break;
                }
            if (!any_open)
                return false;
            if (prefix.size() < f.witness_arity())
                return true;
            Bitset hit(m);
            for (std::size_t i = 0; i < m; ++i)
                if (witness_side(f, table, prefix, cand_pos[i]) == Truth::False)
                    hit.set(i);
            std::vector<std::uint64_t> blocks;
            boost::to_block_range(hit, std::back_inserter(blocks));
            if (seen.try_emplace(blocks, hits.size()).second) {
                hits.push_back(std::move(hit));
                hit_tuples.push_back(prefix);
            }
            return false;  // keep enumerating
        };
        search_entries(table.size(), f.witness_arity(), picked, collect, tally.nodes);
    }

    // Exact cover search: branch on the witnesses defeating the first
    // candidate not yet defeated.
    std::vector<std::size_t> chosen;
    auto cover = [&](auto& self, const Bitset& covered) -> bool {
        const std::size_t open = (~covered).find_first();
        if (open == Bitset::npos)
            return true;
        if (chosen.size() == p)
            return false;
        for (std::size_t w = 0; w < hits.size(); ++w) {
            if (!hits[w].test(open))
                continue;
            chosen.push_back(w);
            if (self(self, covered | hits[w]))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!cover(cover, Bitset(m)))
        return std::nullopt;
    std::vector<Tuple> out;
    for (std::size_t w : chosen)
        out.push_back(representatives(table, hit_tuples[w]));
    return out;
}

std::optional<std::pair<Tuple, Tuple>> semiladder_extension_oracle(const ImplicitBipartite& ib,
                                                                   const std::vector<Tuple>& witnesses,
                                                                   OracleCounters* counters, ExtensionBudget budget)
{
    const Graph& g = ib.graph();
    const DistanceFormula& f = ib.formula();
    const unsigned d = f.witness_arity();
    const std::size_t n = g.vertex_count();
    for (const auto& b : witnesses)
        check_tuple(g, b, d, "witness");
    if (d > budget.max_witness_arity)
        throw ResourceError("extension oracle: witness arity " + std::to_string(d) + " exceeds the budget");
    std::size_t total = 1;
    for (unsigned j = 0; j < d; ++j) {
        total *= n;
        if (total > budget.max_witness_tuples)
            throw ResourceError("extension oracle: n^d exceeds the witness-tuple budget");
    }
    if (counters)
        ++counters->extension;
    if (n == 0)
        return std::nullopt;

    std::unordered_set<std::size_t> in_b;
    for (const auto& b : witnesses)
        in_b.insert(encode_tuple(b, n));

    std::map<Vertex, std::vector<std::uint8_t>> column_cache;
    auto column = [&](Vertex v) -> const std::vector<std::uint8_t>& {
        auto it = column_cache.find(v);
        if (it == column_cache.end())
            it = column_cache.emplace(v, distance_column(g, v, f.radius())).first;
        return it->second;
    };
    const VertexSet base = vertices_of(witnesses);

    Tally tally{counters};
    for (std::size_t index = 0; index < total; ++index) {
        if (in_b.count(index))
            continue;
        const Tuple extra = decode_tuple(index, d, n);
        std::vector<Vertex> merged(base.begin(), base.end());
        merged.insert(merged.end(), extra.begin(), extra.end());
        const VertexSet pivot = make_vertex_set(std::move(merged));
        std::vector<std::vector<std::uint8_t>> columns;
        columns.reserve(pivot.size());
        for (Vertex s : pivot)
            columns.push_back(column(s));
        const auto table = ProfileTable::from_columns(pivot, f.radius(), columns, n);

        std::vector<std::vector<std::size_t>> agree_pos;
        for (const auto& b : witnesses)
            agree_pos.push_back(positions(table, b));
        const auto extra_pos = positions(table, extra);
        auto viable = [&](const std::vector<std::size_t>& picked) {
            if (candidate_side(f, table, picked, extra_pos) == Truth::True)
                return false;
            for (const auto& pos : agree_pos)
                if (candidate_side(f, table, picked, pos) == Truth::False)
                    return false;
            return true;
        };
        std::vector<std::size_t> picked;
        if (search_entries(table.size(), f.candidate_arity(), picked, viable, tally.nodes))
            return std::make_pair(representatives(table, picked), extra);
    }
    return std::nullopt;
}

}  // namespace pe
