#include <doctest.h>

#include <set>

#include "core/bipartite.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/oracles.hpp"
#include "core/profiles.hpp"
#include "support/reference.hpp"

using namespace pe;

namespace {

std::vector<DistanceFormula> formula_grid()
{
    std::vector<DistanceFormula> out = {build_delta(1, 1), build_delta(2, 1), build_delta(2, 2), build_eta(2, 1),
                                        build_eta(2, 2)};
    // A d = 2 formula: x0 is close to both witnesses or x1 is far from y1.
    out.push_back(parse_formula(
        R"({"c":2,"d":2,"node":{"or":[{"and":[{"atom":{"q":1,"x":0,"y":0}},{"atom":{"q":1,"x":0,"y":1}}]},)"
        R"({"not":{"atom":{"q":2,"x":1,"y":1}}}]}})"));
    return out;
}

Tuple random_tuple(std::size_t arity, std::size_t n, Rng& rng)
{
    Tuple t(arity);
    for (auto& v : t)
        v = static_cast<Vertex>(rng.below(n));
    return t;
}

// Replaces each entry by another vertex with the same profile on `pivot`.
Tuple twin(const Graph& g, const VertexSet& pivot, unsigned r, const Tuple& t, Rng& rng)
{
    auto table = build_profile_table(g, pivot, r);
    Tuple out;
    for (Vertex v : t) {
        auto members = table.members(table.entry_of(v));
        out.push_back(members[rng.below(members.size())]);
    }
    return out;
}

VertexSet vertices_of(const std::vector<Tuple>& ts)
{
    std::vector<Vertex> all;
    for (const auto& t : ts)
        all.insert(all.end(), t.begin(), t.end());
    return make_vertex_set(all);
}

}  // namespace

TEST_CASE("oracle examples")
{
    Graph p3 = make_path(3);
    ImplicitBipartite dom(p3, build_delta(1, 1));
    CHECK(candidate_oracle(dom, {}) == Tuple{0});
    CHECK(candidate_oracle(dom, {{0}, {2}}) == Tuple{1});
    CHECK(!weak_witness_oracle(dom, {1}));
    CHECK(weak_witness_oracle(dom, {0}) == Tuple{2});

    Graph two(2, {});
    ImplicitBipartite iso(two, build_delta(1, 1));
    CHECK(!candidate_oracle(iso, {{0}, {1}}));
    auto p2 = strong_witness_oracle(iso, {{0}, {1}}, 2);
    REQUIRE(p2);
    CHECK(*p2 == std::vector<Tuple>{{1}, {0}});
    CHECK(!strong_witness_oracle(iso, {{0}, {1}}, 1));
    CHECK(!strong_witness_oracle(dom, {{1}}, 3));
    CHECK_THROWS_AS(strong_witness_oracle(dom, {}, 1), InputError);

    Graph k1(1, {});
    ImplicitBipartite single(k1, build_delta(3, 1));
    CHECK(!weak_witness_oracle(single, {0, 0, 0}));

    Graph star = make_star(2);  // center 0, leaves 1 2
    ImplicitBipartite st(star, build_delta(1, 1));
    auto ext = semiladder_extension_oracle(st, {});
    REQUIRE(ext);
    CHECK(!st.agrees(ext->first, ext->second));

    Graph k2 = make_path(2);
    CHECK(!semiladder_extension_oracle(ImplicitBipartite(k2, build_delta(1, 1)), {}));

    auto e = semiladder_extension_oracle(dom, {{0}});
    REQUIRE(e);
    CHECK(e->first == Tuple{0});
    CHECK(e->second == Tuple{2});

    CHECK(!candidate_oracle(ImplicitBipartite(Graph(), build_delta(1, 1)), {}));
    CHECK_THROWS_AS(candidate_oracle(dom, {{7}}), InputError);
    CHECK_THROWS_AS(semiladder_extension_oracle(ImplicitBipartite(make_path(2000), build_delta(1, 1)), {}, nullptr,
                                                ExtensionBudget{2, 100}),
                    ResourceError);
}

TEST_CASE("oracles agree with the materialized bipartite graph")
{
    Rng rng(2024);
    const auto formulas = formula_grid();
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(7);
        Graph g = ref::random_graph(n, 1 + rng.below(3), 5, rng);
        for (const auto& f : formulas) {
            const unsigned c = f.candidate_arity(), d = f.witness_arity();
            ImplicitBipartite ib(g, f);
            auto h = materialize(g, f);
            const std::size_t L = h.left_size(), R = h.right_size();

            // Candidate oracle.
            for (int q = 0; q < 4; ++q) {
                std::vector<Tuple> b_set;
                Bitset allowed(L);
                allowed.set();
                const std::size_t count = rng.below(4);
                for (std::size_t i = 0; i < count; ++i)
                    b_set.push_back(random_tuple(d, n, rng));
                for (std::size_t a = 0; a < L; ++a)
                    for (const auto& b : b_set)
                        if (!h.has_edge(a, encode_tuple(b, n)))
                            allowed.reset(a);
                auto got = candidate_oracle(ib, b_set);
                CHECK(got.has_value() == allowed.any());
                if (got) {
                    for (const auto& b : b_set)
                        CHECK(ib.agrees(*got, b));
                    Tuple other = twin(g, vertices_of(b_set), f.radius(), *got, rng);
                    for (const auto& b : b_set)
                        CHECK(ib.agrees(other, b));
                    // More constraints never help.
                    auto more = b_set;
                    more.push_back(random_tuple(d, n, rng));
                    if (!candidate_oracle(ib, b_set))
                        CHECK(!candidate_oracle(ib, more));
                } else {
                    auto more = b_set;
                    more.push_back(random_tuple(d, n, rng));
                    CHECK(!candidate_oracle(ib, more));
                }
            }

            // Weak witness oracle.
            for (int q = 0; q < 4; ++q) {
                Tuple a = random_tuple(c, n, rng);
                auto got = weak_witness_oracle(ib, a);
                CHECK(got.has_value() == !h.row(encode_tuple(a, n)).all());
                if (got) {
                    CHECK(!ib.agrees(a, *got));
                    CHECK(!ib.agrees(a, twin(g, make_vertex_set(a), f.radius(), *got, rng)));
                }
            }

            // Strong witness oracle.
            for (int q = 0; q < 3; ++q) {
                std::vector<Tuple> a_set;
                const std::size_t count = 1 + rng.below(3);
                for (std::size_t i = 0; i < count; ++i)
                    a_set.push_back(random_tuple(c, n, rng));
                const std::size_t p = 1 + rng.below(2);
                bool exists = false;
                for (std::size_t w1 = 0; w1 < R && !exists; ++w1)
                    for (std::size_t w2 = (p >= 2 ? w1 : R - 1); w2 < R && !exists; ++w2) {
                        bool all_hit = true;
                        for (const auto& a : a_set) {
                            auto ai = encode_tuple(a, n);
                            all_hit = all_hit && (!h.has_edge(ai, w1) || !h.has_edge(ai, w2));
                        }
                        exists = all_hit;
                    }
                if (p == 1) {
                    exists = false;
                    for (std::size_t w = 0; w < R && !exists; ++w) {
                        bool all_hit = true;
                        for (const auto& a : a_set)
                            all_hit = all_hit && !h.has_edge(encode_tuple(a, n), w);
                        exists = all_hit;
                    }
                }
                auto got = strong_witness_oracle(ib, a_set, p);
                CHECK(got.has_value() == exists);
                if (got) {
                    CHECK(got->size() <= p);
                    for (const auto& a : a_set) {
                        bool hit = false;
                        for (const auto& w : *got)
                            hit = hit || !ib.agrees(a, w);
                        CHECK(hit);
                    }
                }
            }

            // Extension oracle.
            for (int q = 0; q < 3; ++q) {
                std::vector<Tuple> b_set;
                std::set<std::size_t> in_b;
                const std::size_t count = rng.below(3);
                for (std::size_t i = 0; i < count; ++i) {
                    b_set.push_back(random_tuple(d, n, rng));
                    in_b.insert(encode_tuple(b_set.back(), n));
                }
                bool exists = false;
                for (std::size_t a = 0; a < L && !exists; ++a) {
                    bool agrees_b = true;
                    for (auto b : in_b)
                        agrees_b = agrees_b && h.has_edge(a, b);
                    if (!agrees_b)
                        continue;
                    for (std::size_t b = 0; b < R && !exists; ++b)
                        exists = !in_b.count(b) && !h.has_edge(a, b);
                }
                auto got = semiladder_extension_oracle(ib, b_set);
                CHECK(got.has_value() == exists);
                if (got) {
                    CHECK(!in_b.count(encode_tuple(got->second, n)));
                    CHECK(!ib.agrees(got->first, got->second));
                    for (const auto& b : b_set)
                        CHECK(ib.agrees(got->first, b));
                }
            }
        }
    }
}

TEST_CASE("oracle counters")
{
    Graph p4 = make_path(4);
    ImplicitBipartite ib(p4, build_delta(2, 1));
    OracleCounters counters;
    candidate_oracle(ib, {{0}}, &counters);
    weak_witness_oracle(ib, {0, 3}, &counters);
    strong_witness_oracle(ib, {{0, 0}}, 1, &counters);
    semiladder_extension_oracle(ib, {}, &counters);
    CHECK(counters.candidate == 1);
    CHECK(counters.weak_witness == 1);
    CHECK(counters.strong_witness == 1);
    CHECK(counters.extension == 1);
    CHECK(counters.profile_nodes > 0);
}
