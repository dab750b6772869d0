#include <doctest.h>

#include "core/bipartite.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "support/bipartite_reference.hpp"
#include "support/reference.hpp"

using namespace pe;

namespace {

unsigned to_mask(const std::vector<std::size_t>& members)
{
    unsigned m = 0;
    for (auto x : members)
        m |= 1u << x;
    return m;
}

}  // namespace

TEST_CASE("obstruction indices on the reference patterns")
{
    auto co4 = make_comatching_pattern(4);
    auto r = index_of(co4, ObstructionKind::Comatching);
    CHECK(r.index == 4);
    CHECK(is_valid_obstruction(co4, r.witness));

    BipartiteGraph k33(3, 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            k33.add_edge(a, b);
    CHECK(index_of(k33, ObstructionKind::Semiladder).index == 0);
    CHECK(index_of(k33, ObstructionKind::Semiladder).witness.order() == 0);

    auto ladder4 = make_ladder_pattern(4);
    auto lad = index_of(ladder4, ObstructionKind::Ladder);
    CHECK(lad.index == 4);
    CHECK(is_valid_obstruction(ladder4, lad.witness));
    auto semi = index_of(ladder4, ObstructionKind::Semiladder);
    CHECK(semi.index == 4);
    CHECK(is_valid_obstruction(ladder4, semi.witness));

    CHECK(index_of(BipartiteGraph(0, 0), ObstructionKind::Ladder).index == 0);
}

TEST_CASE("memoized index search matches naive enumeration")
{
    Rng rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        auto h = ref::random_bipartite(1 + rng.below(5), 1 + rng.below(5), 1 + rng.below(4), 5, rng);
        for (auto kind : {ObstructionKind::Comatching, ObstructionKind::Ladder, ObstructionKind::Semiladder}) {
            auto result = index_of(h, kind);
            CHECK(result.index == ref::naive_index(h, kind));
            CHECK(result.witness.order() == result.index);
            CHECK(is_valid_obstruction(h, result.witness));
        }
    }
}

TEST_CASE("index search respects its state budget")
{
    Rng rng(1);
    auto h = ref::random_bipartite(12, 12, 1, 2, rng);
    CHECK_THROWS_AS(index_of(h, ObstructionKind::Ladder, 3), ResourceError);
}

TEST_CASE("Helly examples")
{
    BipartiteGraph covered(2, 3);
    for (std::size_t b = 0; b < 3; ++b)
        covered.add_edge(1, b);
    for (std::size_t p = 0; p < 4; ++p)
        CHECK(check_p_helly(covered, p, HellyVariant::Weak).holds);

    for (std::size_t n = 1; n <= 5; ++n) {
        auto co = make_comatching_pattern(n);
        for (std::size_t p = 0; p < n; ++p) {
            auto result = check_p_helly(co, p, HellyVariant::Strong);
            CHECK(!result.holds);
            CHECK(!ref::naive_helly_pair(co, to_mask(result.a_set), to_mask(result.b_set), p));
        }
        CHECK(check_p_helly(co, n, HellyVariant::Strong).holds);
    }

    BipartiteGraph lonely(1, 1);
    CHECK(check_p_helly(lonely, 1, HellyVariant::Weak).holds);
    CHECK(!check_p_helly(lonely, 0, HellyVariant::Weak).holds);
    CHECK(min_weak_helly(lonely) == 1);
    CHECK(check_p_helly(BipartiteGraph(0, 2), 0, HellyVariant::Strong).holds);
}

TEST_CASE("Helly checks match naive enumeration over all (A, B)")
{
    Rng rng(8);
    for (int trial = 0; trial < 150; ++trial) {
        auto h = ref::random_bipartite(rng.below(6), rng.below(6), 1 + rng.below(4), 5, rng);
        for (std::size_t p = 0; p <= 5; ++p)
            for (auto v : {HellyVariant::Weak, HellyVariant::Full, HellyVariant::Strong})
                CHECK(check_p_helly(h, p, v).holds == ref::naive_helly(h, p, v));
    }
}

TEST_CASE("strong p-Helly iff comatching index <= p")
{
    Rng rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        auto h = ref::random_bipartite(1 + rng.below(8), 1 + rng.below(8), 1 + rng.below(4), 5, rng);
        const auto co = index_of(h, ObstructionKind::Comatching).index;
        for (std::size_t p = 0; p <= co + 1; ++p)
            CHECK(check_p_helly(h, p, HellyVariant::Strong).holds == (co <= p));
    }
}

TEST_CASE("coverage_bruteforce")
{
    BipartiteGraph star(1, 3);
    for (std::size_t b = 0; b < 3; ++b)
        star.add_edge(0, b);
    CHECK(coverage_bruteforce(star) == std::optional<std::size_t>(0));
    CHECK(!coverage_bruteforce(make_comatching_pattern(4)));
    CHECK(coverage_bruteforce(BipartiteGraph(3, 0)) == std::optional<std::size_t>(0));
    CHECK(!coverage_bruteforce(BipartiteGraph(0, 0)));
}

TEST_CASE("bipartite text format")
{
    auto h = make_ladder_pattern(4);
    CHECK(BipartiteGraph::parse(h.to_text()) == h);
    CHECK(h.to_text().substr(0, 6) == "4 4 6\n");
    CHECK_THROWS_AS(BipartiteGraph::parse("2 2 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(BipartiteGraph::parse("2 2 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(BipartiteGraph::parse("2 2 2\n0 1\n0 1\n"), ParseError);
}

TEST_CASE("ramsey_bound")
{
    CHECK(ramsey_bound(2, 2) == 8);
    CHECK(ramsey_bound(2, 3) == 32);
    CHECK(ramsey_bound(3, 2) == 243);
    CHECK(ramsey_bound(4, 20).str() == BigInt(boost::multiprecision::pow(BigInt(4), 79)).str());
    CHECK_THROWS_AS(ramsey_bound(1, 3), InputError);
}

TEST_CASE("find_monochromatic")
{
    EdgeColoring mono(4, 2);
    auto all = find_monochromatic(mono, 4);
    REQUIRE(all);
    CHECK(*all == std::vector<std::size_t>{0, 1, 2, 3});

    Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        EdgeColoring c(8, 2);
        for (std::size_t u = 0; u < 8; ++u)
            for (std::size_t v = u + 1; v < 8; ++v)
                c.set_color(u, v, static_cast<unsigned>(rng.below(2)));
        auto edge = find_monochromatic(c, 2);
        REQUIRE(edge);
        CHECK(edge->size() == 2);
    }

    for (int trial = 0; trial < 50; ++trial) {
        EdgeColoring c(81, 3);
        for (std::size_t u = 0; u < 81; ++u)
            for (std::size_t v = u + 1; v < 81; ++v)
                c.set_color(u, v, static_cast<unsigned>(rng.below(3)));
        // 81 is far below 3^8, so success is not guaranteed; when found it is valid.
        if (auto tri = find_monochromatic(c, 3)) {
            REQUIRE(tri->size() == 3);
            CHECK(c.color((*tri)[0], (*tri)[1]) == c.color((*tri)[1], (*tri)[2]));
            CHECK(c.color((*tri)[0], (*tri)[1]) == c.color((*tri)[0], (*tri)[2]));
        }
    }

    EdgeColoring two(2, 2);
    two.set_color(0, 1, 1);
    CHECK(!find_monochromatic(two, 3));
}

TEST_CASE("materialize")
{
    auto one = materialize(Graph(1, {}), build_delta(1, 1));
    CHECK(one.left_size() == 1);
    CHECK(one.has_edge(0, 0));

    auto p3 = materialize(make_path(3), build_delta(1, 1));
    CHECK(p3.row(1).all());
    CHECK(coverage_bruteforce(p3) == std::optional<std::size_t>(1));

    CHECK(!coverage_bruteforce(materialize(Graph(2, {}), build_delta(1, 1))));

    auto pairs = materialize(make_path(4), build_delta(2, 1));
    CHECK(pairs.left_size() == 16);
    auto idx = encode_tuple(std::vector<Vertex>{0, 2}, 4);
    CHECK(idx == 2);
    CHECK(decode_tuple(idx, 2, 4) == std::vector<Vertex>{0, 2});
    CHECK(pairs.row(idx).all());

    CHECK_THROWS_AS(materialize(make_path(20), build_delta(3, 1), 1000), ResourceError);
}
