// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "core/bench.hpp"
#include "core/bipartite.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/precore.hpp"
#include "core/solvers.hpp"
#include "support/bipartite_reference.hpp"
#include "support/reference.hpp"

using namespace pe;

namespace {

struct Instance {
    std::string family;
    Graph graph;
    /// Paths, stars and shallow trees; splitter budget failures are not allowed here.
    bool bounded_treedepth = false;
};

std::vector<Instance> small_grid()
{
    std::vector<Instance> out;
    Rng rng(2024);
    for (std::size_t i = 0; i < 520; ++i) {
        const std::size_t n = 1 + rng.below(7);
        out.push_back({"random_connected", make_random_connected(n, rng.below(2 * n), rng)});
    }
    for (std::size_t n = 1; n <= 9; ++n)
        out.push_back({"path", make_path(n), true});
    for (std::size_t n = 3; n <= 9; ++n)
        out.push_back({"cycle", make_cycle(n)});
    for (std::size_t leaves = 0; leaves <= 8; ++leaves)
        out.push_back({"star", make_star(leaves), true});
    for (std::size_t rows = 1; rows <= 3; ++rows)
        for (std::size_t cols = rows; rows * cols <= 9; ++cols)
            out.push_back({"grid", make_grid(rows, cols)});
    for (std::size_t i = 0; i < 60; ++i)
        out.push_back({"tree", make_random_tree(2 + rng.below(8), 4, rng), true});
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VertexSet all_vertices(const Graph& g)
{
    VertexSet out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out[v] = v;
    return out;
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass)
        ++failures;
    std::printf("%s [%d] %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", id, name, outcome.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
}

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

int main()
{
    const auto grid = small_grid();

    report(1, "domination matches brute force", [&] {
        const auto start = std::chrono::steady_clock::now();
        std::size_t runs = 0, mismatches = 0;
        for (const auto& inst : grid) {
            const auto d = ref::floyd(inst.graph);
            for (unsigned r = 1; r <= 2; ++r)
                for (std::size_t k = 1; k <= 3; ++k) {
                    const auto decision = semi_ladder_solve(ImplicitBipartite(inst.graph, build_delta(k, r)));
                    const auto brute = brute_force_dominating(inst.graph, k, r);
                    const bool solved = decision.kind == DecisionKind::Solution;
                    if (solved != brute.has_value() || (solved && !ref::dominates(d, decision.solution, r)))
                        ++mismatches;
                    ++runs;
                }
        }
        const double elapsed = seconds_since(start);
        return Outcome{mismatches == 0 && elapsed < 120.0 && grid.size() >= 500,
                       str(grid.size()) + " graphs, " + str(runs) + " runs, " + str(mismatches) + " mismatches"};
    });

    report(2, "independence matches brute force", [&] {
        std::size_t runs = 0, mismatches = 0, budget_hits = 0, budget_hits_bounded = 0;
        for (const auto& inst : grid) {
            const auto d = ref::floyd(inst.graph);
            for (unsigned r = 1; r <= 2; ++r)
                for (std::size_t k = 1; k <= 3; ++k) {
                    ++runs;
                    IndependentSetResult out;
                    try {
                        out = independent_set_solve(inst.graph, k, r);
                    } catch (const SplitterBudgetError&) {
                        ++budget_hits;
                        budget_hits_bounded += inst.bounded_treedepth;
                        continue;
                    }
                    const auto brute = brute_force_independent(inst.graph, k, r);
                    const bool solved = out.kind == DecisionKind::Solution;
                    if (solved != brute.has_value() ||
                        (solved && (out.solution.size() != k || !ref::independent(d, out.solution, r))))
                        ++mismatches;
                }
        }
        return Outcome{mismatches == 0 && budget_hits_bounded == 0,
                       str(runs) + " runs, " + str(mismatches) + " mismatches, SPLITTER_BUDGET " + str(budget_hits) +
                           " (" + str(budget_hits_bounded) + " on bounded-treedepth families)"};
    });

    report(3, "round bounds", [&] {
        std::size_t semi_checked = 0, ladder_checked = 0, violations = 0, skipped = 0, wrong = 0;
        for (const auto& inst : grid) {
            const Graph& g = inst.graph;
            for (unsigned r = 1; r <= 2; ++r)
                for (std::size_t k = 1; k <= 3; ++k) {
                    std::vector<DistanceFormula> formulas = {build_delta(k, r)};
                    if (k >= 2 && g.vertex_count() >= 2)
                        formulas.push_back(build_eta(k, r));
                    for (const auto& f : formulas) {
                        BipartiteGraph h;
                        try {
                            h = materialize(g, f, 100'000);
                        } catch (const ResourceError&) {
                            ++skipped;
                            continue;
                        }
                        const ImplicitBipartite ib(g, f);
                        const auto semi = semi_ladder_solve(ib);
                        violations += semi.transcript.rounds > index_of(h, ObstructionKind::Semiladder).index;
                        ++semi_checked;
                        const std::size_t p = std::max<std::size_t>(min_weak_helly(h), 1);
                        const auto ladder = ladder_solve(ib, p);
                        const std::size_t ladder_index = index_of(h, ObstructionKind::Ladder).index;
                        violations += !(BigInt(ladder.transcript.rounds) < ladder_round_bound(p, ladder_index));
                        wrong += (ladder.kind == DecisionKind::Exists) != coverage_bruteforce(h).has_value();
                        ++ladder_checked;
                    }
                }
        }
        return Outcome{violations == 0 && wrong == 0,
                       str(semi_checked) + " semi-ladder and " + str(ladder_checked) + " ladder runs, " +
                           str(violations) + " violations, " + str(wrong) + " wrong ladder verdicts, " +
                           str(skipped) + " over the pair limit"};
    });

    report(4, "bipartite index and Helly relations", [&] {
        Rng rng(404);
        std::size_t instances = 0, counterexamples = 0;
        for (; instances < 1000; ++instances) {
            const std::size_t left = 1 + rng.below(10), right = 1 + rng.below(10);
            const auto h = ref::random_bipartite(left, right, 1 + rng.below(5), 6, rng);
            const std::size_t co = index_of(h, ObstructionKind::Comatching).index;
            const std::size_t lad = index_of(h, ObstructionKind::Ladder).index;
            const std::size_t semi = index_of(h, ObstructionKind::Semiladder).index;
            for (std::size_t p = 1; p <= 4; ++p)
                counterexamples += check_p_helly(h, p, HellyVariant::Strong).holds != (co <= p);
            counterexamples += semi < std::max(lad, co);
            const unsigned l = static_cast<unsigned>(std::max(lad, co) + 1);
            counterexamples += !(BigInt(semi) < ramsey_bound(2, l));
        }

        std::size_t combos = 0;
        for (std::size_t i = 0; i < grid.size(); i += 3) {
            const Graph& g = grid[i].graph;
            if (g.vertex_count() > 7)
                continue;
            for (unsigned r = 1; r <= 2; ++r) {
                const std::size_t base = index_of(materialize(g, build_delta(1, r)), ObstructionKind::Semiladder).index;
                for (unsigned k = 2; k <= 3; ++k) {
                    const std::size_t semi =
                        index_of(materialize(g, build_delta(k, r)), ObstructionKind::Semiladder).index;
                    // l = base + 1, so the bound is k^(l-1) = k^base.
                    BigInt bound = 1;
                    for (std::size_t e = 0; e < base; ++e)
                        bound *= k;
                    counterexamples += !(BigInt(semi) < bound);
                    ++combos;
                }
            }
        }
        return Outcome{counterexamples == 0, str(instances) + " bipartite graphs, " + str(combos) +
                                                 " disjunction materializations, " + str(counterexamples) +
                                                 " counterexamples"};
    });

    report(5, "K_tt-free semi-ladder bound", [&] {
        Rng rng(55);
        std::size_t count = 0, violations = 0, max_index = 0;
        for (; count < 240; ++count) {
            const std::size_t t = 2 + count % 2;
            const std::size_t n = 2 + rng.below(9);
            const Graph g = make_ktt_free_random(n, t, 1 + rng.below(3), 4, rng);
            if (contains_ktt_bruteforce(g, t)) {
                ++violations;
                continue;
            }
            const std::size_t semi = index_of(materialize(g, build_delta(1, 1)), ObstructionKind::Semiladder).index;
            max_index = std::max(max_index, semi);
            violations += semi >= 3 * t;
        }
        return Outcome{violations == 0,
                       str(count) + " graphs, max index " + str(max_index) + ", " + str(violations) + " violations"};
    });

    report(6, "Ramsey extraction on K_32", [&] {
        Rng rng(66);
        std::size_t found = 0;
        for (int trial = 0; trial < 100; ++trial) {
            EdgeColoring coloring(32, 2);
            for (std::size_t u = 0; u < 32; ++u)
                for (std::size_t v = u + 1; v < 32; ++v)
                    coloring.set_color(u, v, static_cast<unsigned>(rng.below(2)));
            const auto triple = find_monochromatic(coloring, 3);
            if (!triple || triple->size() != 3)
                continue;
            const auto& t = *triple;
            const unsigned c = coloring.color(t[0], t[1]);
            if (t[0] != t[1] && t[1] != t[2] && t[0] != t[2] && coloring.color(t[0], t[2]) == c &&
                coloring.color(t[1], t[2]) == c)
                ++found;
        }
        return Outcome{found == 100, str(found) + "/100 verified monochromatic triples"};
    });

    report(7, "graph power distance identity", [&] {
        Rng rng(77);
        std::size_t pairs = 0, violations = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const Graph g = ref::random_graph(1 + rng.below(12), 1, 3, rng);
            const auto d = ref::floyd(g);
            for (unsigned s = 2; s <= 3; ++s) {
                const auto ds = ref::floyd(graph_power(g, s));
                for (std::size_t u = 0; u < d.n; ++u)
                    for (std::size_t v = 0; v < d.n; ++v) {
                        const unsigned want = d(u, v) >= ref::kFar ? ref::kFar : (d(u, v) + s - 1) / s;
                        violations += ds(u, v) != want;
                        ++pairs;
                    }
            }
        }
        return Outcome{violations == 0, str(pairs) + " pairs, " + str(violations) + " violations"};
    });

    report(8, "core and pre-core contracts", [&] {
        std::size_t cores = 0, precores = 0, violations = 0;
        for (const auto& inst : grid) {
            const Graph& g = inst.graph;
            const auto d = ref::floyd(g);
            for (unsigned r = 1; r <= 2; ++r)
                for (std::size_t k = 1; k <= 3; ++k) {
                    const auto f = build_delta(k, r);
                    const auto h = materialize(g, f, 100'000);
                    const auto result = coverage_core(ImplicitBipartite(g, f));
                    std::vector<std::size_t> core;
                    for (const auto& b : result.core)
                        core.push_back(encode_tuple(b, g.vertex_count()));
                    for (std::size_t l = 0; l < h.left_size(); ++l) {
                        bool agrees = true;
                        for (auto b : core)
                            agrees = agrees && h.has_edge(l, b);
                        violations += agrees && !h.row(l).all();
                    }
                    ++cores;

                    const auto pc = compute_precore(g, all_vertices(g), k, r);
                    violations += !ref::precore_captures(d, all_vertices(g), k, r, pc.q);
                    ++precores;
                }
        }
        return Outcome{violations == 0, str(cores) + " coverage cores, " + str(precores) + " pre-cores, " +
                                            str(violations) + " violations"};
    });

    report(9, "linear scaling on grids", [&] {
        BenchConfig config;
        for (auto [rows, cols] : {std::pair{10, 10}, std::pair{25, 40}, std::pair{100, 100}})
            config.instances.push_back({"grid", {{"rows", rows}, {"cols", cols}}, {0}});
        config.problems.push_back({BenchProblem::Domset, 3, 1, std::nullopt});
        config.repeats = 5;
        const auto start = std::chrono::steady_clock::now();
        const auto records = run_bench(config);
        const auto rows = scaling_table(records);
        const double elapsed = seconds_since(start);
        bool ok = rows.size() == 3 && elapsed < 300.0;
        std::string detail;
        for (const auto& row : rows) {
            ok = ok && row.within_linear;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s|G|=%zu t=%.2gs", detail.empty() ? "" : "; ", row.size, row.seconds);
            detail += buf;
            if (row.size_ratio > 0) {
                std::snprintf(buf, sizeof buf, " (size x%.1f, time x%.1f)", row.size_ratio, row.time_ratio);
                detail += buf;
            }
        }
        for (const auto& rec : records)
            ok = ok && rec.error.empty();
        return Outcome{ok, detail};
    });

    return failures == 0 ? 0 : 1;
}
