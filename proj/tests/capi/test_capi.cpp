#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "pe.h"

using nlohmann::json;

namespace {

json take_json(char* s)
{
    REQUIRE(s != nullptr);
    json out = json::parse(s);
    pe_string_free(s);
    return out;
}

pe_graph* parse(const char* text)
{
    pe_graph* g = nullptr;
    REQUIRE(pe_graph_parse(text, &g) == PE_OK);
    REQUIRE(g != nullptr);
    return g;
}

}  // namespace

TEST_CASE("graph handles")
{
    pe_graph* g = parse("4 3\n0 1\n1 2\n2 3\n");
    CHECK(pe_graph_vertex_count(g) == 4);
    CHECK(pe_graph_edge_count(g) == 3);
    char* text = nullptr;
    REQUIRE(pe_graph_to_text(g, &text) == PE_OK);
    CHECK(std::string(text) == "4 3\n0 1\n1 2\n2 3\n");
    pe_string_free(text);
    pe_graph_free(g);
    pe_graph_free(nullptr);
}

TEST_CASE("error codes and last error")
{
    pe_graph* g = nullptr;
    CHECK(pe_graph_parse("3 1\n0 7\n", &g) == PE_ERR_PARSE);
    CHECK(g == nullptr);
    CHECK(std::string(pe_last_error()).find("line 2") != std::string::npos);
    CHECK(pe_graph_parse(nullptr, &g) == PE_ERR_INPUT);
    CHECK(pe_graph_generate("no_such_family", "{}", 0, &g) == PE_ERR_INPUT);
    CHECK(pe_graph_generate("grid", "{not json", 0, &g) == PE_ERR_PARSE);
    CHECK(std::string(pe_status_name(PE_ERR_SPLITTER_BUDGET)) == "splitter_budget");

    pe_graph* p4 = parse("4 3\n0 1\n1 2\n2 3\n");
    char* out = nullptr;
    CHECK(pe_solve_domset(p4, 0, 1, &out) == PE_ERR_INPUT);
    CHECK(out == nullptr);
    CHECK(pe_solve_indep(p4, 2, 1, "no_such_strategy", 20, &out) == PE_ERR_INPUT);
    pe_graph_free(p4);
}

TEST_CASE("domination on P4")
{
    pe_graph* g = parse("4 3\n0 1\n1 2\n2 3\n");
    char* out = nullptr;
    REQUIRE(pe_solve_domset(g, 1, 1, &out) == PE_OK);
    json j = take_json(out);
    CHECK(j["schema"] == "pe/1");
    CHECK(j["decision"] == "NO_SOLUTION");

    REQUIRE(pe_solve_domset(g, 2, 1, &out) == PE_OK);
    j = take_json(out);
    CHECK(j["decision"] == "SOLUTION");
    CHECK(j["verified"] == true);
    CHECK(j["solution"].size() == 2);
    pe_graph_free(g);
}

TEST_CASE("independence on C5")
{
    pe_graph* g = parse("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    char* out = nullptr;
    REQUIRE(pe_solve_indep(g, 2, 2, nullptr, 20, &out) == PE_OK);
    CHECK(take_json(out)["decision"] == "NO_SOLUTION");
    REQUIRE(pe_solve_indep(g, 2, 1, "bfs_center", 20, &out) == PE_OK);
    json j = take_json(out);
    CHECK(j["decision"] == "SOLUTION");
    CHECK(j["strategy"] == "bfs_center");
    pe_graph_free(g);
}

TEST_CASE("formulas through the C API")
{
    pe_formula* f = nullptr;
    REQUIRE(pe_formula_eta(2, 2, &f) == PE_OK);
    char* text = nullptr;
    REQUIRE(pe_formula_to_json(f, &text) == PE_OK);
    pe_formula* back = nullptr;
    REQUIRE(pe_formula_parse(text, &back) == PE_OK);
    pe_string_free(text);

    pe_graph* c5 = parse("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    char* out = nullptr;
    REQUIRE(pe_solve_ladder(c5, back, 2, &out) == PE_OK);
    CHECK(take_json(out)["decision"] == "NOT_EXISTS");
    CHECK(pe_solve_ladder(c5, back, 0, &out) == PE_ERR_INPUT);

    pe_formula* delta = nullptr;
    REQUIRE(pe_formula_delta(1, 1, &delta) == PE_OK);
    REQUIRE(pe_coverage_core(c5, delta, &out) == PE_OK);
    CHECK(take_json(out)["transcript"]["outcome"] == "CORE");
    REQUIRE(pe_solve_formula(c5, delta, &out) == PE_OK);
    CHECK(take_json(out)["decision"] == "NO_SOLUTION");

    CHECK(pe_formula_parse("{\"c\":1}", &f) == PE_ERR_PARSE);
    pe_formula_free(f);
    pe_formula_free(back);
    pe_formula_free(delta);
    pe_graph_free(c5);
}

TEST_CASE("index measurement on the order-4 ladder")
{
    char* out = nullptr;
    REQUIRE(pe_measure_indices("4 4 6\n1 0\n2 0\n2 1\n3 0\n3 1\n3 2\n", &out) == PE_OK);
    json j = take_json(out);
    CHECK(j["ladder"] == 4);
    CHECK(j["semiladder"] == 4);
    CHECK(j["comatching"] == 1);
}

TEST_CASE("profile measurement")
{
    pe_graph* g = parse("5 4\n0 1\n1 2\n2 3\n3 4\n");
    char* out = nullptr;
    REQUIRE(pe_measure_profiles(g, 1, 1, 7, &out) == PE_OK);
    json j = take_json(out);
    // One pivot at distance cap 1 separates itself, its neighbours and the rest.
    CHECK(j["max_profiles"] == 3);
    pe_graph_free(g);
}

TEST_CASE("bench is deterministic without timing")
{
    const char* config = R"({"instances":[{"family":"path","params":[{"n":6},{"n":8}]}],
                              "problems":[{"problem":"domset","k":2,"r":1},{"problem":"indep","k":2,"r":1}],
                              "seeds":[1,2],"workers":2,"cross_validate":true,"bound_check":true})";
    char* first = nullptr;
    char* second = nullptr;
    REQUIRE(pe_bench_run(config, 0, &first, nullptr, nullptr) == PE_OK);
    REQUIRE(pe_bench_run(config, 0, &second, nullptr, nullptr) == PE_OK);
    CHECK(std::string(first) == std::string(second));
    CHECK(std::string(first).find("seconds") == std::string::npos);
    pe_string_free(first);
    pe_string_free(second);

    char* js = nullptr;
    REQUIRE(pe_bench_run(config, 0, nullptr, nullptr, &js) == PE_OK);
    json j = take_json(js);
    REQUIRE(j["records"].size() == 8);
    for (const auto& rec : j["records"]) {
        CHECK(rec["brute_force_agrees"] == true);
        if (rec["problem"] == "domset")
            CHECK(rec["bound_respected"] == true);
    }

    CHECK(pe_bench_run("{\"instances\":3}", 0, &first, nullptr, nullptr) == PE_ERR_PARSE);
}
