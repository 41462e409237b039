#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <idcode/bounds.hpp>
#include <idcode/constructions.hpp>
#include <idcode/generators.hpp>
#include <idcode/identification.hpp>
#include <idcode/report.hpp>
#include <idcode/solver.hpp>

using namespace idcode;

TEST_CASE("bounds report schema")
{
    auto j = to_json(evaluate_bounds(path_graph(4), true));
    CHECK(j["n"] == 4);
    CHECK(j["exact"] == 3);
    CHECK(j["witness"].is_array());
    CHECK(j["profile"]["leaf_count"] == 2);
    REQUIRE(j["bounds"].is_array());
    for (const auto & b : j["bounds"]) {
        CHECK(b["name"].is_string());
        CHECK(b["applicable"].is_boolean());
        CHECK(b["value"].is_number_integer());
        CHECK((b["tight"].is_boolean() || b["tight"].is_null()));
    }
    auto without = to_json(evaluate_bounds(path_graph(4), false));
    CHECK(without["exact"].is_null());
    CHECK(without["witness"].is_null());
}

TEST_CASE("reports are deterministic")
{
    auto g = prop12_graph(1);
    CHECK(to_json(evaluate_bounds(g, true)).dump() == to_json(evaluate_bounds(g, true)).dump());
    auto a = to_json(gamma_id(g));
    auto b = to_json(gamma_id(g));
    a.erase("time_ms");
    b.erase("time_ms");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("certificate and trace views")
{
    auto c = to_json(verify_identifying(path_graph(4), VertexSet{1, 2}));
    CHECK(c["verdict"] == "unseparated");
    CHECK(c["witness"] == nlohmann::json::array({1, 2}));
    CHECK(c["size"] == 2);
    CHECK(c["isets"].size() == 4);

    auto t = to_json(parity_shift_code(path_graph(4)).even);
    CHECK(t["root"] == 1);
    CHECK(t["parity"] == "even");
    CHECK(t["shifts"][0]["removed"] == 0);
    CHECK(t["shifts"][0]["added"] == 2);
}
