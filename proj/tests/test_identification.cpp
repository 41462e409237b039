#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <idcode/errors.hpp>
#include <idcode/generators.hpp>
#include <idcode/identification.hpp>

using namespace idcode;

TEST_CASE("i_set")
{
    auto p4 = path_graph(4);
    CHECK(i_set(p4, VertexSet{0, 2}, 1) == VertexSet{0, 2});
    CHECK(i_set(p4, VertexSet{0, 2}, 3) == VertexSet{2});
    CHECK(i_set(p4, VertexSet{3}, 0).empty());
    CHECK_THROWS_AS(i_set(p4, VertexSet{0}, 4), PreconditionError);
}

TEST_CASE("verify_identifying examples")
{
    auto p4 = path_graph(4);
    auto ok = verify_identifying(p4, VertexSet{0, 1, 2});
    CHECK(ok.valid());
    CHECK(ok.iset_table.size() == 4);
    CHECK(ok.iset_table[3] == VertexSet{2});

    auto bad = verify_identifying(p4, VertexSet{1, 2});
    CHECK(bad.verdict == Verdict{verdict::Unseparated{1, 2}});
    CHECK(verdict_name(bad.verdict) == "unseparated");
    CHECK(verdict_witness(bad.verdict) == std::vector<Vertex>{1, 2});

    auto k3 = cycle_graph(3);
    CHECK(std::holds_alternative<verdict::Unseparated>(verify_identifying(k3, VertexSet{0, 1, 2}).verdict));

    CHECK(verify_identifying(p4, VertexSet{3}).verdict == Verdict{verdict::Undominated{0}});
    CHECK(verdict_name(Verdict{verdict::Valid{}}) == "valid");
}

TEST_CASE("verify_td_identifying examples")
{
    auto star = star_graph(4);
    CHECK(verify_td_identifying(star, VertexSet{0, 1, 2}).valid());
    CHECK(verify_td_identifying(path_graph(4), VertexSet{0, 1, 2}).valid());
    auto p3 = verify_td_identifying(path_graph(3), VertexSet{0});
    CHECK(p3.verdict == Verdict{verdict::NotTotalDominating{0}});
    CHECK(verdict_name(p3.verdict) == "not_total_dominating");
}

TEST_CASE("out-of-range code vertices are rejected")
{
    CHECK_THROWS_AS(verify_identifying(path_graph(3), VertexSet{0, 5}), PreconditionError);
}

TEST_CASE("verifiers agree with the brute-force oracle on every subset, n <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto & g : oracle::labelled_graphs(n)) {
            for (oracle::Mask m = 0; m < (oracle::Mask{1} << n); ++m) {
                auto code = oracle::to_set(m);
                CAPTURE(n);
                CAPTURE(code.to_string());
                CHECK(verify_identifying(g, code).valid() == oracle::is_identifying(g, m));
                CHECK(verify_td_identifying(g, code).valid() == oracle::is_identifying(g, m, true));
            }
            CHECK(verify_identifying(g, all_vertices(g)).valid() == is_identifiable(g));
        }
    }
}

TEST_CASE("failure verdicts name a real defect")
{
    for (int n = 2; n <= 5; ++n) {
        for (const auto & g : oracle::labelled_graphs(n)) {
            for (oracle::Mask m = 0; m < (oracle::Mask{1} << n); ++m) {
                auto code = oracle::to_set(m);
                auto cert = verify_td_identifying(g, code);
                if (auto * u = std::get_if<verdict::Undominated>(&cert.verdict))
                    CHECK(cert.iset_table[u->vertex].empty());
                if (auto * p = std::get_if<verdict::Unseparated>(&cert.verdict)) {
                    CHECK(p->first < p->second);
                    CHECK(cert.iset_table[p->first] == cert.iset_table[p->second]);
                }
                if (auto * t = std::get_if<verdict::NotTotalDominating>(&cert.verdict))
                    CHECK(set_intersection(g.open_neighborhood(t->vertex), code).empty());
            }
        }
    }
}
