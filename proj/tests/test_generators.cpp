#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <idcode/errors.hpp>
#include <idcode/generators.hpp>

#include <set>

using namespace idcode;

namespace {
    // Canonical adjacency bitstring minimised over every permutation.
    auto brute_canonical(const Graph & g) -> std::string
    {
        int n = g.order();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        do {
            std::string s;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    s += g.adjacent(perm[u], perm[v]) ? '1' : '0';
            if (best.empty() || s < best)
                best = s;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
}

TEST_CASE("named families")
{
    auto p = gen({Family::Path, {5}, std::nullopt});
    CHECK(p == path_graph(5));
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(star_graph(6).degree(0) == 5);
    CHECK(complete_bipartite_graph(3, 2).edge_count() == 6);
    CHECK(spider_graph({1, 2, 3}).order() == 7);
    CHECK(leaves(spider_graph({1, 2, 3})).size() == 3);
    CHECK(clique_corona1_graph(4).order() == 8);
    CHECK(double_star_graph(2, 2).order() == 6);
    CHECK(supports(double_star_graph(2, 2)) == VertexSet{0, 1});
    CHECK_THROWS_AS(cycle_graph(2), PreconditionError);
    CHECK_THROWS_AS(gen({Family::Corona, {2}, std::nullopt}), PreconditionError);
    CHECK_THROWS_AS(parse_family("nope"), PreconditionError);
    for (auto f : {Family::Path, Family::Cycle, Family::Star, Family::CompleteBipartite, Family::Spider,
             Family::Corona, Family::CliqueCorona1, Family::Prop12, Family::Fig2Left, Family::Fig2Right,
             Family::DoubleStar})
        CHECK(parse_family(to_string(f)) == f);
}

TEST_CASE("corona, prop12 and figure graphs")
{
    CHECK(oracle::isomorphic(corona_graph(path_graph(2), 2), path_graph(6)));
    auto c4 = corona_graph(cycle_graph(4), 2);
    CHECK(c4.order() == 12);
    CHECK(c4.edge_count() == 12);

    auto q = prop12_graph(1);
    CHECK(q.order() == 9);
    CHECK(q.edge_count() == 9);
    CHECK(girth(q).length() == 7);
    CHECK(prop12_graph(2).order() == 17);

    auto f = fig2_left_graph();
    CHECK(f.order() == 7);
    CHECK(leaves(f).size() == 4);
    CHECK(supports(f).size() == 2);
    CHECK(is_tree(fig2_right_graph()));
    CHECK(fig2_right_graph().order() == 10);
}

TEST_CASE("tree counts match the Prüfer oracle")
{
    // Free trees per order: OEIS A000055.
    const std::vector<int> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        CAPTURE(n);
        auto trees = all_trees(n);
        auto classes = oracle::tree_classes(n);
        CHECK(trees.size() == classes.size());
        CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
        std::set<std::string> seen;
        for (const auto & t : trees) {
            CHECK(is_tree(t));
            seen.insert(oracle::tree_signature(t));
        }
        CHECK(seen.size() == trees.size());
        for (const auto & [sig, t] : classes)
            CHECK(seen.contains(sig));
    }
    CHECK_THROWS_AS(all_trees(15), PreconditionError);
}

TEST_CASE("tree canonical form is an isomorphism invariant")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto a = random_tree(9, seed);
        auto b = random_tree(9, seed + 1000);
        CHECK((tree_canonical_form(a) == tree_canonical_form(b)) ==
              (oracle::tree_signature(a) == oracle::tree_signature(b)));
    }
}

TEST_CASE("connected graph classes match brute-force canonical forms up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> expected;
        for (const auto & g : oracle::labelled_graphs(n))
            if (oracle::connected(g))
                expected.insert(brute_canonical(g));
        std::set<std::string> got;
        for (const auto & g : all_connected_graphs(n)) {
            CHECK(is_connected(g));
            got.insert(brute_canonical(g));
        }
        CAPTURE(n);
        CHECK(all_connected_graphs(n).size() == expected.size());
        CHECK(got == expected);
    }
    // Connected graphs on 7 vertices: OEIS A001349.
    CHECK(all_connected_graphs(7).size() == 853);
}

TEST_CASE("are_isomorphic agrees with permutation search")
{
    auto graphs = oracle::labelled_graphs(5);
    for (std::size_t i = 0; i < graphs.size(); i += 37)
        for (std::size_t j = i; j < graphs.size(); j += 53)
            CHECK(are_isomorphic(graphs[i], graphs[j]) == oracle::isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("random generators")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto t = random_tree(12, seed);
        CHECK(is_tree(t));
        CHECK(random_tree(12, seed) == t);
        auto b = random_bipartite(14, 6, seed);
        CHECK(b.order() == 14);
        CHECK(is_connected(b));
        CHECK(bipartition(b).has_value());
    }
}

TEST_CASE("is_2corona examples")
{
    auto h = is_2corona(path_graph(6));
    REQUIRE(h.has_value());
    CHECK(oracle::isomorphic(*h, path_graph(2)));
    CHECK_FALSE(is_2corona(path_graph(5)).has_value());
    auto c = is_2corona(corona_graph(cycle_graph(4), 2));
    REQUIRE(c.has_value());
    CHECK(oracle::isomorphic(*c, cycle_graph(4)));
    CHECK_FALSE(is_2corona(corona_graph(path_graph(3), 1)).has_value());
    CHECK_FALSE(is_2corona(corona_graph(path_graph(2), 3)).has_value());
}

TEST_CASE("corona round trip for every connected graph on 2 to 5 vertices")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto & h : all_connected_graphs(n)) {
            auto g = corona_graph(h, 2);
            CHECK(g.order() == 3 * n);
            CHECK(profile(g).twin_free());
            auto back = is_2corona(g);
            REQUIRE(back.has_value());
            CHECK(oracle::isomorphic(*back, h));
        }
}

TEST_CASE("is_2corona agrees with exhaustive recognition on trees")
{
    // Brute force: a tree is H∘2 iff some H in the catalogue satisfies
    // corona_graph(H, 2) ≅ tree.
    for (int n = 6; n <= 12; n += 3) {
        std::set<std::string> coronas;
        for (const auto & h : all_trees(n / 3))
            coronas.insert(oracle::tree_signature(corona_graph(h, 2)));
        for (const auto & t : all_trees(n))
            CHECK(is_2corona(t).has_value() == coronas.contains(oracle::tree_signature(t)));
    }
}
