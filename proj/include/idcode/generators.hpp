#pragma once

#include <idcode/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idcode {

enum class Family {
    Path,
    Cycle,
    Star,
    CompleteBipartite,
    Spider,
    Corona,
    CliqueCorona1,
    Prop12,
    Fig2Left,
    Fig2Right,
    DoubleStar,
};

auto to_string(Family f) -> std::string_view;
// Accepts the names returned by to_string (e.g. "complete_bipartite").
auto parse_family(std::string_view name) -> Family;

struct FamilySpec {
    Family family;
    std::vector<int> params;
    std::optional<Graph> inner; // corona only
};

// Builds the named graph; throws PreconditionError(InvalidParameter) on bad
// parameters. Parameters per family:
//   path n | cycle n (n>=3) | star order | complete_bipartite a b | spider leg...
//   corona k (with inner) | clique_corona1 m | prop12 k | fig2_left | fig2_right
//   double_star a b (leaf counts of the two centres)
auto gen(const FamilySpec & spec) -> Graph;

auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
// Centre 0, leaves 1..order-1.
auto star_graph(int order) -> Graph;
// Side A is 0..a-1, side B is a..a+b-1.
auto complete_bipartite_graph(int a, int b) -> Graph;
// Centre 0, then each leg in order, numbered outward from the centre.
auto spider_graph(const std::vector<int> & legs) -> Graph;
// H keeps ids 0..h-1; the path attached to v occupies h+k*v .. h+k*v+k-1,
// starting with the vertex adjacent to v.
auto corona_graph(const Graph & h, int k) -> Graph;
// K_m on 0..m-1 with leaf m+i attached to i.
auto clique_corona1_graph(int m) -> Graph;
// Star K_{1,k} centred at 0 with a 7-cycle hung off each leaf. Block i
// (0-based) has x_i = 1+8i and cycle vertices x_i+1..x_i+7 in cyclic order,
// the first of which (v_i) is adjacent to x_i.
auto prop12_graph(int k) -> Graph;
// Root 0 with children 1 and 2; 1 has leaves 3,4 and 2 has leaves 5,6.
auto fig2_left_graph() -> Graph;
// Root 0 with children 1, 2 (leaf), 3; 1-4 and 3-5; 4 has leaves 6,7 and 5
// has leaves 8,9.
auto fig2_right_graph() -> Graph;
// Adjacent centres 0 and 1; 0 gets leaves 2..a+1, 1 gets the next b ids.
auto double_star_graph(int a, int b) -> Graph;

// Every free tree on n vertices (1 <= n <= 14) exactly once up to
// isomorphism, sorted by canonical form and labelled in canonical preorder.
auto all_trees(int n) -> std::vector<Graph>;

// Centre-rooted AHU encoding; equal strings iff the trees are isomorphic.
auto tree_canonical_form(const Graph & tree) -> std::string;

// Canonical adjacency string for small general graphs (n <= 10), found by
// permuting vertices within degree-refined classes.
auto canonical_form(const Graph & g) -> std::string;
auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

// Every connected graph on n vertices (1 <= n <= 7) once up to isomorphism.
auto all_connected_graphs(int n) -> std::vector<Graph>;

// Uniform random labelled tree from a random Prüfer sequence.
auto random_tree(int n, std::uint64_t seed) -> Graph;
// Random spanning tree plus up to `extra_edges` random edges across its
// bipartition; always connected and bipartite.
auto random_bipartite(int n, int extra_edges, std::uint64_t seed) -> Graph;

// Recovers H when g is H∘2 with |V(H)| >= 2; H's vertices keep the relative
// order of their ids in g.
auto is_2corona(const Graph & g) -> std::optional<Graph>;

} // namespace idcode
