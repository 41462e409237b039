#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace idcode {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Sorted set of vertex ids. Iteration is always in increasing id order.
class VertexSet {
  public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);
    explicit VertexSet(std::vector<Vertex> ids);

    auto contains(Vertex v) const -> bool;
    auto insert(Vertex v) -> bool;
    auto erase(Vertex v) -> bool;

    auto size() const -> std::size_t { return ids_.size(); }
    auto empty() const -> bool { return ids_.empty(); }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    auto ids() const -> const std::vector<Vertex> & { return ids_; }

    auto to_string() const -> std::string;

    friend auto operator<=>(const VertexSet &, const VertexSet &) = default;

  private:
    std::vector<Vertex> ids_;
};

auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto set_intersection(const VertexSet & a, const VertexSet & b) -> VertexSet;

// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
  public:
    // Throws ParseError on out-of-range ids, self-loops, or n < 1. Duplicate
    // edges (in either orientation) collapse to one.
    static auto from_edge_list(int n, std::span<const Edge> edges) -> Graph;
    static auto from_edge_list(int n, std::initializer_list<Edge> edges) -> Graph;

    auto order() const -> int { return static_cast<int>(adjacency_.size()); }
    auto edge_count() const -> std::size_t { return edge_count_; }
    auto neighbors(Vertex v) const -> std::span<const Vertex> { return adjacency_[v]; }
    auto degree(Vertex v) const -> int { return static_cast<int>(adjacency_[v].size()); }
    auto adjacent(Vertex u, Vertex v) const -> bool;

    auto open_neighborhood(Vertex v) const -> VertexSet;
    auto closed_neighborhood(Vertex v) const -> VertexSet;

    // Edges (u, v) with u < v in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    auto contains(Vertex v) const -> bool { return v >= 0 && v < order(); }

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

  private:
    Graph() = default;

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Induced subgraph on `keep`; vertex keep[i] (in increasing order) becomes i.
auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph;

// Girth of a graph; forests have infinite girth.
class Girth {
  public:
    static auto infinite() -> Girth { return Girth{}; }
    static auto finite(int length) -> Girth { return Girth{length}; }

    auto is_infinite() const -> bool { return !length_; }
    auto length() const -> int { return *length_; }
    // True when the girth is at least `bound` (infinite satisfies every bound).
    auto at_least(int bound) const -> bool { return !length_ || *length_ >= bound; }
    auto to_string() const -> std::string;

    friend auto operator==(const Girth &, const Girth &) -> bool = default;

  private:
    Girth() = default;
    explicit Girth(int length) : length_(length) {}

    std::optional<int> length_;
};

struct GraphProfile {
    VertexSet leaf_set;
    VertexSet support_set;
    int leaf_count = 0;
    int support_count = 0;
    Girth girth = Girth::infinite();
    std::optional<std::vector<int>> bipartition;
    bool connected = false;
    bool identifiable = false;
    bool has_open_twins = false;
    bool has_closed_twins = false;
    bool has_twin_deg_ge2 = false;

    auto bipartite() const -> bool { return bipartition.has_value(); }
    auto twin_free() const -> bool { return !has_open_twins && !has_closed_twins; }
};

auto all_vertices(const Graph & g) -> VertexSet;
auto leaves(const Graph & g) -> VertexSet;
auto supports(const Graph & g) -> VertexSet;
auto is_connected(const Graph & g) -> bool;
auto girth(const Graph & g) -> Girth;
// Per-vertex side (0/1) from a breadth-first 2-colouring, or nullopt when an
// odd cycle exists.
auto bipartition(const Graph & g) -> std::optional<std::vector<int>>;
auto is_tree(const Graph & g) -> bool;
auto is_triangle_free(const Graph & g) -> bool;
auto has_isolated_vertex(const Graph & g) -> bool;
// True when g is the path on four vertices.
auto is_p4(const Graph & g) -> bool;

auto open_twins(const Graph & g) -> std::vector<Edge>;
auto closed_twins(const Graph & g) -> std::vector<Edge>;
auto has_twin_deg_ge2(const Graph & g) -> bool;
auto is_identifiable(const Graph & g) -> bool;

// Shortest-path distances from root. Throws PreconditionError if g is
// disconnected.
auto bfs_layers(const Graph & g, Vertex root) -> std::vector<int>;

auto profile(const Graph & g) -> GraphProfile;

} // namespace idcode
