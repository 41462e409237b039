#include <idcode/errors.hpp>
#include <idcode/graph.hpp>

#include <algorithm>
#include <deque>
#include <limits>

namespace idcode {

auto to_string(Precondition p) -> std::string_view
{
    switch (p) {
        case Precondition::Disconnected: return "Disconnected";
        case Precondition::TooSmall: return "TooSmall";
        case Precondition::NotBipartite: return "NotBipartite";
        case Precondition::TwinsDeg2: return "TwinsDeg2";
        case Precondition::NotTwinFree: return "NotTwinFree";
        case Precondition::IsP4: return "IsP4";
        case Precondition::LeafRemovalNotIdentifiable: return "LeafRemovalNotIdentifiable";
        case Precondition::NotIdentifiable: return "NotIdentifiable";
        case Precondition::IsolatedVertex: return "IsolatedVertex";
        case Precondition::InvalidParameter: return "InvalidParameter";
        case Precondition::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

VertexSet::VertexSet(std::initializer_list<Vertex> ids) :
    VertexSet(std::vector<Vertex>(ids))
{
}

VertexSet::VertexSet(std::vector<Vertex> ids) :
    ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

auto VertexSet::contains(Vertex v) const -> bool
{
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

auto VertexSet::insert(Vertex v) -> bool
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v)
        return false;
    ids_.insert(it, v);
    return true;
}

auto VertexSet::erase(Vertex v) -> bool
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        return false;
    ids_.erase(it);
    return true;
}

auto VertexSet::to_string() const -> std::string
{
    std::string out = "{";
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(ids_[i]);
    }
    return out + "}";
}

auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

auto set_intersection(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

auto Graph::from_edge_list(int n, std::span<const Edge> edges) -> Graph
{
    if (n < 1)
        throw ParseError("graph must have at least one vertex, got n=" + std::to_string(n));

    Graph g;
    g.adjacency_.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto & nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += nbrs.size();
    }
    g.edge_count_ /= 2;
    return g;
}

auto Graph::from_edge_list(int n, std::initializer_list<Edge> edges) -> Graph
{
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

auto Graph::open_neighborhood(Vertex v) const -> VertexSet
{
    return VertexSet(adjacency_[v]);
}

auto Graph::closed_neighborhood(Vertex v) const -> VertexSet
{
    auto result = VertexSet(adjacency_[v]);
    result.insert(v);
    return result;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph
{
    std::vector<int> new_id(g.order(), -1);
    int next = 0;
    for (Vertex v : keep)
        new_id[v] = next++;

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0)
            edges.emplace_back(new_id[u], new_id[v]);
    return Graph::from_edge_list(next, edges);
}

auto Girth::to_string() const -> std::string
{
    return length_ ? std::to_string(*length_) : std::string("inf");
}

auto all_vertices(const Graph & g) -> VertexSet
{
    std::vector<Vertex> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        out[v] = v;
    return VertexSet(std::move(out));
}

auto leaves(const Graph & g) -> VertexSet
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            out.push_back(v);
    return VertexSet(std::move(out));
}

auto supports(const Graph & g) -> VertexSet
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v))
            if (g.degree(w) == 1) {
                out.push_back(v);
                break;
            }
    return VertexSet(std::move(out));
}

namespace {
    constexpr int unreached = std::numeric_limits<int>::max();

    auto bfs_distances(const Graph & g, Vertex root) -> std::vector<int>
    {
        std::vector<int> dist(g.order(), unreached);
        std::deque<Vertex> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u))
                if (dist[w] == unreached) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }
}

auto is_connected(const Graph & g) -> bool
{
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == unreached; });
}

auto girth(const Graph & g) -> Girth
{
    // A BFS from every root sees each shortest cycle through the root as a
    // non-tree edge closing two branches.
    int best = unreached;
    for (Vertex root = 0; root < g.order(); ++root) {
        std::vector<int> dist(g.order(), unreached), parent(g.order(), -1);
        std::deque<Vertex> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (2 * dist[u] >= best)
                break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == unreached) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
                else if (parent[u] != w)
                    best = std::min(best, dist[u] + dist[w] + 1);
            }
        }
    }
    return best == unreached ? Girth::infinite() : Girth::finite(best);
}

auto bipartition(const Graph & g) -> std::optional<std::vector<int>>
{
    std::vector<int> side(g.order(), -1);
    for (Vertex start = 0; start < g.order(); ++start) {
        if (side[start] != -1)
            continue;
        side[start] = 0;
        std::deque<Vertex> queue{start};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                }
                else if (side[w] == side[u])
                    return std::nullopt;
            }
        }
    }
    return side;
}

auto is_tree(const Graph & g) -> bool
{
    return g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

auto is_triangle_free(const Graph & g) -> bool
{
    for (auto [u, v] : g.edges())
        for (Vertex w : g.neighbors(u))
            if (w != v && g.adjacent(v, w))
                return false;
    return true;
}

auto has_isolated_vertex(const Graph & g) -> bool
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            return true;
    return false;
}

auto is_p4(const Graph & g) -> bool
{
    if (g.order() != 4 || g.edge_count() != 3 || !is_connected(g))
        return false;
    for (Vertex v = 0; v < 4; ++v)
        if (g.degree(v) > 2)
            return false;
    return true;
}

auto open_twins(const Graph & g) -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (std::ranges::equal(g.neighbors(u), g.neighbors(v)))
                out.emplace_back(u, v);
    return out;
}

auto closed_twins(const Graph & g) -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) && g.closed_neighborhood(u) == g.closed_neighborhood(v))
                out.emplace_back(u, v);
    return out;
}

auto has_twin_deg_ge2(const Graph & g) -> bool
{
    auto deg_ge2 = [&](const Edge & e) { return g.degree(e.first) >= 2 && g.degree(e.second) >= 2; };
    return std::ranges::any_of(open_twins(g), deg_ge2) || std::ranges::any_of(closed_twins(g), deg_ge2);
}

auto is_identifiable(const Graph & g) -> bool
{
    return closed_twins(g).empty();
}

auto bfs_layers(const Graph & g, Vertex root) -> std::vector<int>
{
    if (!g.contains(root))
        throw PreconditionError(Precondition::InvalidParameter, "root " + std::to_string(root) + " out of range");
    auto dist = bfs_distances(g, root);
    if (std::ranges::any_of(dist, [](int d) { return d == unreached; }))
        throw PreconditionError(Precondition::Disconnected, "bfs_layers requires a connected graph");
    return dist;
}

auto profile(const Graph & g) -> GraphProfile
{
    GraphProfile p;
    p.leaf_set = leaves(g);
    p.support_set = supports(g);
    p.leaf_count = static_cast<int>(p.leaf_set.size());
    p.support_count = static_cast<int>(p.support_set.size());
    p.girth = girth(g);
    p.bipartition = bipartition(g);
    p.connected = is_connected(g);
    p.has_open_twins = !open_twins(g).empty();
    p.has_closed_twins = !closed_twins(g).empty();
    p.identifiable = !p.has_closed_twins;
    p.has_twin_deg_ge2 = has_twin_deg_ge2(g);
    return p;
}

} // namespace idcode
