#include <idcode/errors.hpp>
#include <idcode/generators.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace idcode {

namespace {
    auto require(bool ok, const std::string & what) -> void
    {
        if (!ok)
            throw PreconditionError(Precondition::InvalidParameter, what);
    }

    auto param_count(const FamilySpec & spec, std::size_t count) -> void
    {
        require(spec.params.size() == count, std::string(to_string(spec.family)) + " takes " +
                std::to_string(count) + " parameter(s), got " + std::to_string(spec.params.size()));
    }
}

auto to_string(Family f) -> std::string_view
{
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::CompleteBipartite: return "complete_bipartite";
        case Family::Spider: return "spider";
        case Family::Corona: return "corona";
        case Family::CliqueCorona1: return "clique_corona1";
        case Family::Prop12: return "prop12";
        case Family::Fig2Left: return "fig2_left";
        case Family::Fig2Right: return "fig2_right";
        case Family::DoubleStar: return "double_star";
    }
    return "unknown";
}

auto parse_family(std::string_view name) -> Family
{
    for (auto f : {Family::Path, Family::Cycle, Family::Star, Family::CompleteBipartite, Family::Spider,
             Family::Corona, Family::CliqueCorona1, Family::Prop12, Family::Fig2Left, Family::Fig2Right,
             Family::DoubleStar})
        if (to_string(f) == name)
            return f;
    throw PreconditionError(Precondition::InvalidParameter, "unknown family '" + std::string(name) + "'");
}

auto path_graph(int n) -> Graph
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

auto cycle_graph(int n) -> Graph
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, edges);
}

auto star_graph(int order) -> Graph
{
    require(order >= 2, "star needs order >= 2");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < order; ++v)
        edges.emplace_back(0, v);
    return Graph::from_edge_list(order, edges);
}

auto complete_bipartite_graph(int a, int b) -> Graph
{
    require(a >= 1 && b >= 1, "complete_bipartite needs both sides >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edge_list(a + b, edges);
}

auto spider_graph(const std::vector<int> & legs) -> Graph
{
    require(!legs.empty(), "spider needs at least one leg");
    std::vector<Edge> edges;
    Vertex next = 1;
    for (int length : legs) {
        require(length >= 1, "spider legs need length >= 1");
        Vertex previous = 0;
        for (int i = 0; i < length; ++i) {
            edges.emplace_back(previous, next);
            previous = next++;
        }
    }
    return Graph::from_edge_list(next, edges);
}

auto corona_graph(const Graph & h, int k) -> Graph
{
    require(k >= 1, "corona needs k >= 1");
    const int base = h.order();
    auto edges = h.edges();
    for (Vertex v = 0; v < base; ++v) {
        Vertex first = base + k * v;
        edges.emplace_back(v, first);
        for (int j = 1; j < k; ++j)
            edges.emplace_back(first + j - 1, first + j);
    }
    return Graph::from_edge_list(base * (k + 1), edges);
}

auto clique_corona1_graph(int m) -> Graph
{
    require(m >= 1, "clique_corona1 needs m >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v)
            edges.emplace_back(u, v);
    return corona_graph(Graph::from_edge_list(m, edges), 1);
}

auto prop12_graph(int k) -> Graph
{
    require(k >= 1, "prop12 needs k >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        Vertex x = 1 + 8 * i;
        edges.emplace_back(0, x);
        edges.emplace_back(x, x + 1);
        for (int j = 0; j < 7; ++j)
            edges.emplace_back(x + 1 + j, x + 1 + (j + 1) % 7);
    }
    return Graph::from_edge_list(8 * k + 1, edges);
}

auto fig2_left_graph() -> Graph
{
    return Graph::from_edge_list(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
}

auto fig2_right_graph() -> Graph
{
    return Graph::from_edge_list(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 8}, {5, 9}});
}

auto double_star_graph(int a, int b) -> Graph
{
    require(a >= 1 && b >= 1, "double_star needs a, b >= 1");
    std::vector<Edge> edges{{0, 1}};
    Vertex next = 2;
    for (int i = 0; i < a; ++i)
        edges.emplace_back(0, next++);
    for (int i = 0; i < b; ++i)
        edges.emplace_back(1, next++);
    return Graph::from_edge_list(next, edges);
}

auto gen(const FamilySpec & spec) -> Graph
{
    const auto & p = spec.params;
    switch (spec.family) {
        case Family::Path: param_count(spec, 1); return path_graph(p[0]);
        case Family::Cycle: param_count(spec, 1); return cycle_graph(p[0]);
        case Family::Star: param_count(spec, 1); return star_graph(p[0]);
        case Family::CompleteBipartite: param_count(spec, 2); return complete_bipartite_graph(p[0], p[1]);
        case Family::Spider: return spider_graph(p);
        case Family::Corona:
            param_count(spec, 1);
            require(spec.inner.has_value(), "corona needs an inner graph");
            return corona_graph(*spec.inner, p[0]);
        case Family::CliqueCorona1: param_count(spec, 1); return clique_corona1_graph(p[0]);
        case Family::Prop12: param_count(spec, 1); return prop12_graph(p[0]);
        case Family::Fig2Left: param_count(spec, 0); return fig2_left_graph();
        case Family::Fig2Right: param_count(spec, 0); return fig2_right_graph();
        case Family::DoubleStar: param_count(spec, 2); return double_star_graph(p[0], p[1]);
    }
    throw PreconditionError(Precondition::InvalidParameter, "unknown family");
}

namespace {
    auto tree_centers(const Graph & tree) -> std::vector<Vertex>
    {
        const int n = tree.order();
        if (n <= 2) {
            std::vector<Vertex> all(n);
            for (Vertex v = 0; v < n; ++v)
                all[v] = v;
            return all;
        }
        std::vector<int> degree(n);
        std::vector<Vertex> layer;
        for (Vertex v = 0; v < n; ++v) {
            degree[v] = tree.degree(v);
            if (degree[v] == 1)
                layer.push_back(v);
        }
        int remaining = n;
        while (remaining > 2) {
            remaining -= static_cast<int>(layer.size());
            std::vector<Vertex> next;
            for (Vertex leaf : layer)
                for (Vertex w : tree.neighbors(leaf))
                    if (--degree[w] == 1)
                        next.push_back(w);
            layer = std::move(next);
        }
        std::sort(layer.begin(), layer.end());
        return layer;
    }

    auto rooted_encoding(const Graph & tree, Vertex root, Vertex parent) -> std::string
    {
        std::vector<std::string> children;
        for (Vertex w : tree.neighbors(root))
            if (w != parent)
                children.push_back(rooted_encoding(tree, w, root));
        std::sort(children.begin(), children.end());
        std::string out = "(";
        for (auto & c : children)
            out += c;
        return out + ")";
    }

    auto tree_from_encoding(const std::string & encoding) -> Graph
    {
        std::vector<Edge> edges;
        std::vector<Vertex> stack;
        Vertex next = 0;
        for (char c : encoding) {
            if (c == '(') {
                if (!stack.empty())
                    edges.emplace_back(stack.back(), next);
                stack.push_back(next++);
            }
            else
                stack.pop_back();
        }
        return Graph::from_edge_list(next, edges);
    }

    auto add_vertex(const Graph & g, const std::vector<Vertex> & neighbors) -> Graph
    {
        auto edges = g.edges();
        for (Vertex w : neighbors)
            edges.emplace_back(g.order(), w);
        return Graph::from_edge_list(g.order() + 1, edges);
    }

    auto relabel(const Graph & g, const std::vector<Vertex> & new_id) -> Graph
    {
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(new_id[u], new_id[v]);
        return Graph::from_edge_list(g.order(), edges);
    }

    // Canonical adjacency string together with the labelling that produces it.
    auto canonical_labelling(const Graph & g) -> std::pair<std::string, std::vector<Vertex>>
    {
        const int n = g.order();
        if (n > 10)
            throw PreconditionError(Precondition::TooLarge, "canonical_form supports at most 10 vertices");

        // Isomorphism-invariant vertex colour: degree, then sorted neighbour degrees.
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> key{g.degree(v)};
            std::vector<int> nd;
            for (Vertex w : g.neighbors(v))
                nd.push_back(g.degree(w));
            std::sort(nd.begin(), nd.end());
            key.insert(key.end(), nd.begin(), nd.end());
            keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());

        // order[i] is the original vertex placed at position i; only
        // permutations within a colour class are tried.
        std::vector<Vertex> order(n);
        std::vector<std::pair<int, int>> classes;
        for (int i = 0; i < n; ++i) {
            order[i] = keyed[i].second;
            if (i == 0 || keyed[i].first != keyed[i - 1].first)
                classes.emplace_back(i, i + 1);
            else
                classes.back().second = i + 1;
        }
        for (auto [b, e] : classes)
            std::sort(order.begin() + b, order.begin() + e);

        std::string prefix;
        for (auto & [key, v] : keyed) {
            prefix += std::to_string(key.size()) + ":";
            for (int k : key)
                prefix += std::to_string(k) + ",";
            prefix += ";";
        }

        auto encode = [&](const std::vector<Vertex> & ord) {
            std::string bits;
            bits.reserve(n * (n - 1) / 2);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    bits.push_back(g.adjacent(ord[i], ord[j]) ? '1' : '0');
            return bits;
        };

        std::string best;
        std::vector<Vertex> best_order;
        // Odometer over the product of per-class permutations.
        auto current = order;
        while (true) {
            auto bits = encode(current);
            if (best_order.empty() || bits > best) {
                best = std::move(bits);
                best_order = current;
            }
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                auto [b, e] = classes[c];
                if (std::next_permutation(current.begin() + b, current.begin() + e))
                    break;
            }
            if (c == classes.size())
                break;
        }

        std::vector<Vertex> new_id(n);
        for (int i = 0; i < n; ++i)
            new_id[best_order[i]] = i;
        return {std::to_string(n) + "|" + prefix + "|" + best, new_id};
    }
}

auto tree_canonical_form(const Graph & tree) -> std::string
{
    auto centers = tree_centers(tree);
    std::string best;
    for (Vertex c : centers) {
        auto enc = rooted_encoding(tree, c, -1);
        if (best.empty() || enc < best)
            best = std::move(enc);
    }
    return best;
}

auto all_trees(int n) -> std::vector<Graph>
{
    if (n < 1 || n > 14)
        throw PreconditionError(Precondition::InvalidParameter, "all_trees supports 1 <= n <= 14");

    std::set<std::string> level{tree_canonical_form(path_graph(1))};
    for (int size = 2; size <= n; ++size) {
        std::set<std::string> grown;
        for (const auto & encoding : level) {
            auto tree = tree_from_encoding(encoding);
            for (Vertex v = 0; v < tree.order(); ++v)
                grown.insert(tree_canonical_form(add_vertex(tree, {v})));
        }
        level = std::move(grown);
    }

    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto & encoding : level)
        out.push_back(tree_from_encoding(encoding));
    return out;
}

auto canonical_form(const Graph & g) -> std::string
{
    return canonical_labelling(g).first;
}

auto are_isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

auto all_connected_graphs(int n) -> std::vector<Graph>
{
    if (n < 1 || n > 7)
        throw PreconditionError(Precondition::InvalidParameter, "all_connected_graphs supports 1 <= n <= 7");

    // Every graph on k vertices extends a graph on k-1 vertices by one vertex.
    std::map<std::string, Graph> level{{canonical_form(path_graph(1)), path_graph(1)}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> grown;
        for (const auto & [key, g] : level)
            for (unsigned subset = 0; subset < (1u << g.order()); ++subset) {
                std::vector<Vertex> nbrs;
                for (Vertex v = 0; v < g.order(); ++v)
                    if (subset >> v & 1)
                        nbrs.push_back(v);
                auto h = add_vertex(g, nbrs);
                auto [form, labelling] = canonical_labelling(h);
                if (!grown.contains(form))
                    grown.emplace(form, relabel(h, labelling));
            }
        level = std::move(grown);
    }

    std::vector<Graph> out;
    for (auto & [key, g] : level)
        if (is_connected(g))
            out.push_back(g);
    return out;
}

auto random_tree(int n, std::uint64_t seed) -> Graph
{
    require(n >= 1, "random_tree needs n >= 1");
    if (n <= 2)
        return path_graph(n);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2), degree(n, 1);
    for (auto & c : code) {
        c = pick(rng);
        ++degree[c];
    }

    std::set<Vertex> leaves_left;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves_left.insert(v);
    std::vector<Edge> edges;
    for (int c : code) {
        Vertex leaf = *leaves_left.begin();
        leaves_left.erase(leaves_left.begin());
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1)
            leaves_left.insert(c);
    }
    edges.emplace_back(*leaves_left.begin(), *std::next(leaves_left.begin()));
    return Graph::from_edge_list(n, edges);
}

auto random_bipartite(int n, int extra_edges, std::uint64_t seed) -> Graph
{
    auto tree = random_tree(n, seed);
    auto side = *bipartition(tree);
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < n; ++v)
        (side[v] == 0 ? a : b).push_back(v);
    if (a.empty() || b.empty())
        return tree;

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> pick_a(0, a.size() - 1), pick_b(0, b.size() - 1);
    auto edges = tree.edges();
    for (int i = 0; i < extra_edges; ++i)
        edges.emplace_back(a[pick_a(rng)], b[pick_b(rng)]);
    return Graph::from_edge_list(n, edges);
}

auto is_2corona(const Graph & g) -> std::optional<Graph>
{
    const int n = g.order();
    if (n < 6 || n % 3 != 0)
        return std::nullopt;

    auto leaf_set = leaves(g);
    if (static_cast<int>(leaf_set.size()) != n / 3)
        return std::nullopt;

    // role: 0 = H vertex, 1 = path middle v1, 2 = path end v2
    std::vector<int> role(n, 0);
    std::vector<Vertex> inner_of_leaf;
    for (Vertex end : leaf_set) {
        Vertex middle = g.neighbors(end)[0];
        if (g.degree(middle) != 2 || role[middle] != 0)
            return std::nullopt;
        Vertex attach = g.neighbors(middle)[0] == end ? g.neighbors(middle)[1] : g.neighbors(middle)[0];
        if (g.degree(attach) < 2)
            return std::nullopt;
        role[end] = 2;
        role[middle] = 1;
        inner_of_leaf.push_back(attach);
    }

    std::sort(inner_of_leaf.begin(), inner_of_leaf.end());
    if (std::adjacent_find(inner_of_leaf.begin(), inner_of_leaf.end()) != inner_of_leaf.end())
        return std::nullopt;
    for (Vertex v : inner_of_leaf)
        if (role[v] != 0)
            return std::nullopt;

    // Every non-path vertex must be one of the attachment points.
    VertexSet inner(inner_of_leaf);
    for (Vertex v = 0; v < n; ++v)
        if (role[v] == 0 && !inner.contains(v))
            return std::nullopt;

    return induced_subgraph(g, inner);
}

} // namespace idcode
