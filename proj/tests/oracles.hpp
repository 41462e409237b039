#pragma once

// Brute-force reference implementations used to derive expected values in
// the tests. They share no code with the library beyond the Graph type.

#include <idcode/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using idcode::Edge;
using idcode::Graph;
using idcode::VertexSet;
using Mask = std::uint32_t;

inline auto make(int n, const std::vector<Edge> & edges) -> Graph
{
    return Graph::from_edge_list(n, edges);
}

inline auto closed_masks(const Graph & g) -> std::vector<Mask>
{
    std::vector<Mask> out(g.order());
    for (int v = 0; v < g.order(); ++v) {
        out[v] = Mask{1} << v;
        for (auto w : g.neighbors(v))
            out[v] |= Mask{1} << w;
    }
    return out;
}

inline auto to_mask(const VertexSet & s) -> Mask
{
    Mask m = 0;
    for (auto v : s)
        m |= Mask{1} << v;
    return m;
}

inline auto to_set(Mask m) -> VertexSet
{
    std::vector<int> ids;
    for (int v = 0; m; ++v, m >>= 1)
        if (m & 1)
            ids.push_back(v);
    return VertexSet(std::move(ids));
}

// Pairwise comparison of every I-set.
inline auto is_identifying(const Graph & g, Mask code, bool total = false) -> bool
{
    auto closed = closed_masks(g);
    int n = g.order();
    for (int v = 0; v < n; ++v) {
        if ((closed[v] & code) == 0)
            return false;
        if (total && ((closed[v] & ~(Mask{1} << v)) & code) == 0)
            return false;
        for (int u = 0; u < v; ++u)
            if ((closed[u] & code) == (closed[v] & code))
                return false;
    }
    return true;
}

// Minimum over every subset of V; nullopt when no subset works.
inline auto gamma(const Graph & g, bool total = false) -> std::optional<int>
{
    int n = g.order();
    std::optional<int> best;
    for (Mask code = 0; code < (Mask{1} << n); ++code) {
        int size = std::popcount(code);
        if (best && size >= *best)
            continue;
        if (is_identifying(g, code, total))
            best = size;
    }
    return best;
}

inline auto has_closed_twins(const Graph & g) -> bool
{
    auto closed = closed_masks(g);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (closed[u] == closed[v])
                return true;
    return false;
}

inline auto has_open_twins(const Graph & g) -> bool
{
    auto closed = closed_masks(g);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((closed[u] & ~(Mask{1} << u)) == (closed[v] & ~(Mask{1} << v)))
                return true;
    return false;
}

inline auto distances(const Graph & g, int root) -> std::vector<int>
{
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

inline auto connected(const Graph & g) -> bool
{
    auto d = distances(g, 0);
    return std::ranges::none_of(d, [](int x) { return x < 0; });
}

// Shortest cycle through an edge uv is 1 + dist(u, v) in g - uv. Returns 0
// for forests.
inline auto girth(const Graph & g) -> int
{
    int best = 0;
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::vector<Edge> rest;
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (j != i)
                rest.push_back(edges[j]);
        auto d = distances(make(g.order(), rest), edges[i].first)[edges[i].second];
        if (d > 0 && (best == 0 || d + 1 < best))
            best = d + 1;
    }
    return best;
}

inline auto degree_one_count(const Graph & g) -> int
{
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        count += g.degree(v) == 1;
    return count;
}

inline auto support_count(const Graph & g) -> int
{
    std::set<int> s;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            s.insert(g.neighbors(v)[0]);
    return static_cast<int>(s.size());
}

// Isomorphism test by trying every permutation; small graphs only.
inline auto isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Every labelled graph on n vertices (n <= 6), one per edge subset.
inline auto labelled_graphs(int n) -> std::vector<Graph>
{
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (Mask m = 0; m < (Mask{1} << slots.size()); ++m) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (m >> i & 1)
                edges.push_back(slots[i]);
        out.push_back(make(n, edges));
    }
    return out;
}

// Rooted AHU string, minimised over every choice of root.
inline auto tree_signature(const Graph & t) -> std::string
{
    std::function<std::string(int, int)> encode = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (auto w : t.neighbors(v))
            if (w != parent)
                kids.push_back(encode(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto & k : kids)
            s += k;
        return s + ")";
    };
    std::string best;
    for (int r = 0; r < t.order(); ++r) {
        auto s = encode(r, -1);
        if (best.empty() || s < best)
            best = s;
    }
    return best;
}

inline auto prufer_decode(int n, const std::vector<int> & seq) -> Graph
{
    std::vector<int> degree(n, 1);
    for (int x : seq)
        ++degree[x];
    std::vector<Edge> edges;
    for (int x : seq) {
        int leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return make(n, edges);
}

// Distinct free trees on n vertices, found by decoding Prüfer sequences.
// Every tree has a labelling whose internal vertices are exactly 0..k-1, so
// only sequences over {0..k-1} using every symbol are needed.
inline auto tree_classes(int n) -> std::map<std::string, Graph>
{
    std::map<std::string, Graph> out;
    if (n == 1) {
        out.emplace("()", make(1, {}));
        return out;
    }
    if (n == 2) {
        auto t = make(2, {{0, 1}});
        out.emplace(tree_signature(t), t);
        return out;
    }
    int len = n - 2;
    for (int k = 1; k <= len; ++k) {
        std::vector<int> seq(len, 0);
        while (true) {
            std::vector<bool> used(k, false);
            for (int x : seq)
                used[x] = true;
            if (std::ranges::all_of(used, [](bool b) { return b; })) {
                auto t = prufer_decode(n, seq);
                out.emplace(tree_signature(t), t);
            }
            int i = len - 1;
            while (i >= 0 && seq[i] == k - 1)
                seq[i--] = 0;
            if (i < 0)
                break;
            ++seq[i];
        }
    }
    return out;
}

} // namespace oracle
