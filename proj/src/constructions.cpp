#include <idcode/constructions.hpp>
#include <idcode/errors.hpp>
#include <idcode/generators.hpp>
#include <idcode/solver.hpp>

#include <algorithm>

namespace idcode {

auto to_string(Parity p) -> std::string
{
    return p == Parity::Even ? "even" : "odd";
}

namespace {
    auto require_valid(CodeCertificate cert, const std::string & method) -> CodeCertificate
    {
        if (!cert.valid()) {
            std::string witness;
            for (Vertex v : verdict_witness(cert.verdict))
                witness += " " + std::to_string(v);
            throw ConstructionFailure(method + " produced " + cert.code.to_string() + " which is " +
                verdict_name(cert.verdict) + " at" + witness);
        }
        return cert;
    }

    auto shifted_code(const Graph & g, const VertexSet & leaf_set, const std::vector<int> & dist, Vertex root,
        Parity parity) -> ShiftTrace
    {
        const int want = parity == Parity::Even ? 0 : 1;
        ShiftTrace trace;
        trace.root = root;
        trace.parity = parity;

        std::vector<Vertex> base;
        for (Vertex v = 0; v < g.order(); ++v)
            if (dist[v] % 2 == want || leaf_set.contains(v))
                base.push_back(v);
        trace.base_code = VertexSet(std::move(base));
        trace.final_code = trace.base_code;

        // Leaves in the layers the base code skips see only their support.
        // A support with no other leaf gets a code neighbour one layer up
        // instead, and the leaf drops out.
        for (Vertex leaf : leaf_set) {
            if (dist[leaf] % 2 == want)
                continue;
            Vertex support = g.neighbors(leaf)[0];
            auto is_leaf = [&](Vertex w) { return leaf_set.contains(w); };
            if (std::ranges::count_if(g.neighbors(support), is_leaf) != 1)
                continue;

            std::optional<Vertex> target;
            for (Vertex w : g.neighbors(support)) {
                bool fits = support == root ? !is_leaf(w) : dist[w] == dist[support] - 1;
                if (fits) {
                    target = w;
                    break;
                }
            }
            if (!target)
                throw ConstructionFailure("no shift target next to support " + std::to_string(support));

            trace.final_code.erase(leaf);
            trace.final_code.insert(*target);
            trace.shifts.push_back({leaf, *target});
        }
        return trace;
    }
}

auto parity_shift_code(const Graph & g) -> ParityShiftResult
{
    if (g.order() < 3)
        throw PreconditionError(Precondition::TooSmall, "parity_shift_code needs n >= 3");
    if (!is_connected(g))
        throw PreconditionError(Precondition::Disconnected, "parity_shift_code needs a connected graph");
    if (!bipartition(g))
        throw PreconditionError(Precondition::NotBipartite, "parity_shift_code needs a bipartite graph");
    if (has_twin_deg_ge2(g))
        throw PreconditionError(Precondition::TwinsDeg2, "graph has twins of degree >= 2");

    auto leaf_set = leaves(g);
    Vertex root = 0;
    while (leaf_set.contains(root))
        ++root;
    auto dist = bfs_layers(g, root);

    auto even = shifted_code(g, leaf_set, dist, root, Parity::Even);
    auto odd = shifted_code(g, leaf_set, dist, root, Parity::Odd);
    const auto & chosen = odd.final_code.size() < even.final_code.size() ? odd.final_code : even.final_code;
    auto cert = require_valid(verify_identifying(g, chosen), "parity_shift_code");
    return {std::move(cert), std::move(even), std::move(odd)};
}

namespace {
    auto check_support_complement(const Graph & g) -> void
    {
        if (g.order() < 4)
            throw PreconditionError(Precondition::TooSmall, "support_complement_code needs n >= 4");
        if (!is_connected(g))
            throw PreconditionError(Precondition::Disconnected, "support_complement_code needs a connected graph");
        if (is_p4(g))
            throw PreconditionError(Precondition::IsP4, "support_complement_code does not apply to P4");
        auto core = induced_subgraph(g, set_difference(all_vertices(g), leaves(g)));
        if (!is_identifiable(core) && !is_triangle_free(g))
            throw PreconditionError(Precondition::LeafRemovalNotIdentifiable,
                "g - L(g) has closed twins and g contains a triangle");
    }
}

auto support_complement_applicable(const Graph & g) -> bool
{
    try {
        check_support_complement(g);
        return true;
    }
    catch (const PreconditionError &) {
        return false;
    }
}

auto support_complement_code(const Graph & g) -> CodeCertificate
{
    check_support_complement(g);
    auto leaf_set = leaves(g);
    std::vector<Vertex> code;
    VertexSet dropped;
    for (Vertex v : supports(g))
        for (Vertex w : g.neighbors(v))
            if (leaf_set.contains(w)) {
                dropped.insert(w);
                break;
            }
    for (Vertex v = 0; v < g.order(); ++v)
        if (!dropped.contains(v))
            code.push_back(v);
    return require_valid(verify_td_identifying(g, VertexSet(std::move(code))), "support_complement_code");
}

auto twin_free_bipartite_code(const Graph & g) -> TwinFreeCode
{
    if (g.order() < 3)
        throw PreconditionError(Precondition::TooSmall, "twin_free_bipartite_code needs n >= 3");
    if (!is_connected(g))
        throw PreconditionError(Precondition::Disconnected, "twin_free_bipartite_code needs a connected graph");
    if (!bipartition(g))
        throw PreconditionError(Precondition::NotBipartite, "twin_free_bipartite_code needs a bipartite graph");
    if (!open_twins(g).empty() || !closed_twins(g).empty())
        throw PreconditionError(Precondition::NotTwinFree, "twin_free_bipartite_code needs a twin-free graph");
    if (is_p4(g))
        throw PreconditionError(Precondition::IsP4, "P4 needs 3 > 2n/3 vertices");

    if (g.order() < 5) {
        auto exact = gamma_id(g);
        return {verify_identifying(g, exact.witness), "exact"};
    }

    TwinFreeCode best{parity_shift_code(g).certificate, "parity-shift"};
    auto complement = support_complement_code(g);
    if (complement.code.size() < best.certificate.code.size())
        best = {std::move(complement), "support-complement"};
    return best;
}

auto corona2_optimal_code(const Graph & h) -> GraphWithCode
{
    if (h.order() < 2)
        throw PreconditionError(Precondition::TooSmall, "corona2_optimal_code needs |V(H)| >= 2");
    if (!is_connected(h))
        throw PreconditionError(Precondition::Disconnected, "corona2_optimal_code needs a connected H");

    auto g = corona_graph(h, 2);
    std::vector<Vertex> code;
    for (Vertex v = 0; v < h.order(); ++v) {
        code.push_back(v);
        code.push_back(h.order() + 2 * v);
    }
    auto cert = require_valid(verify_identifying(g, VertexSet(std::move(code))), "corona2_optimal_code");
    return {std::move(g), std::move(cert)};
}

auto prop12_code(int k) -> GraphWithCode
{
    if (k < 1)
        throw PreconditionError(Precondition::InvalidParameter, "prop12_code needs k >= 1");

    auto g = prop12_graph(k);
    std::vector<Vertex> code;
    for (int i = 0; i < k; ++i) {
        Vertex x = 1 + 8 * i;
        Vertex v = x + 1;
        // v, its successor w, and the two cycle vertices whose only code
        // vertex is themselves.
        for (Vertex c : {x, v, v + 1, v + 3, v + 5})
            code.push_back(c);
    }
    auto cert = require_valid(verify_identifying(g, VertexSet(std::move(code))), "prop12_code");
    return {std::move(g), std::move(cert)};
}

} // namespace idcode
