#include <idcode/errors.hpp>
#include <idcode/identification.hpp>

#include <map>

namespace idcode {

auto verdict_name(const Verdict & v) -> std::string
{
    struct Namer {
        auto operator()(const verdict::Valid &) const -> std::string { return "valid"; }
        auto operator()(const verdict::Undominated &) const -> std::string { return "undominated"; }
        auto operator()(const verdict::Unseparated &) const -> std::string { return "unseparated"; }
        auto operator()(const verdict::NotTotalDominating &) const -> std::string { return "not_total_dominating"; }
    };
    return std::visit(Namer{}, v);
}

auto verdict_witness(const Verdict & v) -> std::vector<Vertex>
{
    struct Witness {
        auto operator()(const verdict::Valid &) const -> std::vector<Vertex> { return {}; }
        auto operator()(const verdict::Undominated & u) const -> std::vector<Vertex> { return {u.vertex}; }
        auto operator()(const verdict::Unseparated & u) const -> std::vector<Vertex> { return {u.first, u.second}; }
        auto operator()(const verdict::NotTotalDominating & u) const -> std::vector<Vertex> { return {u.vertex}; }
    };
    return std::visit(Witness{}, v);
}

namespace {
    auto check_code(const Graph & g, const VertexSet & code) -> void
    {
        for (Vertex v : code)
            if (!g.contains(v))
                throw PreconditionError(Precondition::InvalidParameter,
                    "code vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.order()));
    }

    auto iset_table(const Graph & g, const VertexSet & code) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> table;
        table.reserve(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            table.push_back(set_intersection(g.closed_neighborhood(v), code));
        return table;
    }

    auto first_unseparated(const std::vector<VertexSet> & table) -> std::optional<verdict::Unseparated>
    {
        // Every class of equal I-sets is visited in increasing id order, so the
        // smallest pair is (class minimum, second element) minimised over classes.
        std::map<VertexSet, Vertex> first_with;
        std::optional<verdict::Unseparated> best;
        for (Vertex v = 0; v < static_cast<Vertex>(table.size()); ++v) {
            auto [it, inserted] = first_with.try_emplace(table[v], v);
            if (inserted)
                continue;
            verdict::Unseparated pair{it->second, v};
            if (!best || std::pair(pair.first, pair.second) < std::pair(best->first, best->second))
                best = pair;
        }
        return best;
    }
}

auto i_set(const Graph & g, const VertexSet & code, Vertex v) -> VertexSet
{
    if (!g.contains(v))
        throw PreconditionError(Precondition::InvalidParameter, "vertex " + std::to_string(v) + " out of range");
    check_code(g, code);
    return set_intersection(g.closed_neighborhood(v), code);
}

auto verify_identifying(const Graph & g, const VertexSet & code) -> CodeCertificate
{
    check_code(g, code);
    CodeCertificate cert{code, verdict::Valid{}, iset_table(g, code)};
    for (Vertex v = 0; v < g.order(); ++v)
        if (cert.iset_table[v].empty()) {
            cert.verdict = verdict::Undominated{v};
            return cert;
        }
    if (auto pair = first_unseparated(cert.iset_table))
        cert.verdict = *pair;
    return cert;
}

auto verify_td_identifying(const Graph & g, const VertexSet & code) -> CodeCertificate
{
    check_code(g, code);
    CodeCertificate cert{code, verdict::Valid{}, iset_table(g, code)};
    for (Vertex v = 0; v < g.order(); ++v) {
        bool has_code_neighbor = false;
        for (Vertex w : g.neighbors(v))
            has_code_neighbor = has_code_neighbor || code.contains(w);
        if (!has_code_neighbor) {
            cert.verdict = verdict::NotTotalDominating{v};
            return cert;
        }
    }
    if (auto pair = first_unseparated(cert.iset_table))
        cert.verdict = *pair;
    return cert;
}

} // namespace idcode
