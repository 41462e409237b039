#include <idcode/report.hpp>

namespace idcode {

using nlohmann::json;

auto to_json(const VertexSet & s) -> json
{
    return json(s.ids());
}

auto to_json(const GraphProfile & p) -> json
{
    json out;
    out["leaves"] = to_json(p.leaf_set);
    out["supports"] = to_json(p.support_set);
    out["leaf_count"] = p.leaf_count;
    out["support_count"] = p.support_count;
    out["girth"] = p.girth.is_infinite() ? json(nullptr) : json(p.girth.length());
    out["bipartite"] = p.bipartite();
    out["bipartition"] = p.bipartition ? json(*p.bipartition) : json(nullptr);
    out["connected"] = p.connected;
    out["identifiable"] = p.identifiable;
    out["has_open_twins"] = p.has_open_twins;
    out["has_closed_twins"] = p.has_closed_twins;
    out["has_twin_deg_ge2"] = p.has_twin_deg_ge2;
    return out;
}

auto to_json(const BoundReport & r) -> json
{
    json out;
    out["n"] = r.n;
    out["profile"] = to_json(r.profile);
    json bounds = json::array();
    for (const auto & b : r.bounds) {
        json e;
        e["name"] = b.name;
        e["kind"] = b.kind == BoundKind::Upper ? "upper" : "lower";
        e["applicable"] = b.applicable;
        e["reason"] = b.reason;
        e["value"] = b.value;
        e["raw"] = b.raw.to_string();
        e["tight"] = b.tight ? json(*b.tight) : json(nullptr);
        if (b.total_dominating)
            e["total_dominating"] = true;
        bounds.push_back(std::move(e));
    }
    out["bounds"] = std::move(bounds);
    out["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    return out;
}

auto to_json(const CodeCertificate & c) -> json
{
    json out;
    out["code"] = to_json(c.code);
    out["size"] = c.code.size();
    out["verdict"] = verdict_name(c.verdict);
    out["witness"] = verdict_witness(c.verdict);
    json table = json::array();
    for (const auto & s : c.iset_table)
        table.push_back(to_json(s));
    out["isets"] = std::move(table);
    return out;
}

auto to_json(const SolveResult & r) -> json
{
    json out;
    out["value"] = r.value;
    out["witness"] = to_json(r.witness);
    out["nodes_explored"] = r.nodes_explored;
    out["time_ms"] = std::chrono::duration<double, std::milli>(r.time).count();
    out["proven_optimal"] = r.proven_optimal();
    return out;
}

auto to_json(const ShiftTrace & t) -> json
{
    json out;
    out["root"] = t.root;
    out["parity"] = to_string(t.parity);
    out["base_code"] = to_json(t.base_code);
    out["final_code"] = to_json(t.final_code);
    json shifts = json::array();
    for (auto s : t.shifts)
        shifts.push_back({{"removed", s.removed}, {"added", s.added}});
    out["shifts"] = std::move(shifts);
    return out;
}

} // namespace idcode
