#pragma once

#include <idcode/bounds.hpp>
#include <idcode/constructions.hpp>
#include <idcode/identification.hpp>
#include <idcode/solver.hpp>

#include <json.hpp>

namespace idcode {

// JSON views of library results. Objects use sorted keys and vertex lists are
// sorted, so output is deterministic for a fixed input.
auto to_json(const VertexSet & s) -> nlohmann::json;
auto to_json(const GraphProfile & p) -> nlohmann::json;
auto to_json(const BoundReport & r) -> nlohmann::json;
auto to_json(const CodeCertificate & c) -> nlohmann::json;
auto to_json(const SolveResult & r) -> nlohmann::json;
auto to_json(const ShiftTrace & t) -> nlohmann::json;

} // namespace idcode
