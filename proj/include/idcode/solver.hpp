#pragma once

#include <idcode/graph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>

namespace idcode {

inline constexpr std::uint64_t default_node_budget = 100'000'000;
inline constexpr int max_solver_order = 64;

enum class SolveStatus {
    Optimal,
    // Search ran out of nodes; witness is a valid but possibly non-minimum code.
    BudgetExceeded,
};

struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds time{0};
    SolveStatus status = SolveStatus::Optimal;

    auto proven_optimal() const -> bool { return status == SolveStatus::Optimal; }
};

// Node budget from IDCODE_BUDGET, or default_node_budget when unset/invalid.
auto budget_from_env() -> std::uint64_t;

// Minimum identifying code. Throws PreconditionError (NotIdentifiable, TooLarge).
auto gamma_id(const Graph & g, std::optional<std::uint64_t> budget = std::nullopt) -> SolveResult;

// Minimum total dominating identifying code. Additionally throws on isolated vertices.
auto gamma_tid(const Graph & g, std::optional<std::uint64_t> budget = std::nullopt) -> SolveResult;

} // namespace idcode
