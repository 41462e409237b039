#pragma once

#include <idcode/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace idcode {

enum class BoundKind { Upper, Lower };

struct Rational {
    long long numerator = 0;
    long long denominator = 1;

    auto floor() const -> long long;
    auto ceil() const -> long long;
    auto to_string() const -> std::string;
};

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::Upper;
    bool applicable = false;
    std::string reason;
    Rational raw;
    // Floor of raw for upper bounds, ceiling for lower bounds.
    long long value = 0;
    std::optional<bool> tight;
    // L4 also bounds the total dominating variant.
    bool total_dominating = false;

    // Holds when the bound is not applicable or no exact value is known.
    auto satisfied_by(int exact) const -> bool;
};

struct BoundReport {
    int n = 0;
    GraphProfile profile;
    std::vector<BoundEntry> bounds;
    std::optional<int> exact;
    std::optional<VertexSet> witness;

    auto find(const std::string & name) const -> const BoundEntry &;
    // Names of applicable bounds contradicted by the exact value.
    auto violations() const -> std::vector<std::string>;
};

// Largest order for which evaluate_bounds runs the exact solver.
inline constexpr int exact_order_limit = 24;

// Upper bounds T1 T2 L4 T5 T6 C7 C8 T11 and tree lower bounds LB1 LB2 LB3,
// each with its applicability decided from the graph profile.
auto evaluate_bounds(const Graph & g, bool with_exact) -> BoundReport;

} // namespace idcode
