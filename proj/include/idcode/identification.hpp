#pragma once

#include <idcode/graph.hpp>

#include <string>
#include <variant>
#include <vector>

namespace idcode {

namespace verdict {
    struct Valid {
        friend auto operator==(const Valid &, const Valid &) -> bool = default;
    };
    struct Undominated {
        Vertex vertex;
        friend auto operator==(const Undominated &, const Undominated &) -> bool = default;
    };
    struct Unseparated {
        Vertex first, second;
        friend auto operator==(const Unseparated &, const Unseparated &) -> bool = default;
    };
    struct NotTotalDominating {
        Vertex vertex;
        friend auto operator==(const NotTotalDominating &, const NotTotalDominating &) -> bool = default;
    };
}

using Verdict = std::variant<verdict::Valid, verdict::Undominated, verdict::Unseparated, verdict::NotTotalDominating>;

auto verdict_name(const Verdict & v) -> std::string;
auto verdict_witness(const Verdict & v) -> std::vector<Vertex>;

// Outcome of checking a code. The I-set table is filled in for every vertex
// even when the verdict is a failure.
struct CodeCertificate {
    VertexSet code;
    Verdict verdict;
    std::vector<VertexSet> iset_table;

    auto valid() const -> bool { return std::holds_alternative<verdict::Valid>(verdict); }
};

// N[v] ∩ code. Throws PreconditionError on an out-of-range vertex.
auto i_set(const Graph & g, const VertexSet & code, Vertex v) -> VertexSet;

// Reports the lowest undominated vertex first, otherwise the lexicographically
// smallest pair with equal I-sets.
auto verify_identifying(const Graph & g, const VertexSet & code) -> CodeCertificate;

// Identifying and total dominating. The lowest vertex without a code neighbour
// is reported before any separation failure.
auto verify_td_identifying(const Graph & g, const VertexSet & code) -> CodeCertificate;

} // namespace idcode
