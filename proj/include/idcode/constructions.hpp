#pragma once

#include <idcode/graph.hpp>
#include <idcode/identification.hpp>

#include <string>
#include <vector>

namespace idcode {

enum class Parity { Even, Odd };

auto to_string(Parity p) -> std::string;

// One application of the leaf-shifting rule: leaf `removed` leaves the code
// and `added` (a non-leaf one layer closer to the root than the leaf's
// support) joins it.
struct Shift {
    Vertex removed;
    Vertex added;

    friend auto operator==(const Shift &, const Shift &) -> bool = default;
};

struct ShiftTrace {
    Vertex root = 0;
    Parity parity = Parity::Even;
    VertexSet base_code;
    std::vector<Shift> shifts;
    VertexSet final_code;
};

struct ParityShiftResult {
    CodeCertificate certificate;
    ShiftTrace even;
    ShiftTrace odd;

    auto code() const -> const VertexSet & { return certificate.code; }
};

// Layered even/odd code for connected bipartite graphs on n >= 3 vertices with
// no twins of degree >= 2. Root is the lowest-id non-leaf; the smaller of the
// two shifted codes is returned (even on ties) and has at most
// floor((n + leaves) / 2) vertices. Throws PreconditionError (TooSmall,
// Disconnected, NotBipartite, TwinsDeg2).
auto parity_shift_code(const Graph & g) -> ParityShiftResult;

// True when g meets the requirements of support_complement_code.
auto support_complement_applicable(const Graph & g) -> bool;

// V minus the lowest-id leaf of every support vertex: a total dominating
// identifying code of size n - s. Requires g connected, n >= 4, g != P4, and
// g - L(g) identifiable or g triangle-free.
auto support_complement_code(const Graph & g) -> CodeCertificate;

struct TwinFreeCode {
    CodeCertificate certificate;
    std::string method; // "parity-shift", "support-complement" or "exact"
};

// Smallest of the applicable constructions for connected twin-free bipartite
// graphs other than P4; at most floor(2n/3) vertices.
auto twin_free_bipartite_code(const Graph & g) -> TwinFreeCode;

struct GraphWithCode {
    Graph graph;
    CodeCertificate certificate;
};

// H∘2 (numbered as corona_graph) with the code {v, v_1 : v in H}, where v_1 is
// the path vertex adjacent to v.
auto corona2_optimal_code(const Graph & h) -> GraphWithCode;

// prop12_graph(k) with {x_i, v_i, w_i, u_1^i, u_2^i} per 7-cycle, where w_i is
// the cycle successor of v_i and the u's are the third and fifth cycle
// vertices after v_i.
auto prop12_code(int k) -> GraphWithCode;

} // namespace idcode
