#include <idcode/errors.hpp>
#include <idcode/solver.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

namespace idcode {

namespace {
    using Mask = std::uint64_t;

    auto bit(Vertex v) -> Mask { return Mask{1} << v; }

    struct BudgetHit {};

    // Identifying codes are exactly the hitting sets of the closed
    // neighbourhoods and of the symmetric differences N[u] xor N[v]; the total
    // variant also has to hit every open neighbourhood. Open twins produce
    // two-element sets {u, v}, so at most one twin can stay out of the code.
    auto constraint_sets(const Graph & g, bool total) -> std::vector<Mask>
    {
        const int n = g.order();
        std::vector<Mask> closed(n), sets;
        for (Vertex v = 0; v < n; ++v) {
            closed[v] = bit(v);
            for (Vertex w : g.neighbors(v))
                closed[v] |= bit(w);
            sets.push_back(total ? closed[v] & ~bit(v) : closed[v]);
        }
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                sets.push_back(closed[u] ^ closed[v]);

        std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
            return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
        });
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

        // Hitting a subset hits every superset, so supersets are redundant.
        std::vector<Mask> minimal;
        for (Mask s : sets)
            if (std::none_of(minimal.begin(), minimal.end(), [s](Mask m) { return (m & s) == m; }))
                minimal.push_back(s);
        return minimal;
    }

    class HittingSetSearch {
      public:
        HittingSetSearch(std::vector<Mask> sets, std::uint64_t budget) :
            sets_(std::move(sets)),
            budget_(budget)
        {
        }

        // Disjoint unhit sets each need their own code vertex.
        auto packing_bound(Mask included, Mask excluded) const -> int
        {
            Mask used = 0;
            int bound = 0;
            for (Mask s : sets_) {
                if (s & included)
                    continue;
                Mask candidates = s & ~excluded;
                if ((candidates & used) == 0) {
                    ++bound;
                    used |= candidates;
                }
            }
            return bound;
        }

        auto find_at_most(int limit) -> std::optional<Mask>
        {
            limit_ = limit;
            return search(0, 0, 0);
        }

        auto nodes() const -> std::uint64_t { return nodes_; }

      private:
        auto search(Mask included, Mask excluded, int count) -> std::optional<Mask>
        {
            if (++nodes_ > budget_)
                throw BudgetHit{};

            Mask branch = 0;
            int branch_size = 65;
            for (Mask s : sets_) {
                if (s & included)
                    continue;
                Mask candidates = s & ~excluded;
                int size = std::popcount(candidates);
                if (size == 0)
                    return std::nullopt;
                if (size < branch_size) {
                    branch_size = size;
                    branch = candidates;
                }
            }
            if (!branch)
                return included;
            if (count + packing_bound(included, excluded) > limit_)
                return std::nullopt;

            // Take the i-th candidate and forbid the earlier ones, so the
            // branches partition the remaining search space.
            Mask forbidden = excluded;
            for (Mask rest = branch; rest; rest &= rest - 1) {
                Mask pick = rest & (~rest + 1);
                if (auto found = search(included | pick, forbidden, count + 1))
                    return found;
                forbidden |= pick;
            }
            return std::nullopt;
        }

        std::vector<Mask> sets_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        int limit_ = 0;
    };

    auto to_vertex_set(Mask m) -> VertexSet
    {
        std::vector<Vertex> ids;
        for (; m; m &= m - 1)
            ids.push_back(std::countr_zero(m));
        return VertexSet(std::move(ids));
    }

    auto hits_all(const std::vector<Mask> & sets, Mask code) -> bool
    {
        return std::all_of(sets.begin(), sets.end(), [code](Mask s) { return (s & code) != 0; });
    }

    // Inclusion-minimal code obtained by dropping vertices from V in id order.
    auto greedy_code(const std::vector<Mask> & sets, int n) -> Mask
    {
        Mask code = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        for (Vertex v = 0; v < n; ++v)
            if (hits_all(sets, code & ~bit(v)))
                code &= ~bit(v);
        return code;
    }

    auto solve(const Graph & g, bool total, std::optional<std::uint64_t> budget) -> SolveResult
    {
        if (g.order() > max_solver_order)
            throw PreconditionError(Precondition::TooLarge,
                "exact solver supports at most " + std::to_string(max_solver_order) + " vertices");
        if (auto twins = closed_twins(g); !twins.empty())
            throw PreconditionError(Precondition::NotIdentifiable,
                "closed twins " + std::to_string(twins.front().first) + "," + std::to_string(twins.front().second));
        if (total && has_isolated_vertex(g))
            throw PreconditionError(Precondition::IsolatedVertex, "total domination needs every vertex to have a neighbour");

        auto start = std::chrono::steady_clock::now();
        auto sets = constraint_sets(g, total);
        HittingSetSearch search(sets, budget.value_or(budget_from_env()));

        // 2^k - 1 nonempty I-sets must cover n distinct vertices.
        int log_bound = 0;
        while ((Mask{1} << log_bound) - 1 < static_cast<Mask>(g.order()))
            ++log_bound;

        SolveResult result;
        try {
            for (int k = std::max(search.packing_bound(0, 0), log_bound); k <= g.order(); ++k)
                if (auto code = search.find_at_most(k)) {
                    result.witness = to_vertex_set(*code);
                    break;
                }
            result.status = SolveStatus::Optimal;
        }
        catch (const BudgetHit &) {
            result.witness = to_vertex_set(greedy_code(sets, g.order()));
            result.status = SolveStatus::BudgetExceeded;
        }
        result.value = static_cast<int>(result.witness.size());
        result.nodes_explored = search.nodes();
        result.time = std::chrono::steady_clock::now() - start;
        return result;
    }
}

auto budget_from_env() -> std::uint64_t
{
    const char * raw = std::getenv("IDCODE_BUDGET");
    if (!raw)
        return default_node_budget;
    try {
        std::size_t used = 0;
        auto value = std::stoull(raw, &used);
        if (used == std::string(raw).size() && value > 0)
            return value;
    }
    catch (const std::exception &) {
    }
    return default_node_budget;
}

auto gamma_id(const Graph & g, std::optional<std::uint64_t> budget) -> SolveResult
{
    return solve(g, false, budget);
}

auto gamma_tid(const Graph & g, std::optional<std::uint64_t> budget) -> SolveResult
{
    return solve(g, true, budget);
}

} // namespace idcode
