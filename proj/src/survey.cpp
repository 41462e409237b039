#include <idcode/bounds.hpp>
#include <idcode/constructions.hpp>
#include <idcode/errors.hpp>
#include <idcode/generators.hpp>
#include <idcode/survey.hpp>

#include <atomic>
#include <optional>
#include <sstream>
#include <thread>

namespace idcode {

namespace {
    struct TreeRecord {
        Graph tree;
        BoundReport report;
        bool twin_free = false;
        bool corona = false;
        std::optional<std::size_t> parity_size;
        std::string parity_error;
        std::optional<std::size_t> complement_size;
        std::string complement_error;
    };

    auto examine(const Graph & tree) -> TreeRecord
    {
        TreeRecord r{tree, evaluate_bounds(tree, true), false, false, {}, {}, {}, {}};
        r.twin_free = r.report.profile.twin_free();
        r.corona = is_2corona(tree).has_value();
        try {
            r.parity_size = parity_shift_code(tree).code().size();
        }
        catch (const Error & e) {
            r.parity_error = e.what();
        }
        if (tree.order() >= 5 && support_complement_applicable(tree)) {
            try {
                r.complement_size = support_complement_code(tree).code.size();
            }
            catch (const ConstructionFailure & e) {
                r.complement_error = e.what();
            }
        }
        return r;
    }

    auto cell(const BoundEntry & b) -> std::string
    {
        return b.applicable ? std::to_string(b.value) : std::string{};
    }

    auto flag(const BoundEntry & b) -> std::string
    {
        return b.tight ? (*b.tight ? "1" : "0") : "";
    }

    auto fail(const std::string & what, const Graph & tree) -> void
    {
        throw BoundViolation(what + " on tree n=" + std::to_string(tree.order()) + " edges: " + compact_edges(tree));
    }
}

auto compact_edges(const Graph & g) -> std::string
{
    std::string out;
    for (auto [u, v] : g.edges()) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

auto survey_csv_header() -> std::string
{
    return "index,n,leaves,supports,girth,gamma_id,T1,T2,L4,T5,T6,C7,C8,T11,LB1,LB2,LB3,"
           "tight_T1,tight_T2,tight_T6,tight_T11,twin_free,is_2corona,parity_shift_size,"
           "support_complement_size,edges";
}

auto survey_trees(const SurveyOptions & options, std::ostream * csv) -> SurveySummary
{
    if (options.max_n > 14 || (options.max_n > 12 && !options.allow_large))
        throw PreconditionError(Precondition::InvalidParameter,
            "survey supports max_n <= 12 (13-14 with allow_large)");

    std::vector<Graph> trees;
    for (int n = 3; n <= options.max_n; ++n)
        for (auto & t : all_trees(n))
            trees.push_back(std::move(t));

    // Each tree is independent; results land in their canonical slot.
    std::vector<std::optional<TreeRecord>> records(trees.size());
    std::atomic<std::size_t> next{0};
    unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < trees.size(); i = next++)
                    records[i] = examine(trees[i]);
            });
    }

    SurveySummary summary;
    if (csv)
        *csv << survey_csv_header() << '\n';

    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto & r = *records[i];
        const auto & rep = r.report;
        const int n = r.tree.order();
        if (!rep.exact)
            fail("exact solver did not finish", r.tree);
        const int gamma = *rep.exact;

        for (const auto & name : rep.violations())
            fail("bound " + name + " violated (gamma_id=" + std::to_string(gamma) + ")", r.tree);
        if (!r.parity_error.empty() && rep.find("T6").applicable)
            fail("parity_shift_code failed: " + r.parity_error, r.tree);
        if (r.parity_size && static_cast<long long>(*r.parity_size) > rep.find("T6").value)
            fail("parity_shift_code exceeded floor((n+l)/2)", r.tree);
        if (!r.complement_error.empty())
            summary.support_complement_flags.push_back(compact_edges(r.tree) + " : " + r.complement_error);
        else if (r.complement_size &&
            static_cast<int>(*r.complement_size) != n - rep.profile.support_count)
            fail("support_complement_code size differs from n - s", r.tree);

        if (r.twin_free && !is_p4(r.tree)) {
            ++summary.twin_free_checked;
            bool extremal = 3 * gamma == 2 * n;
            if (extremal != r.corona)
                fail(std::string("2n/3 extremality ") + (extremal ? "without" : "with") + " a 2-corona", r.tree);
            if (extremal)
                ++summary.two_thirds_extremal;
        }

        ++summary.trees_checked;
        ++summary.trees_per_order[n];
        auto tight = [&](const char * name) { return rep.find(name).tight.value_or(false); };
        summary.t1_tight += tight("T1");
        summary.t2_tight += tight("T2");
        summary.t11_tight += tight("T11");
        if (tight("T6")) {
            ++summary.t6_tight;
            summary.t6_tight_trees.push_back(compact_edges(r.tree));
        }

        if (csv) {
            const auto & p = rep.profile;
            *csv << i << ',' << n << ',' << p.leaf_count << ',' << p.support_count << ',' << p.girth.to_string()
                 << ',' << gamma;
            for (const char * name : {"T1", "T2", "L4", "T5", "T6", "C7", "C8", "T11", "LB1", "LB2", "LB3"})
                *csv << ',' << cell(rep.find(name));
            for (const char * name : {"T1", "T2", "T6", "T11"})
                *csv << ',' << flag(rep.find(name));
            *csv << ',' << r.twin_free << ',' << r.corona << ','
                 << (r.parity_size ? std::to_string(*r.parity_size) : "") << ','
                 << (r.complement_size ? std::to_string(*r.complement_size) : "") << ','
                 << compact_edges(r.tree) << '\n';
        }
    }
    return summary;
}

} // namespace idcode
