#include <idcode/bounds.hpp>
#include <idcode/constructions.hpp>
#include <idcode/errors.hpp>
#include <idcode/solver.hpp>

#include <numeric>

namespace idcode {

auto Rational::floor() const -> long long
{
    auto q = numerator / denominator;
    return (numerator % denominator != 0 && numerator < 0) ? q - 1 : q;
}

auto Rational::ceil() const -> long long
{
    auto q = numerator / denominator;
    return (numerator % denominator != 0 && numerator > 0) ? q + 1 : q;
}

auto Rational::to_string() const -> std::string
{
    auto g = std::gcd(numerator, denominator);
    if (g == 0)
        g = 1;
    auto num = numerator / g, den = denominator / g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

auto BoundEntry::satisfied_by(int exact) const -> bool
{
    if (!applicable)
        return true;
    return kind == BoundKind::Upper ? exact <= value : exact >= value;
}

auto BoundReport::find(const std::string & name) const -> const BoundEntry &
{
    for (const auto & b : bounds)
        if (b.name == name)
            return b;
    throw PreconditionError(Precondition::InvalidParameter, "no bound named " + name);
}

auto BoundReport::violations() const -> std::vector<std::string>
{
    std::vector<std::string> out;
    if (!exact)
        return out;
    for (const auto & b : bounds)
        if (!b.satisfied_by(*exact))
            out.push_back(b.name);
    return out;
}

namespace {
    auto entry(std::string name, BoundKind kind, Rational raw, bool applicable, std::string reason) -> BoundEntry
    {
        BoundEntry e;
        e.name = std::move(name);
        e.kind = kind;
        e.raw = raw;
        e.value = kind == BoundKind::Upper ? raw.floor() : raw.ceil();
        e.applicable = applicable;
        e.reason = applicable ? "applicable" : std::move(reason);
        return e;
    }
}

auto evaluate_bounds(const Graph & g, bool with_exact) -> BoundReport
{
    BoundReport report;
    report.n = g.order();
    report.profile = profile(g);
    const auto & p = report.profile;
    const long long n = g.order(), l = p.leaf_count, s = p.support_count;

    const bool tree = is_tree(g);
    const bool bipartite_no_twins = p.connected && n >= 3 && p.bipartite() && !p.has_twin_deg_ge2;
    const bool complement_applies = support_complement_applicable(g);

    auto & b = report.bounds;
    b.push_back(entry("T1", BoundKind::Upper, {n + 2 * l - 2, 2}, tree && n >= 3, "needs a tree on n >= 3 vertices"));
    b.push_back(entry("T2", BoundKind::Upper, {3 * n + 2 * l - 1, 5}, tree && n >= 3, "needs a tree on n >= 3 vertices"));
    b.push_back(entry("L4", BoundKind::Upper, {n - s, 1}, complement_applies,
        "needs connected, n >= 4, not P4, and g - L(g) identifiable or triangle-free"));
    b.back().total_dominating = true;
    b.push_back(entry("T5", BoundKind::Upper, {n - s + 1, 1}, p.connected && p.identifiable && n >= 3,
        "needs a connected identifiable graph on n >= 3 vertices"));
    b.push_back(entry("T6", BoundKind::Upper, {n + l, 2}, bipartite_no_twins,
        "needs connected bipartite, n >= 3, no twins of degree >= 2"));

    const auto & t6 = b.back();
    Rational c7_raw = t6.raw;
    if ((n - s) * t6.raw.denominator < t6.raw.numerator)
        c7_raw = {n - s, 1};
    b.push_back(entry("C7", BoundKind::Upper, c7_raw, bipartite_no_twins && n >= 5,
        "needs connected bipartite, n >= 5, no twins of degree >= 2"));
    b.push_back(entry("C8", BoundKind::Upper, {2 * n, 3},
        p.connected && n >= 3 && p.bipartite() && p.twin_free() && !is_p4(g),
        "needs connected twin-free bipartite, n >= 3, not P4"));
    b.push_back(entry("T11", BoundKind::Upper, {5 * n + 2 * l, 7},
        p.girth.at_least(5) && p.identifiable && !has_isolated_vertex(g),
        "needs girth >= 5, identifiable, no isolated vertices"));

    b.push_back(entry("LB1", BoundKind::Lower, {3 * (n - 1), 7}, tree && n >= 3, "tree lower bound"));
    b.push_back(entry("LB2", BoundKind::Lower, {2 * n - s + 3, 4}, tree && n >= 4, "tree lower bound, n >= 4"));
    b.push_back(entry("LB3", BoundKind::Lower, {3 * n + l - s + 1, 7}, tree && n >= 3, "tree lower bound"));

    if (with_exact && n <= exact_order_limit && p.identifiable) {
        auto solved = gamma_id(g);
        if (solved.proven_optimal()) {
            report.exact = solved.value;
            report.witness = solved.witness;
            for (auto & e : b)
                if (e.applicable)
                    e.tight = e.value == solved.value;
        }
    }
    return report;
}

} // namespace idcode
