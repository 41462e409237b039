#pragma once

#include <idcode/graph.hpp>

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace idcode {

struct SurveyOptions {
    int max_n = 12;
    // Orders 13 and 14 are slow enough to need an explicit request.
    bool allow_large = false;
    // 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct SurveySummary {
    int trees_checked = 0;
    std::map<int, int> trees_per_order;
    int t1_tight = 0;
    int t2_tight = 0;
    int t6_tight = 0;
    int t11_tight = 0;
    int twin_free_checked = 0;
    int two_thirds_extremal = 0;
    // Edge lists of T6-tight trees, in survey order.
    std::vector<std::string> t6_tight_trees;
    // Trees on which the leaf-complement construction did not verify.
    std::vector<std::string> support_complement_flags;
};

// Fixed CSV column order, one row per tree.
auto survey_csv_header() -> std::string;

// Checks every tree with 3 <= n <= max_n against every applicable bound using
// the exact solver, and on twin-free trees other than P4 checks that
// gamma = 2n/3 exactly when the tree is a 2-corona. Rows are written in
// canonical tree order. Throws BoundViolation naming the first offending
// tree's edge list.
auto survey_trees(const SurveyOptions & options, std::ostream * csv) -> SurveySummary;

// "u-v u-v ..." for a compact single-field edge list.
auto compact_edges(const Graph & g) -> std::string;

} // namespace idcode
