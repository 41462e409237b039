#pragma once

#include <idcode/graph.hpp>

#include <filesystem>
#include <istream>
#include <string>

namespace idcode {

// Edge-list text: optional '#' comment lines, a header "n m", then m lines "u v"
// with 0-indexed endpoints. Blank lines are ignored.
auto parse_edge_list(std::istream & in) -> Graph;
auto parse_edge_list(const std::string & text) -> Graph;
auto read_edge_list(const std::filesystem::path & path) -> Graph;

auto to_edge_list(const Graph & g) -> std::string;

} // namespace idcode
