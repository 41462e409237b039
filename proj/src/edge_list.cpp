#include <idcode/edge_list.hpp>
#include <idcode/errors.hpp>

#include <fstream>
#include <sstream>

namespace idcode {

namespace {
    // Next non-blank, non-comment line, or false at end of input.
    auto next_data_line(std::istream & in, std::string & line, int & line_no) -> bool
    {
        while (std::getline(in, line)) {
            ++line_no;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            return true;
        }
        return false;
    }

    auto parse_pair(const std::string & line, int line_no, long long & a, long long & b) -> void
    {
        std::istringstream fields(line);
        std::string rest;
        if (!(fields >> a >> b) || (fields >> rest))
            throw ParseError("line " + std::to_string(line_no) + ": expected two integers, got '" + line + "'");
    }
}

auto parse_edge_list(std::istream & in) -> Graph
{
    std::string line;
    int line_no = 0;
    if (!next_data_line(in, line, line_no))
        throw ParseError("empty edge list: missing 'n m' header");

    long long n = 0, m = 0;
    parse_pair(line, line_no, n, m);
    if (n < 1 || n > 1'000'000)
        throw ParseError("line " + std::to_string(line_no) + ": vertex count out of range");
    if (m < 0)
        throw ParseError("line " + std::to_string(line_no) + ": negative edge count");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, line_no))
            throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        long long u = 0, v = 0;
        parse_pair(line, line_no, u, v);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_data_line(in, line, line_no))
        throw ParseError("line " + std::to_string(line_no) + ": trailing data after " + std::to_string(m) + " edges");

    return Graph::from_edge_list(static_cast<int>(n), edges);
}

auto parse_edge_list(const std::string & text) -> Graph
{
    std::istringstream in(text);
    return parse_edge_list(in);
}

auto read_edge_list(const std::filesystem::path & path) -> Graph
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    return parse_edge_list(in);
}

auto to_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace idcode
