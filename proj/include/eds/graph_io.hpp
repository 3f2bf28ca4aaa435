#pragma once

#include <eds/domination.hpp>
#include <eds/graph.hpp>

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Graph files: lines starting with '#' (after optional blanks) and blank lines
// are ignored; the first data line is "n m", followed by exactly m lines
// "u v" with 0-based ids.

namespace eds {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string & what) :
        std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line(line)
    {
    }
    std::size_t line;
};

namespace detail {
    inline auto split_numbers(std::string_view text, std::size_t line_no) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> out;
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
                ++i;
            if (i == text.size())
                break;
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            auto stop = static_cast<std::size_t>(ptr - text.data());
            if (ec != std::errc{} || (stop < text.size() && text[stop] != ' ' && text[stop] != '\t'
                    && text[stop] != '\r'))
                throw ParseError(line_no, "expected a non-negative integer");
            out.push_back(value);
            i = stop;
        }
        return out;
    }

    inline auto is_skippable(std::string_view line) -> bool
    {
        auto first = line.find_first_not_of(" \t\r");
        return first == std::string_view::npos || line[first] == '#';
    }
}

inline auto parse_graph(std::istream & in) -> BipartiteGraph
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_skippable(line))
            continue;
        auto nums = detail::split_numbers(line, line_no);
        if (nums.size() != 2)
            throw ParseError(line_no, header ? "expected an edge \"u v\"" : "expected a header \"n m\"");
        if (! header) {
            if (nums[0] > UINT32_MAX)
                throw ParseError(line_no, "vertex count too large");
            header.emplace(nums[0], nums[1]);
            continue;
        }
        if (edges.size() == header->second)
            throw ParseError(line_no, "more edge lines than declared");
        for (auto v : nums)
            if (v >= header->first)
                throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
        if (nums[0] == nums[1])
            throw ParseError(line_no, "self-loop");
        edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
    }
    if (! header)
        throw ParseError(0, "missing header \"n m\"");
    if (edges.size() != header->second)
        throw ParseError(0, "declared " + std::to_string(header->second) + " edges, found "
            + std::to_string(edges.size()));
    return BipartiteGraph::from_edge_list(header->first, edges);
}

inline auto parse_graph(const std::string & text) -> BipartiteGraph
{
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream & out, const BipartiteGraph & g)
{
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

inline auto format_vertices(const std::vector<Vertex> & vs) -> std::string
{
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(vs[i]);
    }
    return s;
}

/// Space-separated ids, e.g. a --set argument or a solution sidecar.
inline auto parse_vertex_list(std::string_view text) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    std::string line;
    for (auto c : text)
        line += (c == '\n' || c == ',') ? ' ' : c;
    for (auto v : detail::split_numbers(line, 0)) {
        if (v > UINT32_MAX)
            throw ParseError(0, "vertex id too large");
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

}
