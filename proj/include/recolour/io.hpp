#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/explorer.hpp"
#include "recolour/graph.hpp"

namespace recolour {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
    std::size_t line;
};

namespace detail {

// Splits the stream into lines, requiring a trailing newline, and drops
// comment ('#') and blank lines. Each surviving line keeps its original
// 1-based number.
inline std::vector<std::pair<std::size_t, std::string>> data_lines(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::size_t line_no = 1, start = 0;
    if (!text.empty() && text.back() != '\n')
        throw ParseError(1 + static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
                         "missing trailing newline");
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            std::string line = text.substr(start, i - start);
            const auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#')
                lines.emplace_back(line_no, line);
            start = i + 1;
            ++line_no;
        }
    }
    return lines;
}

inline std::vector<long long> parse_ints(std::size_t line_no, const std::string& line, const char* what) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long v;
    while (ss >> v)
        out.push_back(v);
    std::string rest;
    if ((ss.fail() && !ss.eof()) || (ss.clear(), static_cast<bool>(ss >> rest)))
        throw ParseError(line_no, std::string("malformed ") + what);
    return out;
}

} // namespace detail

/// Graph text format: `graph <n>`, optional `parts <u_count> <U...>`,
/// one `e <u> <v>` per edge; `#` starts a comment line.
inline Graph read_graph(std::istream& in) {
    auto lines = detail::data_lines(in);
    if (lines.empty())
        throw ParseError(1, "expected 'graph <n>' header");
    std::size_t idx = 0;
    auto [line_no, line] = lines[idx];
    std::istringstream head(line);
    std::string word;
    long long n = -1;
    if (!(head >> word >> n) || word != "graph" || n < 0)
        throw ParseError(line_no, "expected 'graph <n>' header");
    Graph g(static_cast<int>(n));
    ++idx;

    std::vector<Vertex> u_side;
    bool have_parts = false;
    if (idx < lines.size()) {
        std::istringstream probe(lines[idx].second);
        probe >> word;
        if (word == "parts") {
            auto nums = detail::parse_ints(lines[idx].first, lines[idx].second.substr(lines[idx].second.find("parts") + 5),
                                           "parts line");
            if (nums.empty() || nums[0] != static_cast<long long>(nums.size()) - 1)
                throw ParseError(lines[idx].first, "parts count does not match listed vertices");
            for (std::size_t i = 1; i < nums.size(); ++i) {
                if (nums[i] < 0 || nums[i] >= n)
                    throw ParseError(lines[idx].first, "parts vertex out of range");
                u_side.push_back(static_cast<Vertex>(nums[i]));
            }
            have_parts = true;
            ++idx;
        }
    }

    for (; idx < lines.size(); ++idx) {
        auto [no, text] = lines[idx];
        std::istringstream ss(text);
        std::string tag;
        long long u, v;
        ss >> tag;
        if (tag != "e" || !(ss >> u >> v))
            throw ParseError(no, "expected 'e <u> <v>'");
        std::string rest;
        if (ss >> rest)
            throw ParseError(no, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(no, "edge endpoint out of range");
        try {
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } catch (const std::invalid_argument& e) {
            throw ParseError(no, e.what());
        }
    }

    if (have_parts) {
        std::vector<char> in_u(static_cast<std::size_t>(n), 0);
        for (Vertex v : u_side)
            in_u[static_cast<std::size_t>(v)] = 1;
        std::vector<Vertex> v_side;
        for (Vertex v = 0; v < n; ++v)
            if (!in_u[static_cast<std::size_t>(v)])
                v_side.push_back(v);
        g.set_bipartition(std::move(u_side), std::move(v_side));
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.vertex_count() << "\n";
    if (g.bipartition()) {
        const auto& u_side = g.bipartition()->first;
        out << "parts " << u_side.size();
        for (Vertex v : u_side)
            out << " " << v;
        out << "\n";
    }
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges)
        out << "e " << u << " " << v << "\n";
}

/// Colouring text format: one line of n space-separated colours.
inline Colouring read_colouring(std::istream& in) {
    auto lines = detail::data_lines(in);
    if (lines.size() != 1)
        throw ParseError(lines.empty() ? 1 : lines[1].first, "expected exactly one colouring line");
    auto nums = detail::parse_ints(lines[0].first, lines[0].second, "colouring");
    Colouring c;
    for (long long v : nums) {
        if (v < 1)
            throw ParseError(lines[0].first, "colours must be positive");
        c.push_back(static_cast<Colour>(v));
    }
    return c;
}

inline void write_colouring(std::ostream& out, const Colouring& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        out << (i ? " " : "") << c[i];
    out << "\n";
}

/// List-assignment text format: n lines, one vertex's colours per line.
inline ListAssignment read_lists(std::istream& in) {
    auto lines = detail::data_lines(in);
    std::vector<std::vector<Colour>> lists;
    for (const auto& [no, text] : lines) {
        auto nums = detail::parse_ints(no, text, "colour list");
        if (nums.empty())
            throw ParseError(no, "empty colour list");
        std::vector<Colour> list;
        for (long long v : nums) {
            if (v < 1)
                throw ParseError(no, "colours must be positive");
            list.push_back(static_cast<Colour>(v));
        }
        lists.push_back(std::move(list));
    }
    return make_lists(std::move(lists));
}

inline void write_lists(std::ostream& out, const ListAssignment& l) {
    for (const auto& list : l) {
        for (std::size_t i = 0; i < list.size(); ++i)
            out << (i ? " " : "") << list[i];
        out << "\n";
    }
}

/// Sequence text format: `seq <len>` then one `r <vertex> <colour>` per
/// step. The start colouring travels separately as a colouring file.
inline std::vector<Step> read_sequence_steps(std::istream& in) {
    auto lines = detail::data_lines(in);
    if (lines.empty())
        throw ParseError(1, "expected 'seq <len>' header");
    std::istringstream head(lines[0].second);
    std::string word;
    long long len = -1;
    if (!(head >> word >> len) || word != "seq" || len < 0)
        throw ParseError(lines[0].first, "expected 'seq <len>' header");
    std::vector<Step> steps;
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        auto [no, text] = lines[idx];
        std::istringstream ss(text);
        std::string tag;
        long long v, c;
        if (!(ss >> tag >> v >> c) || tag != "r")
            throw ParseError(no, "expected 'r <vertex> <colour>'");
        if (v < 0 || c < 1)
            throw ParseError(no, "bad step values");
        steps.push_back(Step{static_cast<Vertex>(v), static_cast<Colour>(c)});
    }
    if (static_cast<long long>(steps.size()) != len)
        throw ParseError(lines[0].first, "declared length does not match step count");
    return steps;
}

inline void write_sequence_steps(std::ostream& out, const std::vector<Step>& steps) {
    out << "seq " << steps.size() << "\n";
    for (const Step& s : steps)
        out << "r " << s.vertex << " " << s.colour << "\n";
}

template <class Reader>
auto read_file(const std::string& path, Reader&& reader) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return reader(in);
}

template <class Value, class Writer>
void write_file(const std::string& path, const Value& value, Writer&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    writer(out, value);
}

} // namespace recolour
