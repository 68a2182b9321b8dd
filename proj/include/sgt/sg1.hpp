#ifndef SGT_SG1_HPP
#define SGT_SG1_HPP

// SG1 text format:
//
//   n m
//   u v s      (m lines, s is '+' or '-')
//
// Blank lines and anything after '#' are ignored.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"

namespace sgt {

inline std::string to_sg1(const SignedGraph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
    return out.str();
}

inline SignedGraph parse_sg1(std::istream& in) {
    std::vector<std::string> lines;
    std::vector<int> line_numbers;
    std::string raw;
    for (int lineno = 1; std::getline(in, raw); ++lineno) {
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        lines.push_back(raw);
        line_numbers.push_back(lineno);
    }
    auto fail = [&](std::size_t idx, const std::string& msg) -> Error {
        return Error(ErrorKind::Parse,
                     "SG1 line " + std::to_string(line_numbers.at(idx)) + ": " + msg);
    };
    if (lines.empty())
        throw Error(ErrorKind::Parse, "SG1 input is empty");

    long n = -1, m = -1;
    {
        std::istringstream hdr(lines[0]);
        std::string extra;
        if (!(hdr >> n >> m) || (hdr >> extra) || n < 0 || m < 0)
            throw fail(0, "header must be 'n m' with non-negative integers");
    }
    if (lines.size() - 1 != static_cast<std::size_t>(m))
        throw Error(ErrorKind::Parse, "SG1 header announces " + std::to_string(m) +
                                          " edges but " + std::to_string(lines.size() - 1) +
                                          " edge lines follow");
    std::vector<SignedEdge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        long u = 0, v = 0;
        std::string s, extra;
        if (!(ls >> u >> v >> s) || (ls >> extra))
            throw fail(i, "edge line must be 'u v s'");
        if (s != "+" && s != "-")
            throw fail(i, "edge sign must be '+' or '-'");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), s == "+" ? 1 : -1});
    }
    return SignedGraph(static_cast<int>(n), edges);
}

inline SignedGraph parse_sg1(const std::string& text) {
    std::istringstream in(text);
    return parse_sg1(in);
}

} // namespace sgt

#endif // SGT_SG1_HPP
