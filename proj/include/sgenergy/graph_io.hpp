#pragma once
// GraphFile format: header "n m", then m lines "u v s" with s in {+, -}.
// '#' starts a comment, blank lines are ignored, parse errors carry line
// numbers. Writing then re-reading any graph reproduces it exactly.

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sgenergy/core.hpp"

namespace sgenergy {

struct GraphParseError : std::runtime_error {
    int line;
    GraphParseError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message),
          line(line_) {}
};

inline SignedGraph read_graph(std::istream& in) {
    int lineno = 0;
    auto next_content_line = [&](std::string& content) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            auto begin = raw.find_first_not_of(" \t\r");
            if (begin == std::string::npos) continue;
            auto end = raw.find_last_not_of(" \t\r");
            content = raw.substr(begin, end - begin + 1);
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_content_line(line))
        throw GraphParseError(lineno, "missing header line 'n m'");
    int n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw GraphParseError(lineno, "header must be 'n m', got '" + line + "'");
        if (n < 0 || m < 0)
            throw GraphParseError(lineno, "negative count in header '" + line + "'");
    }

    std::vector<EdgeTriple> triples;
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        if (!next_content_line(line))
            throw GraphParseError(lineno, "expected " + std::to_string(m) +
                                              " edge lines, found " + std::to_string(i));
        std::istringstream es(line);
        int u, v;
        std::string sign, extra;
        if (!(es >> u >> v >> sign) || (es >> extra))
            throw GraphParseError(lineno, "edge line must be 'u v s', got '" + line + "'");
        if (sign != "+" && sign != "-")
            throw GraphParseError(lineno, "sign must be '+' or '-', got '" + sign + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphParseError(lineno, "vertex out of range 0.." +
                                              std::to_string(n - 1) + " in '" + line + "'");
        if (u == v) throw GraphParseError(lineno, "self-loop in '" + line + "'");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw GraphParseError(lineno, "duplicate edge in '" + line + "'");
        triples.push_back({u, v, sign == "+" ? 1 : -1});
    }
    if (next_content_line(line))
        throw GraphParseError(lineno, "unexpected content after " +
                                          std::to_string(m) + " edges: '" + line + "'");
    return from_edge_list(n, triples);
}

inline SignedGraph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open graph file: " + path);
    return read_graph(f);
}

inline void write_graph(std::ostream& out, const SignedGraph& g) {
    out << g.order() << " " << g.edge_count() << "\n";
    for (const auto& e : g.edges())
        out << e.u << " " << e.v << " " << (e.sign < 0 ? '-' : '+') << "\n";
}

inline std::string to_graph_file(const SignedGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace sgenergy
