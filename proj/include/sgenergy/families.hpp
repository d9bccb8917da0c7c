#pragma once
// Constructors for the named families: paths, signed cycles and lollipops
// (a cycle C_g with a path on n-g vertices attached). Layout is
// deterministic: cycle vertices 0..g-1 in order, path vertices g..n-1
// attached at vertex 0; unbalanced variants carry exactly one negative
// edge, fixed at (0, g-1).

#include <string>
#include <vector>

#include "sgenergy/charpoly.hpp"
#include "sgenergy/core.hpp"

namespace sgenergy {

enum class Family { Path, Cycle, Lollipop };

struct FamilySpec {
    Family tag = Family::Path;
    int n = 0;
    int g = 0;  // cycle length, lollipop only
    bool balanced = true;
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline SignedGraph build(const FamilySpec& spec) {
    std::vector<EdgeTriple> triples;
    switch (spec.tag) {
        case Family::Path:
            if (spec.n < 1)
                throw std::invalid_argument("path requires n >= 1");
            if (spec.g != 0)
                throw std::invalid_argument("path takes no girth parameter");
            if (!spec.balanced)
                throw std::invalid_argument("a path has no cycle to unbalance");
            for (int v = 0; v + 1 < spec.n; ++v) triples.push_back({v, v + 1, 1});
            break;
        case Family::Cycle:
            if (spec.n < 3)
                throw std::invalid_argument("cycle requires n >= 3");
            if (spec.g != 0)
                throw std::invalid_argument("cycle takes no girth parameter (n is the length)");
            for (int v = 0; v + 1 < spec.n; ++v) triples.push_back({v, v + 1, 1});
            triples.push_back({0, spec.n - 1, spec.balanced ? 1 : -1});
            break;
        case Family::Lollipop:
            if (spec.g < 3 || spec.n < spec.g)
                throw std::invalid_argument("lollipop requires n >= g >= 3");
            for (int v = 0; v + 1 < spec.g; ++v) triples.push_back({v, v + 1, 1});
            triples.push_back({0, spec.g - 1, spec.balanced ? 1 : -1});
            if (spec.n > spec.g) {
                triples.push_back({0, spec.g, 1});
                for (int v = spec.g; v + 1 < spec.n; ++v) triples.push_back({v, v + 1, 1});
            }
            break;
    }
    return from_edge_list(spec.n, triples);
}

// Mini-grammar "tag:key=value,...", e.g. "lollipop:n=10,g=4,unbalanced",
// "cycle:n=6,balanced", "path:n=6". Balanced is the default.
inline FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec needs 'tag:...': " + text);
    std::string tag = text.substr(0, colon);
    FamilySpec spec;
    if (tag == "path")
        spec.tag = Family::Path;
    else if (tag == "cycle")
        spec.tag = Family::Cycle;
    else if (tag == "lollipop")
        spec.tag = Family::Lollipop;
    else
        throw std::invalid_argument("unknown family '" + tag + "'");

    std::string rest = text.substr(colon + 1);
    bool sawN = false;
    std::size_t pos = 0;
    while (!rest.empty() && pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string token = rest.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
        if (token == "balanced") {
            spec.balanced = true;
        } else if (token == "unbalanced") {
            spec.balanced = false;
        } else if (auto eq = token.find('='); eq != std::string::npos) {
            std::string key = token.substr(0, eq);
            int value;
            try {
                std::size_t used = 0;
                value = std::stoi(token.substr(eq + 1), &used);
                if (used != token.size() - eq - 1) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("bad number in token '" + token + "'");
            }
            if (key == "n") {
                spec.n = value;
                sawN = true;
            } else if (key == "g") {
                spec.g = value;
            } else {
                throw std::invalid_argument("unknown key '" + key + "'");
            }
        } else {
            throw std::invalid_argument("bad token '" + token + "' in family spec");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (!sawN) throw std::invalid_argument("family spec needs n: " + text);
    return spec;
}

inline std::string to_string(const FamilySpec& spec) {
    switch (spec.tag) {
        case Family::Path:
            return "path:n=" + std::to_string(spec.n);
        case Family::Cycle:
            return "cycle:n=" + std::to_string(spec.n) + "," +
                   (spec.balanced ? "balanced" : "unbalanced");
        case Family::Lollipop:
            return "lollipop:n=" + std::to_string(spec.n) +
                   ",g=" + std::to_string(spec.g) + "," +
                   (spec.balanced ? "balanced" : "unbalanced");
    }
    return "";
}

inline SignedGraph path_n(int n) { return build({Family::Path, n, 0, true}); }
inline SignedGraph cycle_n(int n, bool balanced) {
    return build({Family::Cycle, n, 0, balanced});
}
inline SignedGraph lollipop(int n, int g, bool balanced) {
    return build({Family::Lollipop, n, g, balanced});
}

// Checks b_j(L_n) = b_j(L_{n-1}) + b_{j-2}(L_{n-2}) for the lollipop family
// with girth g (L_n = the lollipop on n vertices), which is the pendant
// deletion applied at the path's terminal vertex. Needs a pendant edge
// whose removal stays in the family, hence n >= g + 2, and a defined
// b-sequence, hence even g.
inline bool b_recurrence_check(int n, int g, bool balanced) {
    if (n < g + 2)
        throw std::invalid_argument("b_recurrence_check requires n >= g + 2");
    if (g % 2 != 0)
        throw std::invalid_argument(
            "b_recurrence_check requires even girth (b-sequence undefined otherwise)");
    auto bn = b_sequence(lollipop(n, g, balanced)).values;
    auto b1 = b_sequence(lollipop(n - 1, g, balanced)).values;
    auto b2 = b_sequence(lollipop(n - 2, g, balanced)).values;
    for (std::size_t k = 0; k < bn.size(); ++k) {
        Int rhs = k < b1.size() ? b1[k] : Int(0);
        if (k >= 1 && k - 1 < b2.size()) rhs += b2[k - 1];
        if (bn[k] != rhs) return false;
    }
    return true;
}

}  // namespace sgenergy
