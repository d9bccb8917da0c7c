#pragma once
// k-matching counts and the path-union quasi-order chain. Counts are
// signature-independent, so everything here looks only at the underlying
// graph.

#include <string>
#include <unordered_map>
#include <vector>

#include "sgenergy/core.hpp"
#include "sgenergy/exact_int.hpp"
#include "sgenergy/quasi_order.hpp"

namespace sgenergy {

// values[k] = m(g, k) for k = 0..floor(n/2); m(g,0) = 1, m(g,1) = edge count.
struct MatchingVector {
    std::vector<Int> values;
    friend bool operator==(const MatchingVector&, const MatchingVector&) = default;
};

namespace detail {

inline std::string unsigned_key(const SignedGraph& g) {
    std::string k = std::to_string(g.order());
    for (const auto& e : g.edges()) {
        k += ';';
        k += std::to_string(e.u);
        k += ',';
        k += std::to_string(e.v);
    }
    return k;
}

// r += s * x^1 (matchings using one more edge)
inline void add_shifted(std::vector<Int>& r, const std::vector<Int>& s) {
    if (s.size() + 1 > r.size()) r.resize(s.size() + 1, Int(0));
    for (std::size_t i = 0; i < s.size(); ++i) r[i + 1] += s[i];
}

inline std::vector<Int> convolve(const std::vector<Int>& p, const std::vector<Int>& q) {
    std::vector<Int> r(p.size() + q.size() - 1, Int(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

// m(G,k) = m(G-e,k) + m(G-u-v,k-1), memoized; components convolve.
inline std::vector<Int> matchings_rec(const SignedGraph& g,
                                      std::unordered_map<std::string, std::vector<Int>>& memo) {
    if (g.edge_count() == 0) return {Int(1)};
    std::string key = unsigned_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<Int> result;
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        result = {Int(1)};
        for (const auto& comp : comps) {
            std::vector<int> others;
            std::vector<char> keep(g.order(), 0);
            for (int v : comp) keep[v] = 1;
            for (int v = 0; v < g.order(); ++v)
                if (!keep[v]) others.push_back(v);
            result = convolve(result, matchings_rec(delete_vertices(g, others), memo));
        }
    } else {
        int u = -1, v = -1;
        for (int w = 0; w < g.order(); ++w)
            if (g.degree(w) == 1) {
                u = g.neighbors(w)[0].first;
                v = w;
                break;
            }
        if (v < 0) {
            u = g.edges()[0].u;
            v = g.edges()[0].v;
        }
        result = matchings_rec(delete_edge(g, u, v), memo);
        add_shifted(result, matchings_rec(delete_vertices(g, {u, v}), memo));
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace detail

inline MatchingVector matching_numbers(const SignedGraph& g) {
    std::unordered_map<std::string, std::vector<Int>> memo;
    auto counts = detail::matchings_rec(g, memo);
    counts.resize(g.order() / 2 + 1, Int(0));
    return {std::move(counts)};
}

inline bool is_forest(const SignedGraph& g) {
    return g.edge_count() ==
           g.order() - static_cast<int>(connected_components(g).size());
}

// For forests the matching vector equals the b-sequence, so this is the
// quasi-order restricted to forests.
inline QuasiOrderResult forest_quasi_compare(const SignedGraph& f1,
                                             const SignedGraph& f2) {
    if (f1.order() != f2.order())
        throw std::invalid_argument("forest_quasi_compare: order mismatch");
    if (!is_forest(f1) || !is_forest(f2))
        throw std::invalid_argument("forest_quasi_compare: input has a cycle");
    return quasi_compare_sequences(matching_numbers(f1).values,
                                   matching_numbers(f2).values);
}

struct PathUnionChainReport {
    bool ok = false;
    // union descriptions in chain order, e.g. "P_2 u P_6"; identical
    // unordered unions (which arise at the even/odd junction for some n)
    // are listed once
    std::vector<std::string> witnesses;
    std::string failure;  // empty when ok
};

namespace detail {

inline SignedGraph path_graph(int n) {
    std::vector<EdgeTriple> triples;
    for (int v = 0; v + 1 < n; ++v) triples.push_back({v, v + 1, 1});
    return from_edge_list(n, triples);
}

}  // namespace detail

// Checks the strict chain
//   P_n > P_2 u P_{n-2} > P_4 u P_{n-4} > ... > P_{2k} u P_{n-2k}
//       > P_{2k+1} u P_{n-2k-1} > P_{2k-1} u P_{n-2k+1} > ... > P_1 u P_{n-1}
// with k = floor(n/4), comparing matching vectors. Consecutive entries that
// coincide as unordered unions collapse to one; strictness is required
// between distinct entries.
inline PathUnionChainReport verify_path_union_chain(int n) {
    if (n < 4)
        throw std::invalid_argument("verify_path_union_chain requires n >= 4");
    int k = n / 4;
    std::vector<int> splits{0};  // a = 0 stands for P_n itself
    for (int a = 2; a <= 2 * k; a += 2) splits.push_back(a);
    for (int a = 2 * k + 1; a >= 1; a -= 2) splits.push_back(a);

    PathUnionChainReport report;
    std::vector<MatchingVector> vectors;
    std::pair<int, int> prevParts{-1, -1};
    for (int a : splits) {
        std::pair<int, int> parts{std::min(a, n - a), std::max(a, n - a)};
        if (parts == prevParts) continue;  // same union written twice in the chain
        prevParts = parts;
        std::string name = a == 0 ? "P_" + std::to_string(n)
                                  : "P_" + std::to_string(a) + " u P_" +
                                        std::to_string(n - a);
        report.witnesses.push_back(name);
        vectors.push_back(matching_numbers(
            disjoint_union(detail::path_graph(a), detail::path_graph(n - a))));
    }
    for (std::size_t i = 0; i + 1 < vectors.size(); ++i) {
        auto rel = quasi_compare_sequences(vectors[i].values, vectors[i + 1].values);
        if (rel.relation != QuasiOrder::Greater) {
            report.failure = report.witnesses[i] + " does not strictly dominate " +
                             report.witnesses[i + 1];
            return report;
        }
    }
    report.ok = true;
    return report;
}

}  // namespace sgenergy
