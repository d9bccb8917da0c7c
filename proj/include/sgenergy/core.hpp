#pragma once
// Signed-graph data model: construction, switching, balance, induced
// subgraphs and cycle machinery. Vertices are 0..n-1; every edge carries a
// sign in {+1, -1}. Graphs are immutable after construction, so values can
// be shared freely between threads.

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgenergy {

struct SignedEdge {
    int u = 0;  // u < v always
    int v = 0;
    int sign = 1;
    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

using VertexSet = std::vector<int>;
using EdgeTriple = std::array<int, 3>;  // {u, v, sign}

namespace detail {
inline std::string triple_str(int u, int v, int s) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + "," +
           (s < 0 ? "-" : "+") + ")";
}
}  // namespace detail

class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(int order) : n_(order) {
        if (order < 0) throw std::invalid_argument("negative vertex count");
        adj_.resize(order);
    }

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }

    // Neighbors of v as (vertex, sign), sorted by vertex id.
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const { return sign_or_zero(u, v) != 0; }

    // 0 when the edge is absent.
    int sign_or_zero(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        for (auto [w, s] : adj_[u])
            if (w == v) return s;
        return 0;
    }

    int sign_of(int u, int v) const {
        int s = sign_or_zero(u, v);
        if (s == 0)
            throw std::invalid_argument("no edge " + detail::triple_str(u, v, 1));
        return s;
    }

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

    friend SignedGraph from_edge_list(int order,
                                      const std::vector<EdgeTriple>& triples);

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range 0.." + std::to_string(n_ - 1));
    }
    void add_edge_unchecked(int u, int v, int s) {
        if (u > v) std::swap(u, v);
        edges_.push_back({u, v, s});
        adj_[u].emplace_back(v, s);
        adj_[v].emplace_back(u, s);
    }
    void finalize() {
        std::sort(edges_.begin(), edges_.end());
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Validating constructor. Rejects out-of-range endpoints, self-loops and
// duplicate pairs; the offending triple is quoted in the error message.
inline SignedGraph from_edge_list(int order, const std::vector<EdgeTriple>& triples) {
    SignedGraph g(order);
    for (const auto& [u, v, s] : triples) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw std::invalid_argument("vertex out of range in edge " +
                                        detail::triple_str(u, v, s));
        if (u == v)
            throw std::invalid_argument("self-loop " + detail::triple_str(u, v, s));
        if (s != 1 && s != -1)
            throw std::invalid_argument("sign must be +1 or -1 in edge " +
                                        detail::triple_str(u, v, s));
        if (g.has_edge(u, v))
            throw std::invalid_argument("duplicate edge " + detail::triple_str(u, v, s));
        g.add_edge_unchecked(u, v, s);
    }
    g.finalize();
    return g;
}

inline std::vector<std::vector<int>> adjacency_matrix(const SignedGraph& g) {
    std::vector<std::vector<int>> a(g.order(), std::vector<int>(g.order(), 0));
    for (const auto& e : g.edges()) {
        a[e.u][e.v] = e.sign;
        a[e.v][e.u] = e.sign;
    }
    return a;
}

// Switching: flip the sign of every edge with exactly one endpoint in u.
inline SignedGraph switched(const SignedGraph& g, const VertexSet& u) {
    std::vector<char> in(g.order(), 0);
    for (int v : u) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("switching set member " + std::to_string(v) +
                                        " out of range");
        in[v] = 1;
    }
    std::vector<EdgeTriple> triples;
    triples.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        int s = (in[e.u] != in[e.v]) ? -e.sign : e.sign;
        triples.push_back({e.u, e.v, s});
    }
    return from_edge_list(g.order(), triples);
}

inline SignedGraph negated(const SignedGraph& g) {
    std::vector<EdgeTriple> triples;
    triples.reserve(g.edges().size());
    for (const auto& e : g.edges()) triples.push_back({e.u, e.v, -e.sign});
    return from_edge_list(g.order(), triples);
}

namespace detail {
// Spanning-forest vertex labels l[v] in {+1,-1} chosen so that every tree
// edge gets l[u]*sign*l[v] = +1. Non-tree edges then expose the switching
// class: the normalized sign sign*l[u]*l[v] is a switching invariant.
inline std::vector<int> forest_labels(const SignedGraph& g) {
    std::vector<int> label(g.order(), 0);
    for (int root = 0; root < g.order(); ++root) {
        if (label[root] != 0) continue;
        label[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, s] : g.neighbors(v)) {
                if (label[w] != 0) continue;
                label[w] = label[v] * s;
                q.push(w);
            }
        }
    }
    return label;
}
}  // namespace detail

inline bool is_balanced(const SignedGraph& g) {
    auto label = detail::forest_labels(g);
    for (const auto& e : g.edges())
        if (e.sign * label[e.u] * label[e.v] != 1) return false;
    return true;
}

// True iff some switching set turns g1 into g2. Requires identical labeled
// underlying graphs; cross-isomorphism equivalence is handled elsewhere via
// canonical codes.
inline bool switching_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count())
        throw std::invalid_argument("underlying graphs differ");
    for (std::size_t i = 0; i < g1.edges().size(); ++i) {
        const auto& a = g1.edges()[i];
        const auto& b = g2.edges()[i];
        if (a.u != b.u || a.v != b.v)
            throw std::invalid_argument("underlying graphs differ");
    }
    auto l1 = detail::forest_labels(g1);
    auto l2 = detail::forest_labels(g2);
    for (std::size_t i = 0; i < g1.edges().size(); ++i) {
        const auto& a = g1.edges()[i];
        const auto& b = g2.edges()[i];
        if (a.sign * l1[a.u] * l1[a.v] != b.sign * l2[b.u] * l2[b.v]) return false;
    }
    return true;
}

// Induced subgraph on the complement of s; survivors are relabeled
// compactly, preserving their original order.
inline SignedGraph delete_vertices(const SignedGraph& g, const VertexSet& s) {
    std::vector<char> gone(g.order(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range");
        gone[v] = 1;
    }
    std::vector<int> newid(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!gone[v]) newid[v] = next++;
    std::vector<EdgeTriple> triples;
    for (const auto& e : g.edges())
        if (!gone[e.u] && !gone[e.v])
            triples.push_back({newid[e.u], newid[e.v], e.sign});
    return from_edge_list(next, triples);
}

inline SignedGraph delete_edge(const SignedGraph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("no edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") to delete");
    if (u > v) std::swap(u, v);
    std::vector<EdgeTriple> triples;
    for (const auto& e : g.edges())
        if (!(e.u == u && e.v == v)) triples.push_back({e.u, e.v, e.sign});
    return from_edge_list(g.order(), triples);
}

// g1's vertices keep their ids; g2's are shifted by g1.order().
inline SignedGraph disjoint_union(const SignedGraph& g1, const SignedGraph& g2) {
    std::vector<EdgeTriple> triples;
    triples.reserve(g1.edges().size() + g2.edges().size());
    for (const auto& e : g1.edges()) triples.push_back({e.u, e.v, e.sign});
    int off = g1.order();
    for (const auto& e : g2.edges()) triples.push_back({e.u + off, e.v + off, e.sign});
    return from_edge_list(g1.order() + g2.order(), triples);
}

struct CycleData {
    std::vector<int> vertices;  // cyclic sequence, anchored at its minimum
    int sign = 1;
    friend bool operator==(const CycleData&, const CycleData&) = default;
};

namespace detail {
inline int cycle_sign_of_sequence(const SignedGraph& g, const std::vector<int>& vs) {
    int s = 1;
    for (std::size_t i = 0; i < vs.size(); ++i)
        s *= g.sign_of(vs[i], vs[(i + 1) % vs.size()]);
    return s;
}
}  // namespace detail

// Every simple cycle, exactly once. DFS over vertex-ordered paths: each
// cycle is anchored at its smallest vertex and oriented so the second
// vertex is smaller than the last. Exponential in general; intended for
// small graphs (n <= 14).
inline std::vector<CycleData> all_cycles(const SignedGraph& g) {
    std::vector<CycleData> out;
    std::vector<int> path;
    std::vector<char> onpath(g.order(), 0);

    auto dfs = [&](auto&& self, int v, int anchor) -> void {
        for (auto [w, s] : g.neighbors(v)) {
            (void)s;
            if (w == anchor && path.size() >= 3 && path[1] < path.back()) {
                out.push_back({path, detail::cycle_sign_of_sequence(g, path)});
            } else if (w > anchor && !onpath[w]) {
                path.push_back(w);
                onpath[w] = 1;
                self(self, w, anchor);
                path.pop_back();
                onpath[w] = 0;
            }
        }
    };

    for (int a = 0; a < g.order(); ++a) {
        path.assign(1, a);
        onpath.assign(g.order(), 0);
        onpath[a] = 1;
        dfs(dfs, a, a);
    }
    return out;
}

inline std::vector<std::vector<int>> connected_components(const SignedGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.order(), 0);
    for (int root = 0; root < g.order(); ++root) {
        if (seen[root]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(root);
        seen[root] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (auto [w, s] : g.neighbors(v)) {
                (void)s;
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const SignedGraph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

// Length of the shortest cycle; 0 for forests. BFS from every root: the
// minimum of dist(u)+dist(v)+1 over non-tree edges, taken over all roots,
// is exact.
inline int girth(const SignedGraph& g) {
    int best = 0;
    for (int root = 0; root < g.order(); ++root) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, s] : g.neighbors(v)) {
                (void)s;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                }
            }
        }
        for (const auto& e : g.edges()) {
            if (dist[e.u] < 0 || dist[e.v] < 0) continue;
            if (parent[e.u] == e.v || parent[e.v] == e.u) continue;
            int len = dist[e.u] + dist[e.v] + 1;
            if (best == 0 || len < best) best = len;
        }
    }
    return best;
}

inline bool is_unicyclic(const SignedGraph& g) {
    return g.order() >= 3 && g.edge_count() == g.order() && is_connected(g);
}

// The one cycle of a unicyclic graph, found by stripping leaves.
inline CycleData unique_cycle(const SignedGraph& g) {
    if (!is_unicyclic(g))
        throw std::invalid_argument("unique_cycle requires a unicyclic graph");
    std::vector<int> deg(g.order());
    for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    std::queue<int> leaves;
    for (int v = 0; v < g.order(); ++v)
        if (deg[v] == 1) leaves.push(v);
    std::vector<char> stripped(g.order(), 0);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        stripped[v] = 1;
        for (auto [w, s] : g.neighbors(v)) {
            (void)s;
            if (!stripped[w] && --deg[w] == 1) leaves.push(w);
        }
    }
    int start = -1;
    for (int v = 0; v < g.order(); ++v)
        if (!stripped[v]) {
            start = v;
            break;
        }
    std::vector<int> cyc{start};
    int prev = -1, cur = start;
    // walk toward the smaller neighbor first so the orientation matches
    // all_cycles
    while (true) {
        int next = -1;
        for (auto [w, s] : g.neighbors(cur)) {
            (void)s;
            if (stripped[w] || w == prev) continue;
            if (next < 0 || w < next) next = w;
            if (cyc.size() > 1) break;  // only the start has a choice
        }
        if (next == start) break;
        cyc.push_back(next);
        prev = cur;
        cur = next;
    }
    return {cyc, detail::cycle_sign_of_sequence(g, cyc)};
}

}  // namespace sgenergy
