#pragma once
// Exact characteristic polynomials of signed adjacency matrices by three
// independent engines (basic-figure expansion, deletion recurrences, trace
// elimination), the pairing-property b-sequence, and the coefficient
// quasi-order. No floating point anywhere in this module.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgenergy/core.hpp"
#include "sgenergy/exact_int.hpp"
#include "sgenergy/quasi_order.hpp"

namespace sgenergy {

// phi(x) = x^n + a_1 x^{n-1} + ... + a_n with exact integer coefficients.
// Stored lowest degree first: coeffs[k] multiplies x^k.
struct IntPolynomial {
    std::vector<Int> coeffs{Int(1)};

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Int& coeff(int k) const { return coeffs.at(k); }
    // Sachs indexing: a(j) is the coefficient of x^{n-j}.
    const Int& a(int j) const { return coeffs.at(degree() - j); }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

namespace detail {

inline IntPolynomial x_power(int n) {
    IntPolynomial p;
    p.coeffs.assign(n + 1, Int(0));
    p.coeffs[n] = 1;
    return p;
}

inline IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial r;
    r.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, Int(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
    return r;
}

// p -= k * q, padding p if needed
inline void poly_sub_scaled(IntPolynomial& p, const Int& k, const IntPolynomial& q) {
    if (q.coeffs.size() > p.coeffs.size()) p.coeffs.resize(q.coeffs.size(), Int(0));
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) p.coeffs[i] -= k * q.coeffs[i];
}

inline IntPolynomial poly_shift_x(const IntPolynomial& p) {
    IntPolynomial r;
    r.coeffs.assign(p.coeffs.size() + 1, Int(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) r.coeffs[i + 1] = p.coeffs[i];
    return r;
}

}  // namespace detail

// Highest-degree-first with explicit signs, e.g. "x^6 - 6x^4 + 10x^2 - 4".
inline std::string to_string(const IntPolynomial& p) {
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Int& c = p.coeff(k);
        if (c == 0 && !(out.empty() && k == 0)) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || k == 0) out += mag.str();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

// A vertex-disjoint union of single edges and cycles, the objects indexing
// the Sachs coefficients.
struct BasicFigure {
    std::vector<SignedEdge> edges;
    std::vector<CycleData> cycles;

    int order() const {
        int k = 2 * static_cast<int>(edges.size());
        for (const auto& c : cycles) k += static_cast<int>(c.vertices.size());
        return k;
    }
    int piece_count() const {
        return static_cast<int>(edges.size() + cycles.size());
    }
    // (-1)^p 2^{|c|} prod sigma(Z)
    Int weight() const {
        Int w = piece_count() % 2 == 0 ? 1 : -1;
        for (const auto& c : cycles) w *= 2 * c.sign;
        return w;
    }
};

// Visits every nonempty basic figure of g exactly once.
template <typename Visitor>
void for_each_basic_figure(const SignedGraph& g, Visitor&& visit) {
    if (g.order() > 64)
        throw std::invalid_argument("basic-figure enumeration capped at 64 vertices");
    struct Piece {
        std::uint64_t mask;
        const SignedEdge* edge;
        const CycleData* cycle;
    };
    auto cycles = all_cycles(g);
    std::vector<Piece> pieces;
    pieces.reserve(g.edges().size() + cycles.size());
    for (const auto& e : g.edges())
        pieces.push_back({(1ULL << e.u) | (1ULL << e.v), &e, nullptr});
    for (const auto& c : cycles) {
        std::uint64_t m = 0;
        for (int v : c.vertices) m |= 1ULL << v;
        pieces.push_back({m, nullptr, &c});
    }

    BasicFigure fig;
    auto dfs = [&](auto&& self, std::size_t from, std::uint64_t used) -> void {
        if (fig.piece_count() > 0) visit(static_cast<const BasicFigure&>(fig));
        for (std::size_t i = from; i < pieces.size(); ++i) {
            if (used & pieces[i].mask) continue;
            if (pieces[i].edge)
                fig.edges.push_back(*pieces[i].edge);
            else
                fig.cycles.push_back(*pieces[i].cycle);
            self(self, i + 1, used | pieces[i].mask);
            if (pieces[i].edge)
                fig.edges.pop_back();
            else
                fig.cycles.pop_back();
        }
    };
    dfs(dfs, 0, 0);
}

// Engine 1: a_j(Gamma) = sum over basic figures of order j of
// (-1)^p(L) 2^{|c(L)|} prod sigma(Z). Exponential; guarded by the oracle
// limit.
inline IntPolynomial charpoly_sachs(const SignedGraph& g, int oracle_limit = 14) {
    if (g.order() > oracle_limit)
        throw std::invalid_argument("charpoly_sachs: order " +
                                    std::to_string(g.order()) +
                                    " exceeds oracle limit " +
                                    std::to_string(oracle_limit));
    std::vector<Int> a(g.order() + 1, Int(0));
    a[0] = 1;
    for_each_basic_figure(g, [&](const BasicFigure& fig) {
        a[fig.order()] += fig.weight();
    });
    IntPolynomial p;
    p.coeffs.assign(g.order() + 1, Int(0));
    for (int j = 0; j <= g.order(); ++j) p.coeffs[g.order() - j] = a[j];
    return p;
}

namespace detail {

inline std::string graph_key(const SignedGraph& g) {
    std::string k = std::to_string(g.order());
    for (const auto& e : g.edges()) {
        k += e.sign < 0 ? '!' : ';';
        k += std::to_string(e.u);
        k += ',';
        k += std::to_string(e.v);
    }
    return k;
}

// An edge lying on some cycle, found as a DFS back edge; (-1,-1) if the
// graph is a forest.
inline std::pair<int, int> cycle_edge(const SignedGraph& g) {
    std::vector<int> parent(g.order(), -2);
    for (int root = 0; root < g.order(); ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, s] : g.neighbors(v)) {
                (void)s;
                if (parent[w] == -2) {
                    parent[w] = v;
                    stack.push_back(w);
                } else if (w != parent[v]) {
                    return {v, w};
                }
            }
        }
    }
    return {-1, -1};
}

inline IntPolynomial charpoly_rec(const SignedGraph& g,
                                  std::unordered_map<std::string, IntPolynomial>& memo);

// All cycles through the edge uv: simple u-v paths in g - uv, each closed
// by uv.
inline void cycles_through_edge(const SignedGraph& g, int u, int v,
                                std::vector<CycleData>& out) {
    SignedGraph cut = delete_edge(g, u, v);
    int uvSign = g.sign_of(u, v);
    std::vector<int> path{u};
    std::vector<char> onpath(g.order(), 0);
    onpath[u] = 1;
    auto dfs = [&](auto&& self, int at, int sign) -> void {
        if (at == v) {
            if (path.size() >= 3) out.push_back({path, sign * uvSign});
            return;
        }
        for (auto [w, s] : cut.neighbors(at)) {
            if (onpath[w] || (w == v && path.size() < 2)) continue;
            path.push_back(w);
            onpath[w] = 1;
            self(self, w, sign * s);
            path.pop_back();
            onpath[w] = 0;
        }
    };
    for (auto [w, s] : cut.neighbors(u)) {
        if (w == v && path.size() < 2) {
            // parallel edges are impossible; v adjacent to u in cut means a
            // multi-edge, which from_edge_list forbids
        }
        path.push_back(w);
        onpath[w] = 1;
        dfs(dfs, w, s);
        path.pop_back();
        onpath[w] = 0;
    }
}

inline IntPolynomial charpoly_rec(const SignedGraph& g,
                                  std::unordered_map<std::string, IntPolynomial>& memo) {
    if (g.edge_count() == 0) return x_power(g.order());
    std::string key = graph_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    IntPolynomial result;
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        result.coeffs = {Int(1)};
        for (const auto& comp : comps) {
            std::vector<int> others;
            std::vector<char> keep(g.order(), 0);
            for (int v : comp) keep[v] = 1;
            for (int v = 0; v < g.order(); ++v)
                if (!keep[v]) others.push_back(v);
            result = poly_mul(result, charpoly_rec(delete_vertices(g, others), memo));
        }
    } else {
        int pendant = -1;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == 1) {
                pendant = v;
                break;
            }
        if (pendant >= 0) {
            // phi(Gamma) = x phi(Gamma - v) - phi(Gamma - v - u)
            int u = g.neighbors(pendant)[0].first;
            result = poly_shift_x(charpoly_rec(delete_vertices(g, {pendant}), memo));
            poly_sub_scaled(result, Int(1),
                            charpoly_rec(delete_vertices(g, {pendant, u}), memo));
        } else {
            // phi(Gamma) = phi(Gamma - uv) - phi(Gamma - u - v)
            //              - 2 sum_{C ∋ uv} sgn(C) phi(Gamma - C)
            auto [u, v] = cycle_edge(g);
            result = charpoly_rec(delete_edge(g, u, v), memo);
            poly_sub_scaled(result, Int(1),
                            charpoly_rec(delete_vertices(g, {u, v}), memo));
            std::vector<CycleData> through;
            cycles_through_edge(g, u, v, through);
            for (const auto& c : through)
                poly_sub_scaled(result, Int(2 * c.sign),
                                charpoly_rec(delete_vertices(g, c.vertices), memo));
        }
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace detail

// Engine 2: deletion recurrences, memoized on the induced sub-edge-set.
inline IntPolynomial charpoly_recurrence(const SignedGraph& g) {
    std::unordered_map<std::string, IntPolynomial> memo;
    return detail::charpoly_rec(g, memo);
}

// Engine 3: Faddeev-LeVerrier trace elimination on A(Gamma), exact integer
// arithmetic (the divisions by k are exact).
inline IntPolynomial charpoly_exact_traces(const SignedGraph& g) {
    int n = g.order();
    auto a = adjacency_matrix(g);
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;  // M_1 = I

    IntPolynomial p;
    p.coeffs.assign(n + 1, Int(0));
    p.coeffs[n] = 1;
    for (int k = 1; k <= n; ++k) {
        // AM = A * M_k
        std::vector<std::vector<Int>> am(n, std::vector<Int>(n, Int(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (a[i][j] == 0) continue;
                for (int l = 0; l < n; ++l) am[i][l] += a[i][j] * m[j][l];
            }
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += am[i][i];
        Int ck = -tr / k;
        p.coeffs[n - k] = ck;
        if (k < n) {
            m = std::move(am);
            for (int i = 0; i < n; ++i) m[i][i] += ck;  // M_{k+1} = AM_k + c_k I
        }
    }
    return p;
}

// True iff phi(-x) = (-1)^n phi(x), i.e. all odd-indexed a_j vanish.
inline bool has_pairing_property(const SignedGraph& g) {
    IntPolynomial p = charpoly_exact_traces(g);
    for (int j = 1; j <= p.degree(); j += 2)
        if (p.a(j) != 0) return false;
    return true;
}

// b_0 = 1, b_2, b_4, ...: values[k] = b_{2k} = (-1)^k a_{2k}.
struct BSequence {
    std::vector<Int> values;
    friend bool operator==(const BSequence&, const BSequence&) = default;
};

inline BSequence b_sequence(const SignedGraph& g) {
    IntPolynomial p = charpoly_exact_traces(g);
    for (int j = 1; j <= p.degree(); j += 2)
        if (p.a(j) != 0)
            throw std::invalid_argument("b_sequence requires the pairing property");
    BSequence b;
    for (int k = 0; 2 * k <= p.degree(); ++k)
        b.values.push_back(k % 2 == 0 ? p.a(2 * k) : Int(-p.a(2 * k)));
    return b;
}

// Componentwise quasi-order on b-sequences (Less means g1 is dominated).
inline QuasiOrderResult quasi_compare(const SignedGraph& g1, const SignedGraph& g2) {
    if (g1.order() != g2.order())
        throw std::invalid_argument("quasi_compare: order mismatch");
    return quasi_compare_sequences(b_sequence(g1).values, b_sequence(g2).values);
}

}  // namespace sgenergy
