#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "sgenergy/charpoly.hpp"
#include "sgenergy/core.hpp"
#include "sgenergy/families.hpp"
#include "sgenergy/matchings.hpp"

using namespace sgenergy;

namespace {

IntPolynomial poly(std::vector<Int> lowestFirst) {
    IntPolynomial p;
    p.coeffs = std::move(lowestFirst);
    return p;
}

void check_engines_match_oracle(const SignedGraph& g) {
    auto expected = oracle::charpoly_leibniz(g);
    CHECK(charpoly_sachs(g) == expected);
    CHECK(charpoly_recurrence(g) == expected);
    CHECK(charpoly_exact_traces(g) == expected);
}

SignedGraph flip_cycle_edge(const SignedGraph& g) {
    auto cyc = unique_cycle(g);
    int u = std::min(cyc.vertices[0], cyc.vertices[1]);
    int v = std::max(cyc.vertices[0], cyc.vertices[1]);
    std::vector<EdgeTriple> triples;
    for (const auto& e : g.edges())
        triples.push_back({e.u, e.v, e.u == u && e.v == v ? -e.sign : e.sign});
    return from_edge_list(g.order(), triples);
}

}  // namespace

TEST_CASE("polynomial printing") {
    CHECK(to_string(poly({Int(1)})) == "1");
    CHECK(to_string(poly({Int(0)})) == "0");
    CHECK(to_string(poly({Int(-4), Int(0), Int(9), Int(0), Int(-6), Int(0), Int(1)})) ==
          "x^6 - 6x^4 + 9x^2 - 4");
    CHECK(to_string(poly({Int(0), Int(-10), Int(0), Int(15), Int(0), Int(-7), Int(0),
                          Int(1)})) == "x^7 - 7x^5 + 15x^3 - 10x");
    CHECK(to_string(poly({Int(2), Int(-3), Int(1)})) == "x^2 - 3x + 2");
    CHECK(to_string(poly({Int(0), Int(1)})) == "x");
}

TEST_CASE("edgeless graphs give x^n") {
    CHECK(charpoly_recurrence(SignedGraph(0)) == poly({Int(1)}));
    CHECK(charpoly_recurrence(SignedGraph(3)) ==
          poly({Int(0), Int(0), Int(0), Int(1)}));
    CHECK(charpoly_sachs(SignedGraph(3)) == charpoly_recurrence(SignedGraph(3)));
    CHECK(charpoly_exact_traces(SignedGraph(3)) == charpoly_recurrence(SignedGraph(3)));
}

TEST_CASE("small closed forms") {
    CHECK(charpoly_recurrence(path_n(2)) == poly({Int(-1), Int(0), Int(1)}));
    CHECK(charpoly_recurrence(cycle_n(3, true)) ==
          poly({Int(-2), Int(-3), Int(0), Int(1)}));
    // one negative edge flips the cycle term
    CHECK(charpoly_recurrence(cycle_n(3, false)) ==
          poly({Int(2), Int(-3), Int(0), Int(1)}));
    check_engines_match_oracle(cycle_n(3, false));
}

TEST_CASE("lollipop fixture polynomials") {
    CHECK(charpoly_recurrence(lollipop(6, 6, true)) ==
          poly({Int(-4), Int(0), Int(9), Int(0), Int(-6), Int(0), Int(1)}));
    CHECK(charpoly_recurrence(lollipop(7, 6, true)) ==
          poly({Int(0), Int(-7), Int(0), Int(13), Int(0), Int(-7), Int(0), Int(1)}));
    CHECK(charpoly_recurrence(lollipop(6, 4, false)) ==
          poly({Int(-4), Int(0), Int(10), Int(0), Int(-6), Int(0), Int(1)}));
    CHECK(charpoly_recurrence(lollipop(7, 4, false)) ==
          poly({Int(0), Int(-10), Int(0), Int(15), Int(0), Int(-7), Int(0), Int(1)}));
    for (auto g : {lollipop(6, 6, true), lollipop(7, 6, true), lollipop(6, 4, false),
                   lollipop(7, 4, false)})
        check_engines_match_oracle(g);
}

TEST_CASE("engines agree with the permutation-expansion oracle") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : oracle::tree_reps_prufer(n)) check_engines_match_oracle(t);
    for (int n = 3; n <= 7; ++n) {
        for (const auto& g : oracle::unicyclic_reps_necklace(n)) {
            check_engines_match_oracle(g);
            check_engines_match_oracle(flip_cycle_edge(g));
        }
    }
    check_engines_match_oracle(oracle::complete_graph(4, -1));
    check_engines_match_oracle(oracle::complete_graph(5));
    check_engines_match_oracle(oracle::star_graph(7));
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial)
        check_engines_match_oracle(oracle::random_connected(rng, 6, 0.4));
}

TEST_CASE("charpoly multiplies over disjoint unions") {
    auto g1 = lollipop(5, 4, false);
    auto g2 = cycle_n(3, true);
    CHECK(charpoly_recurrence(disjoint_union(g1, g2)) ==
          detail::poly_mul(charpoly_recurrence(g1), charpoly_recurrence(g2)));
}

TEST_CASE("a_1 vanishes and -a_2 counts edges") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = oracle::random_connected(rng, 7, 0.3);
        auto p = charpoly_exact_traces(g);
        CHECK(p.a(1) == 0);
        CHECK(-p.a(2) == g.edge_count());
    }
}

TEST_CASE("charpoly is switching invariant") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = oracle::random_connected(rng, 7, 0.3);
        VertexSet u;
        std::bernoulli_distribution coin(0.5);
        for (int v = 0; v < 7; ++v)
            if (coin(rng)) u.push_back(v);
        CHECK(charpoly_recurrence(switched(g, u)) == charpoly_recurrence(g));
    }
}

TEST_CASE("balance is equivalent to being cospectral with the underlying graph") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& g : oracle::unicyclic_reps_necklace(n)) {
            auto sw = switched(g, {0, 2});
            CHECK(is_balanced(sw));
            CHECK(charpoly_recurrence(sw) == charpoly_recurrence(g));
            auto minus = flip_cycle_edge(g);
            CHECK_FALSE(is_balanced(minus));
            CHECK(charpoly_recurrence(minus) != charpoly_recurrence(g));
        }
    }
}

TEST_CASE("sachs enforces the oracle limit") {
    CHECK_THROWS_AS(charpoly_sachs(path_n(15)), std::invalid_argument);
    CHECK(charpoly_sachs(path_n(15), 15) == charpoly_recurrence(path_n(15)));
}

TEST_CASE("pairing property") {
    CHECK(has_pairing_property(path_n(8)));
    CHECK(has_pairing_property(cycle_n(6, true)));
    CHECK(has_pairing_property(cycle_n(6, false)));
    CHECK(has_pairing_property(lollipop(7, 4, false)));
    CHECK_FALSE(has_pairing_property(cycle_n(5, true)));
    CHECK_FALSE(has_pairing_property(lollipop(7, 3, true)));
}

TEST_CASE("b-sequences") {
    CHECK(b_sequence(cycle_n(4, true)).values == std::vector<Int>{1, 4, 0});
    CHECK(b_sequence(cycle_n(4, false)).values == std::vector<Int>{1, 4, 4});
    CHECK(b_sequence(cycle_n(6, true)).values == std::vector<Int>{1, 6, 9, 4});
    CHECK(b_sequence(lollipop(6, 4, false)).values == std::vector<Int>{1, 6, 10, 4});
    CHECK_THROWS_AS(b_sequence(cycle_n(5, true)), std::invalid_argument);

    // forests: b_{2k} equals the k-matching count
    for (int n = 1; n <= 7; ++n) {
        for (const auto& t : oracle::tree_reps_prufer(n)) {
            auto b = b_sequence(t).values;
            auto m = oracle::matchings_brute(t);
            b.resize(n / 2 + 1, Int(0));
            CHECK(b == m);
        }
    }
}

TEST_CASE("quasi_compare") {
    auto r = quasi_compare(cycle_n(6, true), lollipop(6, 4, false));
    CHECK(r.relation == QuasiOrder::Less);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == 2);

    CHECK(quasi_compare(lollipop(6, 4, false), cycle_n(6, true)).relation ==
          QuasiOrder::Greater);
    CHECK(quasi_compare(path_n(6), path_n(6)).relation == QuasiOrder::Equal);
    CHECK(quasi_compare(cycle_n(4, true), path_n(4)).relation ==
          QuasiOrder::Incomparable);

    CHECK_THROWS_AS(quasi_compare(path_n(5), path_n(6)), std::invalid_argument);
    CHECK_THROWS_AS(quasi_compare(cycle_n(5, true), cycle_n(5, false)),
                    std::invalid_argument);
}

TEST_CASE("quasi-order is monotone under disjoint union with a fixed graph") {
    auto a = path_n(6);
    auto b = disjoint_union(path_n(2), path_n(4));
    REQUIRE(quasi_compare(a, b).relation == QuasiOrder::Greater);
    auto f = path_n(3);
    CHECK(quasi_compare(disjoint_union(a, f), disjoint_union(b, f)).relation ==
          QuasiOrder::Greater);
    auto e = quasi_compare(disjoint_union(a, f), disjoint_union(a, f));
    CHECK(e.relation == QuasiOrder::Equal);
}
