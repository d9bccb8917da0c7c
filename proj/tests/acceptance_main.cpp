// Acceptance harness: nine criteria, one [PASS]/[FAIL] line each, exit 0
// only when every criterion passes. Each criterion has a wall-clock budget;
// exceeding it fails the criterion even if the checks themselves succeed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "sgenergy/charpoly.hpp"
#include "sgenergy/core.hpp"
#include "sgenergy/enumeration.hpp"
#include "sgenergy/families.hpp"
#include "sgenergy/graph_io.hpp"
#include "sgenergy/matchings.hpp"
#include "sgenergy/spectral.hpp"

using namespace sgenergy;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

Outcome pass(const std::string& detail) { return {true, detail}; }
Outcome fail(const std::string& detail) { return {false, detail}; }

bool run_criterion(int index, const std::string& title, double budget_s,
                   const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = fail(std::string("unexpected exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && secs > budget_s) {
        out.ok = false;
        std::ostringstream o;
        o << out.detail << " [exceeded " << budget_s << " s budget]";
        out.detail = o.str();
    }
    std::printf("[%s] %d. %s (%.2f s): %s\n", out.ok ? "PASS" : "FAIL", index,
                title.c_str(), secs, out.detail.c_str());
    std::fflush(stdout);
    return out.ok;
}

IntPolynomial poly_from(std::vector<long long> lowest_first) {
    IntPolynomial p;
    p.coeffs.clear();
    for (long long c : lowest_first) p.coeffs.push_back(Int(c));
    return p;
}

std::string poly_text(const IntPolynomial& p) {
    std::ostringstream o;
    o << "[";
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        o << (i ? " " : "") << p.coeffs[i];
    o << "]";
    return o.str();
}

// The other signed class on the same unicyclic shape: negate one cycle edge.
SignedGraph flip_cycle_edge(const SignedGraph& g) {
    auto cyc = unique_cycle(g);
    int a = std::min(cyc.vertices[0], cyc.vertices[1]);
    int b = std::max(cyc.vertices[0], cyc.vertices[1]);
    std::vector<EdgeTriple> triples;
    for (const auto& e : g.edges()) {
        int s = (e.u == a && e.v == b) ? -e.sign : e.sign;
        triples.push_back({e.u, e.v, s});
    }
    return from_edge_list(g.order(), triples);
}

SignedGraph all_positive(const SignedGraph& g) {
    std::vector<EdgeTriple> triples;
    for (const auto& e : g.edges()) triples.push_back({e.u, e.v, 1});
    return from_edge_list(g.order(), triples);
}

std::string fmt(double x, int digits = 3) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(digits) << x;
    return o.str();
}

// ---------------------------------------------------------------------------
// 1. Fixture polynomials, all three engines, exact coefficients.
// ---------------------------------------------------------------------------
Outcome criterion_fixtures() {
    struct Fixture {
        FamilySpec spec;
        std::vector<long long> coeffs;  // lowest degree first
    };
    const std::vector<Fixture> fixtures = {
        {{Family::Lollipop, 6, 6, true}, {-4, 0, 9, 0, -6, 0, 1}},
        {{Family::Lollipop, 7, 6, true}, {0, -7, 0, 13, 0, -7, 0, 1}},
        {{Family::Lollipop, 6, 4, false}, {-4, 0, 10, 0, -6, 0, 1}},
        {{Family::Lollipop, 7, 4, false}, {0, -10, 0, 15, 0, -7, 0, 1}},
    };
    for (const auto& fx : fixtures) {
        SignedGraph g = build(fx.spec);
        IntPolynomial expected = poly_from(fx.coeffs);
        IntPolynomial sachs = charpoly_sachs(g);
        IntPolynomial rec = charpoly_recurrence(g);
        IntPolynomial traces = charpoly_exact_traces(g);
        if (!(sachs == rec && rec == traces))
            return fail("engines disagree on " + to_string(fx.spec));
        if (!(rec == expected))
            return fail("wrong polynomial for " + to_string(fx.spec) + ": got " +
                        poly_text(rec) + ", expected " + poly_text(expected));
    }
    return pass(
        "4 fixtures x 3 engines, exact agreement; note: a widely printed form of "
        "the last fixture reads x^7 + 7x^5 - 15x^3 - 10x (sign slip), all three "
        "engines compute x^7 - 7x^5 + 15x^3 - 10x");
}

// ---------------------------------------------------------------------------
// 2. Engine agreement over a corpus of connected graphs.
// ---------------------------------------------------------------------------
Outcome criterion_engine_agreement() {
    std::vector<SignedGraph> corpus;
    int trees = 0, unicyclic = 0, classes = 0, dense = 0, randoms = 0;

    for (int n = 2; n <= 8; ++n)
        for (const auto& t : oracle::tree_reps_prufer(n)) {
            corpus.push_back(t);
            ++trees;
        }
    for (int n = 3; n <= 8; ++n)
        for (const auto& g : oracle::unicyclic_reps_necklace(n)) {
            corpus.push_back(g);
            corpus.push_back(flip_cycle_edge(g));
            unicyclic += 2;
        }
    for (int n = 3; n <= 10; ++n)
        for (const auto& u : enumerate_unicyclic(n))
            for (auto& cls : signed_classes(u, n)) {
                corpus.push_back(std::move(cls.representative));
                ++classes;
            }
    for (int n = 3; n <= 8; ++n) {
        corpus.push_back(oracle::complete_graph(n, 1));
        corpus.push_back(oracle::complete_graph(n, -1));
        corpus.push_back(oracle::star_graph(n));
        dense += 3;
    }
    std::mt19937 rng(97);
    const double extras[] = {0.1, 0.3, 0.6};
    for (int i = 0; i < 42; ++i) {
        int n = 4 + i % 6;  // 4..9
        corpus.push_back(oracle::random_connected(rng, n, extras[i % 3]));
        ++randoms;
    }

    int mismatches = 0;
    for (const auto& g : corpus) {
        IntPolynomial rec = charpoly_recurrence(g);
        if (!(charpoly_exact_traces(g) == rec)) ++mismatches;
        if (!(charpoly_sachs(g) == rec)) ++mismatches;
    }
    std::ostringstream o;
    o << corpus.size() << " graphs (" << trees << " trees n<=8, " << unicyclic
      << " signed unicyclic reps n<=8, " << classes
      << " enumerated signed classes n<=10, " << dense << " complete/star, "
      << randoms << " seeded random connected), 3 engines each, " << mismatches
      << " mismatches";
    return mismatches == 0 ? pass(o.str()) : fail(o.str());
}

// ---------------------------------------------------------------------------
// 3. Exhaustive max-energy verification n = 4..11 plus two-graph checks.
// ---------------------------------------------------------------------------
Outcome criterion_max_energy() {
    for (int n = 4; n <= 11; ++n) {
        auto rep = verify_max_energy(n);
        if (!rep.matches_theorem)
            return fail("n=" + std::to_string(n) + ": argmax is not " +
                        rep.expected_winner);
        std::vector<std::size_t> top;
        for (std::size_t i = 0; i < rep.classes.size(); ++i)
            if (rep.max_energy - rep.classes[i].energy <= kEnergyTieTolerance)
                top.push_back(i);
        if (n == 5 || n == 7) {
            if (top.size() != 2)
                return fail("n=" + std::to_string(n) + ": expected a two-class tie, got " +
                            std::to_string(top.size()));
            int sign_sum = 0;
            for (auto i : top) {
                if (rep.classes[i].girth != n)
                    return fail("n=" + std::to_string(n) + ": tie member is not the full cycle");
                sign_sum += rep.classes[i].cycle_sign;
            }
            if (sign_sum != 0)
                return fail("n=" + std::to_string(n) + ": tie is not the +/- cycle pair");
            bool noted = false;
            for (const auto& note : rep.notes)
                if (note.find("tie at the top among 2 classes") != std::string::npos)
                    noted = true;
            if (!noted) return fail("n=" + std::to_string(n) + ": tie note missing");
        } else {
            if (top.size() != 1)
                return fail("n=" + std::to_string(n) + ": winner is not unique (" +
                            std::to_string(top.size()) + " classes tie)");
            if (rep.classes[top[0]].girth != 4 || rep.classes[top[0]].cycle_sign != -1)
                return fail("n=" + std::to_string(n) +
                            ": unique winner is not the unbalanced 4-lollipop");
        }
    }
    std::ostringstream o;
    o << "n=4..11 exhaustive: unique winner lollipop:g=4,unbalanced except the exact "
         "two-class cycle tie at n=5,7";
    for (int n : {13, 15}) {
        double ec = energy(cycle_n(n, true)).value;
        double ep = energy(lollipop(n, 4, false)).value;
        if (!(ec < ep - 1e-9))
            return fail("two-graph check failed at n=" + std::to_string(n));
        o << "; n=" << n << " margin " << fmt(ep - ec);
    }
    return pass(o.str());
}

// ---------------------------------------------------------------------------
// 4. Girth-parity energy comparison sweep n = 4..10.
// ---------------------------------------------------------------------------
Outcome criterion_girth_parity() {
    int even = 0, odd = 0;
    for (int n = 4; n <= 10; ++n) {
        auto rep = verify_girth_parity(n);
        if (!rep.ok)
            return fail("n=" + std::to_string(n) + ": " +
                        (rep.failures.empty() ? "failed" : rep.failures.front()));
        even += rep.even_girth_checked;
        odd += rep.odd_girth_checked;
    }
    std::ostringstream o;
    o << even << " even-girth strict comparisons and " << odd
      << " odd-girth exact ties across n=4..10, all consistent";
    return pass(o.str());
}

// ---------------------------------------------------------------------------
// 5. Coulson-integral energies against eigenvalue sums, n <= 9.
// ---------------------------------------------------------------------------
Outcome criterion_coulson() {
    int count = 0, paired = 0;
    double max_coulson = 0.0, max_pairing = 0.0;
    for (int n = 3; n <= 9; ++n)
        for (const auto& u : enumerate_unicyclic(n))
            for (auto& cls : signed_classes(u, n)) {
                const SignedGraph& g = cls.representative;
                double eigen = energy(g).value;
                double dev = std::abs(energy_coulson(g).value - eigen);
                max_coulson = std::max(max_coulson, dev);
                if (dev > 1e-6)
                    return fail("coulson deviation " + fmt(dev, 9) + " on class " + cls.code);
                ++count;
                if (has_pairing_property(g)) {
                    double pdev = std::abs(energy_pairing(g).value - eigen);
                    max_pairing = std::max(max_pairing, pdev);
                    if (pdev > 1e-6)
                        return fail("pairing deviation " + fmt(pdev, 9) + " on class " + cls.code);
                    ++paired;
                }
            }
    std::ostringstream o;
    o << count << " signed classes n=3..9, max |coulson - eigensum| = "
      << std::scientific << std::setprecision(2) << max_coulson << "; " << paired
      << " pairing-property classes, max |pairing - eigensum| = " << max_pairing;
    return pass(o.str());
}

// ---------------------------------------------------------------------------
// 6. Matching counts, the path-union chain, forest b-sequences.
// ---------------------------------------------------------------------------
Outcome criterion_matchings() {
    int binom_checks = 0;
    for (int n = 1; n <= 12; ++n) {
        auto mv = matching_numbers(path_n(n)).values;
        for (std::size_t k = 0; k < mv.size(); ++k) {
            if (mv[k] != detail::binomial(n - static_cast<int>(k), static_cast<int>(k)))
                return fail("m(P_" + std::to_string(n) + "," + std::to_string(k) +
                            ") != C(n-k,k)");
            ++binom_checks;
        }
    }
    for (int n = 4; n <= 13; ++n) {
        auto rep = verify_path_union_chain(n);
        if (!rep.ok) return fail("chain n=" + std::to_string(n) + ": " + rep.failure);
    }
    int tree_checks = 0;
    for (int n = 1; n <= 10; ++n)
        for (const auto& t : enumerate_trees(n)) {
            if (b_sequence(t).values != matching_numbers(t).values)
                return fail("tree b-sequence != matching vector at n=" + std::to_string(n));
            ++tree_checks;
        }
    std::ostringstream o;
    o << binom_checks << " path matching counts equal C(n-k,k) for n<=12; "
         "path-union chain strict for n=4..13; b-sequence equals matching vector "
         "on all " << tree_checks << " trees n<=10";
    return pass(o.str());
}

// ---------------------------------------------------------------------------
// 7. Quasi-order domination suite against the unbalanced 4-lollipop.
// ---------------------------------------------------------------------------
Outcome criterion_quasi_order() {
    // (a) Every tree on n = 12..14 vertices is strictly dominated. Trees on
    // 13 and 14 vertices come from a leaf-growth generator local to this
    // harness (the library enumerator stops at 12), census-checked against
    // the independent Otter-recurrence count.
    const long long tree_census[] = {551, 1301, 3159};  // n = 12, 13, 14
    long long trees_checked = 0;
    std::vector<CanonicalCode> level;
    for (const auto& t : enumerate_trees(12)) level.push_back(canonical_code(t, 12));
    for (int k = 12; k <= 14; ++k) {
        if (k > 12) {
            std::set<CanonicalCode> next;
            for (const auto& code : level) {
                SignedGraph t = graph_from_canonical_code(code, k - 1);
                std::vector<EdgeTriple> triples;
                for (const auto& e : t.edges()) triples.push_back({e.u, e.v, 1});
                for (int v = 0; v < k - 1; ++v) {
                    auto grown = triples;
                    grown.push_back({v, k - 1, 1});
                    next.insert(canonical_code(from_edge_list(k, grown), k));
                }
            }
            level.assign(next.begin(), next.end());
        }
        if (static_cast<long long>(level.size()) != tree_census[k - 12] ||
            oracle::free_tree_count(k) != tree_census[k - 12])
            return fail("tree census mismatch at n=" + std::to_string(k));
        SignedGraph winner = lollipop(k, 4, false);
        for (const auto& code : level) {
            auto rel = quasi_compare(graph_from_canonical_code(code, k), winner);
            if (rel.relation != QuasiOrder::Less)
                return fail("a tree on " + std::to_string(k) +
                            " vertices is not strictly dominated");
            ++trees_checked;
        }
    }

    // (b) Every unbalanced girth-4 class on n = 6..9 vertices is strictly
    // dominated except the winner itself, which compares Equal.
    long long g4_checked = 0;
    for (int n = 6; n <= 9; ++n) {
        SignedGraph winner = lollipop(n, 4, false);
        int equal = 0;
        for (const auto& u : enumerate_unicyclic(n)) {
            if (girth(u) != 4) continue;
            auto cls = signed_classes(u, n);
            const SignedGraph& unbal = cls[1].representative;
            auto rel = quasi_compare(unbal, winner);
            if (rel.relation == QuasiOrder::Equal)
                ++equal;
            else if (rel.relation != QuasiOrder::Less)
                return fail("an unbalanced girth-4 class on " + std::to_string(n) +
                            " vertices is not dominated");
            ++g4_checked;
        }
        if (equal != 1)
            return fail("n=" + std::to_string(n) + ": expected exactly one Equal "
                        "(the extremal class itself), got " + std::to_string(equal));
    }

    // (c) Unbalanced even cycles: coincides with the winner at n = 4 (the
    // lollipop with an empty tail is the cycle), strictly below at n = 8, 12.
    if (quasi_compare(cycle_n(4, false), lollipop(4, 4, false)).relation != QuasiOrder::Equal)
        return fail("C_4 unbalanced should equal the degenerate 4-lollipop");
    for (int n : {8, 12})
        if (quasi_compare(cycle_n(n, false), lollipop(n, 4, false)).relation != QuasiOrder::Less)
            return fail("C_" + std::to_string(n) + " unbalanced not strictly dominated");

    // (d) Unbalanced 8-lollipops, n = 9..14.
    for (int n = 9; n <= 14; ++n)
        if (quasi_compare(lollipop(n, 8, false), lollipop(n, 4, false)).relation !=
            QuasiOrder::Less)
            return fail("8-lollipop on " + std::to_string(n) + " not strictly dominated");

    // (e) Balanced 6-lollipops, n = 6..12.
    for (int n = 6; n <= 12; ++n)
        if (quasi_compare(lollipop(n, 6, true), lollipop(n, 4, false)).relation !=
            QuasiOrder::Less)
            return fail("balanced 6-lollipop on " + std::to_string(n) +
                        " not strictly dominated");

    std::ostringstream o;
    o << trees_checked << " trees n=12..14 (census 551/1301/3159) strictly Less; "
      << g4_checked << " unbalanced girth-4 classes n=6..9 Less with exactly one "
         "Equal per n (the extremal class); unbalanced C_8, C_12 Less (C_4 "
         "coincides); unbalanced 8-lollipops n=9..14 and balanced 6-lollipops "
         "n=6..12 Less";
    return pass(o.str());
}

// ---------------------------------------------------------------------------
// 8. Unicyclic census against independent oracles.
// ---------------------------------------------------------------------------
Outcome criterion_census() {
    const long long expected[] = {1, 2, 5, 13, 33, 89, 240, 657};  // n = 3..10
    for (int n = 3; n <= 10; ++n) {
        long long want = expected[n - 3];
        long long lib = static_cast<long long>(enumerate_unicyclic(n).size());
        if (lib != want)
            return fail("library count at n=" + std::to_string(n) + " is " +
                        std::to_string(lib) + ", expected " + std::to_string(want));
        if (n <= 9 && oracle::unicyclic_count_necklace(n) != want)
            return fail("labeled brute-force count differs at n=" + std::to_string(n));
        if (n <= 6 && oracle::unicyclic_count_perm_dedupe(n) != want)
            return fail("permutation-dedupe count differs at n=" + std::to_string(n));
        if (oracle::unicyclic_count_constructive(n) != want)
            return fail("constructive count differs at n=" + std::to_string(n));
    }
    return pass(
        "counts (1,2,5,13,33,89,240,657) for n=3..10 match the library, the "
        "labeled brute-force census (n<=9; n=9 keys 33.8M labeled graphs, the "
        "n=10 labeled space is out of reach), the permutation-dedupe census "
        "(n<=6) and the constructive rooted-forest census (n=3..10)");
}

// ---------------------------------------------------------------------------
// 9. Randomized invariant harness with a fixed seed.
// ---------------------------------------------------------------------------
Outcome criterion_invariants() {
    std::mt19937 rng(20260814u);
    const int total = 120;
    for (int i = 0; i < total; ++i) {
        int n = 2 + i % 9;  // 2..10
        SignedGraph g = oracle::random_connected(rng, n, 0.25);

        std::istringstream in(to_graph_file(g));
        if (!(read_graph(in) == g)) return fail("file round-trip changed a graph");

        auto ev = eigenvalues(g).values;
        double sum = 0.0, sumsq = 0.0;
        for (double x : ev) sum += x, sumsq += x * x;
        if (std::abs(sum) > 1e-8) return fail("trace not ~0: " + fmt(sum, 12));
        if (std::abs(sumsq - 2.0 * g.edge_count()) > 1e-8)
            return fail("sum of squared eigenvalues != 2m");

        VertexSet u;
        for (int v = 0; v < n; ++v)
            if (rng() & 1u) u.push_back(v);
        SignedGraph s = switched(g, u);
        if (!(charpoly_exact_traces(s) == charpoly_exact_traces(g)))
            return fail("switching changed the characteristic polynomial");
        if (std::abs(energy(s).value - energy(g).value) > 1e-9)
            return fail("switching changed the energy");
        if (!switching_equivalent(g, s))
            return fail("switching_equivalent missed a switch");

        bool cospectral = charpoly_exact_traces(g) == charpoly_exact_traces(all_positive(g));
        if (cospectral != is_balanced(g))
            return fail("balance <-> cospectral-with-underlying failed");
    }
    std::ostringstream o;
    o << total << " seeded random connected signed graphs (n=2..10): file "
         "round-trip, trace identities, switching invariance (charpoly, energy, "
         "switching_equivalent) and balance iff cospectral with the underlying "
         "graph all hold";
    return pass(o.str());
}

}  // namespace

int main() {
    bool all = true;
    all &= run_criterion(1, "fixture polynomials across all three engines", 1.0,
                         criterion_fixtures);
    all &= run_criterion(2, "engine agreement corpus", 300.0, criterion_engine_agreement);
    all &= run_criterion(3, "max-energy verification (theorem-3.12 suite) with two-graph checks",
                         600.0, criterion_max_energy);
    all &= run_criterion(4, "girth-parity energy sweep (lemma-3.3 suite)", 300.0,
                         criterion_girth_parity);
    all &= run_criterion(5, "Coulson integral cross-check", 300.0, criterion_coulson);
    all &= run_criterion(6, "matching counts, path-union chain, forest b-sequences", 600.0,
                         criterion_matchings);
    all &= run_criterion(7, "quasi-order domination suite", 600.0, criterion_quasi_order);
    all &= run_criterion(8, "unicyclic census against independent oracles", 600.0,
                         criterion_census);
    all &= run_criterion(9, "randomized invariant harness", 300.0, criterion_invariants);
    return all ? 0 : 1;
}
