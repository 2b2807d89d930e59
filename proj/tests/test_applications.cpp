#include <doctest.h>

#include <random>

#include "cobex/applications.hpp"
#include "cobex/cohomology.hpp"
#include "cobex/errors.hpp"
#include "cobex/expansion.hpp"
#include "oracles.hpp"

using namespace cobex;

TEST_CASE("graph construction and the complete-edge indexing") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));

    // formula matches the canonical face order of the complete graph
    for (int n = 2; n <= 9; ++n) {
        Complex kn = Complex::complete(n, 1);
        for (std::size_t e = 0; e < static_cast<std::size_t>(kn.face_count(1)); ++e) {
            const Face& f = kn.faces(1)[e];
            CHECK(complete_edge_index(n, f.vertices()[0], f.vertices()[1]) == e);
        }
    }

    BitVector bits = g.edges_on_complete();
    CHECK(bits.count() == 2);
    CHECK(bits.test(complete_edge_index(4, 0, 1)));
    CHECK(bits.test(complete_edge_index(4, 2, 3)));
    Graph back = Graph::from_complete_edges(4, bits);
    CHECK(back.complex() == g.complex());

    CHECK_THROWS_AS(Graph::from_complex(Complex::complete(4, 2)), NotAGraph);
}

TEST_CASE("constant function tester on K_4") {
    Graph k4 = Graph::complete(4);

    Cochain all_ones = Cochain::from_faces(
        k4.complex(), 0, {Face({0}), Face({1}), Face({2}), Face({3})});
    TesterReport ones = constant_function_test(k4, all_ones);
    CHECK(ones.exact_rate == Rational(0));
    CHECK(*ones.distance_normalized == Rational(0));

    TesterReport single = constant_function_test(k4, Cochain::indicator(k4.complex(), 0, 0));
    CHECK(single.exact_rate == Rational(1, 2));
    CHECK(*single.distance_normalized == Rational(1, 4));
    CHECK(*single.epsilon_bound == Rational(4, 3));
    CHECK(*single.bound_satisfied);  // ratio 2 >= 4/3

    Cochain pair = Cochain::from_faces(k4.complex(), 0, {Face({0}), Face({1})});
    TesterReport two = constant_function_test(k4, pair);
    CHECK(two.exact_rate == Rational(2, 3));
    CHECK(*two.distance_normalized == Rational(1, 2));
    // equality witness: ratio = 4/3 = epsilon
    CHECK(two.exact_rate == *two.epsilon_bound * *two.distance_normalized);
}

TEST_CASE("constant function tester: exhaustive ratio minimum is the cheeger constant") {
    for (auto [n, edges] : {std::pair<int, std::vector<std::pair<int, int>>>{
                                4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
                            std::pair<int, std::vector<std::pair<int, int>>>{
                                8, oracle::cube_graph_edges()}}) {
        Graph g = Graph::from_edges(n, edges);
        Rational cheeger = epsilon_graph_cheeger(g.complex());
        bool equality_seen = false;
        for (std::uint32_t bitsmask = 1; bitsmask + 1 < (std::uint32_t{1} << n); ++bitsmask) {
            Cochain f = Cochain::zero(g.complex(), 0);
            for (int v = 0; v < n; ++v)
                if ((bitsmask >> v) & 1) f.support.set(static_cast<std::size_t>(v));
            TesterReport rep = constant_function_test(g, f);
            Rational ratio = rep.exact_rate / *rep.distance_normalized;
            CHECK(ratio >= cheeger);
            if (ratio == cheeger) equality_seen = true;
        }
        CHECK(equality_seen);
    }
}

TEST_CASE("sum function encoding") {
    Graph k4 = Graph::complete(4);
    Cochain zero = Cochain::zero(k4.complex(), 0);
    CHECK(sum_function_encode(k4, zero).support.none());

    Cochain chi = Cochain::indicator(k4.complex(), 0, 1);
    Cochain star = sum_function_encode(k4, chi);
    CHECK(star.weight() == 3);

    // complement encodes the same edge function
    Cochain complement = Cochain::zero(k4.complex(), 0);
    for (int v = 0; v < 4; ++v)
        if (v != 1) complement.support.set(static_cast<std::size_t>(v));
    CHECK(sum_function_encode(k4, complement) == star);

    // on a non-complete graph it is the coboundary restricted to the edges
    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Cochain g = Cochain::indicator(path.complex(), 0, 1);
    Cochain f = sum_function_encode(path, g);
    CHECK(f.weight() == 2);
}

TEST_CASE("sum function tester examples") {
    Graph k4 = Graph::complete(4);
    Cochain encoded = sum_function_encode(k4, Cochain::indicator(k4.complex(), 0, 2));
    TesterReport member = sum_function_test(k4, encoded);
    CHECK(member.exact_rate == Rational(0));
    CHECK(*member.bound_satisfied);

    Cochain edge = Cochain::indicator(k4.complex(), 1, 0);
    TesterReport rep = sum_function_test(k4, edge);
    CHECK(rep.exact_rate == Rational(1, 2));
    CHECK(*rep.distance_normalized == Rational(1, 6));
    CHECK(*rep.epsilon_bound == Rational(1));
    CHECK(*rep.bound_satisfied);

    Graph k5 = Graph::complete(5);
    Cochain edge5 = Cochain::indicator(k5.complex(), 1, 0);
    TesterReport rep5 = sum_function_test(k5, edge5);
    CHECK(rep5.exact_rate == Rational(3, 10));
    CHECK(*rep5.distance_normalized == Rational(1, 10));
    CHECK(*rep5.bound_satisfied);

    CHECK_THROWS_AS(sum_function_test(Graph::from_edges(4, {{0, 1}}), edge), NotComplete);
}

TEST_CASE("sum functions are exactly the cochains vanishing on all triangles") {
    // exhaustive for m <= 5
    for (int m = 3; m <= 5; ++m) {
        Graph km = Graph::complete(m);
        Complex x = Complex::complete(m, 2);
        const Subspace& b1 = coboundary_space(x, 1);
        const long long edges = km.edge_count();
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << edges); ++bits) {
            Cochain f = Cochain::zero(km.complex(), 1);
            for (long long e = 0; e < edges; ++e)
                if ((bits >> e) & 1) f.support.set(static_cast<std::size_t>(e));
            bool vanishes = sum_function_test(km, f).exact_rate.is_zero();
            CHECK(vanishes == b1.contains(f.support));
        }
    }
    // rank argument for m <= 8: Z^1 = B^1 on the complete 2-complex
    for (int m = 3; m <= 8; ++m) {
        Complex x = Complex::complete(m, 2);
        CHECK(cocycle_space(x, 1).dim() == coboundary_space(x, 1).dim());
    }
}

TEST_CASE("girth examples") {
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    GirthReport r = girth_and_min_cycle(c5);
    CHECK(*r.girth == 5);
    CHECK(*r.min_cycle_weight == 5);

    Graph tree = Graph::from_edges(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
    GirthReport t = girth_and_min_cycle(tree);
    CHECK_FALSE(t.girth.has_value());
    CHECK_FALSE(t.min_cycle_weight.has_value());
    CHECK_FALSE(t.scan_skipped);

    GirthReport k4 = girth_and_min_cycle(Graph::complete(4));
    CHECK(*k4.girth == 3);
    CHECK(*k4.min_cycle_weight == 3);

    // Petersen graph: girth 5
    std::vector<std::pair<int, int>> petersen = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                                 {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                                 {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
    GirthReport p = girth_and_min_cycle(Graph::from_edges(10, petersen));
    CHECK(*p.girth == 5);
    CHECK(*p.min_cycle_weight == 5);
}

TEST_CASE("girth equals minimum cycle weight across the corpus") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        int n = 4 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 3 == 0) edges.emplace_back(a, b);
        if (edges.empty()) continue;
        GirthReport r = girth_and_min_cycle(Graph::from_edges(n, edges));
        CHECK(r.girth.has_value() == r.min_cycle_weight.has_value());
        if (r.girth) CHECK(*r.girth == *r.min_cycle_weight);
    }
    GirthReport capped = girth_and_min_cycle(Graph::complete(9), 8);
    CHECK(capped.scan_skipped);
    CHECK(*capped.girth == 3);
}

TEST_CASE("sign matrix validation") {
    CHECK_THROWS_AS(SignMatrix::from_entries({{1, 2}, {2, 1}}), BadEntry);
    CHECK_THROWS_AS(SignMatrix::from_entries({{-1, 1}, {1, 1}}), BadDiagonal);
    CHECK_THROWS_AS(SignMatrix::from_entries({{1, 1}, {-1, 1}}), NotSymmetric);
    CHECK_THROWS_AS(SignMatrix::from_entries({{1, 1}}), NotSymmetric);  // not square
}

TEST_CASE("tensor power tester examples") {
    TensorReport member = tensor_power_test(SignMatrix::tensor_power({1, -1, 1}));
    CHECK(member.is_tensor_power);
    CHECK(member.tester.exact_rate == Rational(0));
    REQUIRE(member.factor.has_value());
    CHECK(*member.factor == std::vector<int>{1, -1, 1});

    SignMatrix all_ones = SignMatrix::tensor_power({1, 1, 1, 1});
    CHECK(tensor_power_test(all_ones).is_tensor_power);

    // flip one off-diagonal pair: equivalent to a single-edge cochain
    SignMatrix flipped = SignMatrix::tensor_power({1, -1, 1, -1});
    flipped.entries[0][1] *= -1;
    flipped.entries[1][0] *= -1;
    TensorReport rep = tensor_power_test(SignMatrix::from_entries(flipped.entries));
    CHECK_FALSE(rep.is_tensor_power);
    CHECK(rep.tester.exact_rate == Rational(1, 2));
    CHECK(*rep.tester.distance_normalized == Rational(1, 6));
}

TEST_CASE("tensor verdict matches the brute-force factor scan") {
    std::mt19937_64 rng(41);
    for (int m = 3; m <= 7; ++m) {
        for (int t = 0; t < 20; ++t) {
            std::vector<std::vector<int>> e(static_cast<std::size_t>(m),
                                            std::vector<int>(static_cast<std::size_t>(m), 1));
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b) {
                    int v = rng() % 2 ? 1 : -1;
                    e[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
                    e[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = v;
                }
            SignMatrix mat = SignMatrix::from_entries(e);
            CHECK(tensor_power_test(mat).is_tensor_power == oracle::tensor_power_bruteforce(e));
        }
    }
}

TEST_CASE("seidel switching examples") {
    Graph empty3 = Graph::from_edges(3, {});
    Graph switched = seidel_switch(empty3, 0);
    CHECK(switched.edge_count() == 2);
    CHECK(switched.has_edge(0, 1));
    CHECK(switched.has_edge(0, 2));
    CHECK_FALSE(switched.has_edge(1, 2));

    // involution
    Graph twice = seidel_switch(switched, 0);
    CHECK(twice.complex() == empty3.complex());

    // K_4 switched at v drops star(v), leaving the opposite triangle
    Graph k4 = Graph::complete(4);
    Graph sw = seidel_switch(k4, 2);
    CHECK(sw.edge_count() == 3);
    CHECK(sw.has_edge(0, 1));
    CHECK(sw.has_edge(0, 3));
    CHECK(sw.has_edge(1, 3));

    CHECK_THROWS_AS(seidel_switch(k4, 4), VertexOutOfRange);
}

TEST_CASE("seidel equivalence decisions") {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {2, 5}});

    SeidelReport self = seidel_equivalence(g, g);
    CHECK(self.equivalent);
    CHECK(self.switching_set->empty());
    CHECK(*self.distance == 0);

    SeidelReport two = seidel_equivalence(g, seidel_switch(seidel_switch(g, 2), 5));
    CHECK(two.equivalent);
    CHECK(two.exact_rate == Rational(0));

    Graph empty4 = Graph::from_edges(4, {});
    Graph one_edge = Graph::from_edges(4, {{0, 1}});
    SeidelReport diff = seidel_equivalence(empty4, one_edge, SampleParams{2000, 5});
    CHECK_FALSE(diff.equivalent);
    CHECK(*diff.distance == 1);
    CHECK(diff.exact_rate == Rational(1, 2));
    CHECK(*diff.bound_satisfied);
    CHECK(diff.sample->trials == 2000);
    CHECK(diff.sample->rejections > 0);

    CHECK_THROWS_AS(seidel_equivalence(g, empty4), VertexSetMismatch);
}

TEST_CASE("switching sets reported by the decision reproduce the graph") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 50; ++t) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = Graph::from_complete_edges(n, oracle::random_cochain(
            Complex::complete(n, 1), 1, rng).support);
        Graph h = g;
        for (int s = 0; s < 6; ++s) h = seidel_switch(h, static_cast<int>(rng() % n));
        SeidelReport rep = seidel_equivalence(g, h);
        REQUIRE(rep.equivalent);
        Graph rebuilt = g;
        for (int v : *rep.switching_set) rebuilt = seidel_switch(rebuilt, v);
        CHECK(rebuilt.complex() == h.complex());
    }
}

TEST_CASE("seidel equivalence is an equivalence relation under random switchings") {
    std::mt19937_64 rng(88);
    int n = 7;
    Graph base = Graph::from_complete_edges(
        n, oracle::random_cochain(Complex::complete(n, 1), 1, rng).support);
    Graph a = base, b = base;
    for (int s = 0; s < 10; ++s) a = seidel_switch(a, static_cast<int>(rng() % n));
    for (int s = 0; s < 9; ++s) b = seidel_switch(b, static_cast<int>(rng() % n));
    CHECK(seidel_equivalence(base, base).equivalent);       // reflexive
    CHECK(seidel_equivalence(a, base).equivalent);          // symmetric pairing
    CHECK(seidel_equivalence(base, a).equivalent);
    CHECK(seidel_equivalence(a, b).equivalent);             // transitive through base
}
