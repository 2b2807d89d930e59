#include <doctest.h>

#include <random>

#include "cobex/cohomology.hpp"
#include "cobex/errors.hpp"
#include "cobex/expansion.hpp"
#include "cobex/tester.hpp"
#include "oracles.hpp"

using namespace cobex;

TEST_CASE("exact rejection probabilities") {
    Complex k42 = Complex::complete(4, 2);
    Cochain cut = coboundary(k42, Cochain::indicator(k42, 0, 0));
    CHECK(exact_rejection_probability(k42, cut) == Rational(0));

    CHECK(exact_rejection_probability(k42, Cochain::indicator(k42, 1, 0)) == Rational(1, 2));

    Complex k52 = Complex::complete(5, 2);
    CHECK(exact_rejection_probability(k52, Cochain::indicator(k52, 1, 0)) == Rational(3, 10));
}

TEST_CASE("coboundaries always pass: delta f = 0 exhaustively over B^i") {
    std::mt19937_64 rng(55);
    for (const Complex& x : {Complex::complete(4, 2), Complex::complete(6, 2)}) {
        const Subspace& b = coboundary_space(x, 1);
        for (const BitVector& row : b.basis())
            CHECK(coboundary(x, Cochain(1, row)).support.none());
        for (int t = 0; t < 30; ++t) {
            Cochain member = Cochain::zero(x, 1);
            for (const BitVector& row : b.basis())
                if (rng() & 1) member.support ^= row;
            CHECK(exact_rejection_probability(x, member) == Rational(0));
        }
    }
}

TEST_CASE("tester runs are deterministic and count queries") {
    Complex k62 = Complex::complete(6, 2);
    Cochain g = Cochain::from_faces(k62, 0, {Face({1}), Face({4})});
    Cochain member = coboundary(k62, g);

    TesterReport a = run_cocycle_tester(k62, member, 5000, 99);
    TesterReport b = run_cocycle_tester(k62, member, 5000, 99);
    REQUIRE(a.sample.has_value());
    CHECK(a.sample->rejections == 0);  // perfect completeness
    CHECK(a.sample->rejections == b.sample->rejections);
    CHECK(a.queries == 3);
    CHECK(a.queries_performed == 5000 * 3);
    CHECK(a.exact_rate == Rational(0));
    CHECK(*a.distance_normalized == Rational(0));
    CHECK(*a.bound_satisfied);

    TesterReport c = run_cocycle_tester(k62, member, 5000, 100);
    CHECK(c.sample->rejections == 0);
}

TEST_CASE("sampled rate lands near the exact rate") {
    Complex k42 = Complex::complete(4, 2);
    Cochain edge = Cochain::indicator(k42, 1, 0);
    TesterReport rep = run_cocycle_tester(k42, edge, 10000, 7);
    CHECK(rep.exact_rate == Rational(1, 2));
    CHECK(rep.sample->wilson_low <= 0.5);
    CHECK(rep.sample->wilson_high >= 0.5);
    CHECK(*rep.distance_normalized == Rational(1, 6));
    CHECK(*rep.epsilon_bound == Rational(3));
    CHECK(*rep.bound_satisfied);
}

TEST_CASE("wilson coverage across 100 seeds") {
    Complex k42 = Complex::complete(4, 2);
    Cochain edge = Cochain::indicator(k42, 1, 0);
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        TesterReport rep = run_cocycle_tester(k42, edge, 10000, seed);
        if (rep.sample->wilson_low <= 0.5 && 0.5 <= rep.sample->wilson_high) ++covered;
    }
    CHECK(covered >= 95);
}

TEST_CASE("budget shortfall only drops the exact fields") {
    Complex k52 = Complex::complete(5, 2);
    Cochain edge = Cochain::indicator(k52, 1, 0);
    TesterReport rep = run_cocycle_tester(k52, edge, 100, 3, 2);
    CHECK(rep.sample.has_value());
    CHECK_FALSE(rep.distance_normalized.has_value());
    CHECK_FALSE(rep.epsilon_bound.has_value());
    CHECK_FALSE(rep.bound_satisfied.has_value());
    CHECK(rep.exact_rate == Rational(3, 10));  // exact rate needs no enumeration
}

TEST_CASE("rejection rate always dominates epsilon times distance") {
    std::mt19937_64 rng(123);
    for (const Complex& x : {Complex::complete(4, 2), Complex::complete(5, 2)}) {
        Rational eps = expansion_epsilon(x, 1).epsilon;
        for (int t = 0; t < 100; ++t) {
            Cochain f = oracle::random_cochain(x, 1, rng);
            Rational rate = exact_rejection_probability(x, f);
            Rational dist = distance_to_coboundaries(x, f).normalized;
            CHECK(rate >= eps * dist);
        }
    }
}

TEST_CASE("certificate on the 4-vertex complete 2-complex") {
    TestabilityCertificate cert = testability_certificate(Complex::complete(4, 2), 1);
    CHECK(cert.valid);
    CHECK(cert.epsilon == Rational(3));
    CHECK(cert.cosets_checked == 7);
    CHECK(cert.all_bounded);
    CHECK(cert.equality_count == 7);
    CHECK(cert.equality_witness.weight() == 1);  // single-edge coset: 1/2 = 3 * 1/6
    CHECK_FALSE(cert.h_nonzero);
    CHECK_FALSE(cert.cocycle_witness.has_value());
}

TEST_CASE("certificate on the 5-vertex complete 2-complex") {
    TestabilityCertificate cert = testability_certificate(Complex::complete(5, 2), 1);
    CHECK(cert.valid);
    CHECK(cert.epsilon >= Rational(5, 3));
    CHECK(cert.cosets_checked == 63);
    CHECK(cert.all_bounded);
    CHECK(cert.equality_count >= 1);
}

TEST_CASE("certificate flags nonzero cohomology with a cocycle witness") {
    Complex one_triangle = Complex::from_maximal_faces({{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}});
    TestabilityCertificate cert = testability_certificate(one_triangle, 1);
    CHECK_FALSE(cert.valid);
    CHECK(cert.h_nonzero);
    CHECK(cert.epsilon == Rational(0));
    REQUIRE(cert.cocycle_witness.has_value());
    CHECK(coboundary(one_triangle, *cert.cocycle_witness).support.none());
    CHECK_FALSE(is_coboundary(one_triangle, *cert.cocycle_witness));
}

TEST_CASE("tester input guards") {
    Complex k4 = Complex::complete(4, 1);
    CHECK_THROWS_AS(exact_rejection_probability(k4, Cochain::zero(k4, 1)), EmptyCodomain);
    Complex k42 = Complex::complete(4, 2);
    CHECK_THROWS_AS(run_cocycle_tester(k42, Cochain::zero(k42, 1), 0, 1), Error);
    CHECK_THROWS_AS(testability_certificate(k42, 1, 4), BudgetExceeded);
}
