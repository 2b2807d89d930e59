#include <doctest.h>

#include "cobex/cohomology.hpp"
#include "cobex/errors.hpp"
#include "oracles.hpp"

using namespace cobex;

TEST_CASE("B^0 is the constants on any complex") {
    for (const Complex& x : {Complex::complete(4, 1), Complex::complete(5, 2),
                             Complex::from_maximal_faces({{0, 1}, {2, 3}})}) {
        const Subspace& b0 = coboundary_space(x, 0);
        CHECK(b0.dim() == 1);
        CHECK(b0.basis()[0].count() == x.face_count(0));  // the all-ones row
    }
}

TEST_CASE("cut space of complete graphs has dimension n-1") {
    CHECK(coboundary_space(Complex::complete(4, 2), 1).dim() == 3);
    for (int n = 3; n <= 8; ++n)
        CHECK(coboundary_space(Complex::complete(n, 2), 1).dim() == n - 1);
}

TEST_CASE("cocycle space dimensions") {
    CHECK(cocycle_space(Complex::complete(4, 1), 0).dim() == 1);  // connected: constants
    Complex two_edges = Complex::from_maximal_faces({{0, 1}, {2, 3}});
    CHECK(cocycle_space(two_edges, 0).dim() == 2);  // one per component
    Complex c5 = Complex::from_maximal_faces({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(cocycle_space(c5, 1).dim() == 5);  // no 2-cells: kernel of the zero map
}

TEST_CASE("cohomology dimensions track connectivity") {
    CHECK(cohomology_dim(Complex::complete(4, 1), 0) == 0);
    Complex three_parts = Complex::from_maximal_faces({{0, 1}, {2, 3}, {4}});
    CHECK(cohomology_dim(three_parts, 0) == 2);  // components - 1
    for (int m = 3; m <= 8; ++m) CHECK(cohomology_dim(Complex::complete(m, 2), 1) == 0);

    // connected graph: dim H^1 = |E| - |V| + 1 by the computed ranks
    Complex c5 = Complex::from_maximal_faces({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(cohomology_dim(c5, 1) == 1);
    Complex k4 = Complex::complete(4, 1);
    CHECK(cohomology_dim(k4, 1) == 6 - 4 + 1);
}

TEST_CASE("H^0 equals component count minus one across the corpus") {
    for (const Complex& x : oracle::small_corpus())
        CHECK(cohomology_dim(x, 0) == oracle::component_count(x) - 1);
}

TEST_CASE("homology and cohomology dimensions agree") {
    for (const Complex& x : oracle::small_corpus())
        for (int i = 0; i <= x.dimension(); ++i)
            CHECK(homology_dim(x, i) == cohomology_dim(x, i));
}

TEST_CASE("coboundaries are cocycles (B^i inside Z^i)") {
    for (const Complex& x : oracle::small_corpus()) {
        for (int i = 0; i <= x.dimension(); ++i) {
            const Subspace& z = cocycle_space(x, i);
            for (const BitVector& row : coboundary_space(x, i).basis()) CHECK(z.contains(row));
        }
    }
}

TEST_CASE("is_coboundary") {
    Complex k42 = Complex::complete(4, 2);
    Cochain v = Cochain::indicator(k42, 0, 2);
    CHECK(is_coboundary(k42, coboundary(k42, v)));
    CHECK(is_coboundary(k42, Cochain::zero(k42, 1)));
    CHECK_FALSE(is_coboundary(k42, Cochain::indicator(k42, 1, 0)));  // single edge is no cut
}

TEST_CASE("distance to coboundaries") {
    Complex k42 = Complex::complete(4, 2);

    Cochain cut = coboundary(k42, Cochain::indicator(k42, 0, 1));
    DistanceResult member = distance_to_coboundaries(k42, cut);
    CHECK(member.dist == 0);
    CHECK(member.normalized == Rational(0));
    CHECK(member.leader.support.none());

    DistanceResult edge = distance_to_coboundaries(k42, Cochain::indicator(k42, 1, 0));
    CHECK(edge.dist == 1);
    CHECK(edge.normalized == Rational(1, 6));

    Cochain matching = Cochain::from_faces(k42, 1, {Face({0, 1}), Face({2, 3})});
    DistanceResult m = distance_to_coboundaries(k42, matching);
    CHECK(m.dist == 2);
    CHECK(m.normalized == Rational(1, 3));
}

TEST_CASE("orthogonality report examples") {
    OrthogonalityReport r1 = orthogonality_report(Complex::complete(4, 2), 1);
    CHECK(r1.pass);
    CHECK(r1.dim_boundary == 3);
    CHECK(r1.dim_cocycle == 3);
    CHECK(r1.dim_boundary + r1.dim_cocycle == 6);

    CHECK(orthogonality_report(Complex::complete(5, 2), 0).pass);
    CHECK(orthogonality_report(Complex::from_maximal_faces({{0, 1, 2}}), 1).pass);
}

TEST_CASE("orthogonality across complete complexes and the corpus") {
    for (int n = 2; n <= 7; ++n) {
        for (int d = 1; d < n && d <= 3; ++d) {
            Complex x = Complex::complete(n, d);
            for (int i = 0; i <= d; ++i) CHECK(orthogonality_report(x, i).pass);
        }
    }
    for (const Complex& x : oracle::small_corpus())
        for (int i = 0; i <= x.dimension(); ++i) CHECK(orthogonality_report(x, i).pass);
}

TEST_CASE("dimension guards") {
    Complex k4 = Complex::complete(4, 1);
    CHECK_THROWS_AS(coboundary_space(k4, 2), DimensionMismatch);
    CHECK_THROWS_AS(cocycle_space(k4, -1), DimensionMismatch);
    CHECK_THROWS_AS(distance_to_coboundaries(k4, Cochain(0, BitVector(3))),
                    DimensionMismatch);
}
