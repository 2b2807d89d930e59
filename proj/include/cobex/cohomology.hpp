#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/f2.hpp"

namespace cobex {

/// B^i: image of the coboundary from dimension i-1 (B^0 is {0, all-ones}
/// on every complex, since the empty face is always present).
/// Results are memoized on the complex; repeated calls are cheap.
const Subspace& coboundary_space(const Complex& x, int i);

/// Z^i: kernel of the coboundary at dimension i (all of C^i when i = dim X).
const Subspace& cocycle_space(const Complex& x, int i);

/// B_i: image of the boundary from dimension i+1 (zero space at i = dim X).
const Subspace& boundary_space(const Complex& x, int i);

/// Z_i: kernel of the boundary at dimension i.
const Subspace& cycle_space(const Complex& x, int i);

/// dim H^i = dim Z^i - dim B^i. With the empty face present this is the
/// reduced convention: for a graph, dim H^0 = #components - 1, and for a
/// connected graph dim H^1 = |E| - |V| + 1.
int cohomology_dim(const Complex& x, int i);

/// dim H_i = dim Z_i - dim B_i (always equals cohomology_dim over F2).
int homology_dim(const Complex& x, int i);

bool is_coboundary(const Complex& x, const Cochain& f);

/// Minimum Hamming weight over the coset f + B^i, its normalization by
/// |X(i)|, and the deterministic coset leader.
struct DistanceResult {
    long long dist;
    Rational normalized;
    Cochain leader;
};
DistanceResult distance_to_coboundaries(const Complex& x, const Cochain& f,
                                        std::uint64_t budget = kDefaultBudget);

/// Checks B_i-perp = Z^i and Z_i-perp = B^i by pairwise basis inner
/// products plus the complementary-dimension counts.
struct OrthogonalityReport {
    int i = 0;
    bool pass = false;
    long long dim_boundary = 0;   // dim B_i
    long long dim_cocycle = 0;    // dim Z^i
    long long dim_cycle = 0;      // dim Z_i
    long long dim_coboundary = 0; // dim B^i
    std::string failure;          // empty on pass; names the first counterexample
};
OrthogonalityReport orthogonality_report(const Complex& x, int i);

}  // namespace cobex
