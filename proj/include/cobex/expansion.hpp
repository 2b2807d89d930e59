#pragma once

#include <cstdint>
#include <string>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/f2.hpp"

namespace cobex {

/// Outcome of the exact expansion-constant computation at dimension i.
/// When witness_dist > 0 the invariant
///   epsilon == (witness_coboundary_weight / |X(i+1)|) / (witness_dist / |X(i)|)
/// holds exactly; h_nonzero marks epsilon == 0 (a cocycle outside B^i).
struct ExpansionResult {
    int i = 0;
    Rational epsilon;
    Cochain witness;                         // coset leader of the minimizing coset
    long long witness_dist = 0;              // |witness|, the coset minimum weight
    long long witness_coboundary_weight = 0; // |delta witness|
    long long cosets_enumerated = 0;         // non-zero cosets of B^i visited
    bool h_nonzero = false;
};

/// Exact i-th coboundary expansion constant by enumeration over the cosets
/// of B^i. The coboundary is constant on each coset, so the minimization
/// costs 2^(|X(i)| - dim B^i) coset visits, each with a 2^(dim B^i)
/// minimum-weight search. Both factors are budget-checked. Any worker count
/// produces the identical result (ties broken by coordinate-lex leaders).
ExpansionResult expansion_epsilon(const Complex& x, int i,
                                  std::uint64_t budget = kDefaultBudget, int threads = 1);

/// The graph specialization of epsilon at dimension 0:
///   (|V|/|E|) * min over proper non-empty A of |E(A, A-complement)| / min(|A|, n-|A|),
/// minimized by direct subset enumeration over the 1-skeleton. Equals
/// expansion_epsilon(x, 0) exactly; 0 when the graph is disconnected.
Rational epsilon_graph_cheeger(const Complex& x, std::uint64_t budget = kDefaultBudget);

/// Worst-case minimal-filling ratio over non-zero coboundaries:
///   max over 0 != beta in B^{i+1} of min{||alpha|| : delta alpha = beta} / ||beta||.
/// Equals 1/epsilon_i when H^i = 0; can stay finite even when H^i != 0.
Rational filling_mu(const Complex& x, int i, std::uint64_t budget = kDefaultBudget);

/// The local view of a 1-cochain alpha from vertex u on the complete
/// 2-complex: alpha_u(v) = alpha({u,v}) for v != u, and 0 at u.
Cochain local_view(const Complex& x, const Cochain& alpha, int u);

/// Checks, for every vertex u and edge e of a complete 2-complex:
///   (alpha - delta0 alpha_u)(e) = (delta1 alpha)(u e)   when u not in e,
///   (alpha - delta0 alpha_u)(e) = 0                     when u in e,
/// plus the counting identity 3*|delta1 alpha| = sum_u |alpha - delta0 alpha_u|
/// and the lower bound sum_u |...| >= n * dist(alpha, B^1).
struct LocalIdentityReport {
    bool pass = false;
    long long delta_weight_times_3 = 0;
    long long local_view_sum = 0;
    long long dist = 0;  // dist(alpha, B^1)
    std::string failure; // first counterexample, empty on pass
};
LocalIdentityReport verify_local_identity(const Complex& x, const Cochain& alpha,
                                          std::uint64_t budget = kDefaultBudget);

}  // namespace cobex
