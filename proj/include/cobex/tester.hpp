#pragma once

#include <cstdint>
#include <optional>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/f2.hpp"

namespace cobex {

/// Monte-Carlo half of a tester run. `rate` is rejections/trials; the
/// Wilson bounds are display aids (the exact quantities carry the math).
struct SampleStats {
    long long trials = 0;
    std::uint64_t seed = 0;
    long long rejections = 0;
    Rational rate;
    double wilson_low = 0.0;
    double wilson_high = 0.0;
};

/// Everything a tester invocation certifies. `queries` is i+2: one trial
/// reads the i+2 facets of the sampled (i+1)-cell and nothing else.
/// distance/bound fields are absent when the coset enumeration they need
/// exceeds the budget.
struct TesterReport {
    int i = 0;
    int queries = 0;
    Rational exact_rate;  // ||delta f||
    std::optional<SampleStats> sample;
    std::optional<Rational> distance_normalized;
    std::optional<Rational> epsilon_bound;
    std::optional<bool> bound_satisfied;  // exact_rate >= epsilon_bound * distance
    long long queries_performed = 0;      // instrumented total over all trials
};

/// Wilson score interval for k successes in n trials at critical value z.
/// z defaults to the 99% two-sided quantile.
struct WilsonInterval {
    double low;
    double high;
};
WilsonInterval wilson_interval(long long k, long long n, double z = 2.5758293035489004);

/// ||delta_i f||: the fraction of (i+1)-cells on which the coboundary of f
/// does not vanish — exactly the probability that the i-cocycle tester
/// rejects f.
Rational exact_rejection_probability(const Complex& x, const Cochain& f);

/// Runs `trials` independent draws of a uniform (i+1)-cell, evaluating
/// delta(f) there by reading the i+2 facet coordinates of f. Trials are
/// consumed in fixed-size batches with substream seeds, so the outcome is
/// identical however the batches are scheduled. The exact distance and
/// epsilon bound are attached when they fit in `budget`; sampling itself
/// never throws BudgetExceeded.
TesterReport run_cocycle_tester(const Complex& x, const Cochain& f, long long trials,
                                std::uint64_t seed, std::uint64_t budget = kDefaultBudget);

/// Sampling core of run_cocycle_tester with no distance/epsilon
/// attachments; the application testers attach their own bounds.
TesterReport run_cocycle_tester_raw(const Complex& x, const Cochain& f, long long trials,
                                    std::uint64_t seed);

/// Exhaustive testability certificate at dimension i: computes epsilon_i,
/// then verifies over every non-zero coset of B^i that the exact rejection
/// rate is at least epsilon_i times the normalized coset distance, and that
/// at least one coset attains equality. When H^i != 0 the certificate
/// instead exhibits a cocycle outside B^i (epsilon_i = 0, so no positive
/// rejection bound can hold).
struct TestabilityCertificate {
    int i = 0;
    int queries = 0;
    Rational epsilon;
    long long cosets_checked = 0;
    bool all_bounded = false;
    long long equality_count = 0;
    Cochain equality_witness;   // leader of a coset attaining the bound with equality
    bool h_nonzero = false;
    std::optional<Cochain> cocycle_witness;  // in Z^i \ B^i, present when h_nonzero
    bool valid = false;  // all_bounded, equality seen, and H^i = 0
};
TestabilityCertificate testability_certificate(const Complex& x, int i,
                                               std::uint64_t budget = kDefaultBudget,
                                               int threads = 1);

}  // namespace cobex
