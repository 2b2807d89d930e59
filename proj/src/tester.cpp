#include "cobex/tester.hpp"

#include <cmath>
#include <sstream>

#include "cobex/cohomology.hpp"
#include "cobex/errors.hpp"
#include "cobex/expansion.hpp"
#include "cobex/rng.hpp"

namespace cobex {

namespace {

constexpr long long kTrialBatch = 4096;

void require_tester_dims(const Complex& x, int i, const char* where) {
    if (i < 0) throw DimensionMismatch("cocycle tester: negative dimension");
    if (i >= x.dimension() || x.face_count(i + 1) == 0) {
        std::ostringstream msg;
        msg << where << ": X(" << i + 1 << ") is empty";
        throw EmptyCodomain(msg.str());
    }
}

}  // namespace

WilsonInterval wilson_interval(long long k, long long n, double z) {
    double nn = static_cast<double>(n);
    double p = static_cast<double>(k) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double center = p + z2 / (2.0 * nn);
    double spread = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    return WilsonInterval{(center - spread) / denom, (center + spread) / denom};
}

Rational exact_rejection_probability(const Complex& x, const Cochain& f) {
    require_tester_dims(x, f.dim, "exact_rejection_probability");
    return norm(x, coboundary(x, f));
}

TesterReport run_cocycle_tester_raw(const Complex& x, const Cochain& f, long long trials,
                                    std::uint64_t seed) {
    require_tester_dims(x, f.dim, "run_cocycle_tester");
    if (trials < 1) throw Error("run_cocycle_tester: trials must be >= 1");
    if (f.support.size() != static_cast<std::size_t>(x.face_count(f.dim)))
        throw DimensionMismatch("run_cocycle_tester: cochain does not match complex");

    TesterReport rep;
    rep.i = f.dim;
    rep.queries = f.dim + 2;
    rep.exact_rate = exact_rejection_probability(x, f);

    // The tester touches f only through this accessor, which is what makes
    // the (i+2)-query claim checkable.
    long long queries = 0;
    auto read = [&](std::size_t idx) {
        ++queries;
        return f.support.test(idx);
    };

    const auto& cells = x.faces(f.dim + 1);
    const std::uint64_t cell_count = static_cast<std::uint64_t>(cells.size());
    long long rejections = 0;
    long long done = 0;
    for (std::uint64_t batch = 0; done < trials; ++batch) {
        std::mt19937_64 rng(substream_seed(seed, batch));
        long long batch_size = std::min(kTrialBatch, trials - done);
        for (long long t = 0; t < batch_size; ++t) {
            const Face& cell = cells[uniform_index(rng, cell_count)];
            int parity = 0;
            for (const Face& g : cell.facets()) parity ^= read(*x.face_index(f.dim, g));
            rejections += parity;
        }
        done += batch_size;
    }

    SampleStats stats;
    stats.trials = trials;
    stats.seed = seed;
    stats.rejections = rejections;
    stats.rate = Rational(rejections, trials);
    WilsonInterval w = wilson_interval(rejections, trials);
    stats.wilson_low = w.low;
    stats.wilson_high = w.high;
    rep.sample = stats;
    rep.queries_performed = queries;
    return rep;
}

TesterReport run_cocycle_tester(const Complex& x, const Cochain& f, long long trials,
                                std::uint64_t seed, std::uint64_t budget) {
    TesterReport rep = run_cocycle_tester_raw(x, f, trials, seed);
    try {
        rep.distance_normalized = distance_to_coboundaries(x, f, budget).normalized;
        rep.epsilon_bound = expansion_epsilon(x, f.dim, budget).epsilon;
        rep.bound_satisfied = *rep.epsilon_bound * *rep.distance_normalized <= rep.exact_rate;
    } catch (const BudgetExceeded&) {
        rep.distance_normalized.reset();
        rep.epsilon_bound.reset();
        rep.bound_satisfied.reset();
    }
    return rep;
}

TestabilityCertificate testability_certificate(const Complex& x, int i, std::uint64_t budget,
                                               int threads) {
    require_tester_dims(x, i, "testability_certificate");

    ExpansionResult eps = expansion_epsilon(x, i, budget, threads);
    const Subspace& b = coboundary_space(x, i);
    CosetRepresentatives reps(b, budget);

    TestabilityCertificate cert;
    cert.i = i;
    cert.queries = i + 2;
    cert.epsilon = eps.epsilon;
    cert.h_nonzero = eps.h_nonzero;
    cert.all_bounded = true;

    const long long m = x.face_count(i);
    const long long codomain = x.face_count(i + 1);

    for (std::uint64_t k = 1; k < reps.count(); ++k) {
        Cochain rep_cochain(i, reps.at(k));
        long long reject_weight = coboundary(x, rep_cochain).weight();
        long long dist = coset_min_weight(b, rep_cochain.support, budget).weight;
        ++cert.cosets_checked;
        // exact_rate >= epsilon * dist/m, cross-multiplied:
        //   reject_weight * m * eps.den >= eps.num * dist * codomain
        __int128 lhs = static_cast<__int128>(reject_weight) * m * cert.epsilon.den();
        __int128 rhs = static_cast<__int128>(cert.epsilon.num()) * dist * codomain;
        if (lhs < rhs) cert.all_bounded = false;
        if (lhs == rhs) ++cert.equality_count;
    }

    // The epsilon witness is the lex-least leader among ratio-minimizing
    // cosets, which are exactly the equality cosets.
    cert.equality_witness = eps.witness;
    if (cert.h_nonzero) cert.cocycle_witness = eps.witness;
    cert.valid = cert.all_bounded && cert.equality_count > 0 && !cert.h_nonzero;
    return cert;
}

}  // namespace cobex
