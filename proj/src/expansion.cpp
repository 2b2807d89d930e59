#include "cobex/expansion.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

#include "cobex/cohomology.hpp"
#include "cobex/errors.hpp"

namespace cobex {

namespace {

void check_pow2_budget(std::size_t exponent, std::uint64_t budget, const char* what) {
    if (exponent >= 64 || (std::uint64_t{1} << exponent) > budget) {
        std::ostringstream msg;
        msg << what << ": 2^" << exponent << " exceeds budget " << budget;
        throw BudgetExceeded(msg.str(), static_cast<int>(exponent));
    }
}

/// Minimum weight and lex-least leader of rep + span(basis), tracked by a
/// Gray-code walk so each step is one XOR plus a popcount.
CosetLeader scan_coset(const BitVector& rep, const std::vector<BitVector>& basis,
                       BitVector& scratch) {
    scratch = rep;
    CosetLeader best{scratch.count(), scratch};
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t j = 1; j < total; ++j) {
        scratch ^= basis[static_cast<std::size_t>(std::countr_zero(j))];
        long long w = scratch.count();
        if (w < best.weight ||
            (w == best.weight && BitVector::lex_less(scratch, best.leader))) {
            best.weight = w;
            best.leader = scratch;
        }
    }
    return best;
}

struct CosetCandidate {
    bool valid = false;
    long long delta_weight = 0;  // |delta f|, constant on the coset
    long long dist = 0;          // coset minimum weight
    BitVector leader;
};

/// Total order used for the minimization: ratio first (cross-multiplied),
/// then coordinate-lex on the leader. Distinct cosets have distinct
/// leaders, so this is a strict total order across cosets.
bool candidate_better(const CosetCandidate& a, const CosetCandidate& b) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    __int128 lhs = static_cast<__int128>(a.delta_weight) * b.dist;
    __int128 rhs = static_cast<__int128>(b.delta_weight) * a.dist;
    if (lhs != rhs) return lhs < rhs;
    return BitVector::lex_less(a.leader, b.leader);
}

/// Columns of the coboundary operator at dimension i: column j is
/// delta(e_j) spelled over X(i+1).
std::vector<BitVector> coboundary_columns(const Complex& x, int i) {
    std::vector<BitVector> cols(static_cast<std::size_t>(x.face_count(i)),
                                BitVector(static_cast<std::size_t>(x.face_count(i + 1))));
    const auto& targets = x.faces(i + 1);
    for (std::size_t t = 0; t < targets.size(); ++t)
        for (const Face& g : targets[t].facets())
            cols[*x.face_index(i, g)].set(t);
    return cols;
}

/// Scans coset representatives k in [k_begin, k_end) (skipping k = 0, the
/// zero coset) and returns the best candidate of the range. Representatives
/// are visited in Gray-code order so consecutive ones differ in one free
/// coordinate.
CosetCandidate scan_representative_range(std::uint64_t k_begin, std::uint64_t k_end,
                                         const CosetRepresentatives& reps,
                                         const std::vector<BitVector>& delta_cols,
                                         const std::vector<BitVector>& coboundary_basis,
                                         std::size_t codomain_size) {
    CosetCandidate best;
    if (k_begin >= k_end) return best;

    const auto& free_cols = reps.free_columns();
    auto gray = [](std::uint64_t k) { return k ^ (k >> 1); };

    BitVector rep = reps.at(gray(k_begin));
    BitVector delta(codomain_size);
    for (std::size_t c : rep.set_bits()) delta ^= delta_cols[c];
    BitVector scratch(rep.size());

    for (std::uint64_t k = k_begin; k < k_end; ++k) {
        if (k != k_begin) {
            // gray(k-1) ^ gray(k) is the single bit at position ctz(k).
            std::size_t j = static_cast<std::size_t>(std::countr_zero(k));
            rep.flip(free_cols[j]);
            delta ^= delta_cols[free_cols[j]];
        }
        if (gray(k) == 0) continue;  // the coset of B^i itself

        CosetLeader leader = scan_coset(rep, coboundary_basis, scratch);
        CosetCandidate cand{true, delta.count(), leader.weight, std::move(leader.leader)};
        if (candidate_better(cand, best)) best = std::move(cand);
    }
    return best;
}

}  // namespace

ExpansionResult expansion_epsilon(const Complex& x, int i, std::uint64_t budget, int threads) {
    if (i < 0) throw DimensionMismatch("expansion_epsilon: negative dimension");
    if (i >= x.dimension() || x.face_count(i + 1) == 0) {
        std::ostringstream msg;
        msg << "expansion_epsilon: X(" << i + 1 << ") is empty";
        throw EmptyCodomain(msg.str());
    }

    const Subspace& b = coboundary_space(x, i);
    const std::size_t m = static_cast<std::size_t>(x.face_count(i));
    const std::size_t codomain = static_cast<std::size_t>(x.face_count(i + 1));
    if (b.dim() == m)
        throw Error("expansion_epsilon: B^i = C^i, no cochain lies outside B^i");
    check_pow2_budget(b.dim(), budget, "expansion_epsilon (coset size)");
    CosetRepresentatives reps(b, budget);  // checks 2^(m - dim B^i) <= budget

    std::vector<BitVector> delta_cols = coboundary_columns(x, i);

    const std::uint64_t total = reps.count();
    int workers = std::max(1, threads);
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);

    std::vector<CosetCandidate> results(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
        std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
        std::uint64_t hi = (w + 1 == workers) ? total : lo + chunk;
        results[static_cast<std::size_t>(w)] =
            scan_representative_range(lo, hi, reps, delta_cols, b.basis(), codomain);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    CosetCandidate best;
    for (auto& r : results)
        if (candidate_better(r, best)) best = std::move(r);

    ExpansionResult out;
    out.i = i;
    out.witness = Cochain(i, best.leader);
    out.witness_dist = best.dist;
    out.witness_coboundary_weight = best.delta_weight;
    out.cosets_enumerated = static_cast<long long>(total - 1);
    out.h_nonzero = (best.delta_weight == 0);
    out.epsilon = out.h_nonzero
                      ? Rational(0)
                      : Rational(best.delta_weight, static_cast<long long>(codomain)) /
                            Rational(best.dist, static_cast<long long>(m));
    return out;
}

Rational epsilon_graph_cheeger(const Complex& x, std::uint64_t budget) {
    if (x.dimension() < 1) throw DimensionMismatch("epsilon_graph_cheeger: no edges");
    const auto& vertices = x.faces(0);
    const auto& edges = x.faces(1);
    const int n = static_cast<int>(vertices.size());
    check_pow2_budget(static_cast<std::size_t>(n), budget, "epsilon_graph_cheeger");

    // Edge endpoints as indices into X(0).
    std::vector<std::pair<int, int>> ends;
    ends.reserve(edges.size());
    for (const Face& e : edges) {
        ends.emplace_back(static_cast<int>(*x.face_index(0, e.facets()[1])),
                          static_cast<int>(*x.face_index(0, e.facets()[0])));
    }

    bool found = false;
    Rational best;
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < all; ++mask) {
        int size = std::popcount(mask);
        long long cut = 0;
        for (const auto& [a, b] : ends)
            cut += ((mask >> a) ^ (mask >> b)) & 1;
        Rational ratio(cut, std::min(size, n - size));
        if (!found || ratio < best) {
            best = ratio;
            found = true;
        }
    }
    return Rational(n, static_cast<long long>(edges.size())) * best;
}

Rational filling_mu(const Complex& x, int i, std::uint64_t budget) {
    if (i < 0) throw DimensionMismatch("filling_mu: negative dimension");
    if (i >= x.dimension() || x.face_count(i + 1) == 0)
        throw EmptyCodomain("filling_mu: X(i+1) is empty");

    const long long m = x.face_count(i);
    const long long codomain = x.face_count(i + 1);

    // B^{i+1} with preimages: basis row t arose as delta applied to a known
    // combination of i-face indicators.
    RowSpaceHistory hist = row_space_with_history(operator_matrix(x, i, OperatorKind::Coboundary).transposed());
    const Subspace& b_up = hist.space;
    if (b_up.dim() == 0)
        throw Error("filling_mu: B^{i+1} = 0, maximum over an empty set");
    const Subspace& z = cocycle_space(x, i);
    check_pow2_budget(b_up.dim(), budget, "filling_mu (coboundary enumeration)");
    check_pow2_budget(z.dim(), budget, "filling_mu (preimage coset)");

    // Gray-walk the non-zero elements of B^{i+1}, keeping beta and one
    // preimage alpha0 in sync.
    BitVector beta(static_cast<std::size_t>(codomain));
    BitVector alpha0(static_cast<std::size_t>(m));
    bool found = false;
    Rational best;
    const std::uint64_t total = std::uint64_t{1} << b_up.dim();
    for (std::uint64_t k = 1; k < total; ++k) {
        std::size_t t = static_cast<std::size_t>(std::countr_zero(k));
        beta ^= b_up.basis()[t];
        alpha0 ^= hist.row_combinations[t];
        // delta alpha = beta iff alpha lies in alpha0 + Z^i.
        CosetLeader fill = coset_min_weight(z, alpha0, budget);
        Rational ratio = Rational(fill.weight, m) / Rational(beta.count(), codomain);
        if (!found || best < ratio) {
            best = ratio;
            found = true;
        }
    }
    return best;
}

namespace {

void require_complete_2_complex(const Complex& x, const char* where) {
    if (!x.is_complete_complex(2)) {
        std::ostringstream msg;
        msg << where << ": requires the complete 2-complex on its vertex set";
        throw NotCompleteComplex(msg.str());
    }
}

}  // namespace

Cochain local_view(const Complex& x, const Cochain& alpha, int u) {
    require_complete_2_complex(x, "local_view");
    if (alpha.dim != 1 || alpha.support.size() != static_cast<std::size_t>(x.face_count(1)))
        throw DimensionMismatch("local_view: alpha must be a 1-cochain on the complex");
    if (u < 0 || u >= x.vertex_count()) throw VertexOutOfRange("local_view: no such vertex");

    Cochain view = Cochain::zero(x, 0);
    for (int v = 0; v < x.vertex_count(); ++v) {
        if (v == u) continue;
        auto e = x.face_index(1, Face({u, v}));
        if (alpha.support.test(*e)) view.support.set(*x.face_index(0, Face({v})));
    }
    return view;
}

LocalIdentityReport verify_local_identity(const Complex& x, const Cochain& alpha,
                                          std::uint64_t budget) {
    require_complete_2_complex(x, "verify_local_identity");
    if (alpha.dim != 1 || alpha.support.size() != static_cast<std::size_t>(x.face_count(1)))
        throw DimensionMismatch("verify_local_identity: alpha must be a 1-cochain");

    const int n = x.vertex_count();
    LocalIdentityReport rep;
    Cochain d1 = coboundary(x, alpha);
    rep.delta_weight_times_3 = 3 * d1.weight();

    const auto& edges = x.faces(1);
    for (int u = 0; u < n; ++u) {
        Cochain diff = alpha;
        diff.support ^= coboundary(x, local_view(x, alpha, u)).support;
        rep.local_view_sum += diff.weight();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            bool lhs = diff.support.test(e);
            if (edges[e].contains_vertex(u)) {
                if (lhs) {
                    std::ostringstream msg;
                    msg << "(alpha - d0 alpha_u)(e) != 0 for u=" << u << " in e="
                        << edges[e].vertices()[0] << "," << edges[e].vertices()[1];
                    rep.failure = msg.str();
                    return rep;
                }
            } else {
                Face triangle = edges[e].with_vertex(u);
                bool rhs = d1.support.test(*x.face_index(2, triangle));
                if (lhs != rhs) {
                    std::ostringstream msg;
                    msg << "(alpha - d0 alpha_u)(e) != (d1 alpha)(ue) for u=" << u << ", e="
                        << edges[e].vertices()[0] << "," << edges[e].vertices()[1];
                    rep.failure = msg.str();
                    return rep;
                }
            }
        }
    }

    if (rep.local_view_sum != rep.delta_weight_times_3) {
        std::ostringstream msg;
        msg << "counting identity failed: 3|d1 alpha| = " << rep.delta_weight_times_3
            << " but sum of local views = " << rep.local_view_sum;
        rep.failure = msg.str();
        return rep;
    }

    rep.dist = distance_to_coboundaries(x, alpha, budget).dist;
    if (rep.local_view_sum < static_cast<long long>(n) * rep.dist) {
        std::ostringstream msg;
        msg << "lower bound failed: sum " << rep.local_view_sum << " < n*dist = "
            << static_cast<long long>(n) * rep.dist;
        rep.failure = msg.str();
        return rep;
    }
    rep.pass = true;
    return rep;
}

}  // namespace cobex
