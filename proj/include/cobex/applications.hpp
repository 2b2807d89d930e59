#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/tester.hpp"

namespace cobex {

/// Monte-Carlo switch for the application testers: absent = exact only.
struct SampleParams {
    long long trials = 0;
    std::uint64_t seed = 0;
};

/// A graph is a complex of dimension at most 1. Vertex ids are 0..n-1
/// where n = vertex_count(); vertices may be isolated.
class Graph {
public:
    static Graph from_complex(Complex x);  // NotAGraph when dim > 1
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph complete(int n);

    /// Graph over [n] whose edge set is given as a bit per K_n edge slot.
    static Graph from_complete_edges(int n, const BitVector& bits);

    const Complex& complex() const { return complex_; }
    int vertex_count() const { return complex_.vertex_count(); }
    long long edge_count() const { return complex_.face_count(1); }
    bool has_edge(int u, int v) const;

    /// Edge set spelled over the canonical K_n edge order (the 1-cochain of
    /// the complete graph this graph sits inside).
    BitVector edges_on_complete() const;

private:
    explicit Graph(Complex x) : complex_(std::move(x)) {}
    Complex complex_;
};

/// Index of edge {a, b} within the canonical (lexicographic) K_n edge order.
std::size_t complete_edge_index(int n, int a, int b);

/// Symmetric m x m matrix over {+1, -1} with +1 diagonal.
struct SignMatrix {
    int m = 0;
    std::vector<std::vector<int>> entries;

    /// Validates shape, symmetry, diagonal and entry range.
    static SignMatrix from_entries(std::vector<std::vector<int>> entries);

    /// The rank-one sign pattern factor * factor^T (with forced +1 diagonal).
    static SignMatrix tensor_power(const std::vector<int>& factor);
};

/// Edge tester for "is f constant on the vertices": sample an edge, reject
/// when f disagrees on its endpoints. This is the 0-cocycle tester of the
/// graph; the exact rejection rate is |E(S, S-complement)|/|E| for
/// S = support(f) and the distance is min(|S|, n-|S|)/n. The attached
/// epsilon bound is the graph's Cheeger constant, when it fits the budget.
TesterReport constant_function_test(const Graph& g, const Cochain& f,
                                    const std::optional<SampleParams>& sample = std::nullopt,
                                    std::uint64_t budget = kDefaultBudget);

/// f(e) = g(u) + g(v) mod 2 on every edge of the graph — the coboundary of
/// the vertex assignment, so sum functions are exactly B^1 of the graph.
Cochain sum_function_encode(const Graph& g, const Cochain& vertex_assignment);

/// Triangle tester for "is f a sum function" on the complete graph: sample
/// {r, j, k}, accept iff f(rj) + f(jk) + f(kr) = 0. Runs the 1-cocycle
/// tester on the complete 2-complex; the reported bound is the guaranteed
/// epsilon = 1 (complete complexes expand at least that much), so
/// bound_satisfied is exact_rate >= distance.
TesterReport sum_function_test(const Graph& complete_graph, const Cochain& f,
                               const std::optional<SampleParams>& sample = std::nullopt,
                               std::uint64_t budget = kDefaultBudget);

/// Girth (shortest cycle length) via per-edge BFS, and the minimum weight
/// of a non-zero element of the cycle space Z_1 by exhaustive scan. The two
/// agree whenever both are finite; nullopt means the graph is a forest.
/// When 2^dim Z_1 exceeds the budget the scan is skipped (girth is still
/// computed) and scan_skipped is set.
struct GirthReport {
    std::optional<long long> girth;
    std::optional<long long> min_cycle_weight;
    bool scan_skipped = false;
    int scan_log2_required = 0;
};
GirthReport girth_and_min_cycle(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Triple-product tester for "M is a sign tensor power alpha * alpha^T":
/// sample {i, j, k}, accept iff M_ij * M_jk * M_ki = +1. Translating
/// +1/-1 to 0/1 entrywise turns tensor powers into sum functions, so this
/// is sum_function_test in different notation. `factor` is a witness vector
/// (the one with +1 first entry) when M is a member.
struct TensorReport {
    TesterReport tester;
    bool is_tensor_power = false;
    std::optional<std::vector<int>> factor;
};
TensorReport tensor_power_test(const SignMatrix& m,
                               const std::optional<SampleParams>& sample = std::nullopt,
                               std::uint64_t budget = kDefaultBudget);

/// Seidel switching at v: edges incident to v are complemented, the rest
/// are untouched. On edge cochains over K_n this is alpha + delta0(chi_v).
Graph seidel_switch(const Graph& g, int v);

/// Decides Seidel equivalence of two labeled graphs on [n]: equivalent iff
/// the difference of their edge cochains is a coboundary of K_n. When
/// equivalent, a switching set is reported (switching its vertices maps one
/// graph to the other). When not, the exact distance of the difference to
/// the coboundaries and the triangle tester's rejection rate are reported;
/// sampled mode draws random triangles and compares the two coboundaries.
struct SeidelReport {
    int n = 0;
    bool equivalent = false;
    Rational exact_rate;  // rejection rate of the random-triangle comparison
    std::optional<std::vector<int>> switching_set;
    std::optional<long long> distance;
    std::optional<Rational> distance_normalized;
    std::optional<bool> bound_satisfied;  // exact_rate >= distance_normalized
    std::optional<SampleStats> sample;
};
SeidelReport seidel_equivalence(const Graph& g1, const Graph& g2,
                                const std::optional<SampleParams>& sample = std::nullopt,
                                std::uint64_t budget = kDefaultBudget);

}  // namespace cobex
