#include "cobex/applications.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "cobex/cohomology.hpp"
#include "cobex/errors.hpp"
#include "cobex/expansion.hpp"

namespace cobex {

std::size_t complete_edge_index(int n, int a, int b) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n || a == b) throw VertexOutOfRange("complete_edge_index: bad pair");
    // Lexicographic rank of (a, b) among the increasing pairs of [n].
    long long before = static_cast<long long>(a) * n - static_cast<long long>(a) * (a + 1) / 2;
    return static_cast<std::size_t>(before + (b - a - 1));
}

Graph Graph::from_complex(Complex x) {
    if (x.dimension() > 1) {
        std::ostringstream msg;
        msg << "Graph: complex has dimension " << x.dimension();
        throw NotAGraph(msg.str());
    }
    return Graph(std::move(x));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw EmptyInput("Graph::from_edges: need at least one vertex");
    std::vector<std::vector<int>> faces;
    for (int v = 0; v < n; ++v) faces.push_back({v});
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw VertexOutOfRange("Graph::from_edges: endpoint outside [0, n)");
        faces.push_back({u, v});  // Face ctor rejects loops
    }
    return Graph(Complex::from_maximal_faces(faces));
}

Graph Graph::complete(int n) {
    return Graph(Complex::complete(n, n >= 2 ? 1 : 0));
}

Graph Graph::from_complete_edges(int n, const BitVector& bits) {
    if (bits.size() != static_cast<std::size_t>(binomial(n, 2)))
        throw DimensionMismatch("from_complete_edges: bit count != C(n,2)");
    std::vector<std::pair<int, int>> edges;
    std::size_t idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++idx)
            if (bits.test(idx)) edges.emplace_back(a, b);
    return from_edges(n, edges);
}

bool Graph::has_edge(int u, int v) const {
    return complex_.has_face(Face({u, v}));
}

BitVector Graph::edges_on_complete() const {
    const int n = vertex_count();
    BitVector bits(static_cast<std::size_t>(binomial(n, 2)));
    if (complex_.dimension() >= 1) {
        for (const Face& e : complex_.faces(1))
            bits.set(complete_edge_index(n, e.vertices()[0], e.vertices()[1]));
    }
    return bits;
}

SignMatrix SignMatrix::from_entries(std::vector<std::vector<int>> entries) {
    SignMatrix m;
    m.m = static_cast<int>(entries.size());
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != m.m)
            throw NotSymmetric("SignMatrix: not square");
    for (int i = 0; i < m.m; ++i) {
        for (int j = 0; j < m.m; ++j) {
            int v = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v != 1 && v != -1) throw BadEntry("SignMatrix: entries must be +1 or -1");
            if (i == j && v != 1) throw BadDiagonal("SignMatrix: diagonal must be +1");
        }
    }
    for (int i = 0; i < m.m; ++i)
        for (int j = i + 1; j < m.m; ++j)
            if (entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw NotSymmetric("SignMatrix: not symmetric");
    m.entries = std::move(entries);
    return m;
}

SignMatrix SignMatrix::tensor_power(const std::vector<int>& factor) {
    int n = static_cast<int>(factor.size());
    std::vector<std::vector<int>> e(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 1));
    for (int i = 0; i < n; ++i) {
        if (factor[static_cast<std::size_t>(i)] != 1 && factor[static_cast<std::size_t>(i)] != -1)
            throw BadEntry("tensor_power: factor entries must be +1 or -1");
        for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i == j ? 1
                       : factor[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(j)];
    }
    return from_entries(std::move(e));
}

namespace {

/// Solve delta0(g) = target over a complete 2-complex, normalized so that
/// g(0) = 0 (g and its complement are the two solutions). Returns nullopt
/// when target is not a coboundary.
std::optional<BitVector> solve_vertex_potential(const Complex& x, const BitVector& target) {
    RowSpaceHistory hist =
        row_space_with_history(operator_matrix(x, 1, OperatorKind::Boundary));
    auto coords = hist.space.coordinates(target);
    if (!coords) return std::nullopt;
    BitVector g(static_cast<std::size_t>(x.face_count(0)));
    for (std::size_t t : coords->set_bits()) g ^= hist.row_combinations[t];
    if (g.test(0)) {
        for (std::size_t v = 0; v < g.size(); ++v) g.flip(v);
    }
    return g;
}

void attach_bound(TesterReport& rep, const Complex& x, const Cochain& f,
                  const Rational& epsilon_bound, std::uint64_t budget) {
    try {
        rep.distance_normalized = distance_to_coboundaries(x, f, budget).normalized;
        rep.epsilon_bound = epsilon_bound;
        rep.bound_satisfied = epsilon_bound * *rep.distance_normalized <= rep.exact_rate;
    } catch (const BudgetExceeded&) {
        rep.distance_normalized.reset();
        rep.epsilon_bound.reset();
        rep.bound_satisfied.reset();
    }
}

}  // namespace

TesterReport constant_function_test(const Graph& g, const Cochain& f,
                                    const std::optional<SampleParams>& sample,
                                    std::uint64_t budget) {
    const Complex& x = g.complex();
    if (f.dim != 0 || f.support.size() != static_cast<std::size_t>(x.face_count(0)))
        throw DimensionMismatch("constant_function_test: f must assign a bit to every vertex");

    TesterReport rep;
    if (sample) {
        rep = run_cocycle_tester_raw(x, f, sample->trials, sample->seed);
    } else {
        rep.i = 0;
        rep.queries = 2;
        rep.exact_rate = exact_rejection_probability(x, f);
    }
    std::optional<Rational> cheeger;
    try {
        cheeger = epsilon_graph_cheeger(x, budget);
    } catch (const BudgetExceeded&) {
    }
    if (cheeger) {
        attach_bound(rep, x, f, *cheeger, budget);
    }
    return rep;
}

Cochain sum_function_encode(const Graph& g, const Cochain& vertex_assignment) {
    const Complex& x = g.complex();
    if (vertex_assignment.dim != 0 ||
        vertex_assignment.support.size() != static_cast<std::size_t>(x.face_count(0)))
        throw DimensionMismatch("sum_function_encode: assignment must cover every vertex");
    if (x.dimension() < 1) return Cochain(1, BitVector(0));
    return coboundary(x, vertex_assignment);
}

TesterReport sum_function_test(const Graph& complete_graph, const Cochain& f,
                               const std::optional<SampleParams>& sample,
                               std::uint64_t budget) {
    const int m = complete_graph.vertex_count();
    if (!complete_graph.complex().is_complete_complex(m >= 2 ? 1 : 0))
        throw NotComplete("sum_function_test: graph is not complete");
    if (m < 3) throw NotComplete("sum_function_test: need at least 3 vertices for triangles");
    if (f.dim != 1 || f.support.size() != static_cast<std::size_t>(binomial(m, 2)))
        throw DimensionMismatch("sum_function_test: f must live on the C(m,2) edges");

    Complex x = Complex::complete(m, 2);
    TesterReport rep;
    if (sample) {
        rep = run_cocycle_tester_raw(x, f, sample->trials, sample->seed);
    } else {
        rep.i = 1;
        rep.queries = 3;
        rep.exact_rate = exact_rejection_probability(x, f);
    }
    // Complete complexes expand at >= 1, which is the tester guarantee the
    // report certifies (the true epsilon is n/(n-2) or better).
    attach_bound(rep, x, f, Rational(1), budget);
    return rep;
}

GirthReport girth_and_min_cycle(const Graph& g, std::uint64_t budget) {
    const Complex& x = g.complex();
    GirthReport out;

    const int n = static_cast<int>(x.face_count(0));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> edges;
    if (x.dimension() >= 1) {
        for (const Face& e : x.faces(1)) {
            int a = static_cast<int>(*x.face_index(0, Face({e.vertices()[0]})));
            int b = static_cast<int>(*x.face_index(0, Face({e.vertices()[1]})));
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
            edges.emplace_back(a, b);
        }
    }

    // Shortest cycle through each edge: remove it, BFS between endpoints.
    long long best = -1;
    for (std::size_t skip = 0; skip < edges.size(); ++skip) {
        auto [src, dst] = edges[skip];
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::deque<int> queue{src};
        dist[static_cast<std::size_t>(src)] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (u == dst) break;
            for (int v : adj[static_cast<std::size_t>(u)]) {
                bool is_skipped = (u == edges[skip].first && v == edges[skip].second) ||
                                  (u == edges[skip].second && v == edges[skip].first);
                if (is_skipped || dist[static_cast<std::size_t>(v)] >= 0) continue;
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
        if (dist[static_cast<std::size_t>(dst)] >= 0) {
            long long cycle = dist[static_cast<std::size_t>(dst)] + 1;
            if (best < 0 || cycle < best) best = cycle;
        }
    }
    if (best >= 0) out.girth = best;

    if (x.dimension() < 1) return out;
    const Subspace& z1 = cycle_space(x, 1);
    if (z1.dim() == 0) return out;  // forest: both stay infinite
    if (z1.dim() >= 64 || (std::uint64_t{1} << z1.dim()) > budget) {
        out.scan_skipped = true;
        out.scan_log2_required = static_cast<int>(z1.dim());
        return out;
    }
    // Gray-walk the non-zero cycle-space vectors for the minimum weight.
    BitVector cur(static_cast<std::size_t>(x.face_count(1)));
    long long min_w = -1;
    const std::uint64_t total = std::uint64_t{1} << z1.dim();
    for (std::uint64_t k = 1; k < total; ++k) {
        cur ^= z1.basis()[static_cast<std::size_t>(std::countr_zero(k))];
        long long w = cur.count();
        if (min_w < 0 || w < min_w) min_w = w;
    }
    out.min_cycle_weight = min_w;
    return out;
}

TensorReport tensor_power_test(const SignMatrix& m, const std::optional<SampleParams>& sample,
                               std::uint64_t budget) {
    // Notation switch: +1 -> 0, -1 -> 1 turns triple products into triangle
    // sums, and tensor powers into sum functions.
    const int n = m.m;
    BitVector bits(static_cast<std::size_t>(binomial(n, 2)));
    std::size_t idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++idx)
            if (m.entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == -1)
                bits.set(idx);

    TensorReport out;
    Cochain f(1, std::move(bits));
    out.tester = sum_function_test(Graph::complete(n), f, sample, budget);
    out.is_tensor_power = out.tester.exact_rate.is_zero();
    if (out.is_tensor_power) {
        Complex x = Complex::complete(n, 2);
        if (auto g = solve_vertex_potential(x, f.support)) {
            std::vector<int> factor(static_cast<std::size_t>(n), 1);
            for (std::size_t v : g->set_bits()) factor[v] = -1;
            out.factor = std::move(factor);
        }
    }
    return out;
}

Graph seidel_switch(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw VertexOutOfRange("seidel_switch: vertex outside [0, n)");
    BitVector bits = g.edges_on_complete();
    // alpha + delta0(chi_v): complement every slot at v.
    for (int u = 0; u < n; ++u)
        if (u != v) bits.flip(complete_edge_index(n, u, v));
    return Graph::from_complete_edges(n, bits);
}

SeidelReport seidel_equivalence(const Graph& g1, const Graph& g2,
                                const std::optional<SampleParams>& sample,
                                std::uint64_t budget) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count()) {
        std::ostringstream msg;
        msg << "seidel_equivalence: vertex sets differ (" << n << " vs " << g2.vertex_count()
            << ")";
        throw VertexSetMismatch(msg.str());
    }

    SeidelReport rep;
    rep.n = n;
    BitVector diff = g1.edges_on_complete() ^ g2.edges_on_complete();

    if (n <= 2) {
        // K_1/K_2 have no triangles and every edge set difference is a
        // coboundary, so the pair is always equivalent.
        rep.equivalent = true;
        rep.switching_set = std::vector<int>{};
        if (n == 2 && diff.test(0)) rep.switching_set = std::vector<int>{1};
        return rep;
    }

    Complex x = Complex::complete(n, 2);
    Cochain d(1, diff);
    rep.exact_rate = exact_rejection_probability(x, d);

    if (auto g = solve_vertex_potential(x, d.support)) {
        rep.equivalent = true;
        std::vector<int> verts;
        for (std::size_t v : g->set_bits()) verts.push_back(static_cast<int>(v));
        rep.switching_set = std::move(verts);
        rep.distance = 0;
        rep.distance_normalized = Rational(0);
        rep.bound_satisfied = true;
    } else {
        rep.equivalent = false;
        try {
            DistanceResult dist = distance_to_coboundaries(x, d, budget);
            rep.distance = dist.dist;
            rep.distance_normalized = dist.normalized;
            rep.bound_satisfied = *rep.distance_normalized <= rep.exact_rate;
        } catch (const BudgetExceeded&) {
        }
    }

    if (sample) {
        TesterReport t = run_cocycle_tester_raw(x, d, sample->trials, sample->seed);
        rep.sample = t.sample;
    }
    return rep;
}

}  // namespace cobex
