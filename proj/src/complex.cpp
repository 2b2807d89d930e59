#include "cobex/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cobex/errors.hpp"
#include "cobex/rng.hpp"

namespace cobex {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Face::Face(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 0) throw VertexOutOfRange("Face: negative vertex id");
        if (i > 0 && vertices_[i] == vertices_[i - 1]) {
            std::ostringstream msg;
            msg << "Face: duplicate vertex " << vertices_[i];
            throw DuplicateVertexInFace(msg.str());
        }
    }
}

std::vector<Face> Face::facets() const {
    std::vector<Face> out;
    out.reserve(vertices_.size());
    for (std::size_t drop = 0; drop < vertices_.size(); ++drop) {
        Face g;
        g.vertices_.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (i != drop) g.vertices_.push_back(vertices_[i]);
        out.push_back(std::move(g));
    }
    return out;
}

Face Face::with_vertex(int v) const {
    Face g;
    g.vertices_.reserve(vertices_.size() + 1);
    bool placed = false;
    for (int u : vertices_) {
        if (!placed && v < u) {
            g.vertices_.push_back(v);
            placed = true;
        }
        if (u == v) throw DuplicateVertexInFace("with_vertex: vertex already present");
        g.vertices_.push_back(u);
    }
    if (!placed) g.vertices_.push_back(v);
    return g;
}

bool Face::contains_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Complex Complex::from_face_set(std::vector<Face> all_faces, int vertex_count) {
    Complex x;
    x.vertex_count_ = vertex_count;
    int d = -1;
    for (const Face& f : all_faces) d = std::max(d, f.dim());
    x.by_dim_.assign(static_cast<std::size_t>(d + 2), {});
    for (Face& f : all_faces) {
        x.by_dim_[static_cast<std::size_t>(f.dim() + 1)].push_back(std::move(f));
    }
    for (auto& level : x.by_dim_) std::sort(level.begin(), level.end());
    return x;
}

Complex Complex::from_maximal_faces(const std::vector<std::vector<int>>& faces) {
    if (faces.empty()) throw EmptyInput("from_maximal_faces: no faces given");
    std::set<Face> closed;
    closed.insert(Face{});  // X(-1) = {empty face}
    int max_vertex = -1;
    // Depth-first closure: every facet chain down to the empty face.
    std::vector<Face> stack;
    for (const auto& verts : faces) {
        if (verts.empty()) throw EmptyInput("from_maximal_faces: empty face line");
        stack.push_back(Face(verts));
        for (int v : verts) max_vertex = std::max(max_vertex, v);
    }
    while (!stack.empty()) {
        Face f = std::move(stack.back());
        stack.pop_back();
        if (!closed.insert(f).second) continue;
        if (f.dim() >= 0)
            for (Face& g : f.facets()) stack.push_back(std::move(g));
    }
    return from_face_set(std::vector<Face>(closed.begin(), closed.end()), max_vertex + 1);
}

Complex Complex::complete(int n, int d) {
    if (d < 0 || d + 1 > n) {
        std::ostringstream msg;
        msg << "complete: need 1 <= d+1 <= n, got n=" << n << " d=" << d;
        throw InvalidDimension(msg.str());
    }
    std::vector<Face> all;
    all.push_back(Face{});
    // Enumerate all subsets of {0..n-1} with 1..d+1 elements, lexicographically.
    std::vector<int> comb;
    for (int size = 1; size <= d + 1; ++size) {
        comb.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
        for (;;) {
            all.push_back(Face(comb));
            int i = size - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return from_face_set(std::move(all), n);
}

Complex Complex::skeleton(const Complex& x, int k) {
    if (k < 0 || k > x.dimension()) {
        std::ostringstream msg;
        msg << "skeleton: k=" << k << " outside [0, " << x.dimension() << "]";
        throw InvalidDimension(msg.str());
    }
    Complex out;
    out.vertex_count_ = x.vertex_count_;
    out.by_dim_.assign(x.by_dim_.begin(), x.by_dim_.begin() + k + 2);
    return out;
}

Complex Complex::random_subcomplex(int n, int d, const Rational& p, std::uint64_t seed) {
    if (d < 0 || d + 1 > n) throw InvalidDimension("random_subcomplex: invalid (n, d)");
    if (p.num() < 0 || p > Rational(1)) throw Error("random_subcomplex: p outside [0, 1]");
    Complex full = complete(n, d);
    Complex out;
    out.vertex_count_ = n;
    out.by_dim_.assign(full.by_dim_.begin(), full.by_dim_.end() - 1);

    // Exact rational coin per d-face, in canonical face order.
    std::mt19937_64 rng(seed);
    std::vector<Face> kept;
    for (const Face& f : full.faces(d)) {
        std::uint64_t r = uniform_index(rng, static_cast<std::uint64_t>(p.den()));
        if (r < static_cast<std::uint64_t>(p.num())) kept.push_back(f);
    }
    if (!kept.empty()) out.by_dim_.push_back(std::move(kept));
    return out;
}

const std::vector<Face>& Complex::faces(int i) const {
    if (i < -1 || i > dimension()) {
        std::ostringstream msg;
        msg << "faces: dimension " << i << " outside [-1, " << dimension() << "]";
        throw InvalidDimension(msg.str());
    }
    return by_dim_[static_cast<std::size_t>(i + 1)];
}

long long Complex::face_count(int i) const {
    if (i < -1 || i > dimension()) return 0;
    return static_cast<long long>(by_dim_[static_cast<std::size_t>(i + 1)].size());
}

std::optional<std::size_t> Complex::face_index(int i, const Face& f) const {
    if (i < -1 || i > dimension()) return std::nullopt;
    const auto& level = by_dim_[static_cast<std::size_t>(i + 1)];
    auto it = std::lower_bound(level.begin(), level.end(), f);
    if (it == level.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

bool Complex::has_face(const Face& f) const {
    return face_index(f.dim(), f).has_value();
}

std::vector<Face> Complex::maximal_faces() const {
    std::vector<Face> out;
    for (int i = 0; i <= dimension(); ++i) {
        for (const Face& f : faces(i)) {
            bool covered = false;
            if (i < dimension()) {
                // f is maximal iff no extension by one vertex is a face.
                for (int v = 0; v < vertex_count_ && !covered; ++v) {
                    if (!f.contains_vertex(v) && has_face(f.with_vertex(v))) covered = true;
                }
            }
            if (!covered) out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Complex::is_complete_complex(int d) const {
    if (dimension() != d) return false;
    for (int i = -1; i <= d; ++i)
        if (face_count(i) != binomial(vertex_count_, i + 1)) return false;
    return true;
}

}  // namespace cobex
