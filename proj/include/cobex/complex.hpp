#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cobex/memo.hpp"
#include "cobex/rational.hpp"

namespace cobex {

/// A face: strictly increasing vertex ids. The empty face (dimension -1)
/// is a valid value and is stored in every complex.
class Face {
public:
    Face() = default;

    /// Canonicalizes (sorts) the vertex list; throws DuplicateVertexInFace
    /// on repeats and VertexOutOfRange on negative ids.
    explicit Face(std::vector<int> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<int>& vertices() const { return vertices_; }

    /// The (dim-1)-subfaces, each obtained by dropping one vertex,
    /// in the order of the dropped vertex.
    std::vector<Face> facets() const;

    /// Face with vertex `v` adjoined; v must not already be present.
    Face with_vertex(int v) const;

    bool contains_vertex(int v) const;

    auto operator<=>(const Face&) const = default;

private:
    std::vector<int> vertices_;
};

/// Immutable finite simplicial complex: a downward-closed face family with
/// a canonical (lexicographic) per-dimension index. Dimension -1 always
/// holds exactly the empty face, which makes the augmented coboundary at
/// level -1 an ordinary operator.
class Complex {
public:
    /// Downward closure of the given faces. vertex_count becomes
    /// 1 + the largest vertex id.
    static Complex from_maximal_faces(const std::vector<std::vector<int>>& faces);

    /// All subsets of {0,..,n-1} of size at most d+1.
    static Complex complete(int n, int d);

    /// Faces of dimension <= k.
    static Complex skeleton(const Complex& x, int k);

    /// Full (d-1)-skeleton of the complete complex on n vertices, plus each
    /// d-face kept independently with probability p (exact rational coin,
    /// deterministic for a fixed seed).
    static Complex random_subcomplex(int n, int d, const Rational& p, std::uint64_t seed);

    int vertex_count() const { return vertex_count_; }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 2; }

    /// Faces of dimension i in canonical order; valid for -1 <= i <= dimension().
    const std::vector<Face>& faces(int i) const;

    /// |X(i)|; zero outside the valid range.
    long long face_count(int i) const;

    /// Position of `f` within faces(i), if present.
    std::optional<std::size_t> face_index(int i, const Face& f) const;

    bool has_face(const Face& f) const;

    /// Faces not contained in any other face, in lexicographic order.
    std::vector<Face> maximal_faces() const;

    /// True when this is exactly the complete complex on vertex_count()
    /// vertices of the given dimension.
    bool is_complete_complex(int d) const;

    bool operator==(const Complex& o) const {
        return vertex_count_ == o.vertex_count_ && by_dim_ == o.by_dim_;
    }

    /// Cache shared by derived-space computations (see cohomology).
    MemoBox& memo() const { return *memo_; }

private:
    Complex() : memo_(std::make_shared<MemoBox>()) {}
    static Complex from_face_set(std::vector<Face> all_faces, int vertex_count);

    int vertex_count_ = 0;
    std::vector<std::vector<Face>> by_dim_;  // slot 0 holds dimension -1
    std::shared_ptr<MemoBox> memo_;
};

long long binomial(int n, int k);

}  // namespace cobex
