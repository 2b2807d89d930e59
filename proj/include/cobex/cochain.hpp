#pragma once

#include <vector>

#include "cobex/bitvector.hpp"
#include "cobex/complex.hpp"
#include "cobex/f2.hpp"
#include "cobex/rational.hpp"

namespace cobex {

/// An i-cochain: a bit per i-face of the complex, in canonical face order.
/// Chains and cochains share this representation (F2 identifies them).
struct Cochain {
    int dim = 0;
    BitVector support;

    Cochain() = default;
    Cochain(int i, BitVector bits) : dim(i), support(std::move(bits)) {}

    static Cochain zero(const Complex& x, int i);

    /// Indicator of one face (by index into the canonical order).
    static Cochain indicator(const Complex& x, int i, std::size_t face_index);

    /// Cochain supported on the given faces; every face must be present in
    /// x at dimension i.
    static Cochain from_faces(const Complex& x, int i, const std::vector<Face>& faces);

    long long weight() const { return support.count(); }

    bool operator==(const Cochain& o) const = default;
};

/// Faces in the support, canonical order.
std::vector<Face> support_faces(const Complex& x, const Cochain& c);

/// Boundary: each i-face maps to the sum of its (i-1)-subfaces, extended
/// linearly. Valid for 0 <= i <= dim X (the boundary of a 0-cochain lands
/// on the empty face).
Cochain boundary(const Complex& x, const Cochain& c);

/// Coboundary: the value on each (i+1)-face is the sum of f over its
/// i-subfaces. Valid for -1 <= i < dim X; at i = -1 this sends the empty
/// face to the all-ones 0-cochain.
Cochain coboundary(const Complex& x, const Cochain& f);

/// F2 inner product of two cochains of equal dimension.
int inner_product(const Cochain& a, const Cochain& b);

/// |support| / |X(i)| as a reduced rational.
Rational norm(const Complex& x, const Cochain& f);

enum class OperatorKind { Boundary, Coboundary };

/// Matrix form acting on column vectors in canonical face order:
/// Boundary at i is |X(i-1)| x |X(i)|; Coboundary at i is |X(i+1)| x |X(i)|.
/// The coboundary matrix at i equals the transpose of the boundary matrix
/// at i+1.
F2Matrix operator_matrix(const Complex& x, int i, OperatorKind which);

}  // namespace cobex
