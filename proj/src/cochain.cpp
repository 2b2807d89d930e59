#include "cobex/cochain.hpp"

#include <sstream>

#include "cobex/errors.hpp"

namespace cobex {

namespace {

void require_dim(const Complex& x, int i, const char* where) {
    if (i < -1 || i > x.dimension()) {
        std::ostringstream msg;
        msg << where << ": dimension " << i << " outside [-1, " << x.dimension() << "]";
        throw DimensionMismatch(msg.str());
    }
}

void require_length(const Complex& x, const Cochain& c, const char* where) {
    require_dim(x, c.dim, where);
    if (c.support.size() != static_cast<std::size_t>(x.face_count(c.dim))) {
        std::ostringstream msg;
        msg << where << ": support length " << c.support.size() << " != |X(" << c.dim
            << ")| = " << x.face_count(c.dim);
        throw DimensionMismatch(msg.str());
    }
}

}  // namespace

Cochain Cochain::zero(const Complex& x, int i) {
    require_dim(x, i, "Cochain::zero");
    return Cochain(i, BitVector(static_cast<std::size_t>(x.face_count(i))));
}

Cochain Cochain::indicator(const Complex& x, int i, std::size_t face_index) {
    Cochain c = zero(x, i);
    c.support.set(face_index);
    return c;
}

Cochain Cochain::from_faces(const Complex& x, int i, const std::vector<Face>& faces) {
    Cochain c = zero(x, i);
    for (const Face& f : faces) {
        if (f.dim() != i) {
            std::ostringstream msg;
            msg << "Cochain::from_faces: face of dimension " << f.dim() << ", expected " << i;
            throw DimensionMismatch(msg.str());
        }
        auto idx = x.face_index(i, f);
        if (!idx) throw DimensionMismatch("Cochain::from_faces: face not in complex");
        c.support.flip(*idx);  // listing a face twice cancels, like F2 addition
    }
    return c;
}

std::vector<Face> support_faces(const Complex& x, const Cochain& c) {
    require_length(x, c, "support_faces");
    std::vector<Face> out;
    for (std::size_t idx : c.support.set_bits()) out.push_back(x.faces(c.dim)[idx]);
    return out;
}

Cochain boundary(const Complex& x, const Cochain& c) {
    require_length(x, c, "boundary");
    if (c.dim < 0) throw DimensionMismatch("boundary: needs dimension >= 0");
    Cochain out = Cochain::zero(x, c.dim - 1);
    for (std::size_t idx : c.support.set_bits()) {
        for (const Face& g : x.faces(c.dim)[idx].facets()) {
            out.support.flip(*x.face_index(c.dim - 1, g));
        }
    }
    return out;
}

Cochain coboundary(const Complex& x, const Cochain& f) {
    require_length(x, f, "coboundary");
    if (f.dim >= x.dimension())
        throw DimensionMismatch("coboundary: no faces one dimension up");
    Cochain out = Cochain::zero(x, f.dim + 1);
    const auto& targets = x.faces(f.dim + 1);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        int parity = 0;
        for (const Face& g : targets[t].facets())
            parity ^= f.support.test(*x.face_index(f.dim, g));
        if (parity) out.support.set(t);
    }
    return out;
}

int inner_product(const Cochain& a, const Cochain& b) {
    if (a.dim != b.dim) throw DimensionMismatch("inner_product: dimensions differ");
    return a.support.dot(b.support);
}

Rational norm(const Complex& x, const Cochain& f) {
    require_length(x, f, "norm");
    return Rational(f.weight(), x.face_count(f.dim));
}

F2Matrix operator_matrix(const Complex& x, int i, OperatorKind which) {
    if (which == OperatorKind::Boundary) {
        require_dim(x, i, "operator_matrix(boundary)");
        if (i < 0) throw DimensionMismatch("operator_matrix: boundary needs i >= 0");
        F2Matrix m(static_cast<std::size_t>(x.face_count(i - 1)),
                   static_cast<std::size_t>(x.face_count(i)));
        const auto& sources = x.faces(i);
        for (std::size_t c = 0; c < sources.size(); ++c)
            for (const Face& g : sources[c].facets()) m.set(*x.face_index(i - 1, g), c);
        return m;
    }
    require_dim(x, i, "operator_matrix(coboundary)");
    if (i >= x.dimension()) throw DimensionMismatch("operator_matrix: coboundary needs i < dim");
    F2Matrix m(static_cast<std::size_t>(x.face_count(i + 1)),
               static_cast<std::size_t>(x.face_count(i)));
    const auto& targets = x.faces(i + 1);
    for (std::size_t r = 0; r < targets.size(); ++r)
        for (const Face& g : targets[r].facets()) m.set(r, *x.face_index(i, g));
    return m;
}

}  // namespace cobex
