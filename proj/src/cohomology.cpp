#include "cobex/cohomology.hpp"

#include <sstream>

#include "cobex/errors.hpp"

namespace cobex {

namespace {

enum SpaceKind : int {
    kCoboundaryUpper = 0,  // B^i
    kCocycleUpper = 1,     // Z^i
    kBoundaryLower = 2,    // B_i
    kCycleLower = 3,       // Z_i
};

int memo_key(SpaceKind kind, int i) { return kind * 1024 + (i + 1); }

void require_range(const Complex& x, int i, const char* where) {
    if (i < 0 || i > x.dimension()) {
        std::ostringstream msg;
        msg << where << ": dimension " << i << " outside [0, " << x.dimension() << "]";
        throw DimensionMismatch(msg.str());
    }
}

const Subspace& memoized(const Complex& x, SpaceKind kind, int i, Subspace (*compute)(const Complex&, int)) {
    // The memo never evicts, so the reference stays valid as long as the
    // complex does.
    return *x.memo().get_or_compute<Subspace>(memo_key(kind, i),
                                              [&] { return compute(x, i); });
}

Subspace compute_coboundary_space(const Complex& x, int i) {
    // Image(delta_{i-1}) = row space of the boundary matrix at i, whose
    // row G is delta_{i-1}(e_G) spelled over X(i).
    return Subspace::row_space(operator_matrix(x, i, OperatorKind::Boundary));
}

Subspace compute_cocycle_space(const Complex& x, int i) {
    if (i == x.dimension()) {
        // delta_i maps into the zero space; the kernel is everything.
        F2Matrix empty(0, static_cast<std::size_t>(x.face_count(i)));
        return Subspace::kernel_space(empty);
    }
    return Subspace::kernel_space(operator_matrix(x, i, OperatorKind::Coboundary));
}

Subspace compute_boundary_space(const Complex& x, int i) {
    if (i == x.dimension()) {
        return Subspace(static_cast<std::size_t>(x.face_count(i)));
    }
    // Image(partial_{i+1}) = row space of the coboundary matrix at i.
    return Subspace::row_space(operator_matrix(x, i, OperatorKind::Coboundary));
}

Subspace compute_cycle_space(const Complex& x, int i) {
    return Subspace::kernel_space(operator_matrix(x, i, OperatorKind::Boundary));
}

}  // namespace

const Subspace& coboundary_space(const Complex& x, int i) {
    require_range(x, i, "coboundary_space");
    return memoized(x, kCoboundaryUpper, i, compute_coboundary_space);
}

const Subspace& cocycle_space(const Complex& x, int i) {
    require_range(x, i, "cocycle_space");
    return memoized(x, kCocycleUpper, i, compute_cocycle_space);
}

const Subspace& boundary_space(const Complex& x, int i) {
    require_range(x, i, "boundary_space");
    return memoized(x, kBoundaryLower, i, compute_boundary_space);
}

const Subspace& cycle_space(const Complex& x, int i) {
    require_range(x, i, "cycle_space");
    return memoized(x, kCycleLower, i, compute_cycle_space);
}

int cohomology_dim(const Complex& x, int i) {
    return static_cast<int>(cocycle_space(x, i).dim() - coboundary_space(x, i).dim());
}

int homology_dim(const Complex& x, int i) {
    return static_cast<int>(cycle_space(x, i).dim() - boundary_space(x, i).dim());
}

bool is_coboundary(const Complex& x, const Cochain& f) {
    if (f.dim < 0 || f.dim > x.dimension() ||
        f.support.size() != static_cast<std::size_t>(x.face_count(f.dim)))
        throw DimensionMismatch("is_coboundary: cochain does not match complex");
    return coboundary_space(x, f.dim).contains(f.support);
}

DistanceResult distance_to_coboundaries(const Complex& x, const Cochain& f,
                                        std::uint64_t budget) {
    if (f.dim < 0 || f.dim > x.dimension() ||
        f.support.size() != static_cast<std::size_t>(x.face_count(f.dim)))
        throw DimensionMismatch("distance_to_coboundaries: cochain does not match complex");
    CosetLeader best = coset_min_weight(coboundary_space(x, f.dim), f.support, budget);
    return DistanceResult{best.weight,
                          Rational(best.weight, x.face_count(f.dim)),
                          Cochain(f.dim, std::move(best.leader))};
}

OrthogonalityReport orthogonality_report(const Complex& x, int i) {
    require_range(x, i, "orthogonality_report");
    OrthogonalityReport rep;
    rep.i = i;
    const Subspace& b_lower = boundary_space(x, i);
    const Subspace& z_upper = cocycle_space(x, i);
    const Subspace& z_lower = cycle_space(x, i);
    const Subspace& b_upper = coboundary_space(x, i);
    rep.dim_boundary = static_cast<long long>(b_lower.dim());
    rep.dim_cocycle = static_cast<long long>(z_upper.dim());
    rep.dim_cycle = static_cast<long long>(z_lower.dim());
    rep.dim_coboundary = static_cast<long long>(b_upper.dim());
    long long n = x.face_count(i);

    auto all_orthogonal = [&](const Subspace& a, const Subspace& b, const char* label) {
        for (std::size_t r = 0; r < a.basis().size(); ++r) {
            for (std::size_t s = 0; s < b.basis().size(); ++s) {
                if (a.basis()[r].dot(b.basis()[s])) {
                    std::ostringstream msg;
                    msg << label << ": basis pair (" << r << ", " << s << ") has product 1";
                    rep.failure = msg.str();
                    return false;
                }
            }
        }
        return true;
    };

    rep.pass = all_orthogonal(b_lower, z_upper, "B_i vs Z^i") &&
               all_orthogonal(z_lower, b_upper, "Z_i vs B^i");
    if (rep.pass && rep.dim_boundary + rep.dim_cocycle != n) {
        std::ostringstream msg;
        msg << "dim B_" << i << " + dim Z^" << i << " = " << rep.dim_boundary << " + "
            << rep.dim_cocycle << " != " << n;
        rep.failure = msg.str();
        rep.pass = false;
    }
    if (rep.pass && rep.dim_cycle + rep.dim_coboundary != n) {
        std::ostringstream msg;
        msg << "dim Z_" << i << " + dim B^" << i << " = " << rep.dim_cycle << " + "
            << rep.dim_coboundary << " != " << n;
        rep.failure = msg.str();
        rep.pass = false;
    }
    return rep;
}

}  // namespace cobex
