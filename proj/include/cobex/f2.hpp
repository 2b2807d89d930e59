#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cobex/bitvector.hpp"

namespace cobex {

/// Default cap on exhaustive enumerations (coset sizes, subset scans).
/// Overridable per call; the CLI also honors the COBEX_BUDGET env var.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

/// Dense F2 matrix, a list of equal-length rows.
class F2Matrix {
public:
    F2Matrix() : cols_(0) {}
    F2Matrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_; }

    BitVector& row(std::size_t r) { return rows_[r]; }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    const std::vector<BitVector>& rows() const { return rows_; }

    void append_row(BitVector v);

    bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

    /// Matrix-vector product over F2; `v` has col_count() coordinates.
    BitVector multiply(const BitVector& v) const;

    F2Matrix transposed() const;

    bool operator==(const F2Matrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
};

/// A linear subspace of F2^n held as a reduced row-echelon basis.
/// Pivot columns are strictly increasing and each pivot column carries a
/// single 1, so the representation is canonical for the subspace.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    /// Row space of M (Gaussian elimination to RREF).
    static Subspace row_space(const F2Matrix& m);

    /// Kernel {v : Mv = 0}, returned in canonical RREF form.
    static Subspace kernel_space(const F2Matrix& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }

    const std::vector<BitVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Columns that are not pivot columns, ascending. One coset
    /// representative lives on each assignment of these coordinates.
    std::vector<std::size_t> free_columns() const;

    bool contains(const BitVector& v) const;

    /// Coordinates of `v` in terms of the basis rows, or nullopt when v is
    /// not in the span. Bit r set means basis row r participates.
    std::optional<BitVector> coordinates(const BitVector& v) const;

    /// Reduce v modulo the basis; returns the residual and the combination
    /// of basis rows that was subtracted.
    struct Reduction {
        BitVector residual;
        BitVector combination;  // length = dim()
    };
    Reduction reduce(const BitVector& v) const;

private:
    std::size_t ambient_;
    std::vector<BitVector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Row space plus, for every basis row, the combination of original matrix
/// rows that produces it (used to pull back coboundaries to preimages).
struct RowSpaceHistory {
    Subspace space;
    std::vector<BitVector> row_combinations;  // length = space.dim(); each of length m.row_count()
};
RowSpaceHistory row_space_with_history(const F2Matrix& m);

/// Exhaustive minimum-weight search over the coset v + S.
/// Returns the minimum Hamming weight and the coordinate-lexicographically
/// least member achieving it (the coset leader). Throws BudgetExceeded when
/// 2^dim(S) > budget.
struct CosetLeader {
    long long weight;
    BitVector leader;
};
CosetLeader coset_min_weight(const Subspace& s, const BitVector& v,
                             std::uint64_t budget = kDefaultBudget);

/// The canonical transversal of S in its ambient space: representative k is
/// the vector whose free coordinates spell out the bits of k (bit j of k on
/// the j-th free column). Representatives are pairwise non-congruent and
/// cover every coset; index ranges partition cleanly across workers.
class CosetRepresentatives {
public:
    CosetRepresentatives(const Subspace& s, std::uint64_t cap = kDefaultBudget);

    std::uint64_t count() const { return count_; }
    const std::vector<std::size_t>& free_columns() const { return free_; }

    /// Representative for index k, built directly (no iteration state).
    BitVector at(std::uint64_t k) const;

private:
    std::size_t ambient_;
    std::vector<std::size_t> free_;
    std::uint64_t count_;
};

}  // namespace cobex
