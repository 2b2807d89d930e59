#include "cobex/f2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cobex/errors.hpp"

namespace cobex {

void F2Matrix::append_row(BitVector v) {
    if (rows_.empty() && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw DimensionMismatch("F2Matrix: row length mismatch");
    rows_.push_back(std::move(v));
}

BitVector F2Matrix::multiply(const BitVector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("F2Matrix::multiply: vector length mismatch");
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].dot(v)) out.set(r);
    return out;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c : rows_[r].set_bits()) t.set(c, r);
    return t;
}

namespace {

/// In-place RREF over a row list; returns pivot columns (ascending).
/// When `moves` is non-null it receives the same row operations, which turns
/// an appended identity into the transformation history.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t cols,
                                   std::vector<BitVector>* moves) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows.size() && !rows[pivot_row].test(col)) ++pivot_row;
        if (pivot_row == rows.size()) continue;
        std::swap(rows[rank], rows[pivot_row]);
        if (moves) std::swap((*moves)[rank], (*moves)[pivot_row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].test(col)) {
                rows[r] ^= rows[rank];
                if (moves) (*moves)[r] ^= (*moves)[rank];
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    if (moves) moves->resize(rank);
    return pivots;
}

}  // namespace

Subspace Subspace::row_space(const F2Matrix& m) {
    Subspace s(m.col_count());
    s.basis_ = m.rows();
    s.pivots_ = eliminate(s.basis_, m.col_count(), nullptr);
    return s;
}

RowSpaceHistory row_space_with_history(const F2Matrix& m) {
    std::vector<BitVector> rows = m.rows();
    std::vector<BitVector> moves;
    moves.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        BitVector e(m.row_count());
        e.set(r);
        moves.push_back(std::move(e));
    }
    eliminate(rows, m.col_count(), &moves);
    // Re-running elimination on RREF rows is a no-op, so the basis rows of
    // the rebuilt Subspace line up 1:1 with `moves`.
    F2Matrix reduced(0, m.col_count());
    for (auto& r : rows) reduced.append_row(std::move(r));
    RowSpaceHistory out;
    out.space = Subspace::row_space(reduced);
    out.row_combinations = std::move(moves);
    return out;
}

Subspace Subspace::kernel_space(const F2Matrix& m) {
    std::vector<BitVector> rows = m.rows();
    std::size_t cols = m.col_count();
    std::vector<std::size_t> pivots = eliminate(rows, cols, nullptr);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    // One kernel vector per free column: 1 there, and the column's entries
    // of the reduced rows copied onto the matching pivot coordinates.
    F2Matrix kernel_rows(0, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        BitVector v(cols);
        v.set(c);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].test(c)) v.set(pivots[r]);
        kernel_rows.append_row(std::move(v));
    }
    return row_space(kernel_rows);
}

std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> free;
    free.reserve(ambient_ - pivots_.size());
    for (std::size_t c = 0; c < ambient_; ++c)
        if (!is_pivot[c]) free.push_back(c);
    return free;
}

Subspace::Reduction Subspace::reduce(const BitVector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::reduce: ambient dim mismatch");
    Reduction red{v, BitVector(basis_.size())};
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        if (red.residual.test(pivots_[r])) {
            red.residual ^= basis_[r];
            red.combination.set(r);
        }
    }
    return red;
}

bool Subspace::contains(const BitVector& v) const {
    return reduce(v).residual.none();
}

std::optional<BitVector> Subspace::coordinates(const BitVector& v) const {
    Reduction red = reduce(v);
    if (red.residual.any()) return std::nullopt;
    return red.combination;
}

namespace {

int log2_pow2_size(std::size_t exponent_bits) {
    return static_cast<int>(exponent_bits);
}

void check_budget(std::size_t exponent_bits, std::uint64_t budget, const char* what) {
    if (exponent_bits >= 64 ||
        (std::uint64_t{1} << exponent_bits) > budget) {
        std::ostringstream msg;
        msg << what << ": enumeration of 2^" << exponent_bits
            << " elements exceeds budget " << budget;
        throw BudgetExceeded(msg.str(), log2_pow2_size(exponent_bits));
    }
}

}  // namespace

CosetLeader coset_min_weight(const Subspace& s, const BitVector& v, std::uint64_t budget) {
    if (v.size() != s.ambient_dim())
        throw DimensionMismatch("coset_min_weight: ambient dim mismatch");
    check_budget(s.dim(), budget, "coset_min_weight");

    // Gray-code walk over the 2^dim combinations: one basis XOR per step.
    BitVector cur = v;
    CosetLeader best{cur.count(), cur};
    std::uint64_t total = std::uint64_t{1} << s.dim();
    for (std::uint64_t k = 1; k < total; ++k) {
        cur ^= s.basis()[static_cast<std::size_t>(std::countr_zero(k))];
        long long w = cur.count();
        if (w < best.weight || (w == best.weight && BitVector::lex_less(cur, best.leader))) {
            best.weight = w;
            best.leader = cur;
        }
    }
    return best;
}

CosetRepresentatives::CosetRepresentatives(const Subspace& s, std::uint64_t cap)
    : ambient_(s.ambient_dim()), free_(s.free_columns()) {
    check_budget(free_.size(), cap, "coset_representatives");
    count_ = std::uint64_t{1} << free_.size();
}

BitVector CosetRepresentatives::at(std::uint64_t k) const {
    BitVector v(ambient_);
    std::uint64_t bits = k;
    while (bits) {
        int j = std::countr_zero(bits);
        v.set(free_[static_cast<std::size_t>(j)]);
        bits &= bits - 1;
    }
    return v;
}

}  // namespace cobex
