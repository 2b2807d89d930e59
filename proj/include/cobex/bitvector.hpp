#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cobex {

/// Fixed-length vector over F2, packed into 64-bit words.
/// Coordinate 0 is bit 0 of word 0; trailing padding bits are kept zero.
class BitVector {
public:
    BitVector() : size_(0) {}
    explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& o);
    BitVector operator^(const BitVector& o) const {
        BitVector r = *this;
        r ^= o;
        return r;
    }

    bool operator==(const BitVector& o) const { return size_ == o.size_ && words_ == o.words_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    /// Number of set coordinates.
    long long count() const;
    bool any() const;
    bool none() const { return !any(); }

    /// Parity of the coordinate-wise AND with `o` (F2 inner product).
    int dot(const BitVector& o) const;

    /// Coordinate-sequence order: the vector with 0 at the first differing
    /// index is the smaller one. Used everywhere a deterministic tie-break
    /// between equal-weight vectors is needed.
    static bool lex_less(const BitVector& a, const BitVector& b);

    std::vector<std::size_t> set_bits() const;

    std::vector<std::uint64_t>& words() { return words_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Zero any padding bits past size(); callers that write raw words must
    /// re-establish the invariant with this.
    void mask_tail();

    std::string to_string() const;  // e.g. "0110"

private:
    std::size_t size_;
    std::vector<std::uint64_t> words_;
};

}  // namespace cobex
