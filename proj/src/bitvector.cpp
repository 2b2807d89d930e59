#include "cobex/bitvector.hpp"

#include <bit>

#include "cobex/errors.hpp"

namespace cobex {

BitVector& BitVector::operator^=(const BitVector& o) {
    if (size_ != o.size_) throw DimensionMismatch("BitVector xor: lengths differ");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
}

long long BitVector::count() const {
    long long c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool BitVector::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

int BitVector::dot(const BitVector& o) const {
    if (size_ != o.size_) throw DimensionMismatch("BitVector dot: lengths differ");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
}

bool BitVector::lex_less(const BitVector& a, const BitVector& b) {
    if (a.size_ != b.size_) throw DimensionMismatch("BitVector lex_less: lengths differ");
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff) {
            // Lowest differing coordinate decides; 0 beats 1.
            std::uint64_t low = diff & (~diff + 1);
            return (a.words_[w] & low) == 0;
        }
    }
    return false;
}

std::vector<std::size_t> BitVector::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            out.push_back(64 * w + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

void BitVector::mask_tail() {
    if (size_ % 64 != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

}  // namespace cobex
