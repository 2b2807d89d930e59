#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cobex {

/// Exact fraction of 64-bit integers, always reduced, denominator > 0.
/// All normalized quantities (expansion constants, rejection rates,
/// distances) are carried as Rationals so comparisons are bit-exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit on purpose
    Rational(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "num/den", or just "num" when den == 1.
    std::string to_string() const;

    /// Fixed-point decimal rendering (display only, never parsed back).
    std::string decimal_string(int digits = 6) const;

private:
    static Rational from_i128(__int128 num, __int128 den);

    long long num_;
    long long den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cobex
