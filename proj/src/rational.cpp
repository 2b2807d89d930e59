#include "cobex/rational.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cobex {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kInt64Max = std::numeric_limits<long long>::max();

}  // namespace

Rational Rational::from_i128(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational{};
    __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    if (num > kInt64Max || num < -kInt64Max || den > kInt64Max) {
        throw std::overflow_error("Rational: value does not fit in 64 bits after reduction");
    }
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
}

Rational::Rational(long long num, long long den) {
    *this = from_i128(num, den);
}

Rational Rational::operator+(const Rational& o) const {
    return from_i128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return from_i128(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return from_i128(static_cast<__int128>(num_) * o.num_,
                     static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_i128(static_cast<__int128>(num_) * o.den_,
                     static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    // Cross-multiplication is exact; denominators are positive.
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << '/' << den_;
    return os.str();
}

std::string Rational::decimal_string(int digits) const {
    __int128 n = num_;
    bool neg = n < 0;
    if (neg) n = -n;
    __int128 whole = n / den_;
    __int128 rem = n % den_;
    std::ostringstream os;
    if (neg) os << '-';
    os << static_cast<long long>(whole) << '.';
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        os << static_cast<int>(rem / den_);
        rem %= den_;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace cobex
