#include "netforge/rational.hpp"

#include "netforge/errors.hpp"

#include <cstdio>
#include <limits>

namespace netforge {

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const __int128 g = gcd_wide(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits(num) || !fits(den)) throw OverflowError("rational value exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    const __int128 g = gcd_wide(a.den_, b.den_);
    const __int128 den = static_cast<__int128>(a.den_) / g * b.den_;
    const __int128 num =
        static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
    return Rational::from_wide(num, den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first so the 128-bit products stay small.
    const __int128 g1 = gcd_wide(a.num_, b.den_);
    const __int128 g2 = gcd_wide(b.num_, a.den_);
    const __int128 n1 = g1 ? a.num_ / g1 : 0;
    const __int128 d2 = g1 ? b.den_ / g1 : b.den_;
    const __int128 n2 = g2 ? b.num_ / g2 : 0;
    const __int128 d1 = g2 ? a.den_ / g2 : a.den_;
    return Rational::from_wide(n1 * n2, d1 * d2);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgument("division by zero");
    return a * Rational::from_wide(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg",
                  static_cast<long double>(num_) / static_cast<long double>(den_));
    return buf;
}

Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

}  // namespace netforge
