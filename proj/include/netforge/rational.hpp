#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace netforge {

// Exact rational with a 64-bit numerator and positive denominator, always in
// lowest terms. Arithmetic is carried out in 128 bits and throws
// OverflowError if the reduced result does not fit.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT: implicit from integers
    Rational(std::int64_t num, std::int64_t den);

    // Reduces num/den given in 128 bits.
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string to_string() const;
    // 12 significant digits; display only.
    std::string to_decimal() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Rational abs(const Rational& r);

}  // namespace netforge
