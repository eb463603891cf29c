#pragma once

// Exact b-adic combinatorics: shapes (compositions), elementary intervals,
// resolution-m grid boxes and the cover set E_m(X) of a grid box.
//
// Everything here is integer arithmetic. A coordinate is a numerator k over
// a denominator b^g; an elementary interval of shape (d_1,...,d_s) with cells
// (a_1,...,a_s) is prod_j [a_j / b^{d_j}, (a_j + 1) / b^{d_j}).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace netforge {

// Largest power of the base that any construction may use.
inline constexpr std::uint64_t kMaxPow = std::uint64_t{1} << 62;

// b^e, throwing OverflowError when the result exceeds kMaxPow.
std::uint64_t checked_pow(std::uint64_t b, int e);

// Binomial coefficient C(n, k), throwing OverflowError when it does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Throws InvalidArgument unless b >= 2.
void require_base(std::uint64_t b);

struct Shape {
    std::vector<int> dims;

    int dimension() const { return static_cast<int>(dims.size()); }
    int weight() const;

    auto operator<=>(const Shape&) const = default;
};

struct ElementaryInterval {
    std::uint64_t base = 2;
    Shape shape;
    std::vector<std::uint64_t> cells;

    // Throws InvalidArgument if a cell index is out of range for its axis.
    void validate() const;

    // True iff the point with numerators `coords` over b^g lies inside.
    bool contains_point(std::span<const std::uint64_t> coords, int g) const;

    std::string to_string() const;

    auto operator<=>(const ElementaryInterval&) const = default;
};

struct GridBox {
    std::uint64_t base = 2;
    int resolution = 0;
    std::vector<std::uint64_t> corner;

    int dimension() const { return static_cast<int>(corner.size()); }
    void validate() const;

    auto operator<=>(const GridBox&) const = default;
};

// All compositions of m into s non-negative parts, lexicographic order.
std::vector<Shape> shapes_of_weight(int s, int m);

// The unique interval of `shape` containing `box`: a_j = floor(u_j / b^{m - d_j}).
ElementaryInterval containing_interval(const GridBox& box, const Shape& shape);

// E_m(X): one interval per shape of weight m, in shape order.
std::vector<ElementaryInterval> cover_set(const GridBox& box);

// b^m * C(m + s - 1, m), the number of s-dimensional intervals of volume b^-m.
std::uint64_t count_intervals(std::uint64_t b, int m, int s);

// True iff every cell of `inner` at its resolution lies in `outer`.
bool interval_contains_box(const ElementaryInterval& outer, const GridBox& inner);

// Row-major linear index of an interval's cells within its shape
// (last axis fastest). Range is [0, b^weight).
std::uint64_t cell_index(const ElementaryInterval& interval);

}  // namespace netforge
