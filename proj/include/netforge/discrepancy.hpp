#pragma once

// Exact discrepancy of grid-aligned point sets.
//
// Within a region where the number of captured points is constant, |Delta|
// is extremal at the closure of that region. Every supremum is therefore
// evaluated at grid corners twice: once counting with strict inequalities
// (box approached from inside) and once with non-strict ones (approached
// from outside). No floating point is involved.

#include "netforge/netpoints.hpp"
#include "netforge/rational.hpp"

#include <cstdint>
#include <vector>

namespace netforge {

struct Bounds {
    Rational lo;
    Rational hi;
};

// Half-open box prod_j [lo_j, hi_j).
using RationalBox = std::vector<Bounds>;

// Anchored box [0, x) x [0, y).
struct AnchoredBox {
    Rational x;
    Rational y;
};

// #{points in J} / N - Vol(J).
Rational local_discrepancy(const RationalBox& box, const NetPoints& points);
Rational local_discrepancy(const AnchoredBox& box, const NetPoints& points);

// Supremum of |Delta| over anchored boxes; planar sets only.
Rational star_discrepancy(const NetPoints& points);

// Largest b^exponent accepted by extreme_discrepancy.
inline constexpr std::uint64_t kExtremeGridLimit = 64;

// Supremum of |Delta| over all axis-parallel boxes; planar sets with
// b^exponent <= kExtremeGridLimit, otherwise BudgetExceeded.
Rational extreme_discrepancy(const NetPoints& points);

// c_b = b^2/(b+1) for even b, b-1 for odd b.
Rational bound_constant(std::uint64_t b);

// (c_b m + 9 + 4/b) / b^m, the known upper bound for any (0,m,2)-net.
Rational bound_0m2(std::uint64_t b, int m);

}  // namespace netforge
