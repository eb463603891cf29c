#include "netforge/discrepancy.hpp"

#include "netforge/errors.hpp"

#include <algorithm>
#include <string>

namespace netforge {

namespace {

Rational coordinate(const NetPoints& points, std::uint64_t numerator) {
    return Rational::from_wide(numerator, checked_pow(points.base, points.exponent));
}

void require_nonempty(const NetPoints& points) {
    points.validate();
    if (points.points.empty()) throw InvalidArgument("discrepancy of an empty point set");
}

void require_planar(const NetPoints& points) {
    if (points.dimension != 2) {
        throw InvalidArgument("only planar point sets are supported, got s=" +
                              std::to_string(points.dimension));
    }
}

// N * G^2, the common denominator of every local discrepancy on the grid.
__int128 grid_denominator(std::uint64_t n, std::uint64_t side) {
    constexpr __int128 kLimit = static_cast<__int128>(1) << 125;
    const __int128 sq = static_cast<__int128>(side) * side;
    if (sq > kLimit / static_cast<__int128>(n)) {
        throw OverflowError("grid too fine for exact discrepancy");
    }
    return sq * static_cast<__int128>(n);
}

std::vector<std::uint64_t> candidates(const NetPoints& points, std::size_t axis,
                                      std::uint64_t side) {
    std::vector<std::uint64_t> c;
    c.reserve(points.size() + 1);
    for (const Point& p : points.points) c.push_back(p[axis]);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    c.push_back(side);
    return c;
}

}  // namespace

Rational local_discrepancy(const RationalBox& box, const NetPoints& points) {
    require_nonempty(points);
    if (box.size() != static_cast<std::size_t>(points.dimension)) {
        throw InvalidArgument("box dimension does not match the point set");
    }
    Rational volume = 1;
    for (const Bounds& axis : box) {
        if (axis.lo > axis.hi) throw InvalidArgument("interval with lo > hi");
        if (axis.lo < Rational(0) || axis.hi > Rational(1)) {
            throw InvalidArgument("interval leaves the unit cube");
        }
        volume = volume * (axis.hi - axis.lo);
    }
    std::int64_t inside = 0;
    for (const Point& p : points.points) {
        bool in = true;
        for (std::size_t j = 0; j < box.size() && in; ++j) {
            const Rational x = coordinate(points, p[j]);
            in = box[j].lo <= x && x < box[j].hi;
        }
        inside += in ? 1 : 0;
    }
    return Rational(inside, static_cast<std::int64_t>(points.size())) - volume;
}

Rational local_discrepancy(const AnchoredBox& box, const NetPoints& points) {
    return local_discrepancy(RationalBox{{Rational(0), box.x}, {Rational(0), box.y}}, points);
}

Rational star_discrepancy(const NetPoints& points) {
    require_nonempty(points);
    require_planar(points);
    const std::uint64_t side = checked_pow(points.base, points.exponent);
    const auto n = static_cast<std::uint64_t>(points.size());
    const __int128 g2 = static_cast<__int128>(side) * side;
    const __int128 den = grid_denominator(n, side);

    // Upper corners worth checking: distinct point coordinates plus 1.
    const std::vector<std::uint64_t> xs = candidates(points, 0, side);
    const std::vector<std::uint64_t> ys = candidates(points, 1, side);
    const std::size_t ny = ys.size();

    std::vector<std::vector<std::size_t>> column_hits(xs.size());
    for (const Point& p : points.points) {
        const auto xi = static_cast<std::size_t>(
            std::lower_bound(xs.begin(), xs.end(), p[0]) - xs.begin());
        const auto yi = static_cast<std::size_t>(
            std::lower_bound(ys.begin(), ys.end(), p[1]) - ys.begin());
        column_hits[xi].push_back(yi);
    }

    // closed[j] = #{x <= xs[i], y <= ys[j]}; prev holds the row for xs[i-1].
    std::vector<std::uint64_t> per_y(ny, 0);
    std::vector<std::uint64_t> closed(ny, 0);
    std::vector<std::uint64_t> prev(ny, 0);
    __int128 best = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t yi : column_hits[i]) ++per_y[yi];
        std::uint64_t running = 0;
        for (std::size_t j = 0; j < ny; ++j) {
            running += per_y[j];
            closed[j] = running;
        }
        for (std::size_t j = 0; j < ny; ++j) {
            const __int128 area = static_cast<__int128>(xs[i]) * ys[j] * n;
            const std::uint64_t open = (i > 0 && j > 0) ? prev[j - 1] : 0;
            best = std::max(best, area - static_cast<__int128>(open) * g2);
            best = std::max(best, static_cast<__int128>(closed[j]) * g2 - area);
        }
        std::swap(prev, closed);
    }
    return Rational::from_wide(best, den);
}

Rational extreme_discrepancy(const NetPoints& points) {
    require_nonempty(points);
    require_planar(points);
    const std::uint64_t side = checked_pow(points.base, points.exponent);
    if (side > kExtremeGridLimit) {
        throw BudgetExceeded("extreme discrepancy needs b^g <= " +
                             std::to_string(kExtremeGridLimit) + ", got " + std::to_string(side));
    }
    const auto n = static_cast<std::uint64_t>(points.size());
    const __int128 g2 = static_cast<__int128>(side) * side;
    const __int128 den = grid_denominator(n, side);

    // prefix[i][j] = #{x < i, y < j}.
    const std::size_t w = side + 1;
    std::vector<std::int64_t> prefix(w * w, 0);
    for (const Point& p : points.points) ++prefix[(p[0] + 1) * w + (p[1] + 1)];
    for (std::size_t i = 1; i < w; ++i) {
        for (std::size_t j = 1; j < w; ++j) {
            prefix[i * w + j] +=
                prefix[(i - 1) * w + j] + prefix[i * w + j - 1] - prefix[(i - 1) * w + j - 1];
        }
    }
    // Points with x in [x0, x1) and y in [y0, y1).
    auto count = [&](std::size_t x0, std::size_t x1, std::size_t y0, std::size_t y1) {
        if (x0 >= x1 || y0 >= y1) return std::int64_t{0};
        return prefix[x1 * w + y1] - prefix[x0 * w + y1] - prefix[x1 * w + y0] + prefix[x0 * w + y0];
    };

    __int128 best = 0;
    for (std::size_t a = 0; a <= side; ++a) {
        for (std::size_t c = a; c <= side; ++c) {
            for (std::size_t a2 = 0; a2 <= side; ++a2) {
                for (std::size_t c2 = a2; c2 <= side; ++c2) {
                    const __int128 area = static_cast<__int128>((c - a) * (c2 - a2)) * n;
                    // Approached from inside: a < p < c.
                    const std::int64_t inner = count(a + 1, c, a2 + 1, c2);
                    best = std::max(best, area - inner * g2);
                    // Approached from outside: a <= p <= c.
                    const std::int64_t outer =
                        count(a, std::min(c + 1, w - 1), a2, std::min(c2 + 1, w - 1));
                    best = std::max(best, outer * g2 - area);
                }
            }
        }
    }
    return Rational::from_wide(best, den);
}

Rational bound_constant(std::uint64_t b) {
    require_base(b);
    const auto bb = static_cast<std::int64_t>(b);
    if (b % 2 == 0) return Rational(bb * bb, bb + 1);
    return Rational(bb - 1);
}

Rational bound_0m2(std::uint64_t b, int m) {
    require_base(b);
    if (m < 0) throw InvalidArgument("resolution must be >= 0");
    const Rational inner =
        bound_constant(b) * Rational(m) + Rational(9) + Rational(4, static_cast<std::int64_t>(b));
    return inner / Rational(static_cast<std::int64_t>(checked_pow(b, m)));
}

}  // namespace netforge
