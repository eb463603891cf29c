#pragma once

#include "netforge/badic.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace netforge {

using Point = std::vector<std::uint64_t>;

// Exact point set: every coordinate is numerator / b^exponent.
struct NetPoints {
    std::uint64_t base = 2;
    int dimension = 2;
    int exponent = 0;
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }

    // Throws InvalidArgument on wrong point arity or numerators >= b^exponent.
    void validate() const;

    // Same points, re-expressed over b^(exponent + extra).
    NetPoints refined(int extra) const;

    // Copy with points sorted lexicographically; set comparison uses this.
    NetPoints sorted() const;

    bool operator==(const NetPoints&) const = default;
};

// Returns m with b^m == count, or nullopt if count is not a power of b.
std::optional<int> log_base(std::uint64_t b, std::uint64_t count);

// Lower-left corners of the boxes, at exponent = box resolution.
NetPoints points_from_boxes(std::span<const GridBox> boxes);

// Resolution-m grid box holding each point (numerators floored to exponent m).
std::vector<GridBox> boxes_from_points(const NetPoints& net, int m);

enum class PlacementKind { Corner, Center, Random };

// Where inside its resolution-m box each point is placed.
//  Corner: the box's lower-left corner, exponent m.
//  Center: numerator b*u + floor(b/2) at exponent m+1. This is the exact
//          centre for even b; odd bases have no b-adic centre, so the lower
//          corner of the middle sub-cell is used.
//  Random: uniform sub-cell at exponent `exponent` (> m), drawn from `seed`.
struct Placement {
    PlacementKind kind = PlacementKind::Corner;
    int exponent = 0;
    std::uint64_t seed = 0;
};

// Re-places each point of a net inside its box at resolution m.
NetPoints place(const NetPoints& corners, int m, const Placement& placement);

}  // namespace netforge
