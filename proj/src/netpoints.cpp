#include "netforge/netpoints.hpp"

#include "netforge/errors.hpp"
#include "netforge/random.hpp"

#include <algorithm>
#include <string>

namespace netforge {

void NetPoints::validate() const {
    require_base(base);
    if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
    if (exponent < 0) throw InvalidArgument("exponent must be >= 0");
    const std::uint64_t side = checked_pow(base, exponent);
    for (const Point& p : points) {
        if (static_cast<int>(p.size()) != dimension) {
            throw InvalidArgument("point has " + std::to_string(p.size()) +
                                  " coordinates, expected " + std::to_string(dimension));
        }
        for (std::uint64_t c : p) {
            if (c >= side) {
                throw InvalidArgument("numerator " + std::to_string(c) +
                                      " out of range for exponent " +
                                      std::to_string(exponent));
            }
        }
    }
}

NetPoints NetPoints::refined(int extra) const {
    if (extra < 0) throw InvalidArgument("cannot coarsen a point set");
    const std::uint64_t scale = checked_pow(base, extra);
    checked_pow(base, exponent + extra);
    NetPoints out{base, dimension, exponent + extra, points};
    for (Point& p : out.points) {
        for (std::uint64_t& c : p) c *= scale;
    }
    return out;
}

NetPoints NetPoints::sorted() const {
    NetPoints out = *this;
    std::sort(out.points.begin(), out.points.end());
    return out;
}

std::optional<int> log_base(std::uint64_t b, std::uint64_t count) {
    require_base(b);
    if (count == 0) return std::nullopt;
    int m = 0;
    while (count % b == 0) {
        count /= b;
        ++m;
    }
    if (count != 1) return std::nullopt;
    return m;
}

NetPoints points_from_boxes(std::span<const GridBox> boxes) {
    if (boxes.empty()) throw InvalidArgument("no boxes");
    NetPoints out{boxes.front().base, boxes.front().dimension(), boxes.front().resolution,
                  {}};
    out.points.reserve(boxes.size());
    for (const GridBox& box : boxes) {
        if (box.base != out.base || box.dimension() != out.dimension ||
            box.resolution != out.exponent) {
            throw InvalidArgument("boxes do not share base, dimension and resolution");
        }
        out.points.push_back(box.corner);
    }
    return out;
}

std::vector<GridBox> boxes_from_points(const NetPoints& net, int m) {
    if (m > net.exponent) {
        throw InvalidArgument("points at exponent " + std::to_string(net.exponent) +
                              " cannot be read at resolution " + std::to_string(m));
    }
    const std::uint64_t scale = checked_pow(net.base, net.exponent - m);
    std::vector<GridBox> out;
    out.reserve(net.size());
    for (const Point& p : net.points) {
        GridBox box{net.base, m, p};
        for (std::uint64_t& u : box.corner) u /= scale;
        out.push_back(std::move(box));
    }
    return out;
}

NetPoints place(const NetPoints& corners, int m, const Placement& placement) {
    const std::vector<GridBox> boxes = boxes_from_points(corners, m);
    const std::uint64_t b = corners.base;
    NetPoints out{b, corners.dimension, m, {}};
    out.points.reserve(boxes.size());
    switch (placement.kind) {
    case PlacementKind::Corner:
        for (const GridBox& box : boxes) out.points.push_back(box.corner);
        break;
    case PlacementKind::Center:
        out.exponent = m + 1;
        checked_pow(b, out.exponent);
        for (const GridBox& box : boxes) {
            Point p = box.corner;
            for (std::uint64_t& c : p) c = c * b + b / 2;
            out.points.push_back(std::move(p));
        }
        break;
    case PlacementKind::Random: {
        if (placement.exponent <= m) {
            throw InvalidArgument("random placement exponent must exceed m");
        }
        out.exponent = placement.exponent;
        const std::uint64_t sub = checked_pow(b, placement.exponent - m);
        checked_pow(b, placement.exponent);
        SeededRng rng(placement.seed);
        for (const GridBox& box : boxes) {
            Point p = box.corner;
            for (std::uint64_t& c : p) c = c * sub + rng.below(sub);
            out.points.push_back(std::move(p));
        }
        break;
    }
    }
    return out;
}

}  // namespace netforge
