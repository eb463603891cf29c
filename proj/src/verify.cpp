#include "netforge/verify.hpp"

#include "netforge/errors.hpp"

#include <algorithm>
#include <string>

namespace netforge {

namespace {

int resolution_of(const NetPoints& points) {
    const auto m = log_base(points.base, points.size());
    if (!m) {
        throw InvalidArgument(std::to_string(points.size()) + " points is not a power of base " +
                              std::to_string(points.base));
    }
    return *m;
}

// Linear cell index of the resolution-(shape weight) interval holding `corner`
// (a resolution-m box), matching cell_index() ordering.
std::uint64_t cell_of(const std::vector<std::uint64_t>& corner, const Shape& shape,
                      const std::vector<std::uint64_t>& pw, int m) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < corner.size(); ++j) {
        const auto d = static_cast<std::size_t>(shape.dims[j]);
        idx = idx * pw[d] + corner[j] / pw[static_cast<std::size_t>(m) - d];
    }
    return idx;
}

ElementaryInterval interval_at(std::uint64_t b, const Shape& shape, std::uint64_t linear,
                               const std::vector<std::uint64_t>& pw) {
    ElementaryInterval e{b, shape, std::vector<std::uint64_t>(shape.dims.size())};
    for (std::size_t j = shape.dims.size(); j-- > 0;) {
        const std::uint64_t width = pw[static_cast<std::size_t>(shape.dims[j])];
        e.cells[j] = linear % width;
        linear /= width;
    }
    return e;
}

}  // namespace

NetReport is_net(const NetPoints& points, int t) {
    points.validate();
    const int m = resolution_of(points);
    if (t < 0 || t > m) {
        throw InvalidArgument("t=" + std::to_string(t) + " outside [0, " + std::to_string(m) + "]");
    }
    if (points.exponent < m) {
        throw InvalidArgument("points at exponent " + std::to_string(points.exponent) +
                              " are coarser than resolution " + std::to_string(m));
    }
    const std::uint64_t b = points.base;
    std::vector<std::uint64_t> pw(static_cast<std::size_t>(m) + 1);
    for (int e = 0; e <= m; ++e) pw[static_cast<std::size_t>(e)] = checked_pow(b, e);

    const std::vector<GridBox> boxes = boxes_from_points(points, m);
    const int weight = m - t;
    const std::uint64_t expected = pw[static_cast<std::size_t>(t)];

    NetReport report{false, b, m, points.dimension, t, {}, 0};
    std::vector<std::uint64_t> counts(pw[static_cast<std::size_t>(weight)]);
    for (const Shape& shape : shapes_of_weight(points.dimension, weight)) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const GridBox& box : boxes) ++counts[cell_of(box.corner, shape, pw, m)];
        for (std::uint64_t c = 0; c < counts.size(); ++c) {
            if (counts[c] != expected) report.violations.push_back({interval_at(b, shape, c, pw), counts[c]});
        }
        report.checked += counts.size();
    }
    report.passed = report.violations.empty();
    return report;
}

int strength(const NetPoints& points) {
    const int m = resolution_of(points);
    for (int t = 0; t < m; ++t) {
        if (is_net(points, t).passed) return t;
    }
    return m;
}

namespace {

class NetSearch {
public:
    NetSearch(std::uint64_t b, int m, int s, std::uint64_t budget)
        : b_(b), m_(m), s_(s), budget_(budget), side_(checked_pow(b, m)),
          shapes_(shapes_of_weight(s, m)) {
        pw_.resize(static_cast<std::size_t>(m) + 1);
        for (int e = 0; e <= m; ++e) pw_[static_cast<std::size_t>(e)] = checked_pow(b, e);
        occupied_.assign(shapes_.size(), std::vector<std::uint8_t>(side_, 0));
        points_.assign(side_, Point(static_cast<std::size_t>(s), 0));
    }

    std::optional<NetPoints> run() {
        if (place_point(0)) return NetPoints{b_, s_, m_, points_};
        return std::nullopt;
    }

private:
    bool place_point(std::uint64_t k) {
        if (k == side_) return true;
        points_[k][0] = k;
        return assign_axis(k, 1);
    }

    // Enumerate coordinates of point k on axes >= axis, lexicographically.
    bool assign_axis(std::uint64_t k, int axis) {
        if (axis == s_) return try_commit(k);
        for (std::uint64_t u = 0; u < side_; ++u) {
            points_[k][static_cast<std::size_t>(axis)] = u;
            if (assign_axis(k, axis + 1)) return true;
        }
        return false;
    }

    bool try_commit(std::uint64_t k) {
        if (++nodes_ > budget_) {
            throw BudgetExceeded("net search exceeded " + std::to_string(budget_) + " nodes");
        }
        std::vector<std::uint64_t> cells(shapes_.size());
        for (std::size_t i = 0; i < shapes_.size(); ++i) {
            cells[i] = cell_of(points_[k], shapes_[i], pw_, m_);
            if (occupied_[i][cells[i]]) return false;
        }
        for (std::size_t i = 0; i < shapes_.size(); ++i) occupied_[i][cells[i]] = 1;
        if (place_point(k + 1)) return true;
        for (std::size_t i = 0; i < shapes_.size(); ++i) occupied_[i][cells[i]] = 0;
        return false;
    }

    std::uint64_t b_;
    int m_;
    int s_;
    std::uint64_t budget_;
    std::uint64_t side_;
    std::vector<Shape> shapes_;
    std::vector<std::uint64_t> pw_;
    std::vector<std::vector<std::uint8_t>> occupied_;
    std::vector<Point> points_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<NetPoints> exhaustive_search(std::uint64_t b, int m, int s,
                                           std::uint64_t node_budget) {
    require_base(b);
    if (m < 0 || s < 1) throw InvalidArgument("need m >= 0 and s >= 1");
    return NetSearch(b, m, s, node_budget).run();
}

}  // namespace netforge
