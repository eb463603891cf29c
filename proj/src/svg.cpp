#include "netforge/svg.hpp"

#include "netforge/badic.hpp"
#include "netforge/errors.hpp"

#include <set>
#include <sstream>
#include <tuple>

namespace netforge {

std::string render_svg(const NetPoints& points, int m, const PlotOptions& options) {
    points.validate();
    if (points.dimension < 2) throw InvalidArgument("plotting needs at least two axes");
    if (m < 0 || m > points.exponent) throw InvalidArgument("resolution outside [0, g]");
    const std::uint64_t b = points.base;
    const std::uint64_t side = checked_pow(b, points.exponent);
    const std::uint64_t cell = checked_pow(b, points.exponent - m);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" "
       << "viewBox=\"0 0 " << side << ' ' << side << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side
       << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";

    // SVG y grows downward; flip so the origin is the lower-left corner.
    auto flip = [&](std::uint64_t y, std::uint64_t height) { return side - y - height; };

    if (options.boxes && points.dimension == 2 && m > 0) {
        // Each point's containing intervals of volume b^-m.
        std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>> rects;
        for (const Point& p : points.points) {
            const GridBox box{b, m, {p[0] / cell, p[1] / cell}};
            for (const ElementaryInterval& e : cover_set(box)) {
                const std::uint64_t w = side / checked_pow(b, e.shape.dims[0]);
                const std::uint64_t h = side / checked_pow(b, e.shape.dims[1]);
                rects.insert({e.cells[0] * w, e.cells[1] * h, w, h});
            }
        }
        os << "<g fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">\n";
        for (const auto& [x, y, w, h] : rects) {
            os << "<rect x=\"" << x << "\" y=\"" << flip(y, h) << "\" width=\"" << w
               << "\" height=\"" << h << "\"/>\n";
        }
        os << "</g>\n";
    }

    if (options.grid && m > 0) {
        os << "<g stroke=\"#cccccc\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">\n";
        std::set<std::uint64_t> drawn;
        for (int k = 1; k <= m; ++k) {
            const std::uint64_t step = side / checked_pow(b, k);
            for (std::uint64_t v = step; v < side; v += step) {
                if (!drawn.insert(v).second) continue;
                os << "<line x1=\"" << v << "\" y1=\"0\" x2=\"" << v << "\" y2=\"" << side << "\"/>\n"
                   << "<line x1=\"0\" y1=\"" << v << "\" x2=\"" << side << "\" y2=\"" << v << "\"/>\n";
            }
        }
        os << "</g>\n";
    }

    os << "<g fill=\"black\">\n";
    for (const Point& p : points.points) {
        const std::uint64_t x = p[0] / cell * cell;
        const std::uint64_t y = p[1] / cell * cell;
        os << "<rect x=\"" << x << "\" y=\"" << flip(y, cell) << "\" width=\"" << cell
           << "\" height=\"" << cell << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace netforge
