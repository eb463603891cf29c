#include "netforge/badic.hpp"

#include "netforge/errors.hpp"

#include <sstream>

namespace netforge {

std::uint64_t checked_pow(std::uint64_t b, int e) {
    if (e < 0) {
        throw InvalidArgument("negative exponent " + std::to_string(e));
    }
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && r > kMaxPow / b) {
            throw OverflowError(std::to_string(b) + "^" + std::to_string(e) +
                                " exceeds 2^62");
        }
        r *= b;
    }
    return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step.
        r = r * (n - k + i) / i;
        if (r > kMaxPow) {
            throw OverflowError("binomial coefficient C(" + std::to_string(n) + "," +
                                std::to_string(k) + ") too large");
        }
    }
    return static_cast<std::uint64_t>(r);
}

void require_base(std::uint64_t b) {
    if (b < 2) throw InvalidArgument("base must be >= 2, got " + std::to_string(b));
}

int Shape::weight() const {
    int w = 0;
    for (int d : dims) w += d;
    return w;
}

void ElementaryInterval::validate() const {
    require_base(base);
    if (shape.dims.empty()) throw InvalidArgument("interval has no axes");
    if (cells.size() != shape.dims.size()) {
        throw InvalidArgument("interval cell count does not match shape");
    }
    for (std::size_t j = 0; j < cells.size(); ++j) {
        if (shape.dims[j] < 0) throw InvalidArgument("negative shape entry");
        if (cells[j] >= checked_pow(base, shape.dims[j])) {
            throw InvalidArgument("cell index out of range in " + to_string());
        }
    }
}

bool ElementaryInterval::contains_point(std::span<const std::uint64_t> coords,
                                        int g) const {
    if (coords.size() != cells.size()) {
        throw InvalidArgument("point dimension does not match interval");
    }
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const int d = shape.dims[j];
        if (g >= d) {
            if (coords[j] / checked_pow(base, g - d) != cells[j]) return false;
        } else {
            const unsigned __int128 scaled =
                static_cast<unsigned __int128>(coords[j]) * checked_pow(base, d - g);
            if (scaled != cells[j]) return false;
        }
    }
    return true;
}

std::string ElementaryInterval::to_string() const {
    std::ostringstream os;
    os << "shape(";
    for (std::size_t j = 0; j < shape.dims.size(); ++j) os << (j ? "," : "") << shape.dims[j];
    os << ") cells(";
    for (std::size_t j = 0; j < cells.size(); ++j) os << (j ? "," : "") << cells[j];
    os << ")";
    return os.str();
}

void GridBox::validate() const {
    require_base(base);
    if (resolution < 0) throw InvalidArgument("negative resolution");
    if (corner.empty()) throw InvalidArgument("grid box has no axes");
    const std::uint64_t side = checked_pow(base, resolution);
    for (std::uint64_t u : corner) {
        if (u >= side) throw InvalidArgument("grid box corner out of range");
    }
}

namespace {

void compositions(int s, int remaining, std::vector<int>& prefix,
                  std::vector<Shape>& out) {
    if (static_cast<int>(prefix.size()) == s - 1) {
        prefix.push_back(remaining);
        out.push_back(Shape{prefix});
        prefix.pop_back();
        return;
    }
    for (int d = 0; d <= remaining; ++d) {
        prefix.push_back(d);
        compositions(s, remaining - d, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Shape> shapes_of_weight(int s, int m) {
    if (s < 1) throw InvalidArgument("dimension must be >= 1");
    if (m < 0) throw InvalidArgument("weight must be >= 0");
    std::vector<Shape> out;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(s));
    compositions(s, m, prefix, out);
    return out;
}

ElementaryInterval containing_interval(const GridBox& box, const Shape& shape) {
    if (shape.dims.size() != box.corner.size()) {
        throw InvalidArgument("shape dimension does not match box");
    }
    ElementaryInterval e{box.base, shape, {}};
    e.cells.reserve(box.corner.size());
    for (std::size_t j = 0; j < box.corner.size(); ++j) {
        const int d = shape.dims[j];
        if (d < 0 || d > box.resolution) {
            throw InvalidArgument("shape entry " + std::to_string(d) +
                                  " exceeds box resolution " +
                                  std::to_string(box.resolution));
        }
        e.cells.push_back(box.corner[j] / checked_pow(box.base, box.resolution - d));
    }
    return e;
}

std::vector<ElementaryInterval> cover_set(const GridBox& box) {
    box.validate();
    std::vector<ElementaryInterval> out;
    for (const Shape& shape : shapes_of_weight(box.dimension(), box.resolution)) {
        out.push_back(containing_interval(box, shape));
    }
    return out;
}

std::uint64_t count_intervals(std::uint64_t b, int m, int s) {
    require_base(b);
    if (m < 0 || s < 1) throw InvalidArgument("need m >= 0 and s >= 1");
    const std::uint64_t cells = checked_pow(b, m);
    const std::uint64_t shapes =
        binomial(static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(s) - 1,
                 static_cast<std::uint64_t>(m));
    const unsigned __int128 total = static_cast<unsigned __int128>(cells) * shapes;
    if (total > kMaxPow) {
        throw OverflowError("interval count for b=" + std::to_string(b) +
                            " m=" + std::to_string(m) + " s=" + std::to_string(s) +
                            " exceeds 2^62");
    }
    return static_cast<std::uint64_t>(total);
}

bool interval_contains_box(const ElementaryInterval& outer, const GridBox& inner) {
    if (outer.base != inner.base || outer.cells.size() != inner.corner.size()) {
        return false;
    }
    for (std::size_t j = 0; j < outer.cells.size(); ++j) {
        const int d = outer.shape.dims[j];
        if (d > inner.resolution) return false;
        if (inner.corner[j] / checked_pow(inner.base, inner.resolution - d) !=
            outer.cells[j]) {
            return false;
        }
    }
    return true;
}

std::uint64_t cell_index(const ElementaryInterval& interval) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < interval.cells.size(); ++j) {
        idx = idx * checked_pow(interval.base, interval.shape.dims[j]) + interval.cells[j];
    }
    return idx;
}

}  // namespace netforge
