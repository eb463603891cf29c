#include "netforge/recursive.hpp"

#include "netforge/errors.hpp"
#include "netforge/random.hpp"

#include <numeric>
#include <string>

namespace netforge {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::uint32_t v : image_) {
        if (v >= image_.size() || seen[v]) {
            throw InvalidArgument("not a permutation of {0,...," +
                                  std::to_string(image_.size()) + "-1}");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::uint64_t b) {
    std::vector<std::uint32_t> image(b);
    std::iota(image.begin(), image.end(), 0u);
    return Permutation(std::move(image));
}

PermutationFamily::PermutationFamily(std::uint64_t b, std::vector<std::vector<Permutation>> levels)
    : base_(b), levels_(std::move(levels)) {
    require_base(b);
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        const std::uint64_t expected = checked_pow(b, n - 1);
        if (levels_[i].size() != expected) {
            throw InvalidArgument("level " + std::to_string(n) + " has " +
                                  std::to_string(levels_[i].size()) + " permutations, expected " +
                                  std::to_string(expected));
        }
        for (const Permutation& p : levels_[i]) {
            if (p.size() != b) {
                throw InvalidArgument("level " + std::to_string(n) +
                                      " holds a permutation of the wrong size");
            }
        }
    }
}

PermutationFamily PermutationFamily::identity(std::uint64_t b, int m) {
    require_base(b);
    std::vector<std::vector<Permutation>> levels;
    for (int n = 1; n <= m; ++n) {
        levels.emplace_back(checked_pow(b, n - 1), Permutation::identity(b));
    }
    return PermutationFamily(b, std::move(levels));
}

PermutationFamily PermutationFamily::random(std::uint64_t b, int m, std::uint64_t seed) {
    require_base(b);
    SeededRng rng(seed);
    std::vector<std::vector<Permutation>> levels;
    for (int n = 1; n <= m; ++n) {
        const std::uint64_t count = checked_pow(b, n - 1);
        std::vector<Permutation> level;
        level.reserve(count);
        for (std::uint64_t r = 0; r < count; ++r) {
            std::vector<std::uint32_t> image(b);
            std::iota(image.begin(), image.end(), 0u);
            for (std::uint64_t i = b - 1; i > 0; --i) std::swap(image[i], image[rng.below(i + 1)]);
            level.emplace_back(std::move(image));
        }
        levels.push_back(std::move(level));
    }
    return PermutationFamily(b, std::move(levels));
}

std::span<const Permutation> PermutationFamily::level(int n) const {
    if (n < 1 || n > levels()) throw InvalidArgument("no level " + std::to_string(n));
    return levels_[static_cast<std::size_t>(n - 1)];
}

NetPoints hammersley(std::uint64_t b, int m) {
    require_base(b);
    const std::uint64_t n = checked_pow(b, m);
    NetPoints out{b, 2, m, {}};
    out.points.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        // y carries the digits t_1..t_m most-significant first, x the reverse.
        std::uint64_t rest = i;
        std::uint64_t reversed = 0;
        for (int k = 0; k < m; ++k) {
            reversed = reversed * b + rest % b;
            rest /= b;
        }
        out.points.push_back({reversed, i});
    }
    return out;
}

StackedPoints scale_stack(std::span<const NetPoints> parts) {
    if (parts.empty()) throw InvalidArgument("no parts to stack");
    const std::uint64_t b = parts.front().base;
    require_base(b);
    if (parts.size() != b) {
        throw InvalidArgument("expected " + std::to_string(b) + " parts, got " +
                              std::to_string(parts.size()));
    }
    const int prev = parts.front().exponent;
    const std::uint64_t width = checked_pow(b, prev);
    checked_pow(b, prev + 1);
    StackedPoints out{b, prev + 1, {}};
    out.points.reserve(width * b);
    for (std::uint64_t j = 0; j < b; ++j) {
        const NetPoints& part = parts[j];
        if (part.base != b || part.dimension != 2) {
            throw InvalidArgument("stacked parts must be planar and share the base");
        }
        if (part.exponent != prev) {
            throw InvalidArgument("part " + std::to_string(j) + " has exponent " +
                                  std::to_string(part.exponent) + ", expected " +
                                  std::to_string(prev));
        }
        if (part.size() != width) {
            throw InvalidArgument("part " + std::to_string(j) + " has " +
                                  std::to_string(part.size()) + " points, expected " +
                                  std::to_string(width));
        }
        part.validate();
        for (const Point& p : part.points) out.points.push_back({p[0] + j * width, p[1]});
    }
    return out;
}

NetPoints psi_apply(const StackedPoints& stacked, std::span<const Permutation> perms) {
    const std::uint64_t b = stacked.base;
    const std::uint64_t rows = checked_pow(b, stacked.level - 1);
    if (perms.size() != rows) {
        throw InvalidArgument("level " + std::to_string(stacked.level) + " needs " +
                              std::to_string(rows) + " permutations, got " +
                              std::to_string(perms.size()));
    }
    NetPoints out{b, 2, stacked.level, {}};
    out.points.reserve(stacked.points.size());
    for (const auto& [x, y] : stacked.points) {
        const std::uint64_t lead = x / rows;
        if (lead >= b || y >= rows) throw InvalidArgument("stacked point out of range");
        out.points.push_back({x, y * b + perms[y](lead)});
    }
    return out;
}

std::vector<NetPoints> recursive_levels(std::uint64_t b, int m, const PermutationFamily& family) {
    require_base(b);
    if (m < 0) throw InvalidArgument("resolution must be >= 0");
    if (family.base() != b || family.levels() != m) {
        throw InvalidArgument("permutation family is for b=" + std::to_string(family.base()) +
                              " m=" + std::to_string(family.levels()));
    }
    checked_pow(b, m);
    std::vector<NetPoints> levels{NetPoints{b, 2, 0, {{0, 0}}}};
    for (int n = 1; n <= m; ++n) {
        const std::vector<NetPoints> parts(b, levels.back());
        levels.push_back(psi_apply(scale_stack(parts), family.level(n)));
    }
    return levels;
}

NetPoints recursive_run(std::uint64_t b, int m, const PermutationFamily& family) {
    return std::move(recursive_levels(b, m, family).back());
}

}  // namespace netforge
