#pragma once

// Recursive synthesis of plane (0,m,2)-nets.
//
// Level n stacks b level-(n-1) nets side by side, each squeezed into a
// vertical strip of width 1/b, then refines the second coordinate by one
// base-b digit chosen through a permutation of the point's strip index.
// With identity permutations the result is the Hammersley net.

#include "netforge/netpoints.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace netforge {

// A bijection on {0, ..., b-1}, stored as an index array. Validated on construction.
class Permutation {
public:
    explicit Permutation(std::vector<std::uint32_t> image);

    static Permutation identity(std::uint64_t b);

    std::size_t size() const { return image_.size(); }
    std::uint32_t operator()(std::uint64_t i) const { return image_.at(i); }
    const std::vector<std::uint32_t>& image() const { return image_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> image_;
};

// levels[n-1] holds the b^{n-1} permutations used at level n.
class PermutationFamily {
public:
    PermutationFamily(std::uint64_t b, std::vector<std::vector<Permutation>> levels);

    static PermutationFamily identity(std::uint64_t b, int m);
    // Every slot drawn uniformly from S_b by a Fisher-Yates shuffle on SeededRng.
    static PermutationFamily random(std::uint64_t b, int m, std::uint64_t seed);

    std::uint64_t base() const { return base_; }
    int levels() const { return static_cast<int>(levels_.size()); }
    // Permutations of level n, 1 <= n <= levels().
    std::span<const Permutation> level(int n) const;
    const std::vector<std::vector<Permutation>>& all_levels() const { return levels_; }

private:
    std::uint64_t base_;
    std::vector<std::vector<Permutation>> levels_;
};

// Mixed-exponent intermediate: x over b^level, y over b^{level-1}.
struct StackedPoints {
    std::uint64_t base = 2;
    int level = 1;
    std::vector<std::array<std::uint64_t, 2>> points;
};

// Direct digit-reversal construction at exponent m.
NetPoints hammersley(std::uint64_t b, int m);

// Union over j of A_b(parts[j] + (j, 0)). Needs exactly b parts, each a
// two-dimensional set of b^{n-1} points at exponent n-1.
StackedPoints scale_stack(std::span<const NetPoints> parts);

// Appends to each y the digit perms[y_num](leading digit of x); result at exponent n.
NetPoints psi_apply(const StackedPoints& stacked, std::span<const Permutation> perms);

// Runs all levels from the single point {(0,0)}.
NetPoints recursive_run(std::uint64_t b, int m, const PermutationFamily& family);

// Same, returning the net after every level (index n holds level n).
std::vector<NetPoints> recursive_levels(std::uint64_t b, int m, const PermutationFamily& family);

}  // namespace netforge
