#pragma once

#include "netforge/badic.hpp"
#include "netforge/greedy.hpp"
#include "netforge/netpoints.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace netforge {

struct Violation {
    ElementaryInterval interval;
    std::uint64_t count = 0;
};

struct NetReport {
    bool passed = false;
    std::uint64_t base = 2;
    int m = 0;
    int s = 1;
    int t = 0;
    std::vector<Violation> violations;
    // Number of intervals examined.
    std::uint64_t checked = 0;
};

// Checks that every elementary interval of volume b^{t-m} holds exactly b^t
// points, where b^m = |points|. Points are read at their resolution-m boxes.
// Throws InvalidArgument if |points| is not a power of b, t is outside [0, m],
// or the points' exponent is below m.
NetReport is_net(const NetPoints& points, int t);

// Minimal t for which is_net passes.
int strength(const NetPoints& points);

// Backtracking search for a (0,m,s)-net in base b with points on box corners.
// Point k is pinned to the k-th first-axis strip (a (0,m,s)-net has exactly
// one point per strip of width b^-m), and each partial assignment that puts two
// points in one interval of volume b^-m is pruned. Returns nullopt once the
// space is exhausted; throws BudgetExceeded after `node_budget` nodes.
std::optional<NetPoints> exhaustive_search(std::uint64_t b, int m, int s,
                                           std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace netforge
