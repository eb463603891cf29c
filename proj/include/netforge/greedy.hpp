#pragma once

// Greedy b-adic box packing in dimension s.
//
// Repeatedly pick a resolution-m grid box that lies in the still-available
// region, then remove every weight-m elementary interval containing it. In
// the plane this always runs for exactly b^m steps and the chosen boxes form
// a (0,m,2)-net; for s >= 3 the run may stall early.

#include "netforge/badic.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace netforge {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

// Largest number of grid boxes (b^{m s}) the availability index may hold.
inline constexpr std::uint64_t kMaxGridBoxes = std::uint64_t{1} << 30;

struct LexicographicPolicy {};
struct SeededUniformPolicy {
    std::uint64_t seed = 0;
};
struct ScriptedPolicy {
    std::vector<GridBox> choices;
};
using ChoicePolicy = std::variant<LexicographicPolicy, SeededUniformPolicy, ScriptedPolicy>;

// Occupancy of every weight-m elementary interval plus the boxes chosen so far.
//
// A box is available iff none of its containing intervals is marked. The
// per-shape occupancy tables are the source of truth; a per-box blocked flag
// with per-row counts is kept in step with them so that counting and
// indexed lookup of available boxes cost O(b^m) rather than O(b^{ms}).
class AvailabilityState {
public:
    AvailabilityState(std::uint64_t b, int m, int s);

    std::uint64_t base() const { return base_; }
    int resolution() const { return m_; }
    int dimension() const { return s_; }
    std::uint64_t side() const { return side_; }
    const std::vector<Shape>& shapes() const { return shapes_; }
    const std::vector<GridBox>& chosen() const { return chosen_; }

    bool is_available(const GridBox& box) const;
    bool is_marked(const ElementaryInterval& interval) const;
    std::uint64_t marked_count(std::size_t shape_index) const;

    std::uint64_t available_count() const { return available_; }

    // k-th available box in row-major (lexicographic corner) order; k < available_count().
    GridBox nth_available(std::uint64_t k) const;

    // Marks the cover set of `box`. Throws InvalidChoice if it is not available.
    void choose(const GridBox& box);

    GridBox box_at(std::uint64_t linear) const;
    std::uint64_t linear_index(const GridBox& box) const;

private:
    void block_interval(const ElementaryInterval& interval);

    std::uint64_t base_;
    int m_;
    int s_;
    std::uint64_t side_;
    std::uint64_t row_size_;
    std::vector<Shape> shapes_;
    std::vector<std::vector<std::uint8_t>> occupancy_;
    std::vector<std::uint64_t> marked_;
    std::vector<std::uint8_t> blocked_;
    std::vector<std::uint64_t> row_available_;
    std::uint64_t available_;
    std::vector<GridBox> chosen_;
};

struct RunOutcome {
    bool complete = false;
    // Chosen boxes in order; b^m of them when complete.
    std::vector<GridBox> chosen;
    // For a stall: every interval marked at the stop, whose union covers the cube.
    std::vector<ElementaryInterval> stall_witness;

    std::size_t steps() const { return chosen.size(); }
};

RunOutcome greedy_run(std::uint64_t b, int m, int s, const ChoicePolicy& policy);

// True iff every resolution-m grid box lies in some interval of `witness`.
bool covers_all_boxes(std::uint64_t b, int m, int s,
                      const std::vector<ElementaryInterval>& witness);

// Lexicographically least choice prefix of length <= depth after which no box
// is available and fewer than b^m boxes are chosen. Returns nullopt for s <= 2
// without searching. Throws BudgetExceeded after `node_budget` states.
std::optional<std::vector<GridBox>> stall_search(std::uint64_t b, int m, int s, int depth,
                                                 std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace netforge
