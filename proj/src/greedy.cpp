#include "netforge/greedy.hpp"

#include "netforge/errors.hpp"
#include "netforge/random.hpp"

#include <string>

namespace netforge {

namespace {

std::vector<std::uint64_t> power_table(std::uint64_t b, int m) {
    std::vector<std::uint64_t> pw(static_cast<std::size_t>(m) + 1);
    for (int e = 0; e <= m; ++e) pw[static_cast<std::size_t>(e)] = checked_pow(b, e);
    return pw;
}

std::uint64_t grid_size(std::uint64_t side, int s) {
    unsigned __int128 total = 1;
    for (int j = 0; j < s; ++j) {
        total *= side;
        if (total > kMaxGridBoxes) {
            throw BudgetExceeded("grid of " + std::to_string(side) + "^" + std::to_string(s) +
                                 " boxes exceeds the availability index limit");
        }
    }
    return static_cast<std::uint64_t>(total);
}

}  // namespace

AvailabilityState::AvailabilityState(std::uint64_t b, int m, int s)
    : base_(b), m_(m), s_(s), side_(0), row_size_(0), available_(0) {
    require_base(b);
    if (m < 0) throw InvalidArgument("resolution must be >= 0");
    if (s < 1) throw InvalidArgument("dimension must be >= 1");
    side_ = checked_pow(b, m);
    const std::uint64_t total = grid_size(side_, s);
    row_size_ = total / side_;
    shapes_ = shapes_of_weight(s, m);
    occupancy_.assign(shapes_.size(), std::vector<std::uint8_t>(side_, 0));
    marked_.assign(shapes_.size(), 0);
    blocked_.assign(total, 0);
    row_available_.assign(side_, row_size_);
    available_ = total;
}

std::uint64_t AvailabilityState::linear_index(const GridBox& box) const {
    std::uint64_t idx = 0;
    for (std::uint64_t u : box.corner) idx = idx * side_ + u;
    return idx;
}

GridBox AvailabilityState::box_at(std::uint64_t linear) const {
    GridBox box{base_, m_, std::vector<std::uint64_t>(static_cast<std::size_t>(s_))};
    for (int j = s_ - 1; j >= 0; --j) {
        box.corner[static_cast<std::size_t>(j)] = linear % side_;
        linear /= side_;
    }
    return box;
}

bool AvailabilityState::is_marked(const ElementaryInterval& interval) const {
    for (std::size_t k = 0; k < shapes_.size(); ++k) {
        if (shapes_[k] == interval.shape) return occupancy_[k][cell_index(interval)] != 0;
    }
    throw InvalidArgument("interval " + interval.to_string() + " is not of weight " +
                          std::to_string(m_));
}

bool AvailabilityState::is_available(const GridBox& box) const {
    if (box.base != base_ || box.resolution != m_ || box.dimension() != s_) {
        throw InvalidArgument("grid box does not match the run's base, resolution or dimension");
    }
    box.validate();
    for (std::size_t k = 0; k < shapes_.size(); ++k) {
        if (occupancy_[k][cell_index(containing_interval(box, shapes_[k]))]) return false;
    }
    return true;
}

std::uint64_t AvailabilityState::marked_count(std::size_t shape_index) const {
    return marked_.at(shape_index);
}

GridBox AvailabilityState::nth_available(std::uint64_t k) const {
    if (k >= available_) throw InvalidArgument("available box index out of range");
    std::uint64_t row = 0;
    while (k >= row_available_[row]) {
        k -= row_available_[row];
        ++row;
    }
    std::uint64_t idx = row * row_size_;
    for (;; ++idx) {
        if (!blocked_[idx]) {
            if (k == 0) break;
            --k;
        }
    }
    return box_at(idx);
}

void AvailabilityState::block_interval(const ElementaryInterval& interval) {
    const auto pw = power_table(base_, m_);
    std::vector<std::uint64_t> lo(static_cast<std::size_t>(s_));
    std::vector<std::uint64_t> len(static_cast<std::size_t>(s_));
    std::vector<std::uint64_t> stride(static_cast<std::size_t>(s_));
    std::uint64_t st = 1;
    for (int j = s_ - 1; j >= 0; --j) {
        const auto ju = static_cast<std::size_t>(j);
        len[ju] = pw[static_cast<std::size_t>(m_ - interval.shape.dims[ju])];
        lo[ju] = interval.cells[ju] * len[ju];
        stride[ju] = st;
        st *= side_;
    }
    if (s_ == 1) {
        for (std::uint64_t t = lo[0]; t < lo[0] + len[0]; ++t) {
            if (!blocked_[t]) {
                blocked_[t] = 1;
                --row_available_[t];
                --available_;
            }
        }
        return;
    }
    // Odometer over the boxes of the interval; the last axis is contiguous.
    std::vector<std::uint64_t> off(static_cast<std::size_t>(s_), 0);
    const std::size_t last = static_cast<std::size_t>(s_ - 1);
    for (;;) {
        std::uint64_t base_idx = 0;
        for (std::size_t j = 0; j < last; ++j) base_idx += (lo[j] + off[j]) * stride[j];
        const std::uint64_t row = lo[0] + off[0];
        std::uint64_t cleared = 0;
        const std::uint64_t start = base_idx + lo[last];
        for (std::uint64_t t = 0; t < len[last]; ++t) {
            std::uint8_t& cell = blocked_[start + t];
            cleared += 1u - cell;
            cell = 1;
        }
        row_available_[row] -= cleared;
        available_ -= cleared;
        std::size_t j = last;
        for (;;) {
            if (j == 0) return;
            --j;
            if (++off[j] < len[j]) break;
            off[j] = 0;
        }
    }
}

void AvailabilityState::choose(const GridBox& box) {
    if (!is_available(box)) {
        std::string corner;
        for (std::uint64_t u : box.corner) corner += (corner.empty() ? "" : ",") + std::to_string(u);
        throw InvalidChoice("box (" + corner + ") is not available at step " +
                            std::to_string(chosen_.size() + 1));
    }
    for (std::size_t k = 0; k < shapes_.size(); ++k) {
        const ElementaryInterval e = containing_interval(box, shapes_[k]);
        occupancy_[k][cell_index(e)] = 1;
        ++marked_[k];
        block_interval(e);
    }
    chosen_.push_back(box);
}

RunOutcome greedy_run(std::uint64_t b, int m, int s, const ChoicePolicy& policy) {
    require_base(b);
    if (m < 0 || s < 1) throw InvalidArgument("need m >= 0 and s >= 1");
    if (m == 0) {
        return RunOutcome{true, {GridBox{b, 0, std::vector<std::uint64_t>(static_cast<std::size_t>(s), 0)}}, {}};
    }
    AvailabilityState state(b, m, s);
    const std::uint64_t target = state.side();

    std::optional<SeededRng> rng;
    if (const auto* uniform = std::get_if<SeededUniformPolicy>(&policy)) rng.emplace(uniform->seed);
    const auto* script = std::get_if<ScriptedPolicy>(&policy);

    while (state.available_count() > 0) {
        if (state.chosen().size() >= target) {
            throw std::logic_error("greedy run exceeded b^m steps");
        }
        const std::size_t step = state.chosen().size();
        if (script) {
            if (step >= script->choices.size()) {
                throw InvalidChoice("script exhausted after " + std::to_string(step) +
                                    " choices with " + std::to_string(state.available_count()) +
                                    " boxes still available");
            }
            state.choose(script->choices[step]);
        } else if (rng) {
            state.choose(state.nth_available(rng->below(state.available_count())));
        } else {
            state.choose(state.nth_available(0));
        }
    }
    if (script && script->choices.size() > state.chosen().size()) {
        throw InvalidChoice("scripted choice " + std::to_string(state.chosen().size() + 1) +
                            " given after the run stopped");
    }

    RunOutcome out;
    out.chosen = state.chosen();
    out.complete = out.chosen.size() == target;
    if (!out.complete) {
        for (const GridBox& box : out.chosen) {
            for (ElementaryInterval& e : cover_set(box)) out.stall_witness.push_back(std::move(e));
        }
    }
    return out;
}

bool covers_all_boxes(std::uint64_t b, int m, int s,
                      const std::vector<ElementaryInterval>& witness) {
    const std::uint64_t side = checked_pow(b, m);
    const std::uint64_t total = grid_size(side, s);
    GridBox box{b, m, std::vector<std::uint64_t>(static_cast<std::size_t>(s), 0)};
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (int j = s - 1; j >= 0; --j) {
            box.corner[static_cast<std::size_t>(j)] = rest % side;
            rest /= side;
        }
        bool covered = false;
        for (const ElementaryInterval& e : witness) {
            if (interval_contains_box(e, box)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

namespace {

struct StallSearch {
    std::uint64_t target;
    int depth;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    bool visit(const AvailabilityState& state) {
        if (++nodes > budget) {
            throw BudgetExceeded("stall search exceeded " + std::to_string(budget) + " nodes");
        }
        if (state.available_count() == 0) {
            if (state.chosen().size() >= target) return false;
            found = state.chosen();
            return true;
        }
        if (static_cast<int>(state.chosen().size()) >= depth) return false;
        // Children in lexicographic corner order.
        const std::uint64_t n = state.available_count();
        for (std::uint64_t k = 0; k < n; ++k) {
            AvailabilityState child = state;
            child.choose(state.nth_available(k));
            if (visit(child)) return true;
        }
        return false;
    }

    std::vector<GridBox> found;
};

}  // namespace

std::optional<std::vector<GridBox>> stall_search(std::uint64_t b, int m, int s, int depth,
                                                 std::uint64_t node_budget) {
    require_base(b);
    if (m < 0 || s < 1 || depth < 0) throw InvalidArgument("need m >= 0, s >= 1, depth >= 0");
    if (s <= 2) return std::nullopt;
    AvailabilityState root(b, m, s);
    StallSearch search{root.side(), depth, node_budget, 0, {}};
    if (search.visit(root)) return search.found;
    return std::nullopt;
}

}  // namespace netforge
