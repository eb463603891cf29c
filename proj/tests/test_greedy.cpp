#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netforge/errors.hpp"
#include "netforge/greedy.hpp"
#include "netforge/random.hpp"
#include "netforge/verify.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <optional>
#include <set>

using namespace netforge;

namespace {

// Lexicographically least pair of first choices after which nothing is
// available before b^m boxes are chosen, by brute force over the oracle.
std::optional<std::vector<GridBox>> oracle_stall_pair(std::uint64_t b, int m, int s) {
    const auto target = static_cast<std::size_t>(oracle::ipow(static_cast<std::int64_t>(b), m));
    for (const GridBox& first : oracle::all_boxes(b, m, s)) {
        if (target > 1 && oracle::available(b, m, s, {first}).empty()) return std::vector<GridBox>{first};
        for (const GridBox& second : oracle::available(b, m, s, {first})) {
            if (target > 2 && oracle::available(b, m, s, {first, second}).empty()) {
                return std::vector<GridBox>{first, second};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("degenerate resolution returns the single box") {
    for (const ChoicePolicy& policy :
         {ChoicePolicy{LexicographicPolicy{}}, ChoicePolicy{SeededUniformPolicy{3}},
          ChoicePolicy{ScriptedPolicy{}}}) {
        const RunOutcome run = greedy_run(2, 0, 2, policy);
        REQUIRE(run.complete);
        REQUIRE(run.chosen.size() == 1);
        CHECK(run.chosen[0] == GridBox{2, 0, {0, 0}});
    }
}

TEST_CASE("available_count tracks the oracle") {
    AvailabilityState state(2, 3, 2);
    CHECK(state.available_count() == 64);

    state.choose(state.nth_available(0));
    CHECK(state.chosen().front() == GridBox{2, 3, {0, 0}});
    // Hand count: rows/columns through the origin (15), plus 3 + 2 boxes of the
    // two square-ish intervals; 64 - 20.
    CHECK(state.available_count() == 44);
    CHECK(state.available_count() == oracle::available(2, 3, 2, state.chosen()).size());

    while (state.available_count() > 0) state.choose(state.nth_available(0));
    CHECK(state.chosen().size() == 8);
}

TEST_CASE("availability agrees with the oracle box by box") {
    for (int s : {2, 3}) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            AvailabilityState state(2, 2, s);
            SeededRng rng(seed);
            while (state.available_count() > 0) {
                const auto expected = oracle::available(2, 2, s, state.chosen());
                REQUIRE(expected.size() == state.available_count());
                for (std::uint64_t k = 0; k < expected.size(); ++k) {
                    CHECK(state.nth_available(k) == expected[k]);
                }
                for (const GridBox& box : oracle::all_boxes(2, 2, s)) {
                    const bool in = std::find(expected.begin(), expected.end(), box) != expected.end();
                    CHECK(state.is_available(box) == in);
                }
                for (std::size_t k = 0; k < state.shapes().size(); ++k) {
                    CHECK(state.marked_count(k) == state.chosen().size());
                }
                state.choose(state.nth_available(rng.below(state.available_count())));
            }
        }
    }
}

TEST_CASE("planar runs complete and form nets") {
    for (std::uint64_t b : {2u, 3u, 5u}) {
        for (int m = 1; checked_pow(b, m) <= 625; ++m) {
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                CAPTURE(b);
                CAPTURE(m);
                const RunOutcome run = greedy_run(b, m, 2, SeededUniformPolicy{seed});
                REQUIRE(run.complete);
                CHECK(run.steps() == checked_pow(b, m));
                CHECK(is_net(points_from_boxes(run.chosen), 0).passed);

                // Counting argument: cover sets are disjoint and exhaust all intervals.
                std::set<ElementaryInterval> covered;
                std::size_t total = 0;
                for (const GridBox& box : run.chosen) {
                    for (const ElementaryInterval& e : cover_set(box)) {
                        covered.insert(e);
                        ++total;
                    }
                }
                CHECK(total == checked_pow(b, m) * static_cast<std::uint64_t>(m + 1));
                CHECK(covered.size() == total);
                CHECK(total == count_intervals(b, m, 2));
            }
        }
    }
    const RunOutcome lex = greedy_run(3, 3, 2, LexicographicPolicy{});
    CHECK(lex.complete);
    CHECK(is_net(points_from_boxes(lex.chosen), 0).passed);
}

TEST_CASE("runs in three dimensions never exceed b^m steps") {
    for (int m = 1; m <= 4; ++m) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const RunOutcome run = greedy_run(2, m, 3, SeededUniformPolicy{seed});
            CHECK(run.steps() <= checked_pow(2, m));
            if (run.complete) {
                CHECK(is_net(points_from_boxes(run.chosen), 0).passed);
                CHECK(run.stall_witness.empty());
            } else {
                CHECK(covers_all_boxes(2, m, 3, run.stall_witness));
            }
        }
    }
}

TEST_CASE("seeded runs are deterministic and replay through a script") {
    const RunOutcome a = greedy_run(3, 4, 2, SeededUniformPolicy{42});
    const RunOutcome b = greedy_run(3, 4, 2, SeededUniformPolicy{42});
    CHECK(a.chosen == b.chosen);
    const RunOutcome c = greedy_run(3, 4, 2, SeededUniformPolicy{43});
    CHECK(a.chosen != c.chosen);

    const RunOutcome replay = greedy_run(3, 4, 2, ScriptedPolicy{a.chosen});
    CHECK(replay.complete);
    CHECK(replay.chosen == a.chosen);
}

TEST_CASE("scripted choices are validated") {
    const std::vector<GridBox> clash{{2, 2, {0, 0}}, {2, 2, {0, 3}}};
    CHECK_THROWS_AS(greedy_run(2, 2, 2, ScriptedPolicy{clash}), InvalidChoice);

    const std::vector<GridBox> short_script{{2, 2, {0, 0}}};
    CHECK_THROWS_AS(greedy_run(2, 2, 2, ScriptedPolicy{short_script}), InvalidChoice);

    const std::vector<GridBox> wrong_dim{{2, 2, {0, 0, 0}}};
    CHECK_THROWS(greedy_run(2, 2, 2, ScriptedPolicy{wrong_dim}));
}

TEST_CASE("a two-step stall exists in three dimensions") {
    const auto expected = oracle_stall_pair(2, 2, 3);
    REQUIRE(expected.has_value());
    CHECK(expected->size() == 2);

    const auto found = stall_search(2, 2, 3, 2);
    REQUIRE(found.has_value());
    CHECK(*found == *expected);

    const RunOutcome run = greedy_run(2, 2, 3, ScriptedPolicy{*found});
    CHECK_FALSE(run.complete);
    CHECK(run.steps() == 2);
    CHECK(covers_all_boxes(2, 2, 3, run.stall_witness));
}

TEST_CASE("stall_search returns nothing where no stall exists") {
    CHECK_FALSE(stall_search(2, 1, 2, 2).has_value());
    CHECK_FALSE(stall_search(3, 2, 2, 3).has_value());
    // s=3, m=1: brute force over all choice pairs finds no early stop.
    CHECK_FALSE(oracle_stall_pair(2, 1, 3).has_value());
    CHECK_FALSE(stall_search(2, 1, 3, 2).has_value());
    // Depth 1 is too shallow for the m=2 stall.
    CHECK_FALSE(stall_search(2, 2, 3, 1).has_value());
}

TEST_CASE("stall_search honours its node budget") {
    CHECK_THROWS_AS(stall_search(2, 3, 3, 3, 100), BudgetExceeded);
}

TEST_CASE("availability index refuses oversized grids") {
    CHECK_THROWS_AS(AvailabilityState(2, 16, 2), BudgetExceeded);
    CHECK_THROWS_AS(greedy_run(2, 63, 2, LexicographicPolicy{}), OverflowError);
}
