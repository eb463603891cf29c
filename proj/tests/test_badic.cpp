#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netforge/badic.hpp"
#include "netforge/errors.hpp"
#include "oracles.hpp"

#include <set>

using namespace netforge;

namespace {

std::vector<std::vector<int>> dims_of(const std::vector<Shape>& shapes) {
    std::vector<std::vector<int>> out;
    for (const Shape& s : shapes) out.push_back(s.dims);
    return out;
}

}  // namespace

TEST_CASE("shapes_of_weight lists compositions lexicographically") {
    CHECK(dims_of(shapes_of_weight(2, 0)) == std::vector<std::vector<int>>{{0, 0}});
    CHECK(dims_of(shapes_of_weight(2, 3)) ==
          std::vector<std::vector<int>>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
    CHECK(shapes_of_weight(3, 2).size() == 6);
    CHECK(dims_of(shapes_of_weight(1, 4)) == std::vector<std::vector<int>>{{4}});

    for (int s = 1; s <= 4; ++s) {
        for (int m = 0; m <= 5; ++m) {
            CAPTURE(s);
            CAPTURE(m);
            const auto got = dims_of(shapes_of_weight(s, m));
            CHECK(got == oracle::shapes(s, m));
            CHECK(got.size() == binomial(static_cast<std::uint64_t>(m + s - 1),
                                         static_cast<std::uint64_t>(m)));
        }
    }
}

TEST_CASE("containing_interval picks the unique interval of a shape") {
    const GridBox box{2, 3, {5, 2}};
    CHECK(containing_interval(box, Shape{{1, 2}}).cells == std::vector<std::uint64_t>{1, 1});

    const GridBox origin{2, 3, {0, 0}};
    for (const Shape& shape : shapes_of_weight(2, 3)) {
        CHECK(containing_interval(origin, shape).cells == std::vector<std::uint64_t>{0, 0});
    }

    const GridBox box3{3, 2, {4, 7}};
    CHECK(containing_interval(box3, Shape{{2, 0}}).cells == std::vector<std::uint64_t>{4, 0});

    CHECK_THROWS_AS(containing_interval(box, Shape{{4, 0}}), InvalidArgument);
    CHECK_THROWS_AS(containing_interval(box, Shape{{1, 1, 1}}), InvalidArgument);
}

TEST_CASE("cover_set sizes and containment") {
    CHECK(cover_set(GridBox{2, 3, {3, 6}}).size() == 4);
    CHECK(cover_set(GridBox{2, 2, {1, 2, 3}}).size() == 6);

    const auto unit = cover_set(GridBox{3, 0, {0, 0, 0}});
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].shape.dims == std::vector<int>{0, 0, 0});
    CHECK(unit[0].cells == std::vector<std::uint64_t>{0, 0, 0});

    for (std::uint64_t b : {2u, 3u}) {
        for (int s = 1; s <= 3; ++s) {
            for (int m = 0; m <= (s == 3 ? 2 : 3); ++m) {
                for (const GridBox& box : oracle::all_boxes(b, m, s)) {
                    const auto cover = cover_set(box);
                    CHECK(cover.size() == binomial(static_cast<std::uint64_t>(m + s - 1),
                                                   static_cast<std::uint64_t>(m)));
                    std::set<Shape> shapes;
                    for (const ElementaryInterval& e : cover) {
                        CHECK(oracle::contains(e, box));
                        CHECK(interval_contains_box(e, box));
                        CHECK(e.shape.weight() == m);
                        shapes.insert(e.shape);
                    }
                    CHECK(shapes.size() == cover.size());
                }
            }
        }
    }
}

TEST_CASE("count_intervals matches direct enumeration") {
    CHECK(count_intervals(2, 3, 2) == 32);
    CHECK(count_intervals(2, 0, 5) == 1);
    CHECK(count_intervals(3, 2, 3) == 54);
    for (std::uint64_t b : {2u, 3u}) {
        for (int m = 0; m <= 5; ++m) {
            for (int s = 1; s <= 3; ++s) {
                CHECK(count_intervals(b, m, s) == oracle::all_intervals(b, m, s).size());
            }
        }
    }
}

TEST_CASE("overflow is reported, not wrapped") {
    CHECK(checked_pow(2, 62) == kMaxPow);
    CHECK_THROWS_AS(checked_pow(2, 63), OverflowError);
    CHECK_THROWS_AS(checked_pow(10, 19), OverflowError);
    CHECK_THROWS_AS(count_intervals(2, 63, 2), OverflowError);
    CHECK_THROWS_AS(count_intervals(2, 60, 3), OverflowError);  // 2^60 * 1891
    CHECK_THROWS_AS(binomial(200, 100), OverflowError);
    CHECK_THROWS_AS(count_intervals(1, 2, 2), InvalidArgument);
}

TEST_CASE("intervals validate their cells and test point membership exactly") {
    ElementaryInterval e{2, Shape{{1, 2}}, {1, 3}};
    CHECK_NOTHROW(e.validate());
    CHECK(cell_index(e) == 1 * 4 + 3);

    // [1/2, 1) x [3/4, 1); boundaries are half-open.
    const std::vector<std::uint64_t> on_lower{4, 6};
    const std::vector<std::uint64_t> on_upper{4, 8 - 1};
    const std::vector<std::uint64_t> left{3, 7};
    CHECK(e.contains_point(on_lower, 3));
    CHECK(e.contains_point(on_upper, 3));
    CHECK_FALSE(e.contains_point(left, 3));
    // A coarse point (exponent below the shape resolution).
    const std::vector<std::uint64_t> coarse{1, 1};
    CHECK_FALSE(e.contains_point(coarse, 1));  // (1/2, 1/2)
    ElementaryInterval half{2, Shape{{1, 2}}, {1, 2}};
    CHECK(half.contains_point(coarse, 1));

    ElementaryInterval bad{2, Shape{{1, 2}}, {2, 0}};
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    CHECK_THROWS_AS((GridBox{2, 2, {4, 0}}.validate()), InvalidArgument);
}
