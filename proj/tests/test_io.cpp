#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netforge/errors.hpp"
#include "netforge/greedy.hpp"
#include "netforge/netfile.hpp"
#include "netforge/random.hpp"
#include "netforge/recursive.hpp"
#include "netforge/svg.hpp"

using namespace netforge;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("NetFileV1 canonical form") {
    const NetFile file{2, hammersley(2, 2), Provenance{"hammersley", std::nullopt, std::nullopt, std::nullopt}};
    CHECK(emit_net_file(file) ==
          "{\"b\":2,\"g\":2,\"m\":2,\"points\":[[0,0],[2,1],[1,2],[3,3]],"
          "\"provenance\":{\"algorithm\":\"hammersley\"},\"s\":2,\"version\":1}\n");
}

TEST_CASE("parse and emit round-trip over random valid nets") {
    SeededRng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint64_t b = 2 + rng.below(3);
        const int m = static_cast<int>(rng.below(4));
        NetFile file;
        file.m = m;
        if (trial % 2 == 0) {
            const RunOutcome run = greedy_run(b, m, 2, SeededUniformPolicy{rng.next()});
            file.net = points_from_boxes(run.chosen);
            file.provenance = {"greedy", trial, std::string("random"), std::nullopt};
        } else {
            const PermutationFamily family = PermutationFamily::random(b, m, rng.next());
            file.net = recursive_run(b, m, family);
            file.provenance = {"recursive", std::nullopt, std::nullopt, family_levels(family)};
        }
        file.net = place(file.net, m, {PlacementKind::Random, m + 1 + trial % 2, rng.next()});
        const std::string text = emit_net_file(file);
        const NetFile back = parse_net_file(text);
        CHECK(back == file);
        CHECK(emit_net_file(back) == text);
    }
}

TEST_CASE("malformed net files are rejected") {
    const std::string good =
        "{\"b\":2,\"g\":1,\"m\":1,\"points\":[[0,1],[1,0]],\"provenance\":{\"algorithm\":\"greedy\"},\"s\":2,\"version\":1}";
    CHECK_NOTHROW(parse_net_file(good));
    const std::string cases[] = {
        "not json",
        "[1,2]",
        "{\"b\":2,\"g\":1,\"m\":1,\"points\":[[0,1]],\"provenance\":{\"algorithm\":\"greedy\"},\"s\":2,\"version\":1}",
        "{\"b\":2,\"g\":1,\"m\":1,\"points\":[[0,2],[1,0]],\"provenance\":{\"algorithm\":\"greedy\"},\"s\":2,\"version\":1}",
        "{\"b\":2,\"g\":0,\"m\":1,\"points\":[[0,0],[0,0]],\"provenance\":{\"algorithm\":\"greedy\"},\"s\":2,\"version\":1}",
        "{\"b\":2,\"g\":1,\"m\":1,\"points\":[[0,1],[1,0]],\"provenance\":{\"algorithm\":\"magic\"},\"s\":2,\"version\":1}",
        "{\"b\":2,\"g\":1,\"m\":1,\"points\":[[0,1],[1,0]],\"provenance\":{\"algorithm\":\"greedy\"},\"s\":2,\"version\":2}",
        "{\"b\":2,\"g\":1,\"m\":1,\"points\":[[0,1,0],[1,0]],\"provenance\":{\"algorithm\":\"greedy\"},\"s\":2,\"version\":1}",
        "{\"b\":2,\"g\":1,\"m\":1,\"points\":[[0,-1],[1,0]],\"provenance\":{\"algorithm\":\"greedy\"},\"s\":2,\"version\":1}",
        "{\"b\":1,\"g\":1,\"m\":1,\"points\":[[0,0]],\"provenance\":{\"algorithm\":\"greedy\"},\"s\":2,\"version\":1}",
        "{\"g\":1,\"m\":1,\"points\":[[0,1],[1,0]],\"provenance\":{\"algorithm\":\"greedy\"},\"s\":2,\"version\":1}",
    };
    for (const std::string& text : cases) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_net_file(text), FormatError);
    }
}

TEST_CASE("permutation family files") {
    const PermutationFamily family = PermutationFamily::random(3, 3, 2);
    const std::string text = emit_family(family, 3);
    int m = -1;
    const PermutationFamily back = parse_family(text, &m);
    CHECK(m == 3);
    CHECK(back.all_levels() == family.all_levels());
    CHECK(emit_family(back, 3) == text);

    CHECK(emit_family(PermutationFamily(2, {{Permutation({1, 0})}}), 1) ==
          "{\"b\":2,\"levels\":[[[1,0]]],\"m\":1}\n");
    CHECK_THROWS_AS(parse_family("{\"b\":2,\"m\":1,\"levels\":[[[1,1]]]}"), FormatError);
    CHECK_THROWS_AS(parse_family("{\"b\":2,\"m\":2,\"levels\":[[[1,0]]]}"), FormatError);
    CHECK_THROWS_AS(parse_family("{\"b\":2,\"m\":2,\"levels\":[[[1,0]],[[0,1]]]}"), FormatError);
}

TEST_CASE("SVG rendering") {
    const NetPoints net = points_from_boxes(greedy_run(2, 3, 2, SeededUniformPolicy{1}).chosen);
    const std::string svg = render_svg(net, 3, {});
    CHECK(svg == render_svg(net, 3, {}));
    CHECK(svg.find("viewBox=\"0 0 8 8\"") != std::string::npos);
    CHECK(count_of(svg, "width=\"1\" height=\"1\"") == 8);

    // One filled square per row and per column of the 8x8 grid.
    std::vector<int> rows(8, 0), cols(8, 0);
    for (const Point& p : net.points) {
        ++cols[p[0]];
        ++rows[7 - p[1]];
        const std::string rect = "<rect x=\"" + std::to_string(p[0]) + "\" y=\"" +
                                 std::to_string(7 - p[1]) + "\" width=\"1\" height=\"1\"/>";
        CHECK(svg.find(rect) != std::string::npos);
    }
    CHECK(rows == std::vector<int>(8, 1));
    CHECK(cols == std::vector<int>(8, 1));

    const std::string grid = render_svg(net, 3, {true, false});
    CHECK(count_of(grid, "<line") == 2 * 7);
    const std::string boxes = render_svg(net, 3, {false, true});
    // Cover sets of a complete net are all 32 weight-3 intervals.
    CHECK(count_of(boxes, "<rect") == 1 + 32 + 8);

    const std::string single = render_svg(NetPoints{2, 2, 0, {{0, 0}}}, 0, {true, true});
    CHECK(single.find("<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\"/>") != std::string::npos);
    CHECK(count_of(single, "<line") == 0);

    CHECK_THROWS_AS(render_svg(NetPoints{2, 1, 1, {{0}, {1}}}, 1, {}), InvalidArgument);
}
