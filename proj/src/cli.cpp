#include "netforge/cli.hpp"

#include "netforge/discrepancy.hpp"
#include "netforge/errors.hpp"
#include "netforge/greedy.hpp"
#include "netforge/netfile.hpp"
#include "netforge/recursive.hpp"
#include "netforge/svg.hpp"
#include "netforge/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace netforge {

using nlohmann::json;

namespace {

// Flag or input problem that maps to the usage exit code.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
    if (path.empty()) {
        out << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << data;
}

Placement parse_placement(const std::string& text, std::uint64_t seed) {
    if (text == "corner") return {PlacementKind::Corner, 0, seed};
    if (text == "center") return {PlacementKind::Center, 0, seed};
    if (text.rfind("random:", 0) == 0) {
        try {
            std::size_t used = 0;
            const int g = std::stoi(text.substr(7), &used);
            if (used == text.size() - 7) return {PlacementKind::Random, g, seed};
        } catch (const std::exception&) {
        }
    }
    throw UsageError("bad --placement '" + text + "' (corner|center|random:G)");
}

std::uint64_t node_budget(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("NETFORGE_BUDGET")) {
        try {
            std::size_t used = 0;
            const std::string text(env);
            const unsigned long long v = std::stoull(text, &used);
            if (used == text.size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("bad NETFORGE_BUDGET '") + env + "'");
    }
    return kDefaultNodeBudget;
}

struct ConstructArgs {
    std::string algorithm;
    std::uint64_t base = 2;
    int m = 0;
    int s = 2;
    std::optional<std::uint64_t> seed;
    std::string policy = "lex";
    std::string perms = "identity";
    std::string placement = "corner";
    std::string out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    require_base(a.base);
    if (a.m < 0) throw UsageError("--m must be >= 0");
    if (a.s < 1) throw UsageError("--s must be >= 1");
    if (a.algorithm != "greedy" && a.s != 2) {
        throw UsageError(a.algorithm + " constructs planar nets only (--s 2)");
    }
    const std::uint64_t seed = a.seed.value_or(0);
    const Placement placement = parse_placement(a.placement, seed);

    NetFile file;
    file.m = a.m;
    file.provenance.algorithm = a.algorithm;
    NetPoints corners;
    if (a.algorithm == "hammersley") {
        corners = hammersley(a.base, a.m);
    } else if (a.algorithm == "recursive") {
        std::optional<PermutationFamily> family;
        if (a.perms == "identity") {
            family = PermutationFamily::identity(a.base, a.m);
        } else if (a.perms == "random") {
            family = PermutationFamily::random(a.base, a.m, seed);
            file.provenance.seed = seed;
        } else {
            int file_m = 0;
            family = parse_family(read_file(a.perms), &file_m);
            if (family->base() != a.base || file_m != a.m) {
                throw UsageError("permutation file does not match --base/--m");
            }
        }
        corners = recursive_run(a.base, a.m, *family);
        file.provenance.permutations = family_levels(*family);
    } else if (a.algorithm == "greedy") {
        ChoicePolicy policy;
        if (a.policy == "lex") {
            policy = LexicographicPolicy{};
        } else if (a.policy == "random") {
            policy = SeededUniformPolicy{seed};
            file.provenance.seed = seed;
        } else {
            throw UsageError("bad --policy '" + a.policy + "' (lex|random)");
        }
        file.provenance.policy = a.policy;
        const RunOutcome run = greedy_run(a.base, a.m, a.s, policy);
        if (!run.complete) {
            json chosen = json::array();
            for (const GridBox& box : run.chosen) chosen.push_back(to_json(box));
            err << json{{"stalled", true}, {"steps", run.steps()}, {"chosen", chosen},
                        {"target", checked_pow(a.base, a.m)}}
                       .dump()
                << "\n";
            return kExitStalled;
        }
        corners = points_from_boxes(run.chosen);
    } else {
        throw UsageError("bad --algorithm '" + a.algorithm + "' (greedy|recursive|hammersley)");
    }
    if (placement.kind == PlacementKind::Random) file.provenance.seed = seed;
    file.net = place(corners, a.m, placement);
    write_output(a.out, emit_net_file(file), out);
    return kExitOk;
}

int cmd_verify(const std::string& in, int t, std::ostream& out) {
    const NetFile file = parse_net_file(read_file(in));
    if (t < 0 || t > file.m) throw UsageError("--t must lie in [0, m]");
    const NetReport report = is_net(file.net, t);
    out << to_json(report).dump() << "\n";
    return report.passed ? kExitOk : kExitNegative;
}

int cmd_analyze(const std::string& in, bool extreme, std::ostream& out) {
    const NetFile file = parse_net_file(read_file(in));
    if (file.net.dimension != 2) throw UsageError("analyze supports s = 2 only");
    const Rational star = star_discrepancy(file.net);
    const Rational bound = bound_0m2(file.net.base, file.m);
    json doc = {{"star", to_json(star)},
                {"bound", to_json(bound)},
                {"within_bound", star <= std::min(Rational(1), bound)}};
    if (extreme) doc["extreme"] = to_json(extreme_discrepancy(file.net));
    out << doc.dump() << "\n";
    return kExitOk;
}

int cmd_plot(const std::string& in, const PlotOptions& options, const std::string& path,
             std::ostream& out) {
    const NetFile file = parse_net_file(read_file(in));
    if (file.net.dimension < 2) throw UsageError("plot needs s >= 2");
    write_output(path, render_svg(file.net, file.m, options), out);
    return kExitOk;
}

struct SearchArgs {
    std::uint64_t base = 2;
    int m = 0;
    int s = 2;
    std::optional<std::uint64_t> budget;
    bool stall = false;
    int depth = 2;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
    require_base(a.base);
    if (a.m < 0 || a.s < 1) throw UsageError("need --m >= 0 and --s >= 1");
    const std::uint64_t budget = node_budget(a.budget);
    const json key = {{"b", a.base}, {"m", a.m}, {"s", a.s}};
    if (a.stall) {
        if (a.depth < 0) throw UsageError("--depth must be >= 0");
        const auto prefix = stall_search(a.base, a.m, a.s, a.depth, budget);
        json doc = key;
        if (!prefix) {
            doc["result"] = "none";
            out << doc.dump() << "\n";
            return kExitNegative;
        }
        json boxes = json::array();
        for (const GridBox& box : *prefix) boxes.push_back(to_json(box));
        doc["result"] = "stall";
        doc["prefix"] = boxes;
        doc["steps"] = prefix->size();
        out << doc.dump() << "\n";
        return kExitOk;
    }
    const auto witness = exhaustive_search(a.base, a.m, a.s, budget);
    if (!witness) {
        json doc = key;
        doc["result"] = "none";
        out << doc.dump() << "\n";
        return kExitNegative;
    }
    NetFile file{a.m, *witness, Provenance{"search", std::nullopt, std::nullopt, std::nullopt}};
    out << emit_net_file(file);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, verify and analyse (0,m,s)-nets in base b", "netforge"};
    app.require_subcommand(1);

    ConstructArgs construct;
    auto* c = app.add_subcommand("construct", "Build a net and write it as NetFileV1 JSON");
    c->add_option("--algorithm", construct.algorithm, "greedy|recursive|hammersley")->required();
    c->add_option("--base", construct.base, "Base b >= 2")->required();
    c->add_option("--m", construct.m, "Resolution m")->required();
    c->add_option("--s", construct.s, "Dimension (greedy only may exceed 2)");
    c->add_option("--seed", construct.seed, "Seed for random policies and placements");
    c->add_option("--policy", construct.policy, "Greedy choice policy: lex|random");
    c->add_option("--perms", construct.perms, "Recursive permutations: identity|random|FILE");
    c->add_option("--placement", construct.placement, "corner|center|random:G");
    c->add_option("--out", construct.out, "Output file (default standard output)");

    std::string verify_in;
    int verify_t = 0;
    auto* v = app.add_subcommand("verify", "Check the (t,m,s)-net property");
    v->add_option("--in", verify_in, "NetFileV1 input")->required();
    v->add_option("--t", verify_t, "Quality parameter t");

    std::string analyze_in;
    bool analyze_extreme = false;
    auto* an = app.add_subcommand("analyze", "Exact star discrepancy against the (0,m,2) bound");
    an->add_option("--in", analyze_in, "NetFileV1 input")->required();
    an->add_flag("--extreme", analyze_extreme, "Also compute the extreme discrepancy");

    std::string plot_in;
    std::string plot_out;
    PlotOptions plot_options;
    auto* p = app.add_subcommand("plot", "Render the first two axes as SVG");
    p->add_option("--in", plot_in, "NetFileV1 input")->required();
    p->add_flag("--grid", plot_options.grid, "Draw b-adic gridlines");
    p->add_flag("--boxes", plot_options.boxes, "Outline containing intervals");
    p->add_option("--out", plot_out, "Output file (default standard output)");

    SearchArgs search;
    auto* s = app.add_subcommand("search", "Exhaustive net search, or greedy stall search");
    s->add_option("--base", search.base, "Base b >= 2")->required();
    s->add_option("--m", search.m, "Resolution m")->required();
    s->add_option("--s", search.s, "Dimension")->required();
    s->add_option("--budget", search.budget, "Node budget (overrides NETFORGE_BUDGET)");
    s->add_flag("--stall", search.stall, "Search greedy choice prefixes that stall");
    s->add_option("--depth", search.depth, "Longest prefix for --stall");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c->parsed()) return cmd_construct(construct, out, err);
        if (v->parsed()) return cmd_verify(verify_in, verify_t, out);
        if (an->parsed()) return cmd_analyze(analyze_in, analyze_extreme, out);
        if (p->parsed()) return cmd_plot(plot_in, plot_options, plot_out, out);
        if (s->parsed()) return cmd_search(search, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitUsage;
}

}  // namespace netforge
