#include "netforge/netfile.hpp"

#include "netforge/errors.hpp"

namespace netforge {

using nlohmann::json;

namespace {

const char* const kAlgorithms[] = {"greedy", "recursive", "hammersley", "search"};

template <typename T>
T field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

void validate(const NetFile& file) {
    const NetPoints& net = file.net;
    if (net.base < 2) throw FormatError("b must be >= 2");
    if (file.m < 0) throw FormatError("m must be >= 0");
    if (net.dimension < 1) throw FormatError("s must be >= 1");
    if (net.exponent < file.m) throw FormatError("g must be >= m");
    std::uint64_t expected = 0;
    try {
        net.validate();
        expected = checked_pow(net.base, file.m);
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
    if (net.size() != expected) {
        throw FormatError("expected b^m = " + std::to_string(expected) + " points, got " +
                          std::to_string(net.size()));
    }
    bool known = false;
    for (const char* name : kAlgorithms) known = known || file.provenance.algorithm == name;
    if (!known) throw FormatError("unknown algorithm \"" + file.provenance.algorithm + "\"");
}

std::string emit_net_file(const NetFile& file) {
    validate(file);
    json prov = {{"algorithm", file.provenance.algorithm}};
    if (file.provenance.seed) prov["seed"] = *file.provenance.seed;
    if (file.provenance.policy) prov["policy"] = *file.provenance.policy;
    if (file.provenance.permutations) prov["permutations"] = *file.provenance.permutations;
    const json doc = {
        {"version", 1},
        {"b", file.net.base},
        {"m", file.m},
        {"s", file.net.dimension},
        {"g", file.net.exponent},
        {"points", file.net.points},
        {"provenance", prov},
    };
    return doc.dump() + "\n";
}

NetFile parse_net_file(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw FormatError("net file must be a JSON object");
    if (field<int>(doc, "version") != 1) throw FormatError("unsupported version");
    NetFile file;
    file.m = field<int>(doc, "m");
    file.net.base = field<std::uint64_t>(doc, "b");
    file.net.dimension = field<int>(doc, "s");
    file.net.exponent = field<int>(doc, "g");
    file.net.points = field<std::vector<Point>>(doc, "points");
    const json prov = field<json>(doc, "provenance");
    if (!prov.is_object()) throw FormatError("provenance must be an object");
    file.provenance.algorithm = field<std::string>(prov, "algorithm");
    if (prov.contains("seed")) file.provenance.seed = field<std::uint64_t>(prov, "seed");
    if (prov.contains("policy")) file.provenance.policy = field<std::string>(prov, "policy");
    if (prov.contains("permutations")) {
        file.provenance.permutations =
            field<std::vector<std::vector<std::vector<std::uint32_t>>>>(prov, "permutations");
    }
    validate(file);
    return file;
}

std::vector<std::vector<std::vector<std::uint32_t>>> family_levels(const PermutationFamily& family) {
    std::vector<std::vector<std::vector<std::uint32_t>>> out;
    for (const auto& level : family.all_levels()) {
        auto& row = out.emplace_back();
        for (const Permutation& p : level) row.push_back(p.image());
    }
    return out;
}

std::string emit_family(const PermutationFamily& family, int m) {
    const json doc = {{"b", family.base()}, {"m", m}, {"levels", family_levels(family)}};
    return doc.dump() + "\n";
}

PermutationFamily parse_family(const std::string& text, int* m_out) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw FormatError("permutation file must be a JSON object");
    const auto b = field<std::uint64_t>(doc, "b");
    const int m = field<int>(doc, "m");
    const auto raw = field<std::vector<std::vector<std::vector<std::uint32_t>>>>(doc, "levels");
    if (static_cast<int>(raw.size()) != m) {
        throw FormatError("permutation file has " + std::to_string(raw.size()) +
                          " levels, expected m = " + std::to_string(m));
    }
    try {
        std::vector<std::vector<Permutation>> levels;
        for (const auto& level : raw) {
            auto& row = levels.emplace_back();
            for (const auto& image : level) row.emplace_back(image);
        }
        if (m_out) *m_out = m;
        return PermutationFamily(b, std::move(levels));
    } catch (const InvalidArgument& e) {
        throw FormatError(e.what());
    }
}

json to_json(const Rational& r) {
    return {{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_decimal()}};
}

json to_json(const NetReport& report) {
    json violations = json::array();
    for (const Violation& v : report.violations) {
        violations.push_back({{"shape", v.interval.shape.dims},
                              {"cells", v.interval.cells},
                              {"count", v.count}});
    }
    return {{"passed", report.passed}, {"b", report.base},  {"m", report.m},
            {"s", report.s},           {"t", report.t},     {"checked", report.checked},
            {"violations", violations}};
}

json to_json(const GridBox& box) { return box.corner; }

}  // namespace netforge
