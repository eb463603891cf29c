#pragma once

// Interchange formats. Coordinates travel as integer numerators so files
// are exact and byte-stable; emitted JSON is compact with sorted keys.
//
// NetFileV1:
//   {"b":B,"g":G,"m":M,"points":[[n,...],...],
//    "provenance":{"algorithm":"greedy|recursive|hammersley|search",
//                  "permutations":[...],"policy":"lex|random","seed":N},
//    "s":S,"version":1}
// provenance fields other than "algorithm" are optional.
//
// Permutation family:
//   {"b":B,"levels":[[[perm],...],...],"m":M}

#include "netforge/netpoints.hpp"
#include "netforge/rational.hpp"
#include "netforge/recursive.hpp"
#include "netforge/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace netforge {

struct Provenance {
    std::string algorithm;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> policy;
    std::optional<std::vector<std::vector<std::vector<std::uint32_t>>>> permutations;

    bool operator==(const Provenance&) const = default;
};

struct NetFile {
    int m = 0;
    NetPoints net;
    Provenance provenance;

    bool operator==(const NetFile&) const = default;
};

// Checks the NetFileV1 invariants; throws FormatError.
void validate(const NetFile& file);

std::string emit_net_file(const NetFile& file);
NetFile parse_net_file(const std::string& text);

std::vector<std::vector<std::vector<std::uint32_t>>> family_levels(const PermutationFamily& family);
std::string emit_family(const PermutationFamily& family, int m);
PermutationFamily parse_family(const std::string& text, int* m_out = nullptr);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const NetReport& report);
nlohmann::json to_json(const GridBox& box);

}  // namespace netforge
