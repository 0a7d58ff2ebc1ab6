#pragma once

#include <codelab/isd.hpp>

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace codelab {

// ground set T and triples U over indices into T; repeated triples are allowed
struct TdmInstance {
    std::vector<std::string> ground;
    std::vector<std::array<size_t, 3>> triples;
};
// indices into the triple list
using Matching = std::vector<size_t>;

bool is_matching(const TdmInstance& inst, const Matching& w);
// throws TooLarge when C(u, t) exceeds the budget
std::optional<Matching> brute_force_3dm(const TdmInstance& inst, uint64_t budget = default_enum_budget);
// with plant, the first t triples form a matching before shuffling
TdmInstance random_tdm(size_t t, size_t u, bool plant, Rng& rng);

nlohmann::json to_json(const TdmInstance& inst);
TdmInstance tdm_from_json(const nlohmann::json& j);

// H is 3t x u: column i is the incidence vector of triple i; s is all ones; weight t
SdpInstance tdm_to_sdp(const TdmInstance& inst, FieldPtr f);
Vec matching_to_vector(const TdmInstance& inst, const Matching& w);
// throws NotAValidSolution
Matching sdp_solution_to_matching(const TdmInstance& inst, const Vec& e);

struct GwcpInstance {
    Matrix h; // (3tu + 3t) x (3tu + 3t + u)
    size_t w = 0; // 3t^2 + 4t
};
GwcpInstance tdm_to_gwcp(const TdmInstance& inst, FieldPtr f);
// a codeword of weight exactly w, by walking the code (dimension u)
std::optional<Vec> gwcp_bruteforce(const GwcpInstance& g, uint64_t budget = default_enum_budget);
// the first u coordinates of c; throws NotAValidSolution
Matching gwcp_solution_to_matching(const TdmInstance& inst, const GwcpInstance& g, const Vec& c);

}
