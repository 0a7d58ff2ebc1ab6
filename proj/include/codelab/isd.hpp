#pragma once

#include <codelab/code.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace codelab {

// find e with e H^T = s and wt(e) <= t
struct SdpInstance {
    Matrix h;
    Vec s;
    size_t t = 0;
};

// drops dependent rows of H; throws NoSolution when s is inconsistent with them
SdpInstance normalize(const SdpInstance& inst);
bool is_solution(const SdpInstance& inst, const Vec& e);

struct PlantedSdp {
    SdpInstance inst;
    Vec e; // weight exactly t, on independent columns of H when t <= n - k
};
PlantedSdp random_sdp(FieldPtr f, size_t n, size_t k, size_t t, Rng& rng);

struct IsdStats {
    uint64_t iterations = 0; // information sets actually used
    uint64_t draws = 0;      // rejected draws (singular complement, failed partial elimination)
    uint64_t collisions = 0;
    uint64_t final_list = 0;
    std::vector<uint64_t> per_iteration; // collisions (stern) or final list size (bjmm, wagner), when recorded
};

struct IsdSolution {
    Vec e;
    IsdStats stats;
    double seconds = 0;
    std::vector<std::vector<size_t>> transcript; // information sets, when recorded
};

struct IsdOptions {
    uint64_t seed = 0;
    uint64_t max_iters = 0; // 0: 100 * ceil(expected iterations)
    bool record = false;
    uint64_t budget = default_enum_budget; // cap on enumerated vectors per iteration
};

// searches that may come back empty; the plain solvers below throw IterationLimit instead
struct IsdResult {
    std::optional<Vec> e;
    IsdStats stats;
    double seconds = 0;
    std::vector<std::vector<size_t>> transcript;
};

// lexicographically least among the minimum-weight solutions; NoSolution when none
IsdSolution brute_force_sdp(const SdpInstance& inst, uint64_t budget = default_enum_budget);

// ---- Prange

struct PrangeTry {
    bool information_set = false;
    Matrix uh; // U H with the identity on the complement
    Vec s_prime;
    std::optional<Vec> e;
};
// one iteration with a fixed information set (0-based)
PrangeTry prange_try(const SdpInstance& inst, const std::vector<size_t>& info);
IsdResult prange_search(const SdpInstance& inst, const IsdOptions& o = {});
IsdSolution prange(const SdpInstance& inst, const IsdOptions& o = {});

// ---- Lee-Brickell: v errors inside the information set

IsdResult lee_brickell_search(const SdpInstance& inst, size_t v, const IsdOptions& o = {});
IsdSolution lee_brickell(const SdpInstance& inst, size_t v, const IsdOptions& o = {});

// ---- Stern

struct SternParams {
    size_t ell = 0;    // zero window
    size_t v = 0;      // errors per half of the information set
    size_t m1 = 0;     // 0: floor(k/2)
    bool early_abort = true;
};
void check_stern(const SternParams& p, size_t n, size_t k, size_t t);
IsdResult stern_search(const SdpInstance& inst, const SternParams& p, const IsdOptions& o = {});
IsdSolution stern(const SdpInstance& inst, const SternParams& p, const IsdOptions& o = {});
// C(m1,v) C(m2,v) (q-1)^(2v) / q^ell
double stern_expected_collisions(size_t q, size_t k, const SternParams& p);

// ---- merge and BJMM (binary)

// {x + y : (B x^T)|u = (B y^T)|u + target, wt(x + y) = w}, deduplicated and sorted
std::vector<Vec> merge_lists(const std::vector<Vec>& l1, const std::vector<Vec>& l2, size_t u, const Vec& target,
                             size_t w, const Matrix& b);

struct BjmmParams {
    size_t ell = 0, v = 0, eps1 = 0, eps2 = 0;
    std::optional<size_t> u1, u2; // default: log2 of the representation counts, clamped
};
struct BjmmShape {
    size_t v1, v2, u1, u2;
};
BjmmShape bjmm_shape(const BjmmParams& p, size_t n, size_t k, size_t t);
IsdResult bjmm_search(const SdpInstance& inst, const BjmmParams& p, const IsdOptions& o = {});
IsdSolution bjmm(const SdpInstance& inst, const BjmmParams& p, const IsdOptions& o = {});

// ---- Wagner on a in {1, 2} levels after partial elimination

struct WagnerParams {
    size_t a = 1, ell = 0, v = 0;
    std::vector<size_t> u; // cumulative merge positions, ending at ell; empty: even spacing
};
// product of base list sizes over q^(sum of merged positions)
double wagner_expected_list(size_t q, size_t n, size_t k, const WagnerParams& p);
IsdResult wagner_search(const SdpInstance& inst, const WagnerParams& p, const IsdOptions& o = {});
// default max_iters is 1 attempt; NoSolutionFound when nothing survives
IsdSolution wagner(const SdpInstance& inst, const WagnerParams& p, const IsdOptions& o = {});

// instance files for the command line: matrix text, then a line "s <hex>", then "t <weight>"
std::string write_instance(const SdpInstance& inst);
SdpInstance read_instance(const std::string& text);

}
