#pragma once

#include <codelab/pke.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace codelab {

// sum_{i <= r} C(n, i) (q-1)^i
BigInt ball_volume(size_t r, size_t n, uint64_t q);
// q-ary entropy with 0 log 0 = 0
double entropy_q(double x, double q);
// the x in [0, 1 - 1/q] with h_q(x) = y
double inverse_entropy_q(double y, double q);
// largest d with V(d - 2, n - 1, q) < q^(n-k)
size_t gv_distance(size_t n, size_t k, uint64_t q);

struct CostReport {
    double log2_cost = 0;
    double log2_success = 0; // per iteration
    nlohmann::json params;
};
nlohmann::json to_json(const CostReport& c);

// one F_q addition costs ceil(log2 q) bit operations, one multiplication ceil(log2 q)^2
CostReport prange_cost(size_t n, size_t k, size_t t, uint64_t q);
// m1 = 0 means floor(k/2)
CostReport stern_cost(size_t n, size_t k, size_t t, uint64_t q, size_t ell, size_t v, size_t m1 = 0);
// exhaustive over ell in [0, n-k] and v in [0, t/2]
CostReport stern_cost_opt(size_t n, size_t k, size_t t, uint64_t q);
// binary; u1, u2 from the representation counts as in bjmm_shape
CostReport bjmm_cost(size_t n, size_t k, size_t t, size_t ell, size_t v, size_t eps1, size_t eps2);
double merge_cost_log2(double l1, double l2, size_t u, size_t len);

enum class IsdAlg { prange, stern, bjmm };
IsdAlg isd_alg_from_string(const std::string& s);

struct AsymptoticPoint {
    double rate = 0;
    double distance = 0; // relative error weight T
    double exponent = 0; // cost = q^((e + o(1)) n)
    nlohmann::json params;
};
nlohmann::json to_json(const AsymptoticPoint& p);

// error weight at the Gilbert-Varshamov distance, T = h_q^-1(1 - R)
double gv_weight(double rate, double q);
// internal parameters optimized at a fixed rate
AsymptoticPoint asymptotic_at(IsdAlg alg, double rate, uint32_t q);
// maximized over the rate
AsymptoticPoint asymptotic_exponent(IsdAlg alg, uint32_t q);
// H_q(T) - (1-R) H_q(T / (1-R))
double prange_exponent_closed(double rate, double t, double q);

enum class RankIsd { basis_enum, matrix_enum, algebraic };
CostReport rank_isd_cost(RankIsd variant, uint64_t q, size_t m, size_t n, size_t k, size_t t);

struct NistSizes {
    std::string scheme, level;
    uint64_t pk = 0, sk = 0, ct = 0;
    nlohmann::json params;
};
nlohmann::json to_json(const NistSizes& s);
// scheme: classic-mceliece, bike, hqc
NistSizes nist_sizes(const std::string& scheme, const std::string& level);
std::vector<NistSizes> nist_table();

}
