#include <codelab/error.hpp>
#include <codelab/estimate.hpp>

#include <cmath>

namespace codelab {

using nlohmann::json;

namespace {

uint64_t ceil_div(uint64_t a, uint64_t b) { return (a + b - 1) / b; }

uint64_t ceil_log2(uint64_t x)
{
    uint64_t c = 0;
    while ((uint64_t(1) << c) < x) ++c;
    return c;
}

struct CmRow {
    const char* name;
    uint64_t m, n, t;
};
constexpr CmRow cm_rows[] = {
    {"348864", 12, 3488, 64},   {"460896", 13, 4608, 96},   {"6688128", 13, 6688, 128},
    {"6960119", 13, 6960, 119}, {"8192128", 13, 8192, 128},
};

struct BikeRow {
    const char* level;
    uint64_t r, w, t;
};
constexpr BikeRow bike_rows[] = {{"1", 12323, 142, 134}, {"3", 24659, 206, 199}, {"5", 40973, 274, 264}};

// n1 n2: length of the concatenated Reed-Muller/Reed-Solomon code carried in v
struct HqcRow {
    const char* level;
    uint64_t n, w, we, n1, n2;
};
constexpr HqcRow hqc_rows[] = {
    {"1", 17669, 66, 75, 46, 384}, {"3", 35851, 100, 114, 56, 640}, {"5", 57637, 131, 149, 90, 640}};

std::string strip(std::string s, const std::string& prefix)
{
    if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
    return s;
}

}

json to_json(const NistSizes& s)
{
    return {{"scheme", s.scheme}, {"level", s.level}, {"pk_bytes", s.pk},
            {"sk_bytes", s.sk},   {"ct_bytes", s.ct},  {"params", s.params}};
}

NistSizes nist_sizes(const std::string& scheme, const std::string& level)
{
    NistSizes out;
    out.scheme = scheme;
    if (scheme == "classic-mceliece") {
        std::string l = strip(level, "mceliece");
        for (auto& r : cm_rows) {
            if (l != r.name) continue;
            uint64_t mt = r.m * r.t;
            out.level = r.name;
            // systematic T is mt x (n - mt), rows padded to bytes
            out.pk = mt * ceil_div(r.n - mt, 8);
            // delta, checksum, g coefficients, control bits of the Benes network, s
            out.sk = 32 + 8 + 2 * r.t + (uint64_t(1) << (r.m - 4)) * (2 * r.m - 1) + r.n / 8;
            out.ct = ceil_div(mt, 8) + 32;
            out.params = {{"m", r.m}, {"n", r.n}, {"t", r.t}};
            return out;
        }
    } else if (scheme == "bike") {
        std::string l = strip(level, "level");
        for (auto& r : bike_rows) {
            if (l != r.level) continue;
            out.level = r.level;
            out.pk = ceil_div(r.r, 8);
            // h0, h1 stored as index lists of ceil(log2 r) bits, plus sigma
            out.sk = ceil_div(r.w * ceil_log2(r.r), 8) + 32;
            out.ct = ceil_div(r.r, 8) + 32;
            out.params = {{"r", r.r}, {"w", r.w}, {"t", r.t}};
            return out;
        }
    } else if (scheme == "hqc") {
        std::string l = strip(level, "level");
        for (auto& r : hqc_rows) {
            if (l != r.level) continue;
            out.level = r.level;
            // s packed plus the 40-byte seed that regenerates h
            out.pk = ceil_div(r.n, 8) + 40;
            out.sk = 40;
            // u, v truncated to n1 n2 bits, and the 64-byte salt and hash
            out.ct = ceil_div(r.n, 8) + r.n1 * r.n2 / 8 + 64;
            out.params = {{"n", r.n}, {"w", r.w}, {"w_e", r.we}, {"n1", r.n1}, {"n2", r.n2}};
            return out;
        }
    } else {
        fail(Errc::unknown_param_set, "unknown scheme: " + scheme);
    }
    fail(Errc::unknown_param_set, "unknown level " + level + " for " + scheme);
}

std::vector<NistSizes> nist_table()
{
    std::vector<NistSizes> out;
    for (auto& r : cm_rows) out.push_back(nist_sizes("classic-mceliece", r.name));
    for (auto& r : bike_rows) out.push_back(nist_sizes("bike", r.level));
    for (auto& r : hqc_rows) out.push_back(nist_sizes("hqc", r.level));
    return out;
}

}
