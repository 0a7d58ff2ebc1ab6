#pragma once
// Independent reference computations used as test oracles. Nothing here calls
// into the library's arithmetic.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// carry-less product reduced by a binary modulus given as a bit mask
inline uint32_t gf2m_mul(uint32_t a, uint32_t b, uint32_t modmask, unsigned m)
{
    uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << m)) a ^= modmask;
    }
    return r;
}

inline int64_t mod(int64_t a, int64_t p) { return ((a % p) + p) % p; }

// rank over a prime field by plain elimination on int64
inline size_t rank_mod_p(std::vector<std::vector<int64_t>> a, int64_t p)
{
    size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    auto inv = [p](int64_t x) {
        int64_t res = 1, e = p - 2;
        x = mod(x, p);
        while (e) {
            if (e & 1) res = res * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return res;
    };
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t s = r;
        while (s < rows && mod(a[s][c], p) == 0) ++s;
        if (s == rows) continue;
        std::swap(a[s], a[r]);
        int64_t iv = inv(a[r][c]);
        for (auto& x : a[r]) x = mod(x * iv, p);
        for (size_t i = 0; i < rows; ++i)
            if (i != r && mod(a[i][c], p)) {
                int64_t f = a[i][c];
                for (size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
            }
        ++r;
    }
    return r;
}

// x * M over GF(p), row-vector convention
inline std::vector<int64_t> vecmat(const std::vector<int64_t>& x, const std::vector<std::vector<int64_t>>& m, int64_t p)
{
    std::vector<int64_t> out(m.empty() ? 0 : m[0].size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) out[j] = mod(out[j] + x[i] * m[i][j], p);
    return out;
}

// every vector of GF(q)^n visited in lexicographic order (q^n must be small)
inline void for_each_vector(size_t n, uint32_t q, const std::function<void(const std::vector<uint32_t>&)>& fn)
{
    std::vector<uint32_t> v(n, 0);
    for (;;) {
        fn(v);
        size_t i = n;
        while (i > 0) {
            --i;
            if (++v[i] < q) break;
            v[i] = 0;
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

inline double binom(double n, double k)
{
    if (k < 0 || k > n) return 0;
    return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

inline double log2_binom(double n, double k)
{
    return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / std::log(2.0);
}

}
