#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace codelab {

// splitmix64 step, used to derive independent child seeds
inline uint64_t mix_seed(uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(mix_seed(seed)) {}

    uint64_t next() { return eng_(); }

    // uniform in [0, n)
    uint64_t below(uint64_t n)
    {
        std::uniform_int_distribution<uint64_t> d(0, n - 1);
        return d(eng_);
    }

    // uniform in [lo, hi]
    uint64_t between(uint64_t lo, uint64_t hi)
    {
        std::uniform_int_distribution<uint64_t> d(lo, hi);
        return d(eng_);
    }

    bool coin() { return (eng_() >> 63) != 0; }

    double uniform01()
    {
        std::uniform_real_distribution<double> d(0.0, 1.0);
        return d(eng_);
    }

    // random k-subset of {0..n-1}, sorted
    std::vector<size_t> subset(size_t n, size_t k);

    // uniformly random arrangement of {0..n-1}
    std::vector<size_t> shuffle(size_t n);

    uint64_t child() { return mix_seed(eng_()); }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}
