#pragma once

#include <codelab/error.hpp>
#include <codelab/isd.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>

namespace codelab::isd_detail {

inline double choose(double n, double k)
{
    if (k < 0 || k > n) return 0;
    return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

inline uint64_t default_iters(double expected)
{
    if (!(expected < 1e15)) fail(Errc::infeasible_params, "this weight distribution never occurs");
    return 100 * (uint64_t)std::ceil(std::max(1.0, expected));
}

// U with U * H restricted to `order` equal to the identity, or nullopt when singular
std::optional<Matrix> invert_cols(const Matrix& h, const std::vector<size_t>& order);

// every vector of weight w on `cols.size()` positions, each visited with its sum of scaled columns;
// fn returns true to stop
using SumVisitor = std::function<bool(const std::vector<size_t>& pos, const std::vector<Elt>& val, const Vec& sum)>;
bool for_each_sum(const Field& f, const std::vector<Vec>& cols, size_t w, size_t len, const SumVisitor& fn);

double count_weight(size_t n, size_t w, size_t q);

// step result: -1 rejected draw, 0 failed iteration, 1 solved
using Step = std::function<int(Rng&, IsdResult&)>;
IsdResult run_loop(const SdpInstance& inst, const IsdOptions& o, uint64_t max_iters, const Step& step);
IsdSolution require(const SdpInstance& inst, IsdResult r, Errc none);

}
