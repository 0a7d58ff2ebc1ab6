#include <codelab/error.hpp>
#include <codelab/estimate.hpp>
#include <codelab/isd.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace codelab {

using Float = boost::multiprecision::cpp_bin_float_50;
using nlohmann::json;

namespace {

Float big(const BigInt& x) { return Float(x); }
Float binf(size_t n, size_t k) { return big(binomial(n, k)); }
Float powf(uint64_t b, size_t e) { return big(boost::multiprecision::pow(BigInt(b), unsigned(e))); }

double lg(const Float& x) { return double(boost::multiprecision::log(x) / boost::multiprecision::log(Float(2))); }

unsigned bits(uint64_t q)
{
    unsigned c = 0;
    while ((uint64_t(1) << c) < q) ++c;
    return c;
}

// sum_{i=2}^{v} C(m,i) (q-1)^i: intermediate sums
Float lq(size_t m, size_t v, uint64_t q)
{
    Float s = 0;
    for (size_t i = 2; i <= v; ++i) s += binf(m, i) * powf(q - 1, i);
    return s;
}

CostReport report(const Float& success, const Float& per_iter, json params)
{
    CostReport r;
    r.log2_success = lg(success);
    r.log2_cost = lg(per_iter / success);
    if (!(r.log2_cost >= 0)) r.log2_cost = std::max(0.0, r.log2_cost);
    r.params = std::move(params);
    return r;
}

}

BigInt ball_volume(size_t r, size_t n, uint64_t q)
{
    BigInt s = 0;
    for (size_t i = 0; i <= std::min(r, n); ++i) s += binomial(n, i) * boost::multiprecision::pow(BigInt(q - 1), unsigned(i));
    return s;
}

double entropy_q(double x, double q)
{
    if (x < 0 || x > 1) fail(Errc::invalid_argument, "entropy argument outside [0,1]");
    auto xl = [q](double a) { return a <= 0 ? 0.0 : a * std::log(a) / std::log(q); };
    return x * std::log(q - 1) / std::log(q) - xl(x) - xl(1 - x);
}

double inverse_entropy_q(double y, double q)
{
    double lo = 0, hi = 1 - 1 / q;
    if (y <= 0) return 0;
    if (y >= 1) return hi;
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        (entropy_q(mid, q) < y ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

size_t gv_distance(size_t n, size_t k, uint64_t q)
{
    if (k < 1 || k > n) fail(Errc::invalid_argument, "need 1 <= k <= n");
    BigInt bound = boost::multiprecision::pow(BigInt(q), unsigned(n - k));
    // V(d-2, n-1) grows with d; d = 1 has the empty ball
    size_t d = 1;
    while (d + 1 <= n + 1 && ball_volume(d + 1 - 2, n - 1, q) < bound) ++d;
    return d;
}

json to_json(const CostReport& c)
{
    return {{"log2_cost", c.log2_cost}, {"log2_success", c.log2_success}, {"params", c.params}};
}

CostReport prange_cost(size_t n, size_t k, size_t t, uint64_t q)
{
    if (k > n || t > n - k) fail(Errc::infeasible_params, "need t <= n - k");
    unsigned c = bits(q);
    Float success = binf(n - k, t) / binf(n, t);
    Float iter = Float((n - k) * (n - k)) * Float(n + 1) * Float(c + c * c);
    return report(success, iter, {{"alg", "prange"}, {"n", n}, {"k", k}, {"t", t}, {"q", q}});
}

CostReport stern_cost(size_t n, size_t k, size_t t, uint64_t q, size_t ell, size_t v, size_t m1)
{
    if (k > n || t > n) fail(Errc::infeasible_params, "bad code parameters");
    check_stern({ell, v, m1}, n, k, t);
    if (!m1) m1 = k / 2;
    size_t m2 = k - m1;
    unsigned c = bits(q);
    Float success = binf(m1, v) * binf(m2, v) * binf(n - k - ell, t - 2 * v) / binf(n, t);
    Float elim = Float((n - k) * (n - k)) * Float(n + 1) * Float(c + c * c);
    Float lists = Float((m1 + m2) * ell) * c * c +
                  Float(ell) * (lq(m1, v, q) + lq(m2, v, q) + binf(m2, v) * powf(q - 1, v)) * c;
    Float coll = binf(m1, v) * binf(m2, v) * powf(q - 1, 2 * v) / powf(q, ell);
    Float abort_len = std::min(Float(n - k - ell), Float(q) / Float(q - 1) * Float(t - 2 * v + 1));
    Float check = coll * abort_len * Float(2 * v) * Float(c * c + c);
    return report(success, elim + lists + check,
                  {{"alg", "stern"}, {"n", n}, {"k", k}, {"t", t}, {"q", q}, {"ell", ell}, {"v", v}, {"m1", m1}});
}

CostReport stern_cost_opt(size_t n, size_t k, size_t t, uint64_t q)
{
    std::optional<CostReport> best;
    for (size_t ell = 0; ell <= n - k; ++ell) {
        for (size_t v = 0; v <= t / 2; ++v) {
            try {
                auto c = stern_cost(n, k, t, q, ell, v);
                if (!best || c.log2_cost < best->log2_cost) best = c;
            } catch (const Error&) {
            }
        }
    }
    if (!best) fail(Errc::infeasible_params, "no feasible (ell, v)");
    return *best;
}

double merge_cost_log2(double l1, double l2, size_t u, size_t len)
{
    auto xlog = [](double x) { return x * std::log2(std::max(x, 1.0)); };
    return std::log2((l1 + l2) * u * len + xlog(l1) + xlog(l2) + len * l1 * l2 * std::pow(2.0, -double(u)));
}

CostReport bjmm_cost(size_t n, size_t k, size_t t, size_t ell, size_t v, size_t eps1, size_t eps2)
{
    auto sh = bjmm_shape({ell, v, eps1, eps2, std::nullopt, std::nullopt}, n, k, t);
    size_t m = k + ell;
    Float success = binf(n - k - ell, t - v) * binf(m, v) / binf(n, t);
    // base lists on halves; odd sizes take the geometric mean of the two halves
    Float b = boost::multiprecision::sqrt(binf(m / 2, sh.v2 / 2) * binf(m - m / 2, sh.v2 - sh.v2 / 2));
    Float l2 = binf(m, sh.v2) / powf(2, sh.u2);
    Float l1 = binf(m, sh.v1) / powf(2, sh.u1);
    auto xlog = [](const Float& x) { return x < 1 ? Float(0) : x * boost::multiprecision::log2(x); };
    Float len = Float(m);
    Float iter = Float((n - k - ell) * (n - k - ell)) * Float(n + 1);
    iter += 4 * (2 * b * sh.u2 * len + 2 * xlog(b) + len * b * b / powf(2, sh.u2));
    iter += 2 * (2 * l2 * sh.u1 * len + 2 * xlog(l2) + len * l2 * l2 / powf(2, sh.u1));
    iter += 2 * l1 * ell * len + 2 * xlog(l1) + len * l1 * l1 / powf(2, ell);
    iter += binf(m, v) / powf(2, ell) * 2 * Float(t - v + 1) * v;
    return report(success, iter,
                  {{"alg", "bjmm"}, {"n", n}, {"k", k}, {"t", t}, {"ell", ell}, {"v", v}, {"eps1", eps1},
                   {"eps2", eps2}, {"u1", sh.u1}, {"u2", sh.u2}});
}

CostReport rank_isd_cost(RankIsd variant, uint64_t q, size_t m, size_t n, size_t k, size_t t)
{
    if (q < 2 || k > n || t > std::min(m, n)) fail(Errc::infeasible_params, "bad rank parameters");
    double lq2 = std::log2(double(q));
    CostReport r;
    r.log2_success = 0;
    switch (variant) {
    case RankIsd::basis_enum:
        r.log2_cost = double(t * m) * lq2;
        r.params = {{"alg", "basis_enum"}};
        break;
    case RankIsd::matrix_enum:
        r.log2_cost = t ? double((t - 1) * (k + 1)) * lq2 : 0;
        r.params = {{"alg", "matrix_enum"}};
        break;
    case RankIsd::algebraic: {
        double e = double(t) * std::ceil(double((k + 1) * m) / double(n)) - double(n);
        r.log2_cost = 3 * std::log2(double(n - k)) + e * lq2;
        r.params = {{"alg", "algebraic"}};
        break;
    }
    }
    r.params.update({{"q", q}, {"m", m}, {"n", n}, {"k", k}, {"t", t}});
    return r;
}

}
