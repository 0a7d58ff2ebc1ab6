#include <codelab/error.hpp>
#include <codelab/estimate.hpp>

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

namespace codelab {

using nlohmann::json;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// (1/n) log_q C(a n, b n); +inf marks an infeasible pair
double hb(double a, double b, double q)
{
    const double tol = 1e-12;
    if (a < -tol || b < -tol || b > a + tol) return inf;
    a = std::max(a, 0.0);
    b = std::clamp(b, 0.0, a);
    auto xl = [q](double x) { return x <= 0 ? 0.0 : x * std::log(x) / std::log(q); };
    return xl(a) - xl(b) - xl(a - b);
}

template <size_t N>
using Point = std::array<double, N>;

// plain Nelder-Mead; the objectives here are piecewise smooth maxima
template <size_t N>
Point<N> nelder_mead(const std::function<double(const Point<N>&)>& f, Point<N> x0, double step, int iters)
{
    std::array<Point<N>, N + 1> s;
    std::array<double, N + 1> v;
    s[0] = x0;
    for (size_t i = 0; i < N; ++i) {
        s[i + 1] = x0;
        s[i + 1][i] += step;
    }
    for (size_t i = 0; i <= N; ++i) v[i] = f(s[i]);
    for (int it = 0; it < iters; ++it) {
        std::array<size_t, N + 1> idx;
        for (size_t i = 0; i <= N; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
        size_t best = idx[0], worst = idx[N], second = idx[N - 1];
        Point<N> c{};
        for (size_t i = 0; i <= N; ++i)
            if (i != worst)
                for (size_t d = 0; d < N; ++d) c[d] += s[i][d] / N;
        auto along = [&](double a) {
            Point<N> p;
            for (size_t d = 0; d < N; ++d) p[d] = c[d] + a * (s[worst][d] - c[d]);
            return p;
        };
        Point<N> r = along(-1);
        double fr = f(r);
        if (fr < v[best]) {
            Point<N> e = along(-2);
            double fe = f(e);
            if (fe < fr) s[worst] = e, v[worst] = fe;
            else s[worst] = r, v[worst] = fr;
        } else if (fr < v[second]) {
            s[worst] = r, v[worst] = fr;
        } else {
            Point<N> k = along(fr < v[worst] ? -0.5 : 0.5);
            double fk = f(k);
            if (fk < std::min(fr, v[worst])) {
                s[worst] = k, v[worst] = fk;
            } else {
                for (size_t i = 0; i <= N; ++i) {
                    if (i == best) continue;
                    for (size_t d = 0; d < N; ++d) s[i][d] = s[best][d] + 0.5 * (s[i][d] - s[best][d]);
                    v[i] = f(s[i]);
                }
            }
        }
    }
    size_t b = std::min_element(v.begin(), v.end()) - v.begin();
    return s[b];
}

double stern_exponent(const Point<2>& x, double r, double t, double q)
{
    auto [lam, p] = x;
    if (lam < 0 || p < 0) return inf;
    double half = hb(r / 2, p, q), rest = hb(1 - r - lam, t - 2 * p, q);
    if (half == inf || rest == inf) return inf;
    double list = half + p * std::log(q - 1) / std::log(q);
    return hb(1, t, q) - 2 * half - rest + std::max(list, 2 * list - lam);
}

double bjmm_exponent(const Point<4>& x, double r, double t)
{
    auto [lam, p, e1, e2] = x;
    if (lam < 0 || p < 0 || e1 < 0 || e2 < 0) return inf;
    double m = r + lam, p1 = p / 2 + e1, p2 = p1 / 2 + e2;
    double u1 = hb(p, p / 2, 2) + hb(m - p, e1, 2);
    double u2 = hb(p1, p1 / 2, 2) + hb(m - p1, e2, 2);
    double base = hb(m / 2, p2 / 2, 2), c2 = hb(m, p2, 2), c1 = hb(m, p1, 2), c0 = hb(m, p, 2);
    double rest = hb(1 - m, t - p, 2);
    for (double y : {u1, u2, base, c2, c1, c0, rest})
        if (y == inf) return inf;
    if (!(u2 <= u1 && u1 <= lam)) return inf;
    double l2 = c2 - u2, l1 = c1 - u1, l0 = c0 - lam;
    double work = std::max({base, l2, 2 * l2 - (u1 - u2), l1, 2 * l1 - (lam - u1), l0});
    return hb(1, t, 2) - c0 - rest + work;
}

}

double gv_weight(double rate, double q) { return inverse_entropy_q(1 - rate, q); }

double prange_exponent_closed(double rate, double t, double q)
{
    return entropy_q(t, q) - (1 - rate) * entropy_q(t / (1 - rate), q);
}

IsdAlg isd_alg_from_string(const std::string& s)
{
    if (s == "prange") return IsdAlg::prange;
    if (s == "stern") return IsdAlg::stern;
    if (s == "bjmm") return IsdAlg::bjmm;
    fail(Errc::invalid_argument, "unknown algorithm: " + s);
}

json to_json(const AsymptoticPoint& p)
{
    return {{"rate", p.rate}, {"distance", p.distance}, {"exponent", p.exponent}, {"params", p.params}};
}

AsymptoticPoint asymptotic_at(IsdAlg alg, double rate, uint32_t q)
{
    if (!(rate > 0 && rate < 1)) fail(Errc::invalid_argument, "rate must lie in (0,1)");
    if (alg == IsdAlg::bjmm && q != 2) fail(Errc::field_mismatch, "BJMM exponents are binary");
    AsymptoticPoint pt;
    pt.rate = rate;
    double t = pt.distance = gv_weight(rate, q);
    double dq = q;
    switch (alg) {
    case IsdAlg::prange:
        pt.exponent = hb(1, t, dq) - hb(1 - rate, t, dq);
        break;
    case IsdAlg::stern: {
        auto f = [&](const Point<2>& x) { return stern_exponent(x, rate, t, dq); };
        Point<2> best{0, 0};
        double bv = f(best);
        for (double lam = 0; lam <= 0.3; lam += 0.005)
            for (double p = 0; p <= 0.05; p += 0.001)
                if (double v = f({lam, p}); v < bv) bv = v, best = {lam, p};
        for (int round = 0; round < 2; ++round) best = nelder_mead<2>(f, best, 0.002, 600);
        pt.exponent = std::min(bv, f(best));
        pt.params = {{"ell", best[0]}, {"v", best[1]}};
        break;
    }
    case IsdAlg::bjmm: {
        auto f = [&](const Point<4>& x) { return bjmm_exponent(x, rate, t); };
        // lambda = p = 0 is Prange and always feasible; the grid is relative to T and 1 - R
        Point<4> best{0, 0, 0, 0};
        double bv = f(best);
        for (int a = 1; a <= 12; ++a)
            for (int b = 1; b <= 12; ++b)
                for (int c = 0; c <= 6; ++c)
                    for (int d = 0; d <= 3; ++d) {
                        double lam = (1 - rate) * a / 24, p = t * b / 12;
                        Point<4> x{lam, p, p * c / 20, p * d / 40};
                        if (double v = f(x); v < bv) bv = v, best = x;
                    }
        for (int round = 0; round < 3; ++round) best = nelder_mead<4>(f, best, std::max(best[1], 1e-4) / (4 * (round + 1)), 1500);
        double v = f(best);
        // the grid point can beat a collapsed simplex when the optimum sits on a constraint
        pt.exponent = std::min(bv, v);
        pt.params = {{"ell", best[0]}, {"v", best[1]}, {"eps1", best[2]}, {"eps2", best[3]}};
        break;
    }
    }
    return pt;
}

AsymptoticPoint asymptotic_exponent(IsdAlg alg, uint32_t q)
{
    auto neg = [&](double r) { return -asymptotic_at(alg, r, q).exponent; };
    auto [r, v] = boost::math::tools::brent_find_minima(neg, 0.2, 0.8, 30);
    (void)v;
    return asymptotic_at(alg, r, q);
}

}
