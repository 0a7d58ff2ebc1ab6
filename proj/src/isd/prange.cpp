#include "detail.hpp"

#include <algorithm>

namespace codelab {

using namespace isd_detail;

PrangeTry prange_try(const SdpInstance& inst, const std::vector<size_t>& info)
{
    size_t n = inst.h.cols();
    if (info.size() + inst.h.rows() != n) fail(Errc::bad_set_size, "information set must have n - rank elements");
    PrangeTry r;
    auto rest = complement(n, info);
    auto u = invert_cols(inst.h, rest);
    if (!u) return r;
    r.information_set = true;
    r.uh = *u * inst.h;
    r.s_prime = u->right_mul(inst.s);
    if (weight(r.s_prime) == inst.t) {
        Vec e(n, 0);
        for (size_t i = 0; i < rest.size(); ++i) e[rest[i]] = r.s_prime[i];
        r.e = e;
    }
    return r;
}

IsdResult prange_search(const SdpInstance& in, const IsdOptions& o)
{
    SdpInstance inst = normalize(in);
    size_t n = inst.h.cols(), r = inst.h.rows(), k = n - r;
    if (inst.t > r) fail(Errc::infeasible_params, "t exceeds n - k");
    uint64_t iters = o.max_iters ? o.max_iters : default_iters(choose(n, inst.t) / choose(r, inst.t));
    return run_loop(inst, o, iters, [&](Rng& rng, IsdResult& res) {
        auto info = rng.subset(n, k);
        auto rest = complement(n, info);
        auto u = invert_cols(inst.h, rest);
        if (!u) return -1;
        if (o.record) res.transcript.push_back(info);
        Vec sp = u->right_mul(inst.s);
        if (weight(sp) != inst.t) return 0;
        Vec e(n, 0);
        for (size_t i = 0; i < r; ++i) e[rest[i]] = sp[i];
        res.e = e;
        return 1;
    });
}

IsdSolution prange(const SdpInstance& inst, const IsdOptions& o)
{
    return require(inst, prange_search(inst, o), Errc::iteration_limit);
}

IsdResult lee_brickell_search(const SdpInstance& in, size_t v, const IsdOptions& o)
{
    SdpInstance inst = normalize(in);
    const Field& f = *inst.h.field();
    size_t n = inst.h.cols(), r = inst.h.rows(), k = n - r, t = inst.t;
    if (v > t || v > k || t - v > r) fail(Errc::infeasible_params, "need v <= t, v <= k and t - v <= n - k");
    if (count_weight(k, v, f.q()) > double(o.budget)) fail(Errc::too_large, "too many error patterns per iteration");
    uint64_t iters =
        o.max_iters ? o.max_iters : default_iters(choose(n, t) / (choose(k, v) * choose(r, t - v)));
    return run_loop(inst, o, iters, [&](Rng& rng, IsdResult& res) {
        auto info = rng.subset(n, k);
        auto rest = complement(n, info);
        auto u = invert_cols(inst.h, rest);
        if (!u) return -1;
        if (o.record) res.transcript.push_back(info);
        Matrix uh = *u * inst.h;
        Vec sp = u->right_mul(inst.s);
        std::vector<Vec> cols(k);
        for (size_t i = 0; i < k; ++i) cols[i] = uh.col(info[i]);
        bool found = for_each_sum(f, cols, v, r, [&](auto& pos, auto& val, const Vec& sum) {
            Vec ej = vsub(f, sp, sum);
            if (weight(ej) != t - v) return false;
            Vec e(n, 0);
            for (size_t i = 0; i < pos.size(); ++i) e[info[pos[i]]] = val[i];
            for (size_t i = 0; i < r; ++i) e[rest[i]] = ej[i];
            res.e = e;
            return true;
        });
        return found ? 1 : 0;
    });
}

IsdSolution lee_brickell(const SdpInstance& inst, size_t v, const IsdOptions& o)
{
    return require(inst, lee_brickell_search(inst, v, o), Errc::iteration_limit);
}

void check_stern(const SternParams& p, size_t n, size_t k, size_t t)
{
    size_t m1 = p.m1 ? p.m1 : k / 2;
    if (m1 > k) fail(Errc::infeasible_params, "m1 exceeds k");
    size_t m2 = k - m1;
    if (p.ell > n - k) fail(Errc::infeasible_params, "window exceeds n - k");
    if (p.v > std::min({m1, m2, t / 2})) fail(Errc::infeasible_params, "need v <= min(m1, m2, t/2)");
    if (t - 2 * p.v > n - k - p.ell) fail(Errc::infeasible_params, "t - 2v exceeds n - k - ell");
}

double stern_expected_collisions(size_t q, size_t k, const SternParams& p)
{
    size_t m1 = p.m1 ? p.m1 : k / 2, m2 = k - m1;
    return count_weight(m1, p.v, q) * count_weight(m2, p.v, q) / std::pow(double(q), double(p.ell));
}

namespace {

struct Half {
    Vec key;
    std::vector<size_t> pos;
    std::vector<Elt> val;
};

}

IsdResult stern_search(const SdpInstance& in, const SternParams& p, const IsdOptions& o)
{
    SdpInstance inst = normalize(in);
    const Field& f = *inst.h.field();
    size_t n = inst.h.cols(), r = inst.h.rows(), k = n - r, t = inst.t, q = f.q();
    check_stern(p, n, k, t);
    size_t m1 = p.m1 ? p.m1 : k / 2, m2 = k - m1, ell = p.ell, v = p.v;
    if (std::max(count_weight(m1, v, q), count_weight(m2, v, q)) > double(o.budget))
        fail(Errc::too_large, "lists exceed the budget");
    double expected = choose(n, t) / (choose(m1, v) * choose(m2, v) * choose(r - ell, t - 2 * v));
    uint64_t iters = o.max_iters ? o.max_iters : default_iters(expected);

    return run_loop(inst, o, iters, [&](Rng& rng, IsdResult& res) {
        auto info = rng.subset(n, k);
        auto rest = complement(n, info);
        auto zs = rng.subset(r, ell);
        std::vector<size_t> order, tail;
        for (size_t i : zs) order.push_back(rest[i]);
        std::vector<char> in_z(r, 0);
        for (size_t i : zs) in_z[i] = 1;
        for (size_t i = 0; i < r; ++i)
            if (!in_z[i]) tail.push_back(rest[i]);
        order.insert(order.end(), tail.begin(), tail.end());
        auto u = invert_cols(inst.h, order);
        if (!u) return -1;
        if (o.record) res.transcript.push_back(info);

        Matrix uh = *u * inst.h;
        Vec sp = u->right_mul(inst.s);
        Vec s1(sp.begin(), sp.begin() + ell);
        auto split = rng.shuffle(k);
        std::vector<size_t> xs(split.begin(), split.begin() + m1), ys(split.begin() + m1, split.end());
        auto upper = [&](const std::vector<size_t>& part) {
            std::vector<Vec> cols;
            for (size_t i : part) {
                Vec c(ell);
                for (size_t row = 0; row < ell; ++row) c[row] = uh(row, info[i]);
                cols.push_back(c);
            }
            return cols;
        };
        std::vector<Half> sx, ty;
        for_each_sum(f, upper(xs), v, ell, [&](auto& pos, auto& val, const Vec& sum) {
            Half h{sum, {}, val};
            for (size_t i : pos) h.pos.push_back(info[xs[i]]);
            sx.push_back(std::move(h));
            return false;
        });
        for_each_sum(f, upper(ys), v, ell, [&](auto& pos, auto& val, const Vec& sum) {
            Half h{vsub(f, s1, sum), {}, val};
            for (size_t i : pos) h.pos.push_back(info[ys[i]]);
            ty.push_back(std::move(h));
            return false;
        });
        auto by_key = [](const Half& a, const Half& b) { return a.key < b.key; };
        std::sort(sx.begin(), sx.end(), by_key);

        uint64_t hits = 0;
        size_t need = t - 2 * v;
        std::optional<Vec> found;
        for (auto& y : ty) {
            auto [lo, hi] = std::equal_range(sx.begin(), sx.end(), y, by_key);
            for (auto it = lo; it != hi; ++it) {
                ++hits;
                if (found) continue;
                // remaining rows: s2 - B (e_X + e_Y)^T, one entry at a time
                Vec ej(r - ell);
                size_t w = 0;
                bool over = false;
                for (size_t row = ell; row < r; ++row) {
                    Elt acc = sp[row];
                    for (size_t i = 0; i < it->pos.size(); ++i)
                        acc = f.sub(acc, f.mul(it->val[i], uh(row, it->pos[i])));
                    for (size_t i = 0; i < y.pos.size(); ++i)
                        acc = f.sub(acc, f.mul(y.val[i], uh(row, y.pos[i])));
                    ej[row - ell] = acc;
                    if (acc && ++w > need) {
                        over = true;
                        if (p.early_abort) break;
                    }
                }
                if (over || w != need) continue;
                Vec e(n, 0);
                for (size_t i = 0; i < it->pos.size(); ++i) e[it->pos[i]] = it->val[i];
                for (size_t i = 0; i < y.pos.size(); ++i) e[y.pos[i]] = y.val[i];
                for (size_t i = ell; i < r; ++i) e[order[i]] = ej[i - ell];
                found = e;
            }
        }
        res.stats.collisions += hits;
        if (o.record) res.stats.per_iteration.push_back(hits);
        if (!found) return 0;
        res.e = found;
        return 1;
    });
}

IsdSolution stern(const SdpInstance& inst, const SternParams& p, const IsdOptions& o)
{
    return require(inst, stern_search(inst, p, o), Errc::iteration_limit);
}

}
