#include "detail.hpp"

#include <algorithm>
#include <map>

namespace codelab {

using namespace isd_detail;

namespace {

uint64_t low_mask(size_t u) { return u >= 64 ? ~uint64_t(0) : (uint64_t(1) << u) - 1; }

struct Item {
    Vec x;
    uint64_t key; // bit i = row i of B x^T
};

std::vector<uint64_t> column_keys(const Matrix& b)
{
    if (b.rows() > 64) fail(Errc::infeasible_params, "at most 64 merge positions");
    std::vector<uint64_t> keys(b.cols(), 0);
    for (size_t j = 0; j < b.cols(); ++j)
        for (size_t i = 0; i < b.rows(); ++i)
            if (b(i, j)) keys[j] |= uint64_t(1) << i;
    return keys;
}

uint64_t key_of(const std::vector<uint64_t>& ck, const Vec& x)
{
    uint64_t k = 0;
    for (size_t j = 0; j < x.size(); ++j)
        if (x[j]) k ^= ck[j];
    return k;
}

std::vector<Item> merge_items(const std::vector<Item>& l1, const std::vector<Item>& l2, size_t u, uint64_t target,
                              size_t w, uint64_t budget)
{
    uint64_t mask = low_mask(u);
    std::vector<size_t> idx(l1.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto key1 = [&](size_t i) { return l1[i].key & mask; };
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return key1(a) < key1(b); });
    std::vector<Item> out;
    for (auto& y : l2) {
        uint64_t want = (y.key ^ target) & mask;
        auto lo = std::lower_bound(idx.begin(), idx.end(), want, [&](size_t i, uint64_t k) { return key1(i) < k; });
        for (auto it = lo; it != idx.end() && key1(*it) == want; ++it) {
            const Vec& x = l1[*it].x;
            Vec z(x.size());
            size_t wt = 0;
            for (size_t j = 0; j < x.size(); ++j) wt += (z[j] = x[j] ^ y.x[j]) != 0;
            if (wt != w) continue;
            out.push_back({std::move(z), l1[*it].key ^ y.key});
            if (out.size() > budget) fail(Errc::too_large, "merged list exceeds the budget");
        }
    }
    std::sort(out.begin(), out.end(), [](const Item& a, const Item& b) { return a.x < b.x; });
    out.erase(std::unique(out.begin(), out.end(), [](const Item& a, const Item& b) { return a.x == b.x; }), out.end());
    return out;
}

uint64_t bits_of(const Vec& v, size_t len)
{
    uint64_t k = 0;
    for (size_t i = 0; i < len && i < v.size(); ++i)
        if (v[i]) k |= uint64_t(1) << i;
    return k;
}

// partial elimination: U H P = [[Id, A], [0, B]] with n-k-ell identity columns first
struct Partial {
    std::vector<size_t> perm; // column i of H P is column perm[i] of H
    Matrix a, b;
    Vec s1, s2;
};

std::optional<Partial> partial_form(const SdpInstance& inst, size_t ell, Rng& rng)
{
    size_t n = inst.h.cols(), r = inst.h.rows(), r0 = r - ell;
    Partial p;
    p.perm = rng.shuffle(n);
    auto rr = rref(inst.h.select_cols(p.perm));
    if (rr.pivots.size() < r0) return std::nullopt;
    for (size_t i = 0; i < r0; ++i)
        if (rr.pivots[i] != i) return std::nullopt;
    Vec sp = rr.transform.right_mul(inst.s);
    std::vector<size_t> top, bottom, right;
    for (size_t i = 0; i < r0; ++i) top.push_back(i);
    for (size_t i = r0; i < r; ++i) bottom.push_back(i);
    for (size_t j = r0; j < n; ++j) right.push_back(j);
    p.a = rr.reduced.select_rows(top).select_cols(right);
    p.b = rr.reduced.select_rows(bottom).select_cols(right);
    p.s1.assign(sp.begin(), sp.begin() + r0);
    p.s2.assign(sp.begin() + r0, sp.end());
    return p;
}

std::vector<size_t> right_part(const Partial& p, size_t r0)
{
    std::vector<size_t> info(p.perm.begin() + r0, p.perm.end());
    std::sort(info.begin(), info.end());
    return info;
}

// e1 = s1 - A e2^T; the full vector when wt(e1) = want
std::optional<Vec> lift(const Field& f, const Partial& p, const Vec& e2, size_t want)
{
    Vec e1 = vsub(f, p.s1, p.a.right_mul(e2));
    if (weight(e1) != want) return std::nullopt;
    Vec e(p.perm.size(), 0);
    for (size_t i = 0; i < e1.size(); ++i) e[p.perm[i]] = e1[i];
    for (size_t i = 0; i < e2.size(); ++i) e[p.perm[e1.size() + i]] = e2[i];
    return e;
}

// all binary vectors of weight w supported on [lo, hi) inside length len
std::vector<Item> base_list(size_t len, size_t lo, size_t hi, size_t w, const std::vector<uint64_t>& ck, uint64_t budget)
{
    if (count_weight(hi - lo, w, 2) > double(budget)) fail(Errc::too_large, "base list exceeds the budget");
    std::vector<Item> out;
    std::vector<size_t> pos;
    std::function<void(size_t)> rec = [&](size_t from) {
        if (pos.size() == w) {
            Vec x(len, 0);
            for (size_t i : pos) x[i] = 1;
            out.push_back({x, key_of(ck, x)});
            return;
        }
        for (size_t i = from; i + (w - pos.size()) <= hi; ++i) {
            pos.push_back(i);
            rec(i + 1);
            pos.pop_back();
        }
    };
    rec(lo);
    return out;
}

}

std::vector<Vec> merge_lists(const std::vector<Vec>& l1, const std::vector<Vec>& l2, size_t u, const Vec& target,
                             size_t w, const Matrix& b)
{
    if (b.field()->q() != 2) fail(Errc::field_mismatch, "merge is binary");
    if (u > b.rows()) fail(Errc::infeasible_params, "u exceeds the rows of B");
    auto ck = column_keys(b);
    auto wrap = [&](const std::vector<Vec>& l) {
        std::vector<Item> out;
        for (auto& x : l) {
            if (x.size() != b.cols()) fail(Errc::length_mismatch, "list entry length differs from B");
            out.push_back({x, key_of(ck, x)});
        }
        return out;
    };
    auto m = merge_items(wrap(l1), wrap(l2), u, bits_of(target, u), w, ~uint64_t(0));
    std::vector<Vec> out;
    for (auto& it : m) out.push_back(std::move(it.x));
    return out;
}

BjmmShape bjmm_shape(const BjmmParams& p, size_t n, size_t k, size_t t)
{
    if (p.v % 2) fail(Errc::infeasible_params, "v must be even");
    size_t v1 = p.v / 2 + p.eps1;
    if (v1 % 2) fail(Errc::infeasible_params, "v/2 + eps1 must be even");
    size_t v2 = v1 / 2 + p.eps2;
    size_t m = k + p.ell;
    if (p.ell > n - k || p.ell > 64) fail(Errc::infeasible_params, "window must fit in n - k and 64 bits");
    if (p.v > t || t - p.v > n - k - p.ell) fail(Errc::infeasible_params, "need v <= t and t - v <= n - k - ell");
    if (v1 > m || v2 > m) fail(Errc::infeasible_params, "intermediate weights exceed k + ell");
    auto lg = [](double x) { return x <= 1 ? 0.0 : std::ceil(std::log2(x) - 1e-9); };
    size_t u1 = p.u1 ? *p.u1 : std::min<size_t>(p.ell, (size_t)lg(choose(p.v, p.v / 2) * choose(m - p.v, p.eps1)));
    size_t u2 = p.u2 ? *p.u2 : std::min<size_t>(u1, (size_t)lg(choose(v1, v1 / 2) * choose(m - v1, p.eps2)));
    if (!(u2 <= u1 && u1 <= p.ell)) fail(Errc::infeasible_params, "need 0 <= u2 <= u1 <= ell");
    return {v1, v2, u1, u2};
}

IsdResult bjmm_search(const SdpInstance& in, const BjmmParams& p, const IsdOptions& o)
{
    SdpInstance inst = normalize(in);
    const Field& f = *inst.h.field();
    if (f.q() != 2) fail(Errc::field_mismatch, "BJMM is binary");
    size_t n = inst.h.cols(), r = inst.h.rows(), k = n - r, t = inst.t, ell = p.ell, r0 = r - ell;
    auto sh = bjmm_shape(p, n, k, t);
    size_t m = k + ell, half = m / 2;
    double expected = choose(n, t) / (choose(m, p.v) * choose(r0, t - p.v));
    uint64_t iters = o.max_iters ? o.max_iters : default_iters(expected);

    return run_loop(inst, o, iters, [&](Rng& rng, IsdResult& res) {
        auto part = partial_form(inst, ell, rng);
        if (!part) return -1;
        if (o.record) res.transcript.push_back(right_part(*part, r0));
        auto ck = column_keys(part->b);
        uint64_t s2 = bits_of(part->s2, ell);
        size_t w1 = sh.v2 / 2;
        auto b1 = base_list(m, 0, half, w1, ck, o.budget);
        auto b2 = base_list(m, half, m, sh.v2 - w1, ck, o.budget);

        uint64_t t11 = rng.next() & low_mask(sh.u1);
        uint64_t t21 = (s2 ^ t11) & low_mask(sh.u1);
        uint64_t t12 = rng.next() & low_mask(sh.u2);
        uint64_t t32 = rng.next() & low_mask(sh.u2);
        uint64_t t22 = (t11 ^ t12) & low_mask(sh.u2);
        uint64_t t42 = (t21 ^ t32) & low_mask(sh.u2);

        auto l12 = merge_items(b1, b2, sh.u2, t12, sh.v2, o.budget);
        auto l22 = merge_items(b1, b2, sh.u2, t22, sh.v2, o.budget);
        auto l32 = merge_items(b1, b2, sh.u2, t32, sh.v2, o.budget);
        auto l42 = merge_items(b1, b2, sh.u2, t42, sh.v2, o.budget);
        auto l11 = merge_items(l12, l22, sh.u1, t11, sh.v1, o.budget);
        auto l21 = merge_items(l32, l42, sh.u1, t21, sh.v1, o.budget);
        auto fin = merge_items(l11, l21, ell, s2, p.v, o.budget);

        res.stats.final_list += fin.size();
        if (o.record) res.stats.per_iteration.push_back(fin.size());
        for (auto& it : fin) {
            if (auto e = lift(f, *part, it.x, t - p.v)) {
                res.e = e;
                return 1;
            }
        }
        return 0;
    });
}

IsdSolution bjmm(const SdpInstance& inst, const BjmmParams& p, const IsdOptions& o)
{
    return require(inst, bjmm_search(inst, p, o), Errc::iteration_limit);
}

// ---- Wagner

namespace {

struct QItem {
    Vec x, key;
};

std::vector<size_t> wagner_schedule(const WagnerParams& p)
{
    if (p.a != 1 && p.a != 2) fail(Errc::infeasible_params, "a must be 1 or 2");
    std::vector<size_t> u = p.u;
    if (u.empty())
        for (size_t i = 1; i <= p.a; ++i) u.push_back(p.ell * i / p.a);
    if (u.size() != p.a || u.back() != p.ell) fail(Errc::infeasible_params, "schedule needs a entries ending at ell");
    for (size_t i = 1; i < u.size(); ++i)
        if (u[i] < u[i - 1]) fail(Errc::infeasible_params, "schedule must not decrease");
    return u;
}

std::vector<std::pair<size_t, size_t>> blocks(size_t m, size_t parts)
{
    std::vector<std::pair<size_t, size_t>> b;
    for (size_t j = 0; j < parts; ++j) b.push_back({j * m / parts, (j + 1) * m / parts});
    return b;
}

std::vector<QItem> qmerge(const Field& f, const std::vector<QItem>& l1, const std::vector<QItem>& l2, size_t u,
                          uint64_t budget)
{
    auto prefix = [u](const Vec& k) { return Vec(k.begin(), k.begin() + u); };
    std::map<Vec, std::vector<size_t>> index;
    for (size_t i = 0; i < l1.size(); ++i) index[prefix(l1[i].key)].push_back(i);
    std::vector<QItem> out;
    for (auto& y : l2) {
        Vec want(u);
        for (size_t i = 0; i < u; ++i) want[i] = f.neg(y.key[i]);
        auto it = index.find(want);
        if (it == index.end()) continue;
        for (size_t i : it->second) {
            out.push_back({vadd(f, l1[i].x, y.x), vadd(f, l1[i].key, y.key)});
            if (out.size() > budget) fail(Errc::too_large, "merged list exceeds the budget");
        }
    }
    return out;
}

}

double wagner_expected_list(size_t q, size_t n, size_t k, const WagnerParams& p)
{
    auto u = wagner_schedule(p);
    size_t parts = size_t(1) << p.a;
    if (p.v % parts) fail(Errc::infeasible_params, "2^a must divide v");
    std::vector<double> sizes;
    for (auto [lo, hi] : blocks(k + p.ell, parts)) sizes.push_back(count_weight(hi - lo, p.v / parts, q));
    (void)n;
    size_t prev = 0;
    for (size_t level = 0; level < p.a; ++level) {
        std::vector<double> next;
        for (size_t j = 0; j + 1 < sizes.size(); j += 2)
            next.push_back(sizes[j] * sizes[j + 1] / std::pow(double(q), double(u[level] - prev)));
        sizes = next;
        prev = u[level];
    }
    return sizes[0];
}

IsdResult wagner_search(const SdpInstance& in, const WagnerParams& p, const IsdOptions& o)
{
    SdpInstance inst = normalize(in);
    const Field& f = *inst.h.field();
    size_t n = inst.h.cols(), r = inst.h.rows(), k = n - r, t = inst.t, ell = p.ell;
    if (ell > r) fail(Errc::infeasible_params, "window exceeds n - k");
    if (p.v > t || t - p.v > r - ell) fail(Errc::infeasible_params, "need v <= t and t - v <= n - k - ell");
    auto u = wagner_schedule(p);
    size_t parts = size_t(1) << p.a, m = k + ell;
    if (p.v % parts) fail(Errc::infeasible_params, "2^a must divide v");
    size_t wb = p.v / parts;
    auto bl = blocks(m, parts);
    for (auto [lo, hi] : bl)
        if (count_weight(hi - lo, wb, f.q()) > double(o.budget)) fail(Errc::too_large, "base list exceeds the budget");
    uint64_t iters = o.max_iters ? o.max_iters : 1;

    return run_loop(inst, o, iters, [&](Rng& rng, IsdResult& res) {
        auto part = partial_form(inst, ell, rng);
        if (!part) return -1;
        if (o.record) res.transcript.push_back(right_part(*part, r - ell));
        std::vector<Vec> cols(m);
        for (size_t j = 0; j < m; ++j) cols[j] = part->b.col(j);
        std::vector<std::vector<QItem>> lists;
        for (size_t j = 0; j < parts; ++j) {
            auto [lo, hi] = bl[j];
            std::vector<Vec> sub(cols.begin() + lo, cols.begin() + hi);
            std::vector<QItem> l;
            for_each_sum(f, sub, wb, ell, [&](auto& pos, auto& val, const Vec& sum) {
                Vec x(m, 0);
                for (size_t i = 0; i < pos.size(); ++i) x[lo + pos[i]] = val[i];
                l.push_back({x, j == 0 ? vsub(f, sum, part->s2) : sum});
                return false;
            });
            lists.push_back(std::move(l));
        }
        for (size_t level = 0; level < p.a; ++level) {
            std::vector<std::vector<QItem>> next;
            for (size_t j = 0; j + 1 < lists.size(); j += 2) next.push_back(qmerge(f, lists[j], lists[j + 1], u[level], o.budget));
            lists = std::move(next);
        }
        auto& fin = lists[0];
        res.stats.final_list += fin.size();
        if (o.record) res.stats.per_iteration.push_back(fin.size());
        for (auto& it : fin) {
            if (auto e = lift(f, *part, it.x, t - p.v)) {
                res.e = e;
                return 1;
            }
        }
        return 0;
    });
}

IsdSolution wagner(const SdpInstance& inst, const WagnerParams& p, const IsdOptions& o)
{
    return require(inst, wagner_search(inst, p, o), Errc::no_solution_found);
}

}
