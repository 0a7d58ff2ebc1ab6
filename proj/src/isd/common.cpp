#include "detail.hpp"

#include <codelab/error.hpp>
#include <codelab/io.hpp>

#include <sstream>

namespace codelab {

using namespace isd_detail;

SdpInstance normalize(const SdpInstance& inst)
{
    if (inst.s.size() != inst.h.rows()) fail(Errc::dim_mismatch, "syndrome length differs from the rows of H");
    auto r = rref(inst.h);
    size_t rank = r.pivots.size();
    if (rank == inst.h.rows()) return inst;
    Vec s = r.transform.right_mul(inst.s);
    for (size_t i = rank; i < s.size(); ++i)
        if (s[i]) fail(Errc::no_solution, "syndrome outside the column space of H");
    std::vector<size_t> keep(rank);
    for (size_t i = 0; i < rank; ++i) keep[i] = i;
    return {r.reduced.select_rows(keep), Vec(s.begin(), s.begin() + rank), inst.t};
}

bool is_solution(const SdpInstance& inst, const Vec& e)
{
    return e.size() == inst.h.cols() && weight(e) <= inst.t && inst.h.right_mul(e) == inst.s;
}

PlantedSdp random_sdp(FieldPtr f, size_t n, size_t k, size_t t, Rng& rng)
{
    if (k >= n || t > n) fail(Errc::infeasible_params, "need k < n and t <= n");
    PlantedSdp p;
    p.inst.h = Matrix::random_full_rank(f, n - k, n, rng);
    // the support's columns are kept independent so that some information set avoids it
    do {
        p.e = random_weight_vec(*f, n, t, rng);
    } while (t <= n - k && p.inst.h.select_cols(support(p.e)).rank() < t);
    p.inst.s = p.inst.h.right_mul(p.e);
    p.inst.t = t;
    return p;
}

IsdSolution brute_force_sdp(const SdpInstance& in, uint64_t budget)
{
    auto start = std::chrono::steady_clock::now();
    SdpInstance inst = normalize(in);
    const Field& f = *inst.h.field();
    size_t n = inst.h.cols(), q = f.q();
    double total = 0;
    for (size_t w = 0; w <= inst.t && w <= n; ++w) total += count_weight(n, w, q);
    if (total > double(budget)) fail(Errc::too_large, "search space exceeds the budget");

    std::vector<Vec> cols(n);
    for (size_t j = 0; j < n; ++j) cols[j] = inst.h.col(j);
    Vec e(n, 0);
    Vec acc(inst.h.rows(), 0);
    // lexicographic order: at each position 0 comes before the nonzero values
    std::function<bool(size_t, size_t)> rec = [&](size_t i, size_t left) -> bool {
        if (left == 0) return acc == inst.s;
        if (n - i < left) return false;
        if (rec(i + 1, left)) return true;
        for (Elt a = 1; a < q; ++a) {
            Vec saved = acc;
            acc = vadd(f, acc, vscale(f, a, cols[i]));
            e[i] = a;
            if (rec(i + 1, left - 1)) return true;
            e[i] = 0;
            acc = std::move(saved);
        }
        return false;
    };
    for (size_t w = 0; w <= inst.t && w <= n; ++w) {
        if (rec(0, w)) {
            IsdSolution sol;
            sol.e = e;
            sol.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return sol;
        }
    }
    fail(Errc::no_solution, "no vector of weight <= t has this syndrome");
}

std::string write_instance(const SdpInstance& inst)
{
    std::ostringstream os;
    os << write_matrix(inst.h) << "s " << pack_hex(*inst.h.field(), inst.s) << "\nt " << inst.t << "\n";
    return os.str();
}

SdpInstance read_instance(const std::string& text)
{
    std::istringstream is(text);
    std::string line, mat;
    std::vector<std::string> tail;
    while (std::getline(is, line)) {
        if (line.rfind("s ", 0) == 0 || line.rfind("t ", 0) == 0)
            tail.push_back(line);
        else
            mat += line + "\n";
    }
    SdpInstance inst;
    inst.h = read_matrix(mat);
    bool have_s = false, have_t = false;
    for (auto& l : tail) {
        if (l[0] == 's') {
            inst.s = unpack_hex(*inst.h.field(), l.substr(2), inst.h.rows());
            have_s = true;
        } else {
            try {
                inst.t = std::stoul(l.substr(2));
            } catch (const std::exception&) {
                fail(Errc::parse_error, "bad weight line");
            }
            have_t = true;
        }
    }
    if (!have_s || !have_t) fail(Errc::parse_error, "instance needs an 's' and a 't' line");
    return inst;
}

namespace isd_detail {

std::optional<Matrix> invert_cols(const Matrix& h, const std::vector<size_t>& order)
{
    auto r = rref(h.select_cols(order));
    if (r.pivots.size() < h.rows()) return std::nullopt;
    return r.transform;
}

bool for_each_sum(const Field& f, const std::vector<Vec>& cols, size_t w, size_t len, const SumVisitor& fn)
{
    size_t m = cols.size(), q = f.q();
    std::vector<size_t> pos;
    std::vector<Elt> val;
    std::vector<Vec> sums{Vec(len, 0)};
    std::function<bool(size_t)> rec = [&](size_t from) -> bool {
        if (pos.size() == w) return fn(pos, val, sums.back());
        for (size_t i = from; i + (w - pos.size()) <= m; ++i) {
            for (Elt a = 1; a < q; ++a) {
                pos.push_back(i);
                val.push_back(a);
                sums.push_back(vadd(f, sums.back(), vscale(f, a, cols[i])));
                bool stop = rec(i + 1);
                sums.pop_back();
                val.pop_back();
                pos.pop_back();
                if (stop) return true;
            }
        }
        return false;
    };
    return rec(0);
}

double count_weight(size_t n, size_t w, size_t q)
{
    return choose(double(n), double(w)) * std::pow(double(q - 1), double(w));
}

IsdResult run_loop(const SdpInstance& inst, const IsdOptions& o, uint64_t max_iters, const Step& step)
{
    (void)inst;
    auto start = std::chrono::steady_clock::now();
    IsdResult r;
    Rng rng(o.seed);
    uint64_t draw_cap = 64 * max_iters + 1000;
    while (r.stats.iterations < max_iters) {
        int res = step(rng, r);
        if (res < 0) {
            if (++r.stats.draws > draw_cap) break;
            continue;
        }
        ++r.stats.iterations;
        if (res > 0) break;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

IsdSolution require(const SdpInstance& inst, IsdResult r, Errc none)
{
    if (!r.e) fail(none, "no solution within " + std::to_string(r.stats.iterations) + " iterations");
    if (!is_solution(inst, *r.e)) fail(Errc::not_a_valid_solution, "solver returned an invalid vector");
    return {std::move(*r.e), std::move(r.stats), r.seconds, std::move(r.transcript)};
}

}

}
