#include <codelab/error.hpp>
#include <codelab/families.hpp>

#include <numeric>

namespace codelab {

Matrix expand(const Field& f, const Vec& x)
{
    auto base = Field::make(f.p());
    Matrix m(base, x.size(), f.m());
    for (size_t i = 0; i < x.size(); ++i) {
        auto cs = f.coeffs(x[i]);
        for (size_t l = 0; l < f.m(); ++l) m.at(i, l) = cs[l];
    }
    return m;
}

size_t rank_weight(const Field& f, const Vec& x)
{
    if (x.empty()) return 0;
    return expand(f, x).rank();
}

Vec rank_support(const Field& f, const Vec& x)
{
    Vec out;
    if (x.empty()) return out;
    Matrix rs = row_space(expand(f, x));
    for (size_t i = 0; i < rs.rows(); ++i) {
        auto r = rs.row(i);
        out.push_back(f.from_coeffs(std::vector<uint32_t>(r.begin(), r.end())));
    }
    return out;
}

Matrix moore_matrix(FieldPtr f, unsigned s, size_t k, const Vec& g)
{
    Matrix m(f, k, g.size());
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < g.size(); ++j) m.at(i, j) = f->frob(g[j], (unsigned)((s * i) % f->m()));
    return m;
}

void check_gabidulin(const GabidulinParams& p)
{
    size_t n = p.g.size(), m = p.f->m();
    if (p.k == 0 || p.k > n || n > m) fail(Errc::invalid_argument, "need 1 <= k <= n <= m");
    if (std::gcd((size_t)p.s, m) != 1) fail(Errc::invalid_argument, "s must be coprime to m");
    if (rank_weight(*p.f, p.g) != n) fail(Errc::dependent_points, "g is not independent over the base field");
}

LinearCode gabidulin_code(const GabidulinParams& p)
{
    check_gabidulin(p);
    return LinearCode::from_generator(moore_matrix(p.f, p.s, p.k, p.g));
}

Vec bruteforce_rank_decode(const LinearCode& c, const Vec& y, size_t t, uint64_t budget)
{
    const Field& f = *c.field();
    if (y.size() != c.n()) fail(Errc::dim_mismatch, "received word has wrong length");
    if (c.contains(y)) return y;
    if (t == 0) fail(Errc::decode_failure, "not a codeword");
    uint64_t q = f.q(), count = 1;
    for (size_t i = 0; i < t; ++i) {
        count = count * (q - 1 - i) / (i + 1);
        if (count > budget) fail(Errc::too_large, "too many candidate supports");
    }
    auto base = Field::make(f.p());
    size_t n = c.n(), m = f.m(), rows = c.n() - c.k();
    const Matrix& h = c.parity_check();
    Vec s = h.right_mul(y);
    Vec rhs(rows * m);
    for (size_t i = 0; i < rows; ++i) {
        auto cs = f.coeffs(s[i]);
        for (size_t l = 0; l < m; ++l) rhs[i * m + l] = cs[l];
    }
    // supports spanned by t distinct nonzero elements b_1 < ... < b_t
    std::vector<Elt> b(t);
    for (size_t i = 0; i < t; ++i) b[i] = (Elt)(i + 1);
    for (;;) {
        // e_j = sum_l a_jl b_l with a_jl in the base field; e H^T = s
        Matrix a(base, n * t, rows * m);
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < t; ++l)
                for (size_t i = 0; i < rows; ++i) {
                    auto cs = f.coeffs(f.mul(b[l], h(i, j)));
                    for (size_t r = 0; r < m; ++r) a.at(j * t + l, i * m + r) = cs[r];
                }
        if (auto sol = solve_linear(a, rhs)) {
            Vec e(n, 0);
            for (size_t j = 0; j < n; ++j)
                for (size_t l = 0; l < t; ++l) e[j] = f.add(e[j], f.mul((*sol)[j * t + l], b[l]));
            Vec cw = vsub(f, y, e);
            if (c.contains(cw) && rank_weight(f, e) <= t) return cw;
        }
        int i = (int)t - 1;
        while (i >= 0 && b[i] == q - t + i) --i;
        if (i < 0) break;
        ++b[i];
        for (size_t l = i + 1; l < t; ++l) b[l] = b[l - 1] + 1;
    }
    fail(Errc::decode_failure, "no codeword within rank distance t");
}

}
