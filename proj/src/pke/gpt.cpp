#include <codelab/error.hpp>
#include <codelab/pke.hpp>

namespace codelab {

GptKey gpt_assemble(const GabidulinParams& gab, const Matrix& s, const Matrix& x, const Matrix& p, size_t t)
{
    check_gabidulin(gab);
    Matrix g = moore_matrix(gab.f, gab.s, gab.k, gab.g);
    for (size_t i = 0; i < p.rows(); ++i)
        for (size_t j = 0; j < p.cols(); ++j)
            if (p(i, j) >= gab.f->p()) fail(Errc::invalid_argument, "column mixer must lie over the prime field");
    GptKey k;
    k.gab = gab;
    k.s = s;
    k.x = x;
    k.p = p;
    k.t = t;
    k.g_pub = s * x.hstack(g) * p;
    return k;
}

GptKey gpt_keygen(FieldPtr f, size_t n, size_t k, size_t lambda, Rng& rng)
{
    if (n > f->m()) fail(Errc::infeasible_params, "need n <= m");
    GabidulinParams gab{f, {}, k, 1};
    for (;;) {
        gab.g = random_vec(*f, n, rng);
        if (rank_weight(*f, gab.g) == n) break;
    }
    auto base = Field::make(f->p());
    Matrix pb = random_invertible(base, n + lambda, rng);
    Matrix p(f, n + lambda, n + lambda);
    for (size_t i = 0; i < pb.rows(); ++i)
        for (size_t j = 0; j < pb.cols(); ++j) p.at(i, j) = pb(i, j);
    return gpt_assemble(gab, random_invertible(f, k, rng), Matrix::random(f, k, lambda, rng), p, (n - k) / 2);
}

Vec gpt_encrypt(const Matrix& g_pub, size_t t, const Vec& m, const Vec& e)
{
    if (e.size() != g_pub.cols()) fail(Errc::dim_mismatch, "error vector has wrong length");
    if (rank_weight(*g_pub.field(), e) > t) fail(Errc::weight_too_high, "error rank exceeds t");
    return vadd(*g_pub.field(), g_pub.left_mul(m), e);
}

Vec random_rank_vec(const Field& f, size_t n, size_t t, Rng& rng)
{
    Vec basis = random_vec(f, t, rng);
    Vec e(n, 0);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < t; ++i) e[j] = f.add(e[j], f.mul((Elt)rng.below(f.p()), basis[i]));
    return e;
}

Vec gpt_encrypt(const GptKey& k, const Vec& m, Rng& rng)
{
    return gpt_encrypt(k.g_pub, k.t, m, random_rank_vec(*k.g_pub.field(), k.g_pub.cols(), k.t, rng));
}

Vec gpt_decrypt(const GptKey& k, const Vec& c)
{
    if (c.size() != k.g_pub.cols()) fail(Errc::dim_mismatch, "cipher has wrong length");
    Vec cp = inverse(k.p).left_mul(c);
    size_t lambda = k.x.cols();
    Vec tail(cp.begin() + lambda, cp.end());
    LinearCode code = gabidulin_code(k.gab);
    Vec cw = bruteforce_rank_decode(code, tail, k.t);
    auto ms = solve_linear(moore_matrix(k.gab.f, k.gab.s, k.gab.k, k.gab.g), cw);
    if (!ms) fail(Errc::decode_failure, "decoder returned a non-codeword");
    return inverse(k.s).left_mul(*ms);
}

}
