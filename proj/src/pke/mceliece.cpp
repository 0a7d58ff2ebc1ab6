#include <codelab/error.hpp>
#include <codelab/io.hpp>
#include <codelab/pke.hpp>

namespace codelab {

McElieceKey mceliece_assemble(const SecretCode& c, const Matrix& g, const Matrix& s, const Permutation& p)
{
    McElieceKey k;
    k.g = g;
    k.s = s;
    k.p = p;
    k.t = c.t;
    k.secret = c;
    k.g_pub = (s * g).permute_cols(p);
    return k;
}

McElieceKey mceliece_keygen(const SecretCode& c, Rng& rng)
{
    const Matrix& g = c.code.generator();
    return mceliece_assemble(c, g, random_invertible(g.field(), g.rows(), rng), Permutation::random(g.cols(), rng));
}

Vec mceliece_encrypt(const Matrix& g_pub, size_t t, const Vec& m, const Vec& e)
{
    if (e.size() != g_pub.cols()) fail(Errc::dim_mismatch, "error vector has wrong length");
    if (weight(e) > t) fail(Errc::weight_too_high, "error weight exceeds t");
    return vadd(*g_pub.field(), g_pub.left_mul(m), e);
}

Vec mceliece_encrypt(const Matrix& g_pub, size_t t, const Vec& m, Rng& rng)
{
    return mceliece_encrypt(g_pub, t, m, random_weight_vec(*g_pub.field(), g_pub.cols(), t, rng));
}

Vec mceliece_decrypt(const McElieceKey& k, const Vec& c)
{
    if (c.size() != k.g_pub.cols()) fail(Errc::dim_mismatch, "cipher has wrong length");
    Vec cw = k.secret.decode(k.p.inverse().apply(c));
    auto ms = solve_linear(k.g, cw);
    if (!ms) fail(Errc::decode_failure, "decoder returned a non-codeword");
    return inverse(k.s).left_mul(*ms);
}

NiederreiterKey niederreiter_assemble(const SecretCode& c, const Matrix& h, const Matrix& s, const Permutation& p)
{
    NiederreiterKey k;
    k.h = h;
    k.s = s;
    k.p = p;
    k.t = c.t;
    k.secret = c;
    k.h_pub = (s * h).permute_cols(p);
    return k;
}

NiederreiterKey niederreiter_keygen(const SecretCode& c, Rng& rng)
{
    const Matrix& h = c.code.parity_check();
    return niederreiter_assemble(c, h, random_invertible(h.field(), h.rows(), rng), Permutation::random(h.cols(), rng));
}

Vec niederreiter_encrypt(const Matrix& h_pub, size_t t, const Vec& m)
{
    if (m.size() != h_pub.cols()) fail(Errc::dim_mismatch, "message has wrong length");
    if (weight(m) > t) fail(Errc::weight_too_high, "message weight exceeds t");
    return h_pub.right_mul(m);
}

Vec niederreiter_decrypt(const NiederreiterKey& k, const Vec& c)
{
    if (c.size() != k.h_pub.rows()) fail(Errc::dim_mismatch, "cipher has wrong length");
    Vec x = syndrome_decode(k.secret, k.h, inverse(k.s).right_mul(c));
    return k.p.apply(x);
}

Matrix cmce_parity_check(const Matrix& t_pub)
{
    return Matrix::identity(t_pub.field(), t_pub.rows()).hstack(t_pub);
}

CmceKey cmce_keygen(const CmceParams& p, Rng& rng, size_t max_tries)
{
    if (p.m * p.t >= p.n) fail(Errc::infeasible_params, "need m t < n");
    size_t rows = p.m * p.t;
    for (size_t tries = 0; tries < max_tries; ++tries) {
        GoppaParams gp = random_goppa(2, p.m, p.n, p.t, rng);
        Rref rr = rref(goppa_parity_check(gp).sub);
        if (rr.pivots.size() != rows) continue;
        bool leading = true;
        for (size_t i = 0; i < rows; ++i) leading = leading && rr.pivots[i] == i;
        if (!leading) continue;
        std::vector<size_t> top(rows), right(p.n - rows);
        for (size_t i = 0; i < rows; ++i) top[i] = i;
        for (size_t j = 0; j < right.size(); ++j) right[j] = rows + j;
        return {p, rr.reduced.select_rows(top).select_cols(right), gp};
    }
    fail(Errc::systematic_form_failure, "no systematic parity check after resampling");
}

Vec cmce_encode(const Matrix& t_pub, const Vec& e)
{
    Matrix h = cmce_parity_check(t_pub);
    if (e.size() != h.cols()) fail(Errc::dim_mismatch, "error vector has wrong length");
    return h.right_mul(e);
}

Vec cmce_decode(const CmceKey& k, const Vec& c0)
{
    if (c0.size() != k.t_pub.rows()) fail(Errc::dim_mismatch, "cipher has wrong length");
    Vec v(k.params.n, 0);
    std::copy(c0.begin(), c0.end(), v.begin());
    Vec e = vsub(*k.t_pub.field(), v, goppa_decode(k.goppa, v));
    if (weight(e) != k.params.t || cmce_encode(k.t_pub, e) != c0) fail(Errc::decode_failure, "no weight-t preimage");
    return e;
}

namespace {

Bytes session_key(const Vec& e, const Vec& c0)
{
    auto f = Field::make(2);
    Bytes in{1};
    in = concat(in, from_hex(pack_hex(*f, e)));
    in = concat(in, from_hex(pack_hex(*f, c0)));
    return sha256(in);
}

}

Encapsulation cmce_encaps(const Matrix& t_pub, size_t t, Rng& rng)
{
    Bytes seed(32);
    for (auto& b : seed) b = uint8_t(rng.next());
    Vec e = weight_vector_from_seed(t_pub.rows() + t_pub.cols(), t, seed);
    Vec c0 = cmce_encode(t_pub, e);
    return {c0, session_key(e, c0)};
}

Bytes cmce_decaps(const CmceKey& k, const Vec& c0) { return session_key(cmce_decode(k, c0), c0); }

}
