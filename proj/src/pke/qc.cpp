#include <codelab/error.hpp>
#include <codelab/pke.hpp>

namespace codelab {

using nlohmann::json;

QcCode qc_repetition_code(size_t n)
{
    if (n == 0) fail(Errc::invalid_argument, "empty repetition code");
    QcCode c;
    c.name = "repetition";
    c.g = Matrix(Field::make(2), std::vector<Vec>{Vec(n, 1)});
    c.t = (n - 1) / 2;
    c.decode = [](const Vec& y) { return repetition_decode(y); };
    c.desc = {{"name", "repetition"}, {"n", n}};
    return c;
}

QcCode qc_mdpc_code(const Matrix& h, size_t t)
{
    QcCode c;
    c.name = "mdpc";
    c.g = kernel(h);
    if (c.g.rows() == 0) fail(Errc::empty_code, "parity check has a trivial kernel");
    c.t = t;
    c.decode = [h](const Vec& y) { return bitflip_decode(h, y, flip_max_upc).codeword; };
    c.desc = {{"name", "mdpc"}, {"h", matrix_to_json(h)}, {"t", t}};
    return c;
}

QcCode qc_code_from_json(const json& j)
{
    std::string name = j.value("name", std::string());
    if (name == "repetition") return qc_repetition_code(j.at("n").get<size_t>());
    if (name == "mdpc") return qc_mdpc_code(matrix_from_json(j.at("h")), j.at("t").get<size_t>());
    fail(Errc::parse_error, "unknown QC code '" + name + "'");
}

namespace {

void check_len(const QcKey& k, const Vec& a, const char* what)
{
    if (a.size() != k.params.n) fail(Errc::dim_mismatch, std::string(what) + " has wrong length");
}

}

QcKey qc_assemble(const QcCode& code, const QcParams& p, const Vec& h, const Vec& y, const Vec& z)
{
    if (code.g.cols() != p.n) fail(Errc::dim_mismatch, "code length differs from the ring size");
    QcKey k{p, code, h, {}, y, z};
    check_len(k, h, "h");
    check_len(k, y, "y");
    check_len(k, z, "z");
    const Field& f = *code.g.field();
    k.s = ring_add(f, y, ring_mul(f, h, z));
    return k;
}

QcKey qc_keygen(const QcCode& code, const QcParams& p, Rng& rng)
{
    const Field& f = *code.g.field();
    Vec h = random_vec(f, p.n, rng);
    Vec y = random_weight_vec(f, p.n, p.w, rng);
    Vec z = random_weight_vec(f, p.n, p.w, rng);
    return qc_assemble(code, p, h, y, z);
}

QcCipher qc_encrypt(const QcKey& k, const Vec& m, const Vec& e, const Vec& r1, const Vec& r2)
{
    check_len(k, e, "e");
    check_len(k, r1, "r1");
    check_len(k, r2, "r2");
    const Field& f = *k.code.g.field();
    Vec u = ring_add(f, r1, ring_mul(f, k.h, r2));
    Vec v = ring_add(f, ring_add(f, k.code.g.left_mul(m), ring_mul(f, k.s, r2)), e);
    return {u, v};
}

QcCipher qc_encrypt(const QcKey& k, const Vec& m, Rng& rng)
{
    const Field& f = *k.code.g.field();
    size_t n = k.params.n;
    Vec e = random_weight_vec(f, n, k.params.w_e, rng);
    Vec r1 = random_weight_vec(f, n, k.params.w_r, rng);
    Vec r2 = random_weight_vec(f, n, k.params.w_r, rng);
    return qc_encrypt(k, m, e, r1, r2);
}

Vec qc_decrypt(const QcKey& k, const QcCipher& c)
{
    check_len(k, c.u, "u");
    check_len(k, c.v, "v");
    const Field& f = *k.code.g.field();
    Vec cw = k.code.decode(ring_sub(f, c.v, ring_mul(f, c.u, k.z)));
    auto m = solve_linear(k.code.g, cw);
    if (!m) fail(Errc::decode_failure, "decoder returned a non-codeword");
    return *m;
}

Vec qc_noise(const QcKey& k, const Vec& e, const Vec& r1, const Vec& r2)
{
    const Field& f = *k.code.g.field();
    return ring_add(f, ring_sub(f, ring_mul(f, k.y, r2), ring_mul(f, r1, k.z)), e);
}

}
