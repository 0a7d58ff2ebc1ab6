#include <codelab/error.hpp>
#include <codelab/io.hpp>
#include <codelab/pke.hpp>

namespace codelab {

using nlohmann::json;

SecretCode single_error_secret(const LinearCode& c)
{
    SecretCode s;
    s.code = c;
    s.t = 1;
    Matrix h = c.parity_check();
    s.decode = [h](const Vec& y) { return single_error_decode(h, y); };
    s.desc = {{"family", "single_error"}, {"code", write_code(c)}};
    return s;
}

SecretCode goppa_secret(const GoppaParams& p)
{
    SecretCode s;
    s.code = goppa_code(p);
    s.t = goppa_radius(p);
    s.decode = [p](const Vec& y) { return goppa_decode(p, y); };
    s.desc = to_json(p);
    return s;
}

SecretCode grs_secret(const GrsParams& p)
{
    SecretCode s;
    s.code = grs_code(p);
    s.t = (p.alpha.size() - p.k) / 2;
    s.decode = [p](const Vec& y) { return grs_decode(p, y); };
    s.desc = to_json(p);
    return s;
}

SecretCode secret_from_json(const json& j)
{
    std::string fam = j.value("family", std::string());
    if (fam == "single_error") return single_error_secret(read_code(j.at("code").get<std::string>()));
    if (fam == "goppa") return goppa_secret(goppa_from_json(j));
    if (fam == "grs") return grs_secret(grs_from_json(j));
    fail(Errc::parse_error, "unknown secret code family '" + fam + "'");
}

Vec syndrome_decode(const SecretCode& c, const Matrix& h, const Vec& s)
{
    const Field& f = *h.field();
    auto y = solve_linear(h.transpose(), s);
    if (!y) fail(Errc::decode_failure, "syndrome outside the column space");
    Vec e = vsub(f, *y, c.decode(*y));
    if (weight(e) > c.t) fail(Errc::decode_failure, "error heavier than the decoding radius");
    return e;
}

BigInt binomial(size_t n, size_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Vec unrank_weight(size_t n, size_t t, const BigInt& rank)
{
    if (t > n) fail(Errc::invalid_argument, "weight exceeds length");
    if (rank < 0 || rank >= binomial(n, t)) fail(Errc::invalid_argument, "rank out of range");
    Vec v(n, 0);
    BigInt r = rank;
    size_t hi = n;
    for (size_t i = t; i >= 1; --i) {
        size_t c = i - 1;
        while (c + 1 < hi && binomial(c + 1, i) <= r) ++c;
        r -= binomial(c, i);
        v[c] = 1;
        hi = c;
    }
    return v;
}

BigInt rank_weight_vector(const Vec& v)
{
    BigInt r = 0;
    size_t i = 0;
    for (size_t c = 0; c < v.size(); ++c)
        if (v[c]) r += binomial(c, ++i);
    return r;
}

Vec weight_vector_from_seed(size_t n, size_t t, const Bytes& seed)
{
    BigInt total = binomial(n, t);
    size_t len = (msb(total) + 1) / 8 + 9;
    Bytes buf = expand_hash(seed, len);
    BigInt x = 0;
    for (auto b : buf) x = (x << 8) | b;
    return unrank_weight(n, t, x % total);
}

Vec ring_add(const Field& f, const Vec& a, const Vec& b) { return vadd(f, a, b); }
Vec ring_sub(const Field& f, const Vec& a, const Vec& b) { return vsub(f, a, b); }

Vec ring_mul(const Field& f, const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) fail(Errc::dim_mismatch, "ring elements of different length");
    size_t n = a.size();
    Vec c(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < n; ++j)
            if (b[j]) {
                size_t k = i + j < n ? i + j : i + j - n;
                c[k] = f.add(c[k], f.mul(a[i], b[j]));
            }
    }
    return c;
}

Vec ring_inv(FieldPtr f, const Vec& a)
{
    size_t n = a.size();
    // extended Euclid on (x^n - 1, a), tracking the coefficient of a
    Poly r0 = Poly::xn_minus_one(f, n), r1(f, a);
    Poly t0 = Poly::zero(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Poly t = t0 - q * t1;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    if (r0.degree() != 0) fail(Errc::no_solution, "not a unit of the ring");
    Poly inv = t0.scale(f->inv(r0.lead())) % Poly::xn_minus_one(f, n);
    return inv.to_vec(n);
}

Vec ring_monomial(size_t n, size_t i)
{
    Vec v(n, 0);
    v[i % n] = 1;
    return v;
}

}
