#include <codelab/error.hpp>
#include <codelab/pke.hpp>

namespace codelab {

namespace {

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m)
{
    unsigned __int128 r = 1, x = b % m;
    for (; e; e >>= 1, x = x * x % m)
        if (e & 1) r = r * x % m;
    return (uint64_t)r;
}

}

bool check_bike_r(uint64_t r)
{
    if (r < 3 || !Field::is_prime(r)) return false;
    uint64_t rest = r - 1;
    for (uint64_t q = 2; q * q <= rest; ++q) {
        if (rest % q) continue;
        if (powmod(2, (r - 1) / q, r) == 1) return false;
        while (rest % q == 0) rest /= q;
    }
    return rest == 1 || powmod(2, (r - 1) / rest, r) != 1;
}

Matrix bike_parity_check(const Vec& h0, const Vec& h1)
{
    auto f = Field::make(2);
    return circulant(f, h0).vstack(circulant(f, h1)).transpose();
}

BikeKey bike_keygen(const BikeParams& p, Rng& rng)
{
    if (!check_bike_r(p.r)) fail(Errc::invalid_argument, "r must be prime with 2 primitive mod r");
    if (p.w % 2 || (p.w / 2) % 2 == 0) fail(Errc::invalid_block_size, "block weight w/2 must be odd");
    if (p.w / 2 >= p.r || p.t > 2 * p.r) fail(Errc::infeasible_params, "weights too large for r");
    auto f = Field::make(2);
    BikeKey k;
    k.params = p;
    k.h0.assign(p.r, 0);
    k.h1.assign(p.r, 0);
    for (auto i : rng.subset(p.r, p.w / 2)) k.h0[i] = 1;
    for (auto i : rng.subset(p.r, p.w / 2)) k.h1[i] = 1;
    k.h = ring_mul(*f, k.h1, ring_inv(f, k.h0));
    return k;
}

Vec bike_encrypt(const Vec& h, const Vec& e0, const Vec& e1)
{
    auto f = Field::make(2);
    return ring_add(*f, e0, ring_mul(*f, e1, h));
}

Vec bike_error_from_seed(const BikeParams& p, const Bytes& seed) { return weight_vector_from_seed(2 * p.r, p.t, seed); }

Vec bike_encrypt(const BikeKey& k, const Bytes& seed)
{
    Vec e = bike_error_from_seed(k.params, seed);
    size_t r = k.params.r;
    return bike_encrypt(k.h, Vec(e.begin(), e.begin() + r), Vec(e.begin() + r, e.end()));
}

Vec bike_decrypt(const BikeKey& k, const Vec& s, size_t max_iters)
{
    if (s.size() != k.params.r) fail(Errc::dim_mismatch, "cipher has wrong length");
    if (k.h0.empty()) fail(Errc::invalid_argument, "secret key missing");
    auto f = Field::make(2);
    Vec e = bitflip_syndrome(bike_parity_check(k.h0, k.h1), ring_mul(*f, s, k.h0), flip_max_upc, max_iters).codeword;
    if (weight(e) != k.params.t) fail(Errc::decode_failure, "decoded error has the wrong weight");
    return e;
}

}
