#include <codelab/error.hpp>
#include <codelab/sig.hpp>

#include <algorithm>

namespace codelab {

namespace {

Bytes encode(const Matrix& m)
{
    Bytes out;
    for (size_t i = 0; i < m.rows(); ++i) {
        Bytes r = codelab::encode(m.row(i));
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

uint64_t clog2(uint64_t x)
{
    uint64_t c = 0;
    while ((uint64_t(1) << c) < x) ++c;
    return c;
}

}

Vec cfs_target(const Matrix& h_pub, const std::string& message, uint64_t counter)
{
    Bytes ctr(8);
    for (int i = 0; i < 8; ++i) ctr[i] = uint8_t(counter >> (56 - 8 * i));
    Bytes seed = commit_hash({Bytes(message.begin(), message.end()), encode(h_pub), ctr});
    size_t r = h_pub.rows();
    uint32_t q = h_pub.field()->q();
    Bytes words = expand_hash(seed, 4 * r);
    Vec s(r);
    for (size_t i = 0; i < r; ++i) {
        uint32_t w = uint32_t(words[4 * i]) << 24 | uint32_t(words[4 * i + 1]) << 16 |
                     uint32_t(words[4 * i + 2]) << 8 | words[4 * i + 3];
        s[i] = Elt(w % q);
    }
    return s;
}

CfsSignature cfs_sign(const NiederreiterKey& key, const std::string& message, size_t max_attempts)
{
    for (uint64_t ctr = 0; ctr < max_attempts; ++ctr) {
        Vec target = cfs_target(key.h_pub, message, ctr);
        Vec e;
        try {
            e = niederreiter_decrypt(key, target);
        } catch (const Error& err) {
            if (err.code() != Errc::decode_failure) throw;
            continue;
        }
        if (weight(e) <= key.t && key.h_pub.right_mul(e) == target) return {ctr, e, size_t(ctr + 1)};
    }
    fail(Errc::retry_limit, "no decodable hash within " + std::to_string(max_attempts) + " attempts");
}

bool cfs_verify(const Matrix& h_pub, size_t t, const std::string& message, const CfsSignature& sig)
{
    if (sig.e.size() != h_pub.cols() || weight(sig.e) > t) return false;
    for (auto x : sig.e)
        if (!h_pub.field()->valid(x)) return false;
    return h_pub.right_mul(sig.e) == cfs_target(h_pub, message, sig.counter);
}

uint64_t psi(uint64_t n, uint64_t q, uint64_t t)
{
    return std::min(n * clog2(q), t * (clog2(n) + clog2(q - 1)));
}

double comm_cost(ZkScheme s, uint64_t n, uint64_t k, uint64_t q, uint64_t t, uint64_t rounds, uint64_t l_hash,
                 uint64_t l_seed, bool max_case)
{
    double per;
    if (s == ZkScheme::cve) {
        uint64_t p = psi(n, q, t);
        double resp = max_case ? double(std::max(p, l_seed)) : (p + l_seed) / 2.0;
        per = double(clog2(q - 1) + n * clog2(q) + 1 + l_hash) + resp;
    } else {
        uint64_t p = psi(n, 2, t);
        double resp = max_case ? double(std::max(l_seed + k, n + p)) : (l_seed + k + n + p) / 2.0;
        per = double(clog2(k) + 1 + 2 * l_hash) + resp;
    }
    return double(l_hash) + double(rounds) * per;
}

}
