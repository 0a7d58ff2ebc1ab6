#include <codelab/error.hpp>
#include <codelab/sig.hpp>

namespace codelab {

namespace {

const FieldPtr& gf2()
{
    static FieldPtr f = Field::make(2);
    return f;
}

Bytes random_bytes(Rng& rng)
{
    Bytes b(32);
    for (auto& x : b) x = uint8_t(rng.next());
    return b;
}

Bytes hash_word(const Permutation& sigma, const Vec& w) { return commit_hash({encode(sigma.apply(w))}); }

}

Vec block_shift(const Vec& a, size_t block, size_t i)
{
    if (block == 0 || a.size() % block) fail(Errc::invalid_block_size, "length is not a multiple of the block");
    Vec out(a.size());
    for (size_t b = 0; b < a.size(); b += block)
        for (size_t p = 0; p < block; ++p) out[b + (p + i) % block] = a[b + p];
    return out;
}

AgsKeys ags_keygen(size_t k, size_t t, Rng& rng)
{
    if (k == 0 || t > 2 * k) fail(Errc::infeasible_params, "need k >= 1 and t <= 2k");
    const Field& f = *gf2();
    Vec a = random_vec(f, k, rng), b = random_vec(f, k, rng);
    a[0] = 1;
    AgsKeys keys;
    keys.pub.g = circulant(gf2(), a).hstack(circulant(gf2(), b));
    keys.pub.t = t;
    keys.m = random_vec(f, k, rng);
    keys.e = random_weight_vec(f, 2 * k, t, rng);
    keys.pub.c = vadd(f, keys.pub.g.left_mul(keys.m), keys.e);
    return keys;
}

AgsCommitment ags_commit(const AgsKeys& keys, Rng& rng)
{
    AgsCommitment cm;
    cm.u = random_vec(*gf2(), keys.pub.g.rows(), rng);
    cm.sigma = Permutation::random(keys.pub.g.cols(), rng);
    cm.c0 = commit_hash({encode(cm.sigma)});
    cm.c1 = hash_word(cm.sigma, keys.pub.g.left_mul(cm.u));
    return cm;
}

Bytes ags_c2(const AgsKeys& keys, const AgsCommitment& cm, size_t z)
{
    Vec ug = keys.pub.g.left_mul(cm.u);
    return hash_word(cm.sigma, vadd(*gf2(), ug, block_shift(keys.e, keys.pub.g.rows(), z)));
}

AgsTranscript ags_respond(const AgsKeys& keys, const AgsCommitment& cm, size_t z, int b)
{
    const Field& f = *gf2();
    size_t k = keys.pub.g.rows();
    AgsTranscript tr;
    tr.c0 = cm.c0;
    tr.c1 = cm.c1;
    tr.c2 = ags_c2(keys, cm, z);
    tr.z = z;
    tr.b = b;
    if (b == 0) {
        tr.sigma = cm.sigma;
        tr.um = vadd(f, cm.u, block_shift(keys.m, k, z));
    } else {
        tr.w1 = cm.sigma.apply(keys.pub.g.left_mul(cm.u));
        tr.w2 = cm.sigma.apply(block_shift(keys.e, k, z));
    }
    return tr;
}

AgsTranscript ags_transcript(const AgsKeys& keys, size_t z, int b, Rng& rng)
{
    return ags_respond(keys, ags_commit(keys, rng), z, b);
}

AgsTranscript ags_round(const AgsKeys& keys, uint64_t prover_seed, uint64_t verifier_seed)
{
    Rng pr(prover_seed), vr(verifier_seed);
    size_t z = 1 + vr.below(keys.pub.g.rows());
    int b = vr.coin() ? 1 : 0;
    return ags_transcript(keys, z, b, pr);
}

std::optional<Bytes> ags_rebuild(const AgsPublic& pub, const AgsTranscript& tr)
{
    const Field& f = *gf2();
    size_t k = pub.g.rows(), n = pub.g.cols();
    if (tr.z < 1 || tr.z > k) return std::nullopt;
    if (tr.b == 0) {
        if (tr.sigma.size() != n || tr.um.size() != k) return std::nullopt;
        Vec w = vadd(f, pub.g.left_mul(tr.um), block_shift(pub.c, k, tr.z));
        if (tr.c2 != hash_word(tr.sigma, w)) return std::nullopt;
        return commit_hash({encode(tr.sigma)});
    }
    if (tr.b != 1 || tr.w1.size() != n || tr.w2.size() != n || weight(tr.w2) != pub.t) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (tr.w1[i] > 1 || tr.w2[i] > 1) return std::nullopt;
    if (tr.c2 != commit_hash({encode(vadd(f, tr.w1, tr.w2))})) return std::nullopt;
    return commit_hash({encode(tr.w1)});
}

bool ags_verify(const AgsPublic& pub, const AgsTranscript& tr)
{
    auto mine = ags_rebuild(pub, tr);
    return mine && *mine == (tr.b == 0 ? tr.c0 : tr.c1);
}

AgsTranscript ags_cheat(int guess_b, const AgsPublic& pub, size_t z, int b, Rng& rng)
{
    const Field& f = *gf2();
    size_t k = pub.g.rows(), n = pub.g.cols();
    Vec u = random_vec(f, k, rng);
    auto sigma = Permutation::random(n, rng);
    Vec ug = pub.g.left_mul(u);
    AgsTranscript tr;
    tr.z = z;
    tr.b = b;
    Vec um = u, fake_err = block_shift(random_weight_vec(f, n, pub.t, rng), k, z);
    if (guess_b == 0) {
        // any message: the b = 0 check never sees the weight
        um = vadd(f, u, block_shift(random_vec(f, k, rng), k, z));
        tr.c0 = commit_hash({encode(sigma)});
        tr.c1 = random_bytes(rng);
        tr.c2 = hash_word(sigma, vadd(f, pub.g.left_mul(um), block_shift(pub.c, k, z)));
    } else {
        tr.c0 = random_bytes(rng);
        tr.c1 = hash_word(sigma, ug);
        tr.c2 = hash_word(sigma, vadd(f, ug, fake_err));
    }
    if (b == 0) {
        tr.sigma = sigma;
        tr.um = um;
    } else {
        tr.w1 = sigma.apply(ug);
        tr.w2 = sigma.apply(fake_err);
    }
    return tr;
}

}
