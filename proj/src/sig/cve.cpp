#include <codelab/error.hpp>
#include <codelab/sig.hpp>

namespace codelab {

namespace {

thread_local uint64_t calls = 0;

void put_be(Bytes& out, uint64_t x, int bytes)
{
    for (int i = bytes - 1; i >= 0; --i) out.push_back(uint8_t(x >> (8 * i)));
}

Bytes random_bytes(Rng& rng, size_t n)
{
    Bytes b(n);
    for (auto& x : b) x = uint8_t(rng.next());
    return b;
}

}

Bytes commit_hash(const std::vector<Bytes>& parts)
{
    ++calls;
    Bytes buf;
    for (auto& p : parts) {
        put_be(buf, p.size(), 8);
        buf.insert(buf.end(), p.begin(), p.end());
    }
    return sha256(buf);
}

uint64_t hash_calls() { return calls; }

Bytes encode(const Vec& v)
{
    Bytes out;
    for (auto x : v) put_be(out, x, 4);
    return out;
}

Bytes encode(const Permutation& p)
{
    Bytes out;
    for (auto x : p.image()) put_be(out, x, 4);
    return out;
}

Monomial random_monomial(const Field& f, size_t n, Rng& rng)
{
    Monomial m{Permutation::random(n, rng), Vec(n)};
    for (auto& x : m.v) x = Elt(1 + rng.below(f.q() - 1));
    return m;
}

Vec apply(const Field& f, const Monomial& m, const Vec& a) { return m.sigma.apply(vmul(f, m.v, a)); }

Vec apply_inverse(const Field& f, const Monomial& m, const Vec& a)
{
    Vec x = m.sigma.inverse().apply(a);
    for (size_t i = 0; i < x.size(); ++i) x[i] = f.div(x[i], m.v[i]);
    return x;
}

CveKeys cve_keys(const Matrix& h, const Vec& e)
{
    if (e.size() != h.cols()) fail(Errc::dim_mismatch, "secret has wrong length");
    return {{h, h.right_mul(e), weight(e)}, e};
}

CveKeys cve_keygen(FieldPtr f, size_t n, size_t k, size_t t, Rng& rng)
{
    if (k >= n || t > n) fail(Errc::infeasible_params, "need k < n and t <= n");
    auto h = Matrix::random_full_rank(f, n - k, n, rng);
    return cve_keys(h, random_weight_vec(*f, n, t, rng));
}

CveCommitment cve_commit(const CveKeys& keys, Rng& rng)
{
    const Field& f = *keys.pub.h.field();
    size_t n = keys.pub.h.cols();
    CveCommitment cm{random_vec(f, n, rng), random_monomial(f, n, rng), {}, {}};
    cm.c0 = commit_hash({encode(cm.mono.sigma), encode(cm.mono.v), encode(keys.pub.h.right_mul(cm.u))});
    cm.c1 = commit_hash({encode(apply(f, cm.mono, cm.u)), encode(apply(f, cm.mono, keys.e))});
    return cm;
}

Vec cve_masked(const CveKeys& keys, const CveCommitment& cm, Elt z)
{
    const Field& f = *keys.pub.h.field();
    return apply(f, cm.mono, vadd(f, cm.u, vscale(f, z, keys.e)));
}

CveTranscript cve_respond(const CveKeys& keys, const CveCommitment& cm, Elt z, int b)
{
    CveTranscript tr;
    tr.c0 = cm.c0;
    tr.c1 = cm.c1;
    tr.z = z;
    tr.y = cve_masked(keys, cm, z);
    tr.b = b;
    if (b == 0) tr.mono = cm.mono;
    else tr.se = apply(*keys.pub.h.field(), cm.mono, keys.e);
    return tr;
}

std::optional<Bytes> cve_rebuild(const CvePublic& pub, const CveTranscript& tr)
{
    const Field& f = *pub.h.field();
    size_t n = pub.h.cols();
    if (tr.y.size() != n || tr.z == 0 || !f.valid(tr.z)) return std::nullopt;
    if (tr.b == 0) {
        if (tr.mono.sigma.size() != n || tr.mono.v.size() != n) return std::nullopt;
        for (auto x : tr.mono.v)
            if (x == 0 || !f.valid(x)) return std::nullopt;
        Vec syn = vsub(f, pub.h.right_mul(apply_inverse(f, tr.mono, tr.y)), vscale(f, tr.z, pub.s));
        return commit_hash({encode(tr.mono.sigma), encode(tr.mono.v), encode(syn)});
    }
    if (tr.b != 1 || tr.se.size() != n || weight(tr.se) != pub.t) return std::nullopt;
    return commit_hash({encode(vsub(f, tr.y, vscale(f, tr.z, tr.se))), encode(tr.se)});
}

bool cve_verify(const CvePublic& pub, const CveTranscript& tr)
{
    auto c = cve_rebuild(pub, tr);
    return c && *c == (tr.b == 0 ? tr.c0 : tr.c1);
}

CveChallenge cve_challenge(const Field& f, Rng& rng)
{
    Elt z = Elt(1 + rng.below(f.q() - 1));
    return {z, rng.coin() ? 1 : 0};
}

CveTranscript cve_round(const CveKeys& keys, uint64_t prover_seed, uint64_t verifier_seed)
{
    Rng pr(prover_seed), vr(verifier_seed);
    auto cm = cve_commit(keys, pr);
    auto ch = cve_challenge(*keys.pub.h.field(), vr);
    return cve_respond(keys, cm, ch.z, ch.b);
}

CveStrategy cve_strategy_from_string(const std::string& s)
{
    if (s == "s0") return CveStrategy::s0;
    if (s == "s1") return CveStrategy::s1;
    if (s == "s0'" || s == "s0p") return CveStrategy::s0_improved;
    if (s == "s1'" || s == "s1p") return CveStrategy::s1_improved;
    fail(Errc::invalid_argument, "unknown strategy: " + s);
}

CveTranscript cve_cheat(CveStrategy st, const CvePublic& pub, Elt guess_z, CveChallenge ch, Rng& rng)
{
    const Field& f = *pub.h.field();
    size_t n = pub.h.cols();
    Vec u = random_vec(f, n, rng);
    auto mono = random_monomial(f, n, rng);
    Vec uh = pub.h.right_mul(u);
    CveTranscript tr;
    tr.z = ch.z;
    tr.b = ch.b;
    tr.mono = mono;
    Vec cheat;
    bool favors_zero = st == CveStrategy::s0 || st == CveStrategy::s0_improved;
    if (favors_zero) {
        // satisfies the parity checks, ignores the weight
        auto sol = solve_linear(pub.h.transpose(), pub.s);
        if (!sol) fail(Errc::no_solution, "syndrome outside the column space");
        cheat = *sol;
        tr.c0 = commit_hash({encode(mono.sigma), encode(mono.v), encode(uh)});
        Vec other = random_weight_vec(f, n, pub.t, rng);
        if (st == CveStrategy::s0) {
            tr.c1 = random_bytes(rng, 32);
        } else {
            Vec y_guess = apply(f, mono, vadd(f, u, vscale(f, guess_z, cheat)));
            tr.c1 = commit_hash({encode(vsub(f, y_guess, vscale(f, guess_z, other))), encode(other)});
        }
        tr.se = other;
    } else {
        // right weight, wrong syndrome
        cheat = random_weight_vec(f, n, pub.t, rng);
        tr.c1 = commit_hash({encode(apply(f, mono, u)), encode(apply(f, mono, cheat))});
        if (st == CveStrategy::s1) {
            tr.c0 = random_bytes(rng, 32);
        } else {
            Vec off = vscale(f, guess_z, vsub(f, pub.h.right_mul(cheat), pub.s));
            tr.c0 = commit_hash({encode(mono.sigma), encode(mono.v), encode(vadd(f, uh, off))});
        }
        tr.se = apply(f, mono, cheat);
    }
    tr.y = apply(f, mono, vadd(f, u, vscale(f, ch.z, cheat)));
    if (tr.b == 0) tr.se.clear();
    else tr.mono = {};
    return tr;
}

bool cve_impersonate(CveStrategy st, const CvePublic& pub, Elt guess_z, uint64_t verifier_seed, uint64_t prover_seed)
{
    Rng vr(verifier_seed), pr(mix_seed(verifier_seed) ^ prover_seed);
    auto ch = cve_challenge(*pub.h.field(), vr);
    return cve_verify(pub, cve_cheat(st, pub, guess_z, ch, pr));
}

}
