#include <doctest.h>

#include <codelab/error.hpp>
#include <codelab/families.hpp>
#include <codelab/sig.hpp>

#include "oracle.hpp"

#include <cmath>

using namespace codelab;

namespace {

CveKeys toy_cve(uint32_t q, uint64_t seed, size_t n = 20, size_t k = 10, size_t t = 4)
{
    Rng rng(seed);
    return cve_keygen(Field::make(q), n, k, t, rng);
}

// two-sample chi-square homogeneity statistic
double chi2(const std::vector<double>& a, const std::vector<double>& b)
{
    double na = 0, nb = 0, s = 0;
    for (size_t i = 0; i < a.size(); ++i) na += a[i], nb += b[i];
    for (size_t i = 0; i < a.size(); ++i) {
        double col = a[i] + b[i];
        if (col == 0) continue;
        double ea = col * na / (na + nb), eb = col * nb / (na + nb);
        s += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
    }
    return s;
}

bool within_3sigma(double hits, double trials, double p)
{
    return std::abs(hits - trials * p) <= 3 * std::sqrt(trials * p * (1 - p));
}

}

TEST_CASE("monomial transforms")
{
    auto f = Field::make(7);
    Rng rng(1);
    for (int it = 0; it < 50; ++it) {
        auto m = random_monomial(*f, 9, rng);
        Vec a = random_vec(*f, 9, rng);
        CHECK(apply_inverse(*f, m, apply(*f, m, a)) == a);
        CHECK(weight(apply(*f, m, a)) == weight(a));
        // sigma(v) * sigma(a)
        CHECK(apply(*f, m, a) == vmul(*f, m.sigma.apply(m.v), m.sigma.apply(a)));
    }
}

TEST_CASE("CVE completeness and tampering")
{
    for (uint32_t q : {3u, 5u, 13u}) {
        auto keys = toy_cve(q, q);
        const Field& f = *keys.pub.h.field();
        int seen[2] = {0, 0};
        for (uint64_t s = 0; s < 100; ++s) {
            auto tr = cve_round(keys, s, 1000 + s);
            ++seen[tr.b];
            CHECK(cve_verify(keys.pub, tr));
            if (tr.b == 1) CHECK(weight(tr.se) == keys.pub.t);
        }
        CHECK(seen[0] > 0);
        CHECK(seen[1] > 0);

        Rng rng(q);
        for (int b : {0, 1}) {
            auto cm = cve_commit(keys, rng);
            auto tr = cve_respond(keys, cm, 1, b);
            REQUIRE(cve_verify(keys.pub, tr));
            auto bad = tr;
            if (b == 0) bad.mono.v[0] = f.add(bad.mono.v[0], 1) ? f.add(bad.mono.v[0], 1) : 1;
            else {
                size_t i = support(bad.se)[0];
                bad.se[i] = f.add(bad.se[i], 1) ? f.add(bad.se[i], 1) : f.add(bad.se[i], 2);
            }
            CHECK_FALSE(cve_verify(keys.pub, bad));
            auto moved = tr;
            moved.y[0] = f.add(moved.y[0], 1);
            CHECK_FALSE(cve_verify(keys.pub, moved));
        }
    }
}

TEST_CASE("CVE impersonation case analysis")
{
    auto keys = toy_cve(5, 7);
    const Field& f = *keys.pub.h.field();
    Rng rng(3);
    for (auto st : {CveStrategy::s0_improved, CveStrategy::s1_improved}) {
        int favored = st == CveStrategy::s0_improved ? 0 : 1;
        for (Elt z = 1; z < 5; ++z) {
            CHECK(cve_verify(keys.pub, cve_cheat(st, keys.pub, 2, {z, favored}, rng)));
            bool other = cve_verify(keys.pub, cve_cheat(st, keys.pub, 2, {z, 1 - favored}, rng));
            CHECK(other == (z == 2));
        }
    }
    for (auto st : {CveStrategy::s0, CveStrategy::s1}) {
        int favored = st == CveStrategy::s0 ? 0 : 1;
        CHECK(cve_verify(keys.pub, cve_cheat(st, keys.pub, 2, {3, favored}, rng)));
        CHECK_FALSE(cve_verify(keys.pub, cve_cheat(st, keys.pub, 2, {2, 1 - favored}, rng)));
    }
    CHECK(cve_strategy_from_string("s1'") == CveStrategy::s1_improved);
    CHECK_THROWS_AS(cve_strategy_from_string("s2"), Error);
    (void)f;
}

TEST_CASE("CVE soundness rates")
{
    auto keys = toy_cve(5, 11);
    const int trials = 10000;
    for (auto st : {CveStrategy::s0_improved, CveStrategy::s1_improved, CveStrategy::s0, CveStrategy::s1}) {
        int hits = 0;
        for (int i = 0; i < trials; ++i) hits += cve_impersonate(st, keys.pub, 3, 50000 + i, 17);
        bool improved = st == CveStrategy::s0_improved || st == CveStrategy::s1_improved;
        double p = improved ? 5.0 / 8 : 0.5;
        MESSAGE("strategy " << int(st) << ": " << hits << " / " << trials);
        CHECK(within_3sigma(hits, trials, p));
    }
}

TEST_CASE("CVE zero-knowledge smoke test")
{
    // two weight-2 secrets with one syndrome: their difference is a codeword
    auto f = Field::make(5);
    Rng rng(21);
    size_t n = 12;
    Vec e1(n), e2(n);
    e1[0] = 1, e1[1] = 3, e2[5] = 2, e2[9] = 4;
    Matrix g = Matrix::random_full_rank(f, 5, n, rng).vstack(Matrix(f, {vsub(*f, e1, e2)}));
    auto h = LinearCode::from_generator(g).parity_check();
    auto k1 = cve_keys(h, e1), k2 = cve_keys(h, e2);
    REQUIRE(k1.pub.s == k2.pub.s);

    std::vector<double> y1(5), y2(5), v1(4), v2(4);
    for (int i = 0; i < 1000; ++i) {
        Elt z = Elt(1 + rng.below(4));
        auto a = cve_respond(k1, cve_commit(k1, rng), z, 0);
        auto b = cve_respond(k2, cve_commit(k2, rng), z, 0);
        CHECK(cve_verify(k1.pub, a));
        CHECK(cve_verify(k2.pub, b));
        y1[a.y[0]] += 1, y2[b.y[0]] += 1;
        v1[a.mono.v[0] - 1] += 1, v2[b.mono.v[0] - 1] += 1;
    }
    // 1% critical values for 4 and 3 degrees of freedom
    CHECK(chi2(y1, y2) < 13.277);
    CHECK(chi2(v1, v2) < 11.345);
}

TEST_CASE("AGS rounds")
{
    Rng rng(5);
    auto keys = ags_keygen(17, 6, rng);
    const auto& pub = keys.pub;
    auto f2 = Field::make(2);
    size_t k = 17;
    CHECK(pub.g.cols() == 34);
    CHECK(weight(keys.e) == 6);
    // shifts commute with the quasi-cyclic generator
    for (int it = 0; it < 100; ++it) {
        Vec m = random_vec(*f2, k, rng), e = random_weight_vec(*f2, 2 * k, 6, rng);
        size_t z = 1 + rng.below(k);
        Vec c = vadd(*f2, pub.g.left_mul(m), e);
        CHECK(vadd(*f2, pub.g.left_mul(block_shift(m, k, z)), block_shift(e, k, z)) == block_shift(c, k, z));
        CHECK(weight(block_shift(e, k, z)) == 6);
    }
    CHECK(block_shift({1, 0, 0, 0, 0, 1}, 3, 1) == Vec{0, 1, 0, 1, 0, 0});
    CHECK(block_shift({1, 2, 3}, 3, 3) == Vec{1, 2, 3});

    for (uint64_t s = 0; s < 100; ++s) {
        auto tr = ags_round(keys, s, 500 + s);
        CHECK(ags_verify(pub, tr));
        if (tr.b == 0) {
            // the b = 0 check rebuilds sigma(uG + rho_z(e))
            Vec direct = vadd(*f2, pub.g.left_mul(tr.um), block_shift(pub.c, k, tr.z));
            Vec u = vadd(*f2, tr.um, block_shift(keys.m, k, tr.z));
            CHECK(direct == vadd(*f2, pub.g.left_mul(u), block_shift(keys.e, k, tr.z)));
        } else {
            CHECK(weight(tr.w2) == 6);
        }
    }
    for (int b : {0, 1}) {
        auto tr = ags_transcript(keys, 4, b, rng);
        auto bad = tr;
        if (b == 0) bad.um[0] ^= 1;
        else bad.w1[0] ^= 1;
        CHECK_FALSE(ags_verify(pub, bad));
    }

    int hits = 0;
    const int trials = 2000;
    for (int i = 0; i < trials; ++i) {
        size_t z = 1 + rng.below(k);
        int b = rng.coin();
        hits += ags_verify(pub, ags_cheat(i % 2, pub, z, b, rng));
    }
    CHECK(hits >= trials / 2 - 3 * std::sqrt(trials / 4.0));
    CHECK(within_3sigma(hits, trials, 0.5));
}

TEST_CASE("compression")
{
    auto keys = toy_cve(13, 2);
    CHECK(compress_protocol(keys, 1, 1).hashes_sent == 2);
    auto before = hash_calls();
    auto rep = compress_protocol(keys, 10, 9);
    CHECK(hash_calls() > before);
    CHECK(rep.verified);
    CHECK(rep.hashes_sent == 11);
    for (size_t bad : {0u, 4u, 9u}) {
        try {
            compress_protocol(keys, 10, 9, bad);
            FAIL("expected AggregateMismatch");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::aggregate_mismatch);
        }
    }
}

TEST_CASE("Fiat-Shamir signatures over CVE")
{
    auto keys = toy_cve(13, 4);
    const Field& f = *keys.pub.h.field();
    auto sig = fiat_shamir_sign(keys, "attack at dawn", 16, 1);
    CHECK(sig.responses.size() == 16);
    CHECK(fiat_shamir_verify(keys.pub, "attack at dawn", sig));
    CHECK_FALSE(fiat_shamir_verify(keys.pub, "attack at dusk", sig));
    CHECK_FALSE(fiat_shamir_verify(keys.pub, "attack at dawo", sig));

    auto cut = sig;
    cut.responses.pop_back();
    CHECK_FALSE(fiat_shamir_verify(keys.pub, "attack at dawn", cut));
    cut.rounds = 15;
    CHECK_FALSE(fiat_shamir_verify(keys.pub, "attack at dawn", cut));

    auto twin = fiat_shamir_sign(keys, "attack at dawn", 16, 1);
    CHECK(to_json(twin, f).dump() == to_json(sig, f).dump());
    CHECK(to_json(fiat_shamir_sign(keys, "attack at dawn", 16, 2), f).dump() != to_json(sig, f).dump());

    auto back = fs_signature_from_json(to_json(sig, f), f, keys.pub.h.cols());
    CHECK(fiat_shamir_verify(keys.pub, "attack at dawn", back));
    auto k2 = cve_keys_from_json(to_json(keys, true));
    CHECK(k2.e == keys.e);
    CHECK(fiat_shamir_verify(cve_keys_from_json(to_json(keys, false)).pub, "attack at dawn", sig));

    // (13/24)^N <= 2^-lambda
    size_t n = fs_rounds(13, 16);
    CHECK(std::pow(13.0 / 24, double(n)) <= std::pow(2.0, -16));
    CHECK(std::pow(13.0 / 24, double(n - 1)) > std::pow(2.0, -16));
    CHECK_THROWS_AS(fs_rounds(2, 16), Error);
}

TEST_CASE("Fiat-Shamir signatures over AGS")
{
    Rng rng(21);
    auto keys = ags_keygen(11, 3, rng);
    auto sig = ags_fs_sign(keys, "attack at dawn", 24, 1);
    CHECK(ags_fs_verify(keys.pub, "attack at dawn", sig));
    CHECK_FALSE(ags_fs_verify(keys.pub, "attack at dawo", sig));
    int zeros = 0;
    for (auto& r : sig.responses) zeros += r.b == 0;
    CHECK(zeros > 0);
    CHECK(zeros < 24);

    auto cut = sig;
    cut.responses.pop_back();
    CHECK_FALSE(ags_fs_verify(keys.pub, "attack at dawn", cut));
    auto bent = sig;
    bent.responses[3].other[0] ^= 1;
    CHECK_FALSE(ags_fs_verify(keys.pub, "attack at dawn", bent));

    CHECK(to_json(ags_fs_sign(keys, "attack at dawn", 24, 1)).dump() == to_json(sig).dump());
    auto back = ags_fs_signature_from_json(to_json(sig), 11);
    auto pub = ags_keys_from_json(to_json(keys, false)).pub;
    CHECK(ags_fs_verify(pub, "attack at dawn", back));
    CHECK(ags_keys_from_json(to_json(keys, true)).e == keys.e);
    CHECK_THROWS_AS(ags_fs_signature_from_json(to_json(fiat_shamir_sign(toy_cve(13, 4), "x", 2, 1),
                                                       *Field::make(13)), 11),
                    Error);
}

TEST_CASE("CFS on the Hamming code")
{
    auto f = Field::make(2);
    Rng rng(8);
    auto key = niederreiter_keygen(single_error_secret(LinearCode::from_generator(hamming74_generator())), rng);
    for (int i = 0; i < 100; ++i) {
        std::string msg = "msg" + std::to_string(i);
        auto sig = cfs_sign(key, msg);
        CHECK(sig.attempts == 1);
        CHECK(cfs_verify(key.h_pub, 1, msg, sig));
    }
    auto sig = cfs_sign(key, "x");
    auto heavy = sig;
    for (size_t i = 0, added = 0; added < 2 - weight(sig.e) && i < 7; ++i)
        if (!heavy.e[i]) heavy.e[i] = 1, ++added;
    CHECK(weight(heavy.e) == 2);
    CHECK_FALSE(cfs_verify(key.h_pub, 1, "x", heavy));
    CHECK_FALSE(cfs_verify(key.h_pub, 1, "y", sig));
}

TEST_CASE("CFS on a toy Goppa code")
{
    Rng rng(12);
    auto gp = random_goppa(2, 4, 16, 2, rng);
    auto key = niederreiter_keygen(goppa_secret(gp), rng);
    size_t r = key.h_pub.rows(), n = key.h_pub.cols();
    auto f = key.h_pub.field();

    // decodable fraction by walking every syndrome
    size_t ok = 0, total = size_t(1) << r;
    for (size_t x = 0; x < total; ++x) {
        Vec s(r);
        for (size_t i = 0; i < r; ++i) s[i] = (x >> i) & 1;
        try {
            Vec e = niederreiter_decrypt(key, s);
            ok += weight(e) <= 2 && key.h_pub.right_mul(e) == s;
        } catch (const Error&) {
        }
    }
    double p = double(ok) / total;
    // weight <= 2 errors have distinct syndromes
    CHECK(ok == 1 + n + n * (n - 1) / 2);

    const int msgs = 400;
    double sum = 0, sq = 0;
    for (int i = 0; i < msgs; ++i) {
        std::string msg = "goppa" + std::to_string(i);
        auto sig = cfs_sign(key, msg);
        sum += sig.attempts, sq += double(sig.attempts) * sig.attempts;
        CHECK(cfs_verify(key.h_pub, 2, msg, sig));
        // independent recomputation of both predicates
        std::vector<int64_t> ev(sig.e.begin(), sig.e.end());
        std::vector<std::vector<int64_t>> ht(n, std::vector<int64_t>(r));
        for (size_t a = 0; a < r; ++a)
            for (size_t b = 0; b < n; ++b) ht[b][a] = key.h_pub(a, b);
        auto target = cfs_target(key.h_pub, msg, sig.counter);
        CHECK(oracle::vecmat(ev, ht, 2) == std::vector<int64_t>(target.begin(), target.end()));
        CHECK(weight(sig.e) <= 2);
    }
    double mean = sum / msgs, expect = 1 / p, sd = std::sqrt((1 - p) / (p * p) / msgs);
    MESSAGE("decodable fraction " << p << ", mean attempts " << mean << " vs " << expect);
    CHECK(std::abs(mean - expect) <= 3 * sd);

    try {
        for (int i = 0;; ++i) cfs_sign(key, "retry" + std::to_string(i), 1);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::retry_limit);
    }
    (void)f;
}

TEST_CASE("communication cost")
{
    CHECK(psi(128, 256, 49) == 735);
    CHECK(psi(698, 2, 70) == 698);
    CHECK(comm_cost(ZkScheme::cve, 128, 64, 256, 49, 0, 256, 128, false) == 256);
    CHECK(comm_cost(ZkScheme::ags, 698, 349, 2, 70, 0, 160, 128, true) == 160);
    // CVE average, term by term
    double avg = 256 + 10.0 * (8 + 128 * 8 + 1 + 256 + (735 + 128) / 2.0);
    CHECK(comm_cost(ZkScheme::cve, 128, 64, 256, 49, 10, 256, 128, false) == avg);
    double amax = 160 + 3.0 * (9 + 1 + 320 + std::max(128 + 349, 698 + 698));
    CHECK(comm_cost(ZkScheme::ags, 698, 349, 2, 70, 3, 160, 128, true) == amax);
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        uint64_t n = 2 + rng.below(2000), k = 1 + rng.below(n - 1), q = 2 + rng.below(300), t = 1 + rng.below(n);
        uint64_t N = rng.below(300), lh = 1 + rng.below(512), ls = 1 + rng.below(512);
        for (auto s : {ZkScheme::cve, ZkScheme::ags})
            CHECK(comm_cost(s, n, k, q, t, N, lh, ls, false) <= comm_cost(s, n, k, q, t, N, lh, ls, true));
    }
}
