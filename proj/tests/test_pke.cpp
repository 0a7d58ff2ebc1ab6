#include <doctest.h>

#include <codelab/error.hpp>
#include <codelab/pke.hpp>
#include <codelab/toy_data.hpp>

#include "oracle.hpp"

#include <cmath>
#include <map>
#include <set>

using namespace codelab;

namespace {

GoppaParams toy_goppa(uint64_t seed)
{
    Rng rng(seed);
    return random_goppa(2, 4, 12, 2, rng);
}

std::vector<std::vector<int64_t>> as_int(const Matrix& m)
{
    std::vector<std::vector<int64_t>> r(m.rows(), std::vector<int64_t>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

// weight distribution over a prime field by enumerating every message
std::map<size_t, size_t> weight_distribution(const Matrix& g)
{
    auto gi = as_int(g);
    int64_t p = g.field()->p();
    std::map<size_t, size_t> d;
    oracle::for_each_vector(g.rows(), (uint32_t)p, [&](const std::vector<uint32_t>& msg) {
        std::vector<int64_t> x(msg.begin(), msg.end());
        size_t w = 0;
        for (auto v : oracle::vecmat(x, gi, p)) w += v != 0;
        ++d[w];
    });
    return d;
}

Vec poly_bits(size_t n, std::initializer_list<size_t> exps)
{
    Vec v(n, 0);
    for (auto e : exps) v[e] = 1;
    return v;
}

// multiplicative order of 2 mod r by repeated doubling
bool two_primitive_naive(uint64_t r)
{
    for (uint64_t d = 2; d * d <= r; ++d)
        if (r % d == 0) return false;
    if (r < 3) return false;
    uint64_t x = 2, ord = 1;
    while (x != 1) {
        x = x * 2 % r;
        ++ord;
    }
    return ord == r - 1;
}

double binom_tail_ge(size_t n, double p, size_t k)
{
    double s = 0;
    for (size_t i = k; i <= n; ++i) s += oracle::binom(n, i) * std::pow(p, i) * std::pow(1 - p, n - i);
    return s;
}

}

TEST_CASE("McEliece replays the Hamming toy")
{
    auto toy = toy::hamming_mceliece();
    auto secret = single_error_secret(LinearCode::from_generator(toy.g));
    auto key = mceliece_assemble(secret, toy.g, toy.s, Permutation::from_matrix(toy.p));
    CHECK(key.g_pub == toy.g_pub);
    CHECK(key.t == 1);
    Vec c = mceliece_encrypt(key.g_pub, key.t, toy.m, toy.e);
    CHECK(c == toy.cipher);
    CHECK(key.p.inverse().apply(c) == toy.c_perm);
    CHECK(inverse(toy.s) == toy.s_inv);
    CHECK(mceliece_decrypt(key, c) == toy.m);

    Vec zero(7, 0);
    Vec c0 = mceliece_encrypt(key.g_pub, key.t, toy.m, zero);
    CHECK(c0 == key.g_pub.left_mul(toy.m));
    CHECK(mceliece_decrypt(key, c0) == toy.m);

    CHECK_THROWS_AS(mceliece_encrypt(key.g_pub, key.t, toy.m, Vec{1, 1, 0, 0, 0, 0, 0}), Error);
}

TEST_CASE("McEliece round trips on a [12, k] Goppa code")
{
    auto secret = goppa_secret(toy_goppa(3));
    CHECK(secret.t == 2);
    Rng rng(11);
    auto key = mceliece_keygen(secret, rng);
    const Field& f = *key.g_pub.field();
    CHECK(key.g_pub.rows() >= 4);
    CHECK(key.g_pub == (key.s * key.g).permute_cols(key.p));
    for (int i = 0; i < 200; ++i) {
        Vec m = random_vec(f, key.g_pub.rows(), rng);
        Vec c = mceliece_encrypt(key.g_pub, key.t, m, rng);
        CHECK(distance(c, key.g_pub.left_mul(m)) <= key.t);
        CHECK(mceliece_decrypt(key, c) == m);
    }
    SUBCASE("public code is permutation-equivalent to the secret one")
    {
        CHECK(weight_distribution(key.g_pub) == weight_distribution(key.g));
    }
}

TEST_CASE("McEliece over a GRS code corrects (n-k)/2 symbol errors")
{
    auto f = Field::make(11);
    GrsParams gp{f, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {1, 3, 2, 5, 4, 1, 7, 9, 2, 6}, 4};
    auto secret = grs_secret(gp);
    CHECK(secret.t == 3);
    Rng rng(5);
    auto key = mceliece_keygen(secret, rng);
    for (int i = 0; i < 50; ++i) {
        Vec m = random_vec(*f, 4, rng);
        CHECK(mceliece_decrypt(key, mceliece_encrypt(key.g_pub, 3, m, rng)) == m);
    }
}

TEST_CASE("Niederreiter replays the toy")
{
    auto toy = toy::niederreiter();
    auto secret = single_error_secret(LinearCode::from_parity_check(toy.h));
    auto key = niederreiter_assemble(secret, toy.h, toy.s, Permutation::from_matrix(toy.p));
    CHECK(key.h_pub == toy.h_pub);
    Vec c = niederreiter_encrypt(key.h_pub, key.t, toy.m);
    CHECK(c == toy.cipher);
    CHECK(inverse(toy.s).right_mul(c) == toy.s_inv_c);
    CHECK(niederreiter_decrypt(key, c) == toy.m);

    Vec zero(7, 0);
    CHECK(niederreiter_encrypt(key.h_pub, key.t, zero) == Vec(3, 0));
    CHECK(niederreiter_decrypt(key, Vec(3, 0)) == zero);
    CHECK_THROWS_AS(niederreiter_encrypt(key.h_pub, key.t, Vec{1, 1, 0, 0, 0, 0, 0}), Error);
}

TEST_CASE("Niederreiter round trips and matches the McEliece dual view")
{
    for (uint64_t seed = 1; seed <= 4; ++seed) {
        auto secret = goppa_secret(toy_goppa(seed));
        Rng rng(seed * 101);
        auto mc = mceliece_keygen(secret, rng);
        // same P, fresh S: H' annihilates the McEliece public code
        auto nd = niederreiter_assemble(secret, secret.code.parity_check(),
                                        random_invertible(mc.g_pub.field(), secret.code.n() - secret.code.k(), rng), mc.p);
        CHECK((mc.g_pub * nd.h_pub.transpose()).is_zero());
        const Field& f = *mc.g_pub.field();
        for (int i = 0; i < 50; ++i) {
            Vec m = random_vec(f, mc.g_pub.rows(), rng);
            Vec e = random_weight_vec(f, 12, 2, rng);
            Vec c = mceliece_encrypt(mc.g_pub, mc.t, m, e);
            Vec s = niederreiter_encrypt(nd.h_pub, nd.t, e);
            CHECK(nd.h_pub.right_mul(c) == s);
            CHECK(niederreiter_decrypt(nd, s) == e);
            CHECK(mceliece_decrypt(mc, c) == m);
        }
    }
}

TEST_CASE("Alekhnovich replays the six-column toy")
{
    auto toy = toy::alekhnovich();
    auto f = toy.a.field();
    CHECK(vadd(*f, toy.a.left_mul(toy.x), toy.e) == toy.y);
    CHECK(same_code(LinearCode::from_generator(kernel(toy.h)), LinearCode::from_generator(toy.g)));
    CHECK(alekhnovich_decrypt_bit(toy.e, toy.c0) == 0);
    CHECK(alekhnovich_decrypt_bit(toy.e, toy.c1) == 1);
}

TEST_CASE("Alekhnovich keys and single bits")
{
    Rng rng(9);
    CHECK_THROWS_AS(alekhnovich_keygen(16, 4, 4, rng), Error);
    auto key = alekhnovich_keygen(64, 40, 3, rng);
    CHECK(weight(key.e) == 3);
    CHECK(key.g.rows() + 41 >= 64);
    for (size_t i = 0; i < key.g.rows(); ++i) CHECK(alekhnovich_decrypt_bit(key.e, key.g.row(i)) == 0);
    // e' = 0: bit 0 is exact
    for (int i = 0; i < 100; ++i) {
        Vec c = key.g.left_mul(random_vec(*key.g.field(), key.g.rows(), rng));
        CHECK(alekhnovich_decrypt_bit(key.e, c) == 0);
    }
}

TEST_CASE("Alekhnovich with 64-fold repetition")
{
    const size_t n = 512, t = 3, reps = 64;
    Rng rng(21);
    auto key = alekhnovich_keygen(n, n - 24, t, rng);

    // P(<e, e'> odd) for two weight-t supports, from the hypergeometric overlap
    double p_odd = 0;
    for (size_t j = 1; j <= t; j += 2)
        p_odd += oracle::binom(t, j) * oracle::binom(n - t, t - j) / oracle::binom(n, t);
    double one_fail = 1 - binom_tail_ge(reps, 0.5, reps / 8);
    double zero_fail = binom_tail_ge(reps, p_odd, reps / 8);
    CHECK(one_fail <= std::ldexp(1.0, -32));
    MESSAGE("P(bit 1 lost) = " << one_fail << ", P(bit 0 lost) = " << zero_fail);

    size_t lost1 = 0;
    for (int i = 0; i < 10000; ++i)
        lost1 += alekhnovich_decrypt_repeated(key.e, alekhnovich_encrypt_repeated(key.g, t, 1, reps, rng)) != 1;
    CHECK(lost1 == 0);

    const int trials0 = 1000;
    size_t lost0 = 0;
    for (int i = 0; i < trials0; ++i)
        lost0 += alekhnovich_decrypt_repeated(key.e, alekhnovich_encrypt_repeated(key.g, t, 0, reps, rng)) != 0;
    double mean = trials0 * zero_fail;
    CHECK(lost0 <= mean + 3 * std::sqrt(mean) + 1);
}

TEST_CASE("QC framework replays the toy")
{
    auto toy = toy::qc();
    QcParams p{7, 1, 1, 1};
    auto key = qc_assemble(qc_repetition_code(7), p, toy.h, toy.y, toy.z);
    CHECK(key.code.t == 3);
    CHECK(key.s == toy.s);
    auto c = qc_encrypt(key, toy.m, toy.e, toy.r1, toy.r2);
    CHECK(c.u == toy.u);
    CHECK(c.v == toy.v);
    const Field& f = *key.code.g.field();
    CHECK(ring_mul(f, key.s, toy.r2) == toy.s_r2);
    CHECK(ring_mul(f, c.u, key.z) == toy.uz);
    CHECK(ring_sub(f, c.v, ring_mul(f, c.u, key.z)) == toy.v_minus_uz);
    CHECK(qc_decrypt(key, c) == toy.m);

    SUBCASE("all-zero randomness")
    {
        Vec z(7, 0);
        auto c0 = qc_encrypt(key, Vec{0}, z, z, z);
        CHECK(c0.u == z);
        CHECK(c0.v == z);
        CHECK(qc_decrypt(key, c0) == Vec{0});
    }
    SUBCASE("follow-up exercise: e = x^4, r1 = 1, r2 = x")
    {
        Vec e = poly_bits(7, {4}), r1 = poly_bits(7, {0}), r2 = poly_bits(7, {1});
        Vec noise = qc_noise(key, e, r1, r2);
        CHECK(noise == poly_bits(7, {1, 3, 4}));
        bool decodable = weight(noise) <= key.code.t;
        CHECK(decodable);
        auto ce = qc_encrypt(key, toy.m, e, r1, r2);
        CHECK(qc_decrypt(key, ce) == toy.m);
    }
}

TEST_CASE("QC correctness identity holds exactly")
{
    Rng rng(31);
    for (uint32_t q : {2u, 3u, 5u}) {
        auto f = Field::make(q);
        QcCode code;
        code.g = Matrix::random_full_rank(f, 3, 11, rng);
        code.decode = [](const Vec& y) { return y; };
        auto key = qc_keygen(code, QcParams{11, 3, 2, 2}, rng);
        for (int i = 0; i < 50; ++i) {
            Vec m = random_vec(*f, 3, rng);
            Vec e = random_weight_vec(*f, 11, 2, rng), r1 = random_vec(*f, 11, rng), r2 = random_vec(*f, 11, rng);
            auto c = qc_encrypt(key, m, e, r1, r2);
            Vec lhs = ring_sub(*f, c.v, ring_mul(*f, c.u, key.z));
            CHECK(lhs == vadd(*f, code.g.left_mul(m), qc_noise(key, e, r1, r2)));
        }
    }
}

TEST_CASE("QC round trips with the repetition and MDPC codes")
{
    Rng rng(41);
    auto key = qc_keygen(qc_repetition_code(31), QcParams{31, 2, 2, 2}, rng);
    for (int i = 0; i < 200; ++i) {
        Vec m{(Elt)rng.below(2)};
        CHECK(qc_decrypt(key, qc_encrypt(key, m, rng)) == m);
    }

    Rng hr(7);
    Matrix h = mdpc_parity_check(MdpcParams{2, 61, 10}, hr);
    auto code = qc_mdpc_code(h, 3);
    auto mk = qc_keygen(code, QcParams{122, 1, 1, 1}, rng);
    size_t failures = 0;
    const int trials = 200;
    for (int i = 0; i < trials; ++i) {
        Vec m = random_vec(*code.g.field(), code.g.rows(), rng);
        try {
            failures += qc_decrypt(mk, qc_encrypt(mk, m, rng)) != m;
        } catch (const Error& e) {
            CHECK(e.code() == Errc::decode_failure);
            ++failures;
        }
    }
    MESSAGE("QC-MDPC decryption failures: " << failures << "/" << trials);
    CHECK(failures < trials / 20);
}

TEST_CASE("GPT replays the GF(32) toy")
{
    auto toy = toy::gpt();
    GabidulinParams gab{toy.f, {1, toy.f->parse("x"), toy.f->parse("x^2"), toy.f->parse("x^3")}, 2, 1};
    CHECK(moore_matrix(gab.f, 1, 2, gab.g) == toy.g);
    auto key = gpt_assemble(gab, toy.s, toy.x_col, toy.p, 1);
    CHECK(key.g_pub == toy.g_pub);
    CHECK(rank_weight(*toy.f, toy.e) == 1);
    Vec c = gpt_encrypt(key.g_pub, key.t, toy.m, toy.e);
    CHECK(c == toy.cipher);
    CHECK(inverse(toy.p).left_mul(c) == toy.c_pinv);
    CHECK(gpt_decrypt(key, c) == toy.m);
    // e = 0 needs no error correction
    CHECK(gpt_decrypt(key, key.g_pub.left_mul(toy.m)) == toy.m);
}

TEST_CASE("GPT round trips at n = 4, m = 5, k = 2, lambda = 1")
{
    auto f = Field::make(2, 5);
    Rng rng(51);
    auto key = gpt_keygen(f, 4, 2, 1, rng);
    CHECK(key.t == 1);
    CHECK(key.g_pub.rows() == 2);
    CHECK(key.g_pub.cols() == 5);
    for (int i = 0; i < 50; ++i) {
        Vec m = random_vec(*f, 2, rng);
        Vec e = random_rank_vec(*f, 5, 1, rng);
        CHECK(rank_weight(*f, e) <= 1);
        CHECK(gpt_decrypt(key, gpt_encrypt(key.g_pub, key.t, m, e)) == m);
    }
    Vec heavy = random_rank_vec(*f, 5, 3, rng);
    if (rank_weight(*f, heavy) > 1) CHECK_THROWS_AS(gpt_encrypt(key.g_pub, 1, Vec{1, 1}, heavy), Error);
}

TEST_CASE("BIKE block sizes")
{
    CHECK(check_bike_r(12323));
    CHECK(check_bike_r(24659));
    CHECK(check_bike_r(40973));
    CHECK(check_bike_r(13));
    CHECK_FALSE(check_bike_r(7));
    CHECK_FALSE(check_bike_r(15));
    for (uint64_t r = 2; r < 400; ++r) CHECK(check_bike_r(r) == two_primitive_naive(r));
}

TEST_CASE("ring units are exactly the odd-weight elements when 2 is primitive")
{
    auto f = Field::make(2);
    Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        Vec a = random_vec(*f, 13, rng);
        if (weight(a) == 0 || weight(a) == 13) continue;
        if (weight(a) % 2) {
            Vec inv = ring_inv(f, a);
            CHECK(ring_mul(*f, a, inv) == ring_monomial(13, 0));
        } else {
            CHECK_THROWS_AS(ring_inv(f, a), Error);
        }
    }
    auto f3 = Field::make(3);
    Vec a{1, 2, 0, 1, 0};
    CHECK(ring_mul(*f3, a, ring_inv(f3, a)) == ring_monomial(5, 0));
}

namespace {

size_t bike_failures(const BikeParams& p, int trials)
{
    auto f = Field::make(2);
    size_t failures = 0;
    for (int i = 0; i < trials; ++i) {
        Rng rng(1000 + i);
        auto key = bike_keygen(p, rng);
        CHECK(ring_mul(*f, key.h, key.h0) == key.h1);
        Bytes seed{uint8_t(i), uint8_t(i >> 8), 7};
        Vec e = bike_error_from_seed(p, seed);
        CHECK(weight(e) == p.t);
        Vec s = bike_encrypt(key, seed);
        try {
            failures += bike_decrypt(key, s) != e;
        } catch (const Error& err) {
            CHECK(err.code() == Errc::decode_failure);
            ++failures;
        }
    }
    return failures;
}

}

TEST_CASE("BIKE toy round trips")
{
    Rng bad(1);
    // w = 4 gives h0 of even weight, which is never a unit
    CHECK_THROWS_AS(bike_keygen(BikeParams{13, 4, 2}, bad), Error);
    CHECK_THROWS_AS(bike_keygen(BikeParams{7, 6, 2}, bad), Error);

    // r = 13 is below what bit flipping handles; the rate is only recorded
    size_t small = bike_failures(BikeParams{13, 6, 2}, 1000);
    MESSAGE("BIKE r = 13, w = 6, t = 2 DFR: " << small << "/1000");

    size_t failures = bike_failures(BikeParams{83, 10, 2}, 1000);
    MESSAGE("BIKE r = 83, w = 10, t = 2 DFR: " << failures << "/1000");
    CHECK(failures < 50);
}

TEST_CASE("constant-weight unranking")
{
    for (size_t n : {1u, 5u, 8u}) {
        for (size_t t = 0; t <= n; ++t) {
            // colex order: sort supports by their largest element first
            std::vector<std::vector<size_t>> subsets;
            for (uint32_t mask = 0; mask < (1u << n); ++mask)
                if ((size_t)__builtin_popcount(mask) == t) {
                    std::vector<size_t> s;
                    for (size_t i = n; i-- > 0;)
                        if (mask >> i & 1) s.push_back(i);
                    subsets.push_back(s);
                }
            std::sort(subsets.begin(), subsets.end());
            REQUIRE(BigInt(subsets.size()) == binomial(n, t));
            for (size_t r = 0; r < subsets.size(); ++r) {
                Vec v = unrank_weight(n, t, r);
                Vec want(n, 0);
                for (auto i : subsets[r]) want[i] = 1;
                CHECK(v == want);
                CHECK(rank_weight_vector(v) == r);
            }
        }
    }
    CHECK_THROWS_AS(unrank_weight(5, 2, 10), Error);
    Vec a = weight_vector_from_seed(200, 7, Bytes{1, 2, 3});
    CHECK(weight(a) == 7);
    CHECK(a == weight_vector_from_seed(200, 7, Bytes{1, 2, 3}));
    CHECK(a != weight_vector_from_seed(200, 7, Bytes{1, 2, 4}));
}

TEST_CASE("Classic McEliece toy")
{
    CmceParams p{4, 12, 2};
    Rng rng(71);
    auto key = cmce_keygen(p, rng);
    CHECK(key.t_pub.rows() == 8);
    CHECK(key.t_pub.cols() == 4);
    Matrix h = cmce_parity_check(key.t_pub);
    CHECK(h.select_cols({0, 1, 2, 3, 4, 5, 6, 7}) == Matrix::identity(h.field(), 8));
    // same code as the secret Goppa code
    CHECK(same_code(LinearCode::from_parity_check(h), goppa_code(key.goppa)));
    for (int i = 0; i < 50; ++i) {
        auto enc = cmce_encaps(key.t_pub, p.t, rng);
        CHECK(enc.key.size() == 32);
        Vec v(12, 0);
        std::copy(enc.c0.begin(), enc.c0.end(), v.begin());
        CHECK(h.right_mul(v) == enc.c0);
        CHECK(cmce_decaps(key, enc.c0) == enc.key);
    }
    Rng r2(3);
    CHECK_THROWS_AS(cmce_keygen(CmceParams{4, 8, 2}, r2), Error);
}

TEST_CASE("Classic McEliece public key size formula")
{
    struct Row {
        unsigned m;
        size_t n, t, bytes;
    };
    for (auto r : {Row{12, 3488, 64, 261120}, Row{13, 4608, 96, 524160}, Row{13, 6688, 128, 1044992},
                   Row{13, 6960, 119, 1047319}, Row{13, 8192, 128, 1357824}}) {
        size_t rows = r.m * r.t;
        size_t bits = rows * (r.n - rows);
        CHECK(rows * ((r.n - rows + 7) / 8) == r.bytes);
        CHECK((bits + 7) / 8 <= r.bytes);
    }
}

TEST_CASE("key files round trip")
{
    Rng rng(81);
    auto mc = mceliece_keygen(goppa_secret(toy_goppa(5)), rng);
    auto mc2 = mceliece_key_from_json(nlohmann::json::parse(key_to_json(mc, true).dump()));
    Vec m = random_vec(*mc.g_pub.field(), mc.g_pub.rows(), rng);
    CHECK(mceliece_decrypt(mc2, mceliece_encrypt(mc.g_pub, mc.t, m, rng)) == m);
    auto mc_pub = mceliece_key_from_json(key_to_json(mc, false));
    CHECK(mc_pub.g_pub == mc.g_pub);
    CHECK_FALSE(key_to_json(mc, false).contains("secret"));

    auto toy = toy::niederreiter();
    auto nd = niederreiter_assemble(single_error_secret(LinearCode::from_parity_check(toy.h)), toy.h, toy.s,
                                    Permutation::from_matrix(toy.p));
    auto nd2 = niederreiter_key_from_json(key_to_json(nd, true));
    CHECK(niederreiter_decrypt(nd2, toy.cipher) == toy.m);

    auto al = alekhnovich_keygen(64, 40, 3, rng);
    CHECK(alekhnovich_key_from_json(key_to_json(al, true)).e == al.e);

    auto qt = toy::qc();
    auto qk = qc_assemble(qc_repetition_code(7), QcParams{7, 1, 1, 1}, qt.h, qt.y, qt.z);
    auto qk2 = qc_key_from_json(key_to_json(qk, true));
    CHECK(qc_decrypt(qk2, QcCipher{qt.u, qt.v}) == qt.m);

    auto gt = toy::gpt();
    GabidulinParams gab{gt.f, {1, gt.f->parse("x"), gt.f->parse("x^2"), gt.f->parse("x^3")}, 2, 1};
    auto gk = gpt_assemble(gab, gt.s, gt.x_col, gt.p, 1);
    auto gk2 = gpt_key_from_json(nlohmann::json::parse(key_to_json(gk, true).dump()));
    CHECK(gpt_decrypt(gk2, gt.cipher) == gt.m);

    auto bk = bike_keygen(BikeParams{13, 6, 2}, rng);
    auto bk2 = bike_key_from_json(key_to_json(bk, true));
    CHECK(bk2.h0 == bk.h0);
    CHECK(bk2.h == bk.h);

    auto ck = cmce_keygen(CmceParams{4, 12, 2}, rng);
    auto ck2 = cmce_key_from_json(key_to_json(ck, true));
    auto enc = cmce_encaps(ck2.t_pub, 2, rng);
    CHECK(cmce_decaps(ck2, enc.c0) == enc.key);

    CHECK_THROWS_AS(bike_key_from_json(key_to_json(mc, true)), Error);
}
