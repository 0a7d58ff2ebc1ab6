#include <doctest.h>

#include <codelab/error.hpp>
#include <codelab/io.hpp>
#include <codelab/matrix.hpp>
#include <codelab/poly.hpp>
#include <codelab/toy_data.hpp>

#include "oracle.hpp"

using namespace codelab;

namespace {

std::vector<std::vector<int64_t>> to_int(const Matrix& m)
{
    std::vector<std::vector<int64_t>> out(m.rows(), std::vector<int64_t>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

}

TEST_CASE("field: small facts")
{
    auto f5 = Field::make(5);
    CHECK(f5->inv(2) == 3);
    auto f32 = Field::make(2, std::vector<uint32_t>{1, 0, 1, 0, 0, 1});
    Elt z = f32->x();
    CHECK(f32->mul(f32->pow(z, 4), z) == f32->parse("x^2+1"));
    CHECK(f32->to_string(f32->parse("x^4+x^3+1")) == "x^4+x^3+1");
    CHECK(f32->add(f32->parse("x^3+x"), 0) == f32->parse("x^3+x"));
    // default moduli
    CHECK(Field::make(2, 5)->modulus() == std::vector<uint32_t>{1, 0, 1, 0, 0, 1});
    CHECK(Field::make(2, 3)->modulus() == std::vector<uint32_t>{1, 1, 0, 1});
    CHECK(Field::make(2, 8)->modulus() == std::vector<uint32_t>{1, 1, 0, 1, 1, 0, 0, 0, 1});
    CHECK_THROWS_AS(Field::make(2, std::vector<uint32_t>{1, 0, 1}), Error); // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(f5->inv(0), Error);
    CHECK(Field::gf(9)->p() == 3);
    CHECK(Field::gf(9)->m() == 2);
}

TEST_CASE("field: axioms hold on random elements of every configured field")
{
    Rng rng(11);
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u, 64u, 256u, 1024u, 4096u}) {
        auto f = Field::gf(q);
        for (int it = 0; it < 300; ++it) {
            Elt a = (Elt)rng.below(q), b = (Elt)rng.below(q), c = (Elt)rng.below(q);
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            CHECK(f->sub(f->add(a, b), b) == a);
            if (a) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->pow(a, q) == a);
        }
    }
}

TEST_CASE("field: binary extension products agree with a carry-less reference")
{
    Rng rng(5);
    for (unsigned m : {2u, 3u, 5u, 6u, 8u, 10u, 12u}) {
        auto f = Field::make(2, m);
        uint32_t mask = 0;
        for (unsigned i = 0; i <= m; ++i)
            if (f->modulus()[i]) mask |= 1u << i;
        for (int it = 0; it < 500; ++it) {
            Elt a = (Elt)rng.below(f->q()), b = (Elt)rng.below(f->q());
            CHECK(f->mul(a, b) == oracle::gf2m_mul(a, b, mask, m));
        }
    }
}

TEST_CASE("field: multiplicative generator has full order")
{
    for (uint32_t q : {5u, 8u, 9u, 13u, 32u, 64u}) {
        auto f = Field::gf(q);
        Elt g = f->primitive();
        Elt x = 1;
        size_t order = 0;
        do {
            x = f->mul(x, g);
            ++order;
        } while (x != 1);
        CHECK(order == q - 1);
    }
}

TEST_CASE("rref: reduced public generator of the Hamming toy")
{
    auto t = toy::hamming_mceliece();
    auto rr = rref(t.g_pub);
    CHECK(rr.reduced == t.g_rref);
    CHECK(rr.transform * t.g_pub == rr.reduced);
    CHECK(rr.pivots == std::vector<size_t>{0, 1, 2, 3});
    CHECK(rref(rr.reduced).reduced == rr.reduced);
}

TEST_CASE("rref: trivial inputs")
{
    auto f = Field::make(3);
    auto id = Matrix::identity(f, 4);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.transform == id);
    Matrix z(f, 3, 5);
    auto rz = rref(z);
    CHECK(rz.reduced == z);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref: idempotent, invertible transform, rank matches reference")
{
    Rng rng(21);
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        auto f = Field::make(p);
        for (int it = 0; it < 40; ++it) {
            size_t r = 1 + rng.below(6), c = 1 + rng.below(8);
            auto m = Matrix::random(f, r, c, rng);
            auto rr = rref(m);
            CHECK(rr.transform * m == rr.reduced);
            CHECK(rr.transform.rank() == r);
            CHECK(rref(rr.reduced).reduced == rr.reduced);
            CHECK(rr.pivots.size() == oracle::rank_mod_p(to_int(m), p));
        }
    }
}

TEST_CASE("information sets on the F5 instance")
{
    auto t = toy::prange_f5();
    CHECK_FALSE(is_information_set(t.h, t.i1));
    CHECK(is_information_set(t.h, t.i2));
    CHECK_THROWS_AS(is_information_set(t.h, {0, 1, 2}), Error);

    auto sys2 = systematic_form(t.h, t.i2);
    CHECK(sys2.transform * t.h == t.u2h);
    CHECK(sys2.transform.right_mul(t.s) == t.s2);

    auto sysf = systematic_form(t.h, t.i_final);
    CHECK(sysf.transform * t.h == t.uh_final);
    CHECK(sysf.transform.right_mul(t.s) == t.s_final);
    CHECK_THROWS_AS(systematic_form(t.h, t.i1), Error);
}

TEST_CASE("information sets: identity block and rank cross-check")
{
    auto f = Field::make(3);
    Rng rng(4);
    auto b = Matrix::random(f, 3, 4, rng);
    auto h = b.hstack(Matrix::identity(f, 3));
    CHECK(is_information_set(h, {0, 1, 2, 3}));
    auto sys = systematic_form(h, {0, 1, 2, 3});
    CHECK(sys.transform == Matrix::identity(f, 3));

    for (int it = 0; it < 60; ++it) {
        auto hr = Matrix::random_full_rank(f, 4, 9, rng);
        auto info = rng.subset(9, 5);
        auto comp = complement(9, info);
        bool expect = oracle::rank_mod_p(to_int(hr.select_cols(comp)), 3) == 4;
        CHECK(is_information_set(hr, info) == expect);
        if (expect) {
            auto s = systematic_form(hr, info);
            auto uhp = (s.transform * hr).permute_cols(s.perm);
            // (B | Id) layout
            CHECK(uhp.select_cols({5, 6, 7, 8}) == Matrix::identity(f, 4));
            // recomposition U^-1 (U H P) P^-1 = H
            CHECK((inverse(s.transform) * uhp).permute_cols(s.perm.inverse()) == hr);
        }
    }
}

TEST_CASE("solve_linear and random_invertible")
{
    auto f = Field::make(2);
    auto t = toy::hamming_mceliece();
    auto m = solve_linear(t.g_pub, vsub(*f, t.cipher, t.e));
    REQUIRE(m.has_value());
    CHECK(*m == t.m);
    // reading the message off the reduced generator, then undoing the row operations
    auto rr = rref(t.g_pub);
    CHECK(t.g_rref.left_mul(t.m_bar) == vsub(*f, t.cipher, t.e));
    CHECK(rr.transform.left_mul(t.m_bar) == t.m);
    CHECK(inverse(t.s) == t.s_inv);

    Rng rng(99);
    auto f5 = Field::make(5);
    Vec b = {1, 2, 3, 4};
    CHECK(*solve_linear(Matrix::identity(f5, 4), b) == b);
    for (int it = 0; it < 20; ++it) {
        auto s = random_invertible(f, 4, rng);
        CHECK(oracle::rank_mod_p(to_int(s), 2) == 4);
    }
    // inconsistent system
    Matrix a(f5, {{1, 0}, {2, 0}});
    CHECK_FALSE(solve_linear(a, {0, 1}).has_value());
}

TEST_CASE("permutations")
{
    auto t = toy::hamming_mceliece();
    auto f = t.g.field();
    auto p = Permutation::from_matrix(t.p);
    CHECK(p.as_matrix(f) == t.p);
    CHECK(t.s * t.g * t.p == t.g_pub);
    CHECK(p.apply(t.cipher) == Matrix(f, {t.cipher}).operator*(t.p).row(0));
    CHECK(p.inverse().apply(t.cipher) == t.c_perm);

    Rng rng(3);
    auto f7 = Field::make(7);
    for (int it = 0; it < 100; ++it) {
        auto pr = Permutation::random(12, rng);
        auto v = random_vec(*f7, 12, rng);
        CHECK(weight(pr.apply(v)) == weight(v));
        CHECK(pr.inverse().apply(pr.apply(v)) == v);
        CHECK(Matrix(f7, {v}).permute_cols(pr).row(0) == pr.apply(v));
    }
}

TEST_CASE("polynomials")
{
    auto f = Field::make(7);
    Poly a(f, {1, 2, 3}), b(f, {5, 1});
    auto [q, r] = (a * b + Poly(f, {4})).divmod(b);
    CHECK(q == a);
    CHECK(r == Poly(f, {4}));
    CHECK(a.eval(2) == (1 + 4 + 12) % 7);
    CHECK(gcd(a * b, b * Poly(f, {1, 1})) == b.monic());
    CHECK(Poly::xn_minus_one(f, 3).eval(2) == 0);
}

TEST_CASE("matrix text format and hex packing round trip")
{
    Rng rng(8);
    for (uint32_t q : {2u, 5u, 32u, 9u}) {
        auto f = Field::gf(q);
        auto m = Matrix::random(f, 3, 7, rng);
        CHECK(read_matrix(write_matrix(m)) == m);
        auto v = random_vec(*f, 13, rng);
        CHECK(unpack_hex(*f, pack_hex(*f, v), 13) == v);
    }
    auto f2 = Field::make(2);
    CHECK(pack_hex(*f2, {1, 1, 0, 1, 0, 1, 0}) == "2b");
    CHECK(write_matrix(Matrix::from_bits(f2, {"10"})) == "2 1 1 2\n1 0\n");
}
