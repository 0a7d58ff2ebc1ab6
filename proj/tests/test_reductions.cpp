#include <doctest.h>

#include <codelab/error.hpp>
#include <codelab/reductions.hpp>

using namespace codelab;

namespace {

TdmInstance paper_instance()
{
    return tdm_from_json(nlohmann::json::parse(R"({
        "T": ["A", "B", "C", "D"],
        "U": [["D","A","B"], ["C","B","A"], ["D","A","B"], ["B","C","D"], ["C","D","A"], ["A","D","A"], ["A","B","C"]]
    })"));
}

std::optional<Vec> sdp_oracle(const SdpInstance& inst)
{
    try {
        return brute_force_sdp(inst).e;
    } catch (const Error& e) {
        if (e.code() != Errc::no_solution) throw;
        return std::nullopt;
    }
}

}

TEST_CASE("SDP reduction on the worked example")
{
    auto inst = paper_instance();
    auto f = Field::make(2);
    auto sdp = tdm_to_sdp(inst, f);
    auto printed = Matrix::from_bits(f, {"000110000100", "001001001000", "000110000100", "010000100001",
                                         "001000011000", "100000011000", "100001000010"});
    CHECK(sdp.h.transpose() == printed);
    CHECK(sdp.t == 4);
    CHECK(sdp.s == Vec(12, 1));
    for (size_t i = 0; i < 7; ++i) CHECK(weight(sdp.h.col(i)) == 3);

    Vec e = {1, 0, 0, 1, 1, 0, 1};
    CHECK(sdp.h.right_mul(e) == sdp.s);
    CHECK(sdp_solution_to_matching(inst, e) == Matching{0, 3, 4, 6});
    CHECK(brute_force_3dm(inst) == Matching{0, 3, 4, 6});

    auto found = sdp_oracle(sdp);
    REQUIRE(found);
    CHECK(is_matching(inst, sdp_solution_to_matching(inst, *found)));

    CHECK_THROWS_AS(sdp_solution_to_matching(inst, {1, 1, 0, 1, 1, 0, 0}), Error);
    try {
        sdp_solution_to_matching(inst, {1, 0, 0, 1, 1, 0});
        FAIL("expected NotAValidSolution");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::not_a_valid_solution);
    }
}

TEST_CASE("3DM brute force")
{
    TdmInstance cover{{"A", "B", "C"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    CHECK(brute_force_3dm(cover) == Matching{0, 1, 2});
    // nothing starts with C
    TdmInstance gap{{"A", "B", "C"}, {{0, 1, 2}, {1, 2, 0}, {0, 0, 1}, {1, 0, 1}}};
    CHECK_FALSE(brute_force_3dm(gap).has_value());
    TdmInstance empty{{"A", "B"}, {}};
    CHECK_FALSE(brute_force_3dm(empty).has_value());
    CHECK_FALSE(sdp_oracle(tdm_to_sdp(empty, Field::make(2))).has_value());
    Rng rng(1);
    CHECK_THROWS_AS(brute_force_3dm(random_tdm(12, 40, false, rng), 1000), Error);
    CHECK_THROWS_AS(tdm_from_json(nlohmann::json::parse(R"({"T": ["A"], "U": [["A","A","B"]]})")), Error);
}

TEST_CASE("matching round trip")
{
    Rng rng(2);
    for (int it = 0; it < 50; ++it) {
        auto inst = random_tdm(1 + rng.below(5), 8, true, rng);
        auto w = brute_force_3dm(inst);
        REQUIRE(w);
        CHECK(sdp_solution_to_matching(inst, matching_to_vector(inst, *w)) == *w);
        CHECK(tdm_from_json(to_json(inst)).triples == inst.triples);
    }
}

TEST_CASE("GWCP reduction shape")
{
    auto inst = paper_instance();
    auto f = Field::make(3);
    auto g = tdm_to_gwcp(inst, f);
    size_t t = 4, u = 7;
    CHECK(g.h.rows() == 3 * t * u + 3 * t);
    CHECK(g.h.cols() == 3 * t * u + 3 * t + u);
    CHECK(g.w == 3 * t * t + 4 * t);
    // the matching extends to a codeword: c = (x e, x e H_bar^T, x e, ..., x e)
    auto bar = tdm_to_sdp(inst, f).h;
    for (Elt x : {1u, 2u}) {
        Vec head = vscale(*f, x, matching_to_vector(inst, {0, 3, 4, 6}));
        Vec c = head, mid = bar.right_mul(head);
        c.insert(c.end(), mid.begin(), mid.end());
        for (size_t b = 0; b < 3 * t; ++b) c.insert(c.end(), head.begin(), head.end());
        CHECK(weight(g.h.right_mul(c)) == 0);
        CHECK(weight(c) == g.w);
        CHECK(gwcp_solution_to_matching(inst, g, c) == Matching{0, 3, 4, 6});
    }
}

TEST_CASE("reductions agree with the 3DM oracle")
{
    Rng rng(3);
    int yes = 0, no = 0;
    for (int it = 0; it < 100; ++it) {
        size_t t = 1 + rng.below(4), u = t + rng.below(11 - t);
        auto inst = random_tdm(t, u, rng.coin(), rng);
        bool truth = brute_force_3dm(inst).has_value();
        (truth ? yes : no)++;

        auto f = Field::make(it % 4 == 0 ? 3 : 2);
        auto sdp = sdp_oracle(tdm_to_sdp(inst, f));
        CHECK(sdp.has_value() == truth);
        if (sdp) {
            // any solution is binary of weight exactly t
            CHECK(weight(*sdp) == t);
            for (auto x : *sdp) CHECK(x <= 1);
            CHECK(is_matching(inst, sdp_solution_to_matching(inst, *sdp)));
        }

        auto g = tdm_to_gwcp(inst, f);
        auto c = gwcp_bruteforce(g);
        CHECK(c.has_value() == truth);
        if (c) {
            Vec head(c->begin(), c->begin() + u), mid(c->begin() + u, c->begin() + u + 3 * t);
            CHECK(weight(head) == t);
            CHECK(weight(tdm_to_sdp(inst, f).h.right_mul(head)) == 3 * t);
            CHECK(weight(mid) == 3 * t);
            CHECK(is_matching(inst, gwcp_solution_to_matching(inst, g, *c)));
        }
    }
    MESSAGE(yes << " positive, " << no << " negative instances");
    CHECK(yes >= 20);
    CHECK(no >= 20);
}
