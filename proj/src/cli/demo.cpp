#include <codelab/demo.hpp>
#include <codelab/error.hpp>
#include <codelab/isd.hpp>
#include <codelab/pke.hpp>
#include <codelab/reductions.hpp>
#include <codelab/toy_data.hpp>

#include <sstream>

namespace codelab {

using nlohmann::json;

std::string tuple_string(const Field& f, const Vec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + f.to_string(v[i]);
    return s + ")";
}

json rows_json(const Matrix& m)
{
    json out = json::array();
    for (size_t i = 0; i < m.rows(); ++i) out.push_back(tuple_string(*m.field(), m.row(i)));
    return out;
}

bool DemoReport::ok() const
{
    for (auto& c : checks)
        if (!c.ok()) return false;
    return true;
}

namespace {

struct Builder {
    DemoReport rep;
    void vec(const std::string& name, const Field& f, const Vec& want, const Vec& got)
    {
        rep.checks.push_back({name, tuple_string(f, want), tuple_string(f, got)});
    }
    void mat(const std::string& name, const Matrix& want, const Matrix& got)
    {
        rep.checks.push_back({name, rows_json(want), rows_json(got)});
    }
    void value(const std::string& name, json want, json got) { rep.checks.push_back({name, want, got}); }
};

DemoReport hamming_mceliece()
{
    auto t = toy::hamming_mceliece();
    const Field& f = *t.g.field();
    Builder b{{"hamming-mceliece", "McEliece over the binary [7,4] Hamming code, one error", {}, {}}};
    auto secret = single_error_secret(LinearCode::from_generator(t.g));
    auto key = mceliece_assemble(secret, t.g, t.s, Permutation::from_matrix(t.p));
    b.mat("public generator S G P", t.g_pub, key.g_pub);
    Vec c = mceliece_encrypt(key.g_pub, key.t, t.m, t.e);
    b.vec("ciphertext m G' + e", f, t.cipher, c);
    Vec cp = key.p.inverse().apply(c);
    b.vec("c P^-1", f, t.c_perm, cp);
    Vec ms = solve_linear(t.g, secret.decode(cp)).value_or(Vec{});
    b.vec("decoded m S", f, t.ms, ms);
    b.mat("S^-1", t.s_inv, inverse(t.s));
    b.vec("m S S^-1", f, t.m, t.s_inv.left_mul(ms));
    b.vec("decrypted message", f, t.m, mceliece_decrypt(key, c));
    auto rr = rref(key.g_pub);
    b.mat("reduced public generator", t.g_rref, rr.reduced);
    b.vec("message against the reduced generator", f, t.m_bar,
          solve_linear(rr.reduced, vsub(f, c, t.e)).value_or(Vec{}));
    b.rep.result = {{"cipher", tuple_string(f, c)}, {"message", tuple_string(f, mceliece_decrypt(key, c))}};
    return b.rep;
}

DemoReport niederreiter()
{
    auto t = toy::niederreiter();
    const Field& f = *t.h.field();
    Builder b{{"niederreiter", "Niederreiter over the binary [7,4] Hamming code, one error", {}, {}}};
    auto secret = single_error_secret(LinearCode::from_parity_check(t.h));
    auto key = niederreiter_assemble(secret, t.h, t.s, Permutation::from_matrix(t.p));
    b.mat("public parity check S H P", t.h_pub, key.h_pub);
    Vec c = niederreiter_encrypt(key.h_pub, key.t, t.m);
    b.vec("ciphertext H' m^T", f, t.cipher, c);
    Vec sc = inverse(t.s).right_mul(c);
    b.vec("S^-1 c", f, t.s_inv_c, sc);
    b.vec("decoded m P^-1", f, t.m_perm, syndrome_decode(secret, t.h, sc));
    b.vec("decrypted message", f, t.m, niederreiter_decrypt(key, c));
    b.rep.result = {{"cipher", tuple_string(f, c)}, {"message", tuple_string(f, niederreiter_decrypt(key, c))}};
    return b.rep;
}

DemoReport prange_f5()
{
    auto t = toy::prange_f5();
    const Field& f = *t.h.field();
    Builder b{{"prange-f5", "Prange over F5, n = 10, k = 4, t = 2", {}, {}}};
    SdpInstance inst{t.h, t.s, t.t};
    auto second = prange_try(inst, t.i2);
    b.mat("U H for I = {1,2,3,5}", t.u2h, second.uh);
    b.vec("s' for I = {1,2,3,5}", f, t.s2, second.s_prime);
    b.value("weight of s' for I = {1,2,3,5}", 3, weight(second.s_prime));
    auto fin = prange_try(inst, t.i_final);
    b.mat("U H for I = {7,8,9,10}", t.uh_final, fin.uh);
    b.vec("s' for I = {7,8,9,10}", f, t.s_final, fin.s_prime);
    b.vec("e from I = {7,8,9,10}", f, t.e, fin.e.value_or(Vec{}));
    Vec e = prange(inst, {.seed = 5}).e;
    b.vec("e from seeded Prange", f, t.e, e);
    b.vec("e from brute force", f, t.e, brute_force_sdp(inst).e);
    b.rep.result = {{"e", tuple_string(f, e)}};
    return b.rep;
}

DemoReport qc()
{
    auto t = toy::qc();
    Builder b{{"qc", "quasi-cyclic framework over F2[x]/(x^7 - 1) with the repetition code", {}, {}}};
    auto key = qc_assemble(qc_repetition_code(t.n), QcParams{t.n, 1, 1, 1}, t.h, t.y, t.z);
    const Field& f = *key.code.g.field();
    b.vec("public s = y + h z", f, t.s, key.s);
    auto c = qc_encrypt(key, t.m, t.e, t.r1, t.r2);
    b.vec("u = r1 + h r2", f, t.u, c.u);
    b.vec("v = m G + s r2 + e", f, t.v, c.v);
    b.vec("s r2", f, t.s_r2, ring_mul(f, key.s, t.r2));
    b.vec("u z", f, t.uz, ring_mul(f, c.u, key.z));
    b.vec("v - u z", f, t.v_minus_uz, ring_sub(f, c.v, ring_mul(f, c.u, key.z)));
    Vec m = qc_decrypt(key, c);
    b.vec("decrypted message", f, t.m, m);
    b.rep.result = {{"u", tuple_string(f, c.u)}, {"v", tuple_string(f, c.v)}, {"message", tuple_string(f, m)}};
    return b.rep;
}

DemoReport gpt()
{
    auto t = toy::gpt();
    const Field& f = *t.f;
    Builder b{{"gpt", "GPT with a [4,2] Gabidulin code over GF(2^5) and one distortion column", {}, {}}};
    GabidulinParams gab{t.f, {1, f.parse("x"), f.parse("x^2"), f.parse("x^3")}, 2, 1};
    b.mat("Gabidulin generator", t.g, moore_matrix(gab.f, 1, 2, gab.g));
    auto key = gpt_assemble(gab, t.s, t.x_col, t.p, 1);
    b.mat("public generator S (G | X) P", t.g_pub, key.g_pub);
    b.value("rank weight of e", 1, rank_weight(f, t.e));
    Vec c = gpt_encrypt(key.g_pub, key.t, t.m, t.e);
    b.vec("ciphertext", f, t.cipher, c);
    b.vec("c P^-1", f, t.c_pinv, inverse(t.p).left_mul(c));
    b.vec("m S", f, t.ms, t.s.left_mul(t.m));
    Vec m = gpt_decrypt(key, c);
    b.vec("decrypted message", f, t.m, m);
    b.rep.result = {{"cipher", tuple_string(f, c)}, {"message", tuple_string(f, m)}};
    return b.rep;
}

DemoReport alekhnovich()
{
    auto t = toy::alekhnovich();
    const Field& f = *t.a.field();
    Builder b{{"alekhnovich", "Alekhnovich first variant, n = 6", {}, {}}};
    b.vec("y = x A + e", f, t.y, vadd(f, t.a.left_mul(t.x), t.e));
    auto g = row_space(kernel(t.h));
    b.mat("kernel generator of (A ; y)", t.g, g);
    int zero = alekhnovich_decrypt_bit(t.e, t.c0), one = alekhnovich_decrypt_bit(t.e, t.c1);
    b.value("<e, c0>", 0, zero);
    b.value("<e, c1>", 1, one);
    b.rep.result = {{"bit0", zero}, {"bit1", one}};
    return b.rep;
}

DemoReport tdm()
{
    auto t = toy::tdm();
    Builder b{{"3dm", "3DM to syndrome decoding, |T| = 4, |U| = 7", {}, {}}};
    json j = {{"T", t.ground}, {"U", t.triples}};
    auto inst = tdm_from_json(j);
    auto f = Field::make(2);
    auto sdp = tdm_to_sdp(inst, f);
    b.mat("H^T", t.ht, sdp.h.transpose());
    auto w = brute_force_3dm(inst);
    b.value("matching W (triple indices)", t.matching, w ? json(*w) : json());
    Vec e = w ? matching_to_vector(inst, *w) : Vec{};
    b.vec("e", *f, t.e, e);
    b.value("e H^T = 1", true, w && sdp.h.right_mul(e) == sdp.s);
    json triples = json::array();
    if (w)
        for (size_t i : *w) triples.push_back(j["U"][i]);
    b.rep.result = {{"e", tuple_string(*f, e)}, {"W", triples}};
    return b.rep;
}

}

const std::vector<std::string>& demo_names()
{
    static const std::vector<std::string> names{"hamming-mceliece", "niederreiter", "prange-f5", "qc",
                                                "gpt",              "alekhnovich",  "3dm"};
    return names;
}

DemoReport run_demo(const std::string& name)
{
    if (name == "hamming-mceliece") return hamming_mceliece();
    if (name == "niederreiter") return niederreiter();
    if (name == "prange-f5") return prange_f5();
    if (name == "qc") return qc();
    if (name == "gpt") return gpt();
    if (name == "alekhnovich") return alekhnovich();
    if (name == "3dm") return tdm();
    fail(Errc::invalid_argument, "unknown example " + name);
}

json to_json(const DemoReport& r)
{
    json checks = json::array();
    for (auto& c : r.checks) {
        json j = {{"name", c.name}, {"ok", c.ok()}, {"got", c.got}};
        if (!c.ok()) j["expected"] = c.expected;
        checks.push_back(j);
    }
    return {{"example", r.example}, {"source", r.source}, {"ok", r.ok()}, {"result", r.result}, {"checks", checks}};
}

std::string to_human(const DemoReport& r)
{
    std::ostringstream out;
    out << r.example << ": " << r.source << "\n";
    for (auto& c : r.checks) {
        out << (c.ok() ? "  ok   " : "  FAIL ") << c.name << " = " << (c.got.is_string() ? c.got.get<std::string>() : c.got.dump());
        if (!c.ok()) out << " (expected " << c.expected.dump() << ")";
        out << "\n";
    }
    for (auto& [k, v] : r.result.items()) out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return out.str();
}

}
