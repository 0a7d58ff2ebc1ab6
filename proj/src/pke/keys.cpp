#include <codelab/error.hpp>
#include <codelab/pke.hpp>

namespace codelab {

using nlohmann::json;

json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(*m.field(), m.row(i)));
    return {{"field", field_to_json(*m.field())}, {"cols", m.cols()}, {"rows", rows}};
}

Matrix matrix_from_json(const json& j)
{
    FieldPtr f = field_from_json(j.at("field"));
    Matrix m(f, j.at("rows").size(), j.at("cols").get<size_t>());
    size_t i = 0;
    for (auto& r : j.at("rows")) {
        Vec v = vec_from_json(*f, r);
        if (v.size() != m.cols()) fail(Errc::parse_error, "matrix row has wrong length");
        m.set_row(i++, v);
    }
    return m;
}

json vec_to_json(const Field& f, const Vec& v)
{
    json a = json::array();
    for (auto x : v) a.push_back(f.to_string(x));
    return a;
}

Vec vec_from_json(const Field& f, const json& j)
{
    Vec v;
    for (auto& x : j) v.push_back(x.is_number() ? f.from_int(x.get<int64_t>()) : f.parse(x.get<std::string>()));
    return v;
}

namespace {

const FieldPtr& gf2()
{
    static FieldPtr f = Field::make(2);
    return f;
}

json envelope(const char* scheme, json params, json pub)
{
    return {{"scheme", scheme}, {"params", std::move(params)}, {"public", std::move(pub)}};
}

void expect_scheme(const json& j, const char* scheme)
{
    if (j.value("scheme", std::string()) != scheme) fail(Errc::parse_error, std::string("expected a ") + scheme + " key");
}

bool has_secret(const json& j) { return j.contains("secret") && !j.at("secret").is_null(); }

json perm_json(const Permutation& p) { return p.image(); }
Permutation perm_from(const json& j) { return Permutation(j.get<std::vector<size_t>>()); }

}

json key_to_json(const McElieceKey& k, bool with_secret)
{
    json j = envelope("mceliece", {{"n", k.g_pub.cols()}, {"k", k.g_pub.rows()}, {"t", k.t}},
                      {{"g_pub", matrix_to_json(k.g_pub)}});
    if (with_secret)
        j["secret"] = {{"g", matrix_to_json(k.g)}, {"s", matrix_to_json(k.s)}, {"p", perm_json(k.p)}, {"code", k.secret.desc}};
    return j;
}

McElieceKey mceliece_key_from_json(const json& j)
{
    expect_scheme(j, "mceliece");
    Matrix g_pub = matrix_from_json(j.at("public").at("g_pub"));
    size_t t = j.at("params").at("t").get<size_t>();
    if (!has_secret(j)) {
        McElieceKey k;
        k.g_pub = g_pub;
        k.t = t;
        return k;
    }
    auto& s = j.at("secret");
    McElieceKey k = mceliece_assemble(secret_from_json(s.at("code")), matrix_from_json(s.at("g")),
                                      matrix_from_json(s.at("s")), perm_from(s.at("p")));
    if (k.g_pub != g_pub) fail(Errc::parse_error, "public matrix does not match the secret key");
    return k;
}

json key_to_json(const NiederreiterKey& k, bool with_secret)
{
    json j = envelope("niederreiter", {{"n", k.h_pub.cols()}, {"r", k.h_pub.rows()}, {"t", k.t}},
                      {{"h_pub", matrix_to_json(k.h_pub)}});
    if (with_secret)
        j["secret"] = {{"h", matrix_to_json(k.h)}, {"s", matrix_to_json(k.s)}, {"p", perm_json(k.p)}, {"code", k.secret.desc}};
    return j;
}

NiederreiterKey niederreiter_key_from_json(const json& j)
{
    expect_scheme(j, "niederreiter");
    Matrix h_pub = matrix_from_json(j.at("public").at("h_pub"));
    size_t t = j.at("params").at("t").get<size_t>();
    if (!has_secret(j)) {
        NiederreiterKey k;
        k.h_pub = h_pub;
        k.t = t;
        return k;
    }
    auto& s = j.at("secret");
    NiederreiterKey k = niederreiter_assemble(secret_from_json(s.at("code")), matrix_from_json(s.at("h")),
                                              matrix_from_json(s.at("s")), perm_from(s.at("p")));
    if (k.h_pub != h_pub) fail(Errc::parse_error, "public matrix does not match the secret key");
    return k;
}

json key_to_json(const AlekhnovichKey& k, bool with_secret)
{
    json j = envelope("alekhnovich1", {{"n", k.g.cols()}, {"t", k.t}}, {{"g", matrix_to_json(k.g)}});
    if (with_secret) j["secret"] = {{"e", vec_to_json(*gf2(), k.e)}};
    return j;
}

AlekhnovichKey alekhnovich_key_from_json(const json& j)
{
    expect_scheme(j, "alekhnovich1");
    AlekhnovichKey k;
    k.g = matrix_from_json(j.at("public").at("g"));
    k.t = j.at("params").at("t").get<size_t>();
    if (has_secret(j)) k.e = vec_from_json(*gf2(), j.at("secret").at("e"));
    return k;
}

json key_to_json(const QcKey& k, bool with_secret)
{
    const Field& f = *k.code.g.field();
    json j = envelope("qc",
                      {{"n", k.params.n}, {"w", k.params.w}, {"w_e", k.params.w_e}, {"w_r", k.params.w_r}, {"code", k.code.desc}},
                      {{"h", vec_to_json(f, k.h)}, {"s", vec_to_json(f, k.s)}});
    if (with_secret) j["secret"] = {{"y", vec_to_json(f, k.y)}, {"z", vec_to_json(f, k.z)}};
    return j;
}

QcKey qc_key_from_json(const json& j)
{
    expect_scheme(j, "qc");
    auto& pj = j.at("params");
    QcParams p{pj.at("n").get<size_t>(), pj.at("w").get<size_t>(), pj.at("w_e").get<size_t>(), pj.at("w_r").get<size_t>()};
    QcCode code = qc_code_from_json(pj.at("code"));
    const Field& f = *code.g.field();
    Vec h = vec_from_json(f, j.at("public").at("h"));
    Vec s = vec_from_json(f, j.at("public").at("s"));
    if (!has_secret(j)) {
        QcKey k;
        k.params = p;
        k.code = code;
        k.h = h;
        k.s = s;
        return k;
    }
    QcKey k = qc_assemble(code, p, h, vec_from_json(f, j.at("secret").at("y")), vec_from_json(f, j.at("secret").at("z")));
    if (k.s != s) fail(Errc::parse_error, "public s does not match the secret key");
    return k;
}

json key_to_json(const GptKey& k, bool with_secret)
{
    json j = envelope("gpt",
                      {{"n", k.gab.g.size()}, {"k", k.gab.k}, {"lambda", k.x.cols()}, {"t", k.t},
                       {"field", field_to_json(*k.g_pub.field())}},
                      {{"g_pub", matrix_to_json(k.g_pub)}});
    if (with_secret)
        j["secret"] = {{"code", to_json(k.gab)}, {"s", matrix_to_json(k.s)}, {"x", matrix_to_json(k.x)}, {"p", matrix_to_json(k.p)}};
    return j;
}

GptKey gpt_key_from_json(const json& j)
{
    expect_scheme(j, "gpt");
    Matrix g_pub = matrix_from_json(j.at("public").at("g_pub"));
    size_t t = j.at("params").at("t").get<size_t>();
    if (!has_secret(j)) {
        GptKey k;
        k.g_pub = g_pub;
        k.t = t;
        return k;
    }
    auto& s = j.at("secret");
    GptKey k = gpt_assemble(gabidulin_from_json(s.at("code")), matrix_from_json(s.at("s")), matrix_from_json(s.at("x")),
                            matrix_from_json(s.at("p")), t);
    if (k.g_pub != g_pub) fail(Errc::parse_error, "public matrix does not match the secret key");
    return k;
}

json key_to_json(const BikeKey& k, bool with_secret)
{
    json j = envelope("bike", {{"r", k.params.r}, {"w", k.params.w}, {"t", k.params.t}}, {{"h", vec_to_json(*gf2(), k.h)}});
    if (with_secret) j["secret"] = {{"h0", vec_to_json(*gf2(), k.h0)}, {"h1", vec_to_json(*gf2(), k.h1)}};
    return j;
}

BikeKey bike_key_from_json(const json& j)
{
    expect_scheme(j, "bike");
    auto& pj = j.at("params");
    BikeKey k;
    k.params = {pj.at("r").get<size_t>(), pj.at("w").get<size_t>(), pj.at("t").get<size_t>()};
    k.h = vec_from_json(*gf2(), j.at("public").at("h"));
    if (has_secret(j)) {
        k.h0 = vec_from_json(*gf2(), j.at("secret").at("h0"));
        k.h1 = vec_from_json(*gf2(), j.at("secret").at("h1"));
        if (ring_mul(*gf2(), k.h, k.h0) != k.h1) fail(Errc::parse_error, "public h does not match the secret key");
    }
    return k;
}

json key_to_json(const CmceKey& k, bool with_secret)
{
    json j = envelope("cmce-toy", {{"m", k.params.m}, {"n", k.params.n}, {"t", k.params.t}}, {{"t_pub", matrix_to_json(k.t_pub)}});
    if (with_secret) j["secret"] = {{"code", to_json(k.goppa)}};
    return j;
}

CmceKey cmce_key_from_json(const json& j)
{
    expect_scheme(j, "cmce-toy");
    auto& pj = j.at("params");
    CmceKey k;
    k.params = {pj.at("m").get<unsigned>(), pj.at("n").get<size_t>(), pj.at("t").get<size_t>()};
    k.t_pub = matrix_from_json(j.at("public").at("t_pub"));
    if (has_secret(j)) k.goppa = goppa_from_json(j.at("secret").at("code"));
    return k;
}

}
