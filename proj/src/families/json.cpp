#include <codelab/error.hpp>
#include <codelab/families.hpp>

namespace codelab {

using nlohmann::json;

json field_to_json(const Field& f)
{
    return {{"p", f.p()}, {"m", f.m()}, {"modulus", f.m() > 1 ? json(f.modulus()) : json(nullptr)}};
}

FieldPtr field_from_json(const json& j)
{
    try {
        uint32_t p = j.at("p");
        unsigned m = j.value("m", 1u);
        if (m > 1 && j.contains("modulus") && !j["modulus"].is_null())
            return Field::make(p, j["modulus"].get<std::vector<uint32_t>>());
        return Field::make(p, m);
    } catch (const json::exception& e) {
        fail(Errc::parse_error, std::string("field: ") + e.what());
    }
}

static json elts(const Field& f, const Vec& v)
{
    json a = json::array();
    for (auto x : v) a.push_back(f.to_string(x));
    return a;
}

static Vec parse_elts(const Field& f, const json& a)
{
    Vec v;
    for (auto& x : a) v.push_back(x.is_string() ? f.parse(x.get<std::string>()) : f.from_int(x.get<int64_t>()));
    return v;
}

static void expect_family(const json& j, const char* name)
{
    if (j.value("family", std::string()) != name) fail(Errc::parse_error, std::string("expected family ") + name);
}

json to_json(const GrsParams& p)
{
    return {{"family", "grs"}, {"field", field_to_json(*p.f)}, {"alpha", elts(*p.f, p.alpha)},
            {"beta", elts(*p.f, p.beta)}, {"k", p.k}};
}

json to_json(const GoppaParams& p)
{
    return {{"family", "goppa"}, {"field", field_to_json(*p.ext)}, {"g", elts(*p.ext, p.g.coeffs())},
            {"support", elts(*p.ext, p.support)}};
}

json to_json(const MdpcParams& p) { return {{"family", "mdpc"}, {"blocks", p.blocks}, {"r", p.r}, {"w", p.w}}; }

json to_json(const GabidulinParams& p)
{
    return {{"family", "gabidulin"}, {"field", field_to_json(*p.f)}, {"g", elts(*p.f, p.g)}, {"k", p.k}, {"s", p.s}};
}

GrsParams grs_from_json(const json& j)
{
    expect_family(j, "grs");
    try {
        auto f = field_from_json(j.at("field"));
        GrsParams p{f, parse_elts(*f, j.at("alpha")), parse_elts(*f, j.at("beta")), j.at("k").get<size_t>()};
        check_grs(p);
        return p;
    } catch (const json::exception& e) {
        fail(Errc::parse_error, e.what());
    }
}

GoppaParams goppa_from_json(const json& j)
{
    expect_family(j, "goppa");
    try {
        GoppaParams p;
        p.ext = field_from_json(j.at("field"));
        p.base = Field::make(p.ext->p());
        p.g = Poly(p.ext, parse_elts(*p.ext, j.at("g")));
        p.support = parse_elts(*p.ext, j.at("support"));
        check_goppa(p);
        return p;
    } catch (const json::exception& e) {
        fail(Errc::parse_error, e.what());
    }
}

MdpcParams mdpc_from_json(const json& j)
{
    expect_family(j, "mdpc");
    try {
        return {j.at("blocks").get<size_t>(), j.at("r").get<size_t>(), j.at("w").get<size_t>()};
    } catch (const json::exception& e) {
        fail(Errc::parse_error, e.what());
    }
}

GabidulinParams gabidulin_from_json(const json& j)
{
    expect_family(j, "gabidulin");
    try {
        GabidulinParams p;
        p.f = field_from_json(j.at("field"));
        p.g = parse_elts(*p.f, j.at("g"));
        p.k = j.at("k");
        p.s = j.value("s", 1u);
        check_gabidulin(p);
        return p;
    } catch (const json::exception& e) {
        fail(Errc::parse_error, e.what());
    }
}

}
