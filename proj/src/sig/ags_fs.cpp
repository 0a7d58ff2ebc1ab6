#include <codelab/error.hpp>
#include <codelab/io.hpp>
#include <codelab/sig.hpp>

namespace codelab {

using nlohmann::json;

namespace {

Bytes text(const std::string& s) { return Bytes(s.begin(), s.end()); }

const FieldPtr& gf2()
{
    static FieldPtr f = Field::make(2);
    return f;
}

}

std::vector<size_t> ags_fs_shifts(size_t k, const Bytes& a, size_t rounds)
{
    Bytes zs = expand_hash(a, 4 * rounds);
    std::vector<size_t> out(rounds);
    for (size_t i = 0; i < rounds; ++i) {
        uint32_t w = uint32_t(zs[4 * i]) << 24 | uint32_t(zs[4 * i + 1]) << 16 | uint32_t(zs[4 * i + 2]) << 8 |
                     zs[4 * i + 3];
        out[i] = 1 + w % k;
    }
    return out;
}

std::vector<int> ags_fs_bits(const Bytes& a, const std::vector<Bytes>& c2s)
{
    std::vector<Bytes> parts{a};
    parts.insert(parts.end(), c2s.begin(), c2s.end());
    Bytes bits = expand_hash(commit_hash(parts), (c2s.size() + 7) / 8);
    std::vector<int> out(c2s.size());
    for (size_t i = 0; i < c2s.size(); ++i) out[i] = (bits[i / 8] >> (i % 8)) & 1;
    return out;
}

AgsFsSignature ags_fs_sign(const AgsKeys& keys, const std::string& message, size_t rounds, uint64_t seed)
{
    if (rounds == 0) fail(Errc::invalid_argument, "need at least one round");
    Rng rng(seed);
    std::vector<AgsCommitment> cms;
    std::vector<Bytes> parts{text(message)};
    for (size_t i = 0; i < rounds; ++i) {
        cms.push_back(ags_commit(keys, rng));
        parts.push_back(cms.back().c0);
        parts.push_back(cms.back().c1);
    }
    AgsFsSignature sig;
    sig.a = commit_hash(parts);
    sig.rounds = rounds;
    auto zs = ags_fs_shifts(keys.pub.g.rows(), sig.a, rounds);
    std::vector<Bytes> c2s;
    for (size_t i = 0; i < rounds; ++i) c2s.push_back(ags_c2(keys, cms[i], zs[i]));
    auto bs = ags_fs_bits(sig.a, c2s);
    for (size_t i = 0; i < rounds; ++i) {
        auto tr = ags_respond(keys, cms[i], zs[i], bs[i]);
        sig.responses.push_back({tr.b, tr.c2, tr.b == 0 ? tr.c1 : tr.c0, tr.sigma, tr.um, tr.w1, tr.w2});
    }
    return sig;
}

bool ags_fs_verify(const AgsPublic& pub, const std::string& message, const AgsFsSignature& sig)
{
    if (sig.rounds == 0 || sig.responses.size() != sig.rounds) return false;
    auto zs = ags_fs_shifts(pub.g.rows(), sig.a, sig.rounds);
    std::vector<Bytes> c2s;
    for (auto& r : sig.responses) c2s.push_back(r.c2);
    auto bs = ags_fs_bits(sig.a, c2s);
    std::vector<Bytes> parts{text(message)};
    for (size_t i = 0; i < sig.rounds; ++i) {
        auto& r = sig.responses[i];
        if (r.b != bs[i]) return false;
        AgsTranscript tr;
        tr.c2 = r.c2;
        tr.z = zs[i];
        tr.b = r.b;
        tr.sigma = r.sigma;
        tr.um = r.um;
        tr.w1 = r.w1;
        tr.w2 = r.w2;
        auto mine = ags_rebuild(pub, tr);
        if (!mine) return false;
        parts.push_back(r.b == 0 ? *mine : r.other);
        parts.push_back(r.b == 0 ? r.other : *mine);
    }
    return commit_hash(parts) == sig.a;
}

json to_json(const AgsFsSignature& s)
{
    const Field& f = *gf2();
    json rs = json::array();
    for (auto& r : s.responses) {
        json j = {{"b", r.b}, {"c2", to_hex(r.c2)}, {"other", to_hex(r.other)}};
        if (r.b == 0) {
            j["sigma"] = r.sigma.image();
            j["um"] = pack_hex(f, r.um);
        } else {
            j["w1"] = pack_hex(f, r.w1);
            j["w2"] = pack_hex(f, r.w2);
        }
        rs.push_back(j);
    }
    return {{"scheme", "ags"}, {"N", s.rounds}, {"a", to_hex(s.a)}, {"responses", rs}};
}

AgsFsSignature ags_fs_signature_from_json(const json& j, size_t k)
{
    const Field& f = *gf2();
    try {
        if (j.at("scheme") != "ags") fail(Errc::parse_error, "unsupported signature scheme");
        AgsFsSignature s;
        s.rounds = j.at("N").get<size_t>();
        s.a = from_hex(j.at("a").get<std::string>());
        for (auto& r : j.at("responses")) {
            AgsFsRound fr;
            fr.b = r.at("b").get<int>();
            fr.c2 = from_hex(r.at("c2").get<std::string>());
            fr.other = from_hex(r.at("other").get<std::string>());
            if (fr.b == 0) {
                fr.sigma = Permutation(r.at("sigma").get<std::vector<size_t>>());
                fr.um = unpack_hex(f, r.at("um").get<std::string>(), k);
            } else {
                fr.w1 = unpack_hex(f, r.at("w1").get<std::string>(), 2 * k);
                fr.w2 = unpack_hex(f, r.at("w2").get<std::string>(), 2 * k);
            }
            s.responses.push_back(std::move(fr));
        }
        return s;
    } catch (const json::exception& e) {
        fail(Errc::parse_error, e.what());
    }
}

json to_json(const AgsKeys& k, bool with_secret)
{
    const Field& f = *gf2();
    json j = {{"scheme", "ags"}, {"g", matrix_to_json(k.pub.g)}, {"c", vec_to_json(f, k.pub.c)}, {"t", k.pub.t}};
    if (with_secret) {
        j["m"] = vec_to_json(f, k.m);
        j["e"] = vec_to_json(f, k.e);
    }
    return j;
}

AgsKeys ags_keys_from_json(const json& j)
{
    const Field& f = *gf2();
    try {
        AgsKeys k;
        k.pub.g = matrix_from_json(j.at("g"));
        if (k.pub.g.field()->q() != 2 || k.pub.g.cols() != 2 * k.pub.g.rows())
            fail(Errc::dim_mismatch, "AGS keys need a binary k x 2k generator");
        k.pub.c = vec_from_json(f, j.at("c"));
        k.pub.t = j.at("t").get<size_t>();
        if (j.contains("m")) k.m = vec_from_json(f, j.at("m"));
        if (j.contains("e")) k.e = vec_from_json(f, j.at("e"));
        if (k.pub.c.size() != k.pub.g.cols()) fail(Errc::dim_mismatch, "codeword has wrong length");
        return k;
    } catch (const json::exception& e) {
        fail(Errc::parse_error, e.what());
    }
}

}
