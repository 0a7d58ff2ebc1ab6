#include <codelab/error.hpp>
#include <codelab/io.hpp>
#include <codelab/sig.hpp>

#include <cmath>

namespace codelab {

using nlohmann::json;

namespace {

Bytes text(const std::string& s) { return Bytes(s.begin(), s.end()); }

CveTranscript as_transcript(const FsRound& r, Elt z)
{
    CveTranscript tr;
    tr.z = z;
    tr.y = r.y;
    tr.b = r.b;
    tr.mono = r.mono;
    tr.se = r.se;
    return tr;
}

}

CompressionReport compress_protocol(const CveKeys& keys, size_t rounds, uint64_t seed, std::optional<size_t> corrupt)
{
    if (rounds == 0) fail(Errc::invalid_argument, "need at least one round");
    const Field& f = *keys.pub.h.field();
    Rng pr(seed), vr(mix_seed(seed));
    std::vector<CveCommitment> cms;
    std::vector<Bytes> all;
    for (size_t i = 0; i < rounds; ++i) {
        cms.push_back(cve_commit(keys, pr));
        all.push_back(cms.back().c0);
        all.push_back(cms.back().c1);
    }
    Bytes aggregate = commit_hash(all);
    CompressionReport rep{rounds, 1, false};

    std::vector<Bytes> stored(2 * rounds);
    for (size_t i = 0; i < rounds; ++i) {
        auto ch = cve_challenge(f, vr);
        auto tr = cve_respond(keys, cms[i], ch.z, ch.b);
        Bytes other = ch.b == 0 ? tr.c1 : tr.c0;
        ++rep.hashes_sent;
        if (corrupt && *corrupt == i) other[0] ^= 1;
        tr.c0.clear();
        tr.c1.clear();
        auto mine = cve_rebuild(keys.pub, tr);
        if (!mine) fail(Errc::verify_failed, "malformed response in round " + std::to_string(i));
        stored[2 * i + ch.b] = *mine;
        stored[2 * i + 1 - ch.b] = other;
    }
    if (commit_hash(stored) != aggregate) fail(Errc::aggregate_mismatch, "aggregate commitment does not match");
    rep.verified = true;
    return rep;
}

std::vector<Elt> fs_scalars(const Field& f, const Bytes& a, size_t rounds)
{
    Bytes zs = expand_hash(a, 4 * rounds);
    std::vector<Elt> out(rounds);
    for (size_t i = 0; i < rounds; ++i) {
        uint32_t w = uint32_t(zs[4 * i]) << 24 | uint32_t(zs[4 * i + 1]) << 16 | uint32_t(zs[4 * i + 2]) << 8 |
                     zs[4 * i + 3];
        out[i] = Elt(1 + w % (f.q() - 1));
    }
    return out;
}

std::vector<CveChallenge> fs_challenges(const Field& f, const Bytes& a, const std::vector<Vec>& ys)
{
    size_t n = ys.size();
    auto zs = fs_scalars(f, a, n);
    std::vector<Bytes> parts{a};
    for (auto& y : ys) parts.push_back(encode(y));
    Bytes bits = expand_hash(commit_hash(parts), (n + 7) / 8);
    std::vector<CveChallenge> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = {zs[i], (bits[i / 8] >> (i % 8)) & 1};
    return out;
}

size_t fs_rounds(uint64_t q, unsigned lambda)
{
    if (q < 3) fail(Errc::invalid_argument, "the cheating probability is 1 over GF(2)");
    double per = -std::log2(double(q) / (2.0 * (q - 1)));
    return size_t(std::ceil(lambda / per - 1e-9));
}

FsSignature fiat_shamir_sign(const CveKeys& keys, const std::string& message, size_t rounds, uint64_t seed)
{
    if (rounds == 0) fail(Errc::invalid_argument, "need at least one round");
    const Field& f = *keys.pub.h.field();
    Rng rng(seed);
    std::vector<CveCommitment> cms;
    std::vector<Bytes> parts{text(message)};
    for (size_t i = 0; i < rounds; ++i) {
        cms.push_back(cve_commit(keys, rng));
        parts.push_back(cms.back().c0);
        parts.push_back(cms.back().c1);
    }
    FsSignature sig;
    sig.a = commit_hash(parts);
    sig.rounds = rounds;
    auto zs = fs_scalars(f, sig.a, rounds);
    std::vector<Vec> ys;
    for (size_t i = 0; i < rounds; ++i) ys.push_back(cve_masked(keys, cms[i], zs[i]));
    auto chs = fs_challenges(f, sig.a, ys);
    for (size_t i = 0; i < rounds; ++i) {
        auto tr = cve_respond(keys, cms[i], chs[i].z, chs[i].b);
        sig.responses.push_back({tr.y, tr.b, tr.mono, tr.se, tr.b == 0 ? tr.c1 : tr.c0});
    }
    return sig;
}

bool fiat_shamir_verify(const CvePublic& pub, const std::string& message, const FsSignature& sig)
{
    if (sig.rounds == 0 || sig.responses.size() != sig.rounds) return false;
    const Field& f = *pub.h.field();
    std::vector<Vec> ys;
    for (auto& r : sig.responses) ys.push_back(r.y);
    auto chs = fs_challenges(f, sig.a, ys);
    std::vector<Bytes> parts{text(message)};
    for (size_t i = 0; i < sig.rounds; ++i) {
        auto& r = sig.responses[i];
        if (r.b != chs[i].b) return false;
        auto mine = cve_rebuild(pub, as_transcript(r, chs[i].z));
        if (!mine) return false;
        parts.push_back(r.b == 0 ? *mine : r.other);
        parts.push_back(r.b == 0 ? r.other : *mine);
    }
    return commit_hash(parts) == sig.a;
}

json to_json(const FsSignature& s, const Field& f)
{
    json rs = json::array();
    for (auto& r : s.responses) {
        json j = {{"b", r.b}, {"y", pack_hex(f, r.y)}, {"other", to_hex(r.other)}};
        if (r.b == 0) {
            j["sigma"] = r.mono.sigma.image();
            j["v"] = pack_hex(f, r.mono.v);
        } else {
            j["se"] = pack_hex(f, r.se);
        }
        rs.push_back(j);
    }
    return {{"scheme", "cve"}, {"N", s.rounds}, {"a", to_hex(s.a)}, {"responses", rs}};
}

FsSignature fs_signature_from_json(const json& j, const Field& f, size_t n)
{
    try {
        if (j.at("scheme") != "cve") fail(Errc::parse_error, "unsupported signature scheme");
        FsSignature s;
        s.rounds = j.at("N").get<size_t>();
        s.a = from_hex(j.at("a").get<std::string>());
        for (auto& r : j.at("responses")) {
            FsRound fr;
            fr.b = r.at("b").get<int>();
            fr.other = from_hex(r.at("other").get<std::string>());
            fr.y = unpack_hex(f, r.at("y").get<std::string>(), n);
            if (fr.b == 0) {
                fr.mono.sigma = Permutation(r.at("sigma").get<std::vector<size_t>>());
                fr.mono.v = unpack_hex(f, r.at("v").get<std::string>(), n);
            } else {
                fr.se = unpack_hex(f, r.at("se").get<std::string>(), n);
            }
            s.responses.push_back(std::move(fr));
        }
        return s;
    } catch (const json::exception& e) {
        fail(Errc::parse_error, e.what());
    }
}

json to_json(const CveKeys& k, bool with_secret)
{
    const Field& f = *k.pub.h.field();
    json j = {{"scheme", "cve"}, {"h", matrix_to_json(k.pub.h)}, {"s", vec_to_json(f, k.pub.s)}, {"t", k.pub.t}};
    if (with_secret) j["e"] = vec_to_json(f, k.e);
    return j;
}

CveKeys cve_keys_from_json(const json& j)
{
    try {
        CveKeys k;
        k.pub.h = matrix_from_json(j.at("h"));
        const Field& f = *k.pub.h.field();
        k.pub.s = vec_from_json(f, j.at("s"));
        k.pub.t = j.at("t").get<size_t>();
        if (j.contains("e")) k.e = vec_from_json(f, j.at("e"));
        if (k.pub.s.size() != k.pub.h.rows()) fail(Errc::dim_mismatch, "syndrome has wrong length");
        return k;
    } catch (const json::exception& e) {
        fail(Errc::parse_error, e.what());
    }
}

}
