#include <codelab/demo.hpp>
#include <codelab/distinguish.hpp>
#include <codelab/error.hpp>
#include <codelab/estimate.hpp>
#include <codelab/io.hpp>
#include <codelab/isd.hpp>
#include <codelab/pke.hpp>
#include <codelab/reductions.hpp>
#include <codelab/sig.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace codelab;
using nlohmann::json;

namespace {

struct Config {
    uint64_t seed = 0;
    std::string format = "json";
    uint64_t budget = default_enum_budget;
    uint64_t max_iters = 0;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::invalid_argument, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path)
{
    try {
        return json::parse(slurp(path));
    } catch (const json::exception& e) {
        fail(Errc::parse_error, path + ": " + e.what());
    }
}

void spit(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) fail(Errc::invalid_argument, "cannot write " + path);
}

// "a=1,b=2" into a lookup with defaults
struct Params {
    std::map<std::string, std::string> kv;

    explicit Params(const std::string& spec)
    {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos) fail(Errc::invalid_argument, "parameter without value: " + item);
            kv[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    size_t get(const std::string& key, size_t dflt) const
    {
        auto it = kv.find(key);
        if (it == kv.end()) return dflt;
        try {
            return std::stoul(it->second);
        } catch (const std::exception&) {
            fail(Errc::invalid_argument, "parameter " + key + " is not a number");
        }
    }
};

void emit(const Config& cfg, json out, const std::string& path = "")
{
    out["seed"] = cfg.seed;
    std::string text;
    if (cfg.format == "human") {
        for (auto& [k, v] : out.items()) text += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    } else {
        text = out.dump(2) + "\n";
    }
    if (path.empty())
        std::cout << text;
    else
        spit(path, text);
}

// ---- keygen

json keygen(const std::string& scheme, const Params& p, Rng& rng)
{
    if (scheme == "mceliece" || scheme == "niederreiter") {
        auto secret = goppa_secret(random_goppa(2, unsigned(p.get("m", 4)), p.get("n", 16), p.get("t", 2), rng));
        if (scheme == "mceliece") return key_to_json(mceliece_keygen(secret, rng), true);
        return key_to_json(niederreiter_keygen(secret, rng), true);
    }
    if (scheme == "alekhnovich1") return key_to_json(alekhnovich_keygen(p.get("n", 64), p.get("k", 40), p.get("t", 3), rng), true);
    if (scheme == "qc") {
        size_t n = p.get("n", 31);
        QcParams qp{n, p.get("w", 2), p.get("we", 2), p.get("wr", 2)};
        return key_to_json(qc_keygen(qc_repetition_code(n), qp, rng), true);
    }
    if (scheme == "gpt")
        return key_to_json(gpt_keygen(Field::make(2, unsigned(p.get("m", 5))), p.get("n", 4), p.get("k", 2),
                                      p.get("lambda", 1), rng),
                           true);
    if (scheme == "bike") return key_to_json(bike_keygen({p.get("r", 83), p.get("w", 10), p.get("t", 2)}, rng), true);
    if (scheme == "cmce-toy")
        return key_to_json(cmce_keygen({unsigned(p.get("m", 4)), p.get("n", 12), p.get("t", 2)}, rng), true);
    if (scheme == "cve")
        return to_json(cve_keygen(Field::make(uint32_t(p.get("q", 13))), p.get("n", 16), p.get("k", 8), p.get("t", 4), rng), true);
    if (scheme == "ags") return to_json(ags_keygen(p.get("k", 11), p.get("t", 3), rng), true);
    fail(Errc::invalid_argument, "unknown scheme " + scheme);
}

// ---- encrypt / decrypt

json encrypt(const json& key, const std::string& in, Rng& rng)
{
    std::string scheme = key.value("scheme", "");
    auto message = [&](const Field& f) {
        if (in.empty()) fail(Errc::invalid_argument, scheme + " needs --in");
        return vec_from_json(f, read_json(in));
    };
    json out = {{"scheme", scheme}};
    if (scheme == "mceliece") {
        auto k = mceliece_key_from_json(key);
        const Field& f = *k.g_pub.field();
        out["c"] = vec_to_json(f, mceliece_encrypt(k.g_pub, k.t, message(f), rng));
    } else if (scheme == "niederreiter") {
        auto k = niederreiter_key_from_json(key);
        const Field& f = *k.h_pub.field();
        out["c"] = vec_to_json(f, niederreiter_encrypt(k.h_pub, k.t, message(f)));
    } else if (scheme == "alekhnovich1") {
        auto k = alekhnovich_key_from_json(key);
        const Field& f = *k.g.field();
        json bits = json::array();
        for (auto b : message(f)) {
            json reps = json::array();
            for (auto& c : alekhnovich_encrypt_repeated(k.g, k.t, int(b), 64, rng)) reps.push_back(vec_to_json(f, c));
            bits.push_back(reps);
        }
        out["c"] = bits;
    } else if (scheme == "qc") {
        auto k = qc_key_from_json(key);
        const Field& f = *k.code.g.field();
        auto c = qc_encrypt(k, message(f), rng);
        out["u"] = vec_to_json(f, c.u);
        out["v"] = vec_to_json(f, c.v);
    } else if (scheme == "gpt") {
        auto k = gpt_key_from_json(key);
        const Field& f = *k.g_pub.field();
        Vec e = random_rank_vec(f, k.g_pub.cols(), k.t, rng);
        out["c"] = vec_to_json(f, gpt_encrypt(k.g_pub, k.t, message(f), e));
    } else if (scheme == "bike") {
        auto k = bike_key_from_json(key);
        Bytes seed(32);
        for (auto& x : seed) x = uint8_t(rng.next());
        out["s"] = vec_to_json(*Field::make(2), bike_encrypt(k, seed));
    } else if (scheme == "cmce-toy") {
        auto k = cmce_key_from_json(key);
        auto enc = cmce_encaps(k.t_pub, k.params.t, rng);
        out["c0"] = vec_to_json(*Field::make(2), enc.c0);
        out["key"] = to_hex(enc.key);
    } else {
        fail(Errc::invalid_argument, "no encryption for scheme " + scheme);
    }
    return out;
}

json decrypt(const json& key, const json& ct)
{
    std::string scheme = key.value("scheme", "");
    if (ct.value("scheme", "") != scheme) fail(Errc::parse_error, "ciphertext and key schemes differ");
    auto f2 = Field::make(2);
    try {
        if (scheme == "mceliece") {
            auto k = mceliece_key_from_json(key);
            const Field& f = *k.g_pub.field();
            return {{"m", vec_to_json(f, mceliece_decrypt(k, vec_from_json(f, ct.at("c"))))}};
        }
        if (scheme == "niederreiter") {
            auto k = niederreiter_key_from_json(key);
            const Field& f = *k.h_pub.field();
            return {{"m", vec_to_json(f, niederreiter_decrypt(k, vec_from_json(f, ct.at("c"))))}};
        }
        if (scheme == "alekhnovich1") {
            auto k = alekhnovich_key_from_json(key);
            Vec m;
            for (auto& reps : ct.at("c")) {
                std::vector<Vec> cs;
                for (auto& c : reps) cs.push_back(vec_from_json(*f2, c));
                m.push_back(Elt(alekhnovich_decrypt_repeated(k.e, cs)));
            }
            return {{"m", vec_to_json(*f2, m)}};
        }
        if (scheme == "qc") {
            auto k = qc_key_from_json(key);
            const Field& f = *k.code.g.field();
            QcCipher c{vec_from_json(f, ct.at("u")), vec_from_json(f, ct.at("v"))};
            return {{"m", vec_to_json(f, qc_decrypt(k, c))}};
        }
        if (scheme == "gpt") {
            auto k = gpt_key_from_json(key);
            const Field& f = *k.g_pub.field();
            return {{"m", vec_to_json(f, gpt_decrypt(k, vec_from_json(f, ct.at("c"))))}};
        }
        if (scheme == "bike") {
            auto k = bike_key_from_json(key);
            return {{"e", vec_to_json(*f2, bike_decrypt(k, vec_from_json(*f2, ct.at("s"))))}};
        }
        if (scheme == "cmce-toy") {
            auto k = cmce_key_from_json(key);
            return {{"key", to_hex(cmce_decaps(k, vec_from_json(*f2, ct.at("c0"))))}};
        }
    } catch (const json::exception& e) {
        fail(Errc::parse_error, e.what());
    }
    fail(Errc::invalid_argument, "no decryption for scheme " + scheme);
}

// ---- sign / verify

json sign(const std::string& scheme, const json& key, const std::string& msg, size_t rounds, uint64_t seed)
{
    if (scheme == "cve-fs") {
        auto k = cve_keys_from_json(key);
        if (k.e.empty()) fail(Errc::invalid_argument, "signing needs the secret key");
        return to_json(fiat_shamir_sign(k, msg, rounds, seed), *k.pub.h.field());
    }
    if (scheme == "ags-fs") {
        auto k = ags_keys_from_json(key);
        if (k.e.empty()) fail(Errc::invalid_argument, "signing needs the secret key");
        return to_json(ags_fs_sign(k, msg, rounds, seed));
    }
    if (scheme == "cfs") {
        auto k = niederreiter_key_from_json(key);
        auto s = cfs_sign(k, msg);
        return {{"scheme", "cfs"}, {"counter", s.counter}, {"e", pack_hex(*k.h_pub.field(), s.e)}, {"attempts", s.attempts}};
    }
    fail(Errc::invalid_argument, "unknown signature scheme " + scheme);
}

bool verify(const std::string& scheme, const json& key, const std::string& msg, const json& sig)
{
    if (scheme == "cve-fs") {
        auto k = cve_keys_from_json(key);
        const Field& f = *k.pub.h.field();
        return fiat_shamir_verify(k.pub, msg, fs_signature_from_json(sig, f, k.pub.h.cols()));
    }
    if (scheme == "ags-fs") {
        auto k = ags_keys_from_json(key);
        return ags_fs_verify(k.pub, msg, ags_fs_signature_from_json(sig, k.pub.g.rows()));
    }
    if (scheme == "cfs") {
        auto k = niederreiter_key_from_json(key);
        try {
            if (sig.at("scheme") != "cfs") fail(Errc::parse_error, "not a CFS signature");
            CfsSignature s{sig.at("counter").get<uint64_t>(),
                           unpack_hex(*k.h_pub.field(), sig.at("e").get<std::string>(), k.h_pub.cols())};
            return cfs_verify(k.h_pub, k.t, msg, s);
        } catch (const json::exception& e) {
            fail(Errc::parse_error, e.what());
        }
    }
    fail(Errc::invalid_argument, "unknown signature scheme " + scheme);
}

// ---- attack

struct AttackOpts {
    std::string alg;
    std::optional<size_t> ell, v, eps1, eps2, a;
};

json attack(const AttackOpts& ao, const std::string& text, const Config& cfg)
{
    auto trimmed = text.find_first_not_of(" \t\r\n");
    if (trimmed != std::string::npos && text[trimmed] == '{') {
        // exact-weight codeword instance from `reduce --to gwcp`
        if (ao.alg != "brute") fail(Errc::invalid_argument, "codeword instances only support --alg brute");
        json j;
        try {
            j = json::parse(text);
            GwcpInstance g{matrix_from_json(j.at("h")), j.at("w").get<size_t>()};
            auto c = gwcp_bruteforce(g, cfg.budget);
            if (!c) fail(Errc::no_solution, "no codeword of the requested weight");
            return {{"alg", "brute"}, {"problem", "gwcp"}, {"c", pack_hex(*g.h.field(), *c)}, {"weight", weight(*c)}};
        } catch (const json::exception& e) {
            fail(Errc::parse_error, e.what());
        }
    }
    auto inst = read_instance(text);
    const Field& f = *inst.h.field();
    IsdOptions o{.seed = cfg.seed, .max_iters = cfg.max_iters, .budget = cfg.budget};
    size_t t = inst.t, k = inst.h.cols() - inst.h.rank();
    IsdSolution sol;
    if (ao.alg == "brute")
        sol = brute_force_sdp(inst, cfg.budget);
    else if (ao.alg == "prange")
        sol = prange(inst, o);
    else if (ao.alg == "leebrickell")
        sol = lee_brickell(inst, ao.v.value_or(std::min<size_t>(1, t)), o);
    else if (ao.alg == "stern")
        sol = stern(inst, {.ell = ao.ell.value_or(2), .v = ao.v.value_or(std::min<size_t>({1, t / 2, k / 2}))}, o);
    else if (ao.alg == "bjmm")
        sol = bjmm(inst, {.ell = ao.ell.value_or(4), .v = ao.v.value_or(2), .eps1 = ao.eps1.value_or(1), .eps2 = ao.eps2.value_or(0)}, o);
    else if (ao.alg == "wagner")
        sol = wagner(inst, {.a = ao.a.value_or(1), .ell = ao.ell.value_or(4), .v = ao.v.value_or(1)}, o);
    else
        fail(Errc::invalid_argument, "unknown algorithm " + ao.alg);
    return {{"alg", ao.alg},
            {"e", tuple_string(f, sol.e)},
            {"weight", weight(sol.e)},
            {"valid", is_solution(inst, sol.e)},
            {"iterations", sol.stats.iterations},
            {"collisions", sol.stats.collisions}};
}

// ---- distinguish

Matrix read_any_matrix(const std::string& path)
{
    std::string text = slurp(path);
    auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') {
        try {
            return matrix_from_json(json::parse(text));
        } catch (const json::exception& e) {
            fail(Errc::parse_error, e.what());
        }
    }
    return read_matrix(text);
}

int exit_code(Errc c)
{
    switch (c) {
    case Errc::parse_error:
    case Errc::invalid_argument:
    case Errc::unknown_param_set:
    case Errc::infeasible_params:
    case Errc::dim_mismatch:
    case Errc::field_mismatch:
    case Errc::length_mismatch:
    case Errc::invalid_block_size:
        return 2;
    case Errc::verify_failed:
    case Errc::aggregate_mismatch:
    case Errc::not_a_valid_solution:
        return 3;
    case Errc::decode_failure:
    case Errc::retry_limit:
        return 4;
    case Errc::too_large:
    case Errc::iteration_limit:
        return 5;
    default:
        return 1;
    }
}

void report_error(const std::string& kind, const std::string& msg, int code)
{
    std::cerr << json{{"error", kind}, {"message", msg}, {"exit", code}}.dump() << "\n";
}

}

int main(int argc, char** argv)
{
    CLI::App app{"code-based cryptography laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--seed", cfg.seed, "64-bit seed; echoed in the output");
    app.add_option("--format", cfg.format, "output mode")->check(CLI::IsMember({"json", "human"}));
    app.add_option("--budget", cfg.budget, "cap on enumerated vectors");
    app.add_option("--max-iters", cfg.max_iters, "ISD iteration cap (0: automatic)");

    std::string scheme, params, out, in, key, msg, sig_path, instance, alg, example, matrix, to = "sdp";
    size_t rounds = 0, ell = 2;
    uint32_t q = 2;
    AttackOpts ao;

    auto* kg = app.add_subcommand("keygen", "generate a key pair");
    kg->add_option("--scheme", scheme)->required()->check(
        CLI::IsMember({"mceliece", "niederreiter", "alekhnovich1", "qc", "gpt", "bike", "cmce-toy", "cve", "ags"}));
    kg->add_option("--params", params, "comma-separated name=value pairs");
    kg->add_option("--out", out);

    auto* enc = app.add_subcommand("encrypt", "encrypt a message file (JSON vector)");
    enc->add_option("--key", key)->required();
    enc->add_option("--in", in);
    enc->add_option("--out", out);
    auto* dec = app.add_subcommand("decrypt", "decrypt a ciphertext file");
    dec->add_option("--key", key)->required();
    dec->add_option("--in", in)->required();
    dec->add_option("--out", out);

    auto* sg = app.add_subcommand("sign", "sign a message");
    auto* vf = app.add_subcommand("verify", "verify a detached signature");
    for (auto* c : {sg, vf}) {
        c->add_option("--scheme", scheme)->required()->check(CLI::IsMember({"cve-fs", "ags-fs", "cfs"}));
        c->add_option("--key", key)->required();
        c->add_option("--msg", msg, "message text");
        c->add_option("--in", in, "message file");
    }
    sg->add_option("--rounds", rounds, "parallel rounds (default: 128-bit soundness)");
    sg->add_option("--out", out);
    vf->add_option("--sig", sig_path)->required();

    auto* at = app.add_subcommand("attack", "solve a syndrome decoding instance");
    at->add_option("--alg", ao.alg)->required()->check(
        CLI::IsMember({"brute", "prange", "leebrickell", "stern", "bjmm", "wagner"}));
    at->add_option("--instance", instance)->required();
    at->add_option("--ell", ao.ell);
    at->add_option("--v", ao.v);
    at->add_option("--eps1", ao.eps1);
    at->add_option("--eps2", ao.eps2);
    at->add_option("--levels", ao.a);

    auto* es = app.add_subcommand("estimate", "attack costs and key sizes");
    es->require_subcommand(1);
    size_t n = 0, k = 0, t = 0, m = 0;
    std::optional<size_t> e_ell, e_v, e_eps1, e_eps2;
    std::optional<double> rate;
    std::string level, variant = "basis_enum";
    uint64_t qq = 2;
    auto* es_isd = es->add_subcommand("isd", "concrete ISD cost in bit operations");
    es_isd->add_option("--alg", alg)->required()->check(CLI::IsMember({"prange", "stern", "bjmm"}));
    es_isd->add_option("--n", n)->required();
    es_isd->add_option("--k", k)->required();
    es_isd->add_option("--t", t)->required();
    es_isd->add_option("--q", qq);
    es_isd->add_option("--ell", e_ell);
    es_isd->add_option("--v", e_v);
    es_isd->add_option("--eps1", e_eps1);
    es_isd->add_option("--eps2", e_eps2);
    auto* es_nist = es->add_subcommand("nist", "key and ciphertext sizes");
    es_nist->add_option("--scheme", scheme)->check(CLI::IsMember({"classic-mceliece", "bike", "hqc"}));
    es_nist->add_option("--level", level);
    auto* es_asy = es->add_subcommand("asymptotic", "asymptotic exponent at the GV bound");
    es_asy->add_option("--alg", alg)->required()->check(CLI::IsMember({"prange", "stern", "bjmm"}));
    es_asy->add_option("--q", q);
    es_asy->add_option("--rate", rate);
    auto* es_gv = es->add_subcommand("gv", "Gilbert-Varshamov distance");
    es_gv->add_option("--n", n)->required();
    es_gv->add_option("--k", k)->required();
    es_gv->add_option("--q", qq);
    auto* es_rank = es->add_subcommand("rank", "rank-metric decoding cost");
    es_rank->add_option("--variant", variant)->check(CLI::IsMember({"basis_enum", "matrix_enum", "algebraic"}));
    es_rank->add_option("--q", qq);
    es_rank->add_option("--m", m)->required();
    es_rank->add_option("--n", n)->required();
    es_rank->add_option("--k", k)->required();
    es_rank->add_option("--t", t)->required();

    auto* ds = app.add_subcommand("distinguish", "square-code or Frobenius distinguisher");
    ds->add_option("kind", alg)->required()->check(CLI::IsMember({"square", "frobenius"}));
    ds->add_option("--matrix", matrix, "generator matrix (text or JSON)")->required();
    ds->add_option("--ell", ell);

    auto* rd = app.add_subcommand("reduce", "3DM instance to SDP or GWCP");
    rd->add_option("--in", in)->required();
    rd->add_option("--to", to)->check(CLI::IsMember({"sdp", "gwcp"}));
    rd->add_option("--q", q);
    rd->add_option("--out", out);
    bool solve = false;
    rd->add_flag("--solve", solve, "also solve by exhaustive search and map back to a matching");

    auto* dm = app.add_subcommand("demo", "replay a worked example");
    dm->add_option("--example", example)->required()->check(CLI::IsMember(demo_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("UsageError", e.what(), 2);
        return 2;
    }

    auto message = [&] {
        if (!in.empty()) return slurp(in);
        return msg;
    };

    try {
        Rng rng(cfg.seed);
        if (*kg) {
            json j = keygen(scheme, Params(params), rng);
            j["seed"] = cfg.seed;
            if (out.empty())
                std::cout << j.dump(2) << "\n";
            else {
                spit(out, j.dump(2) + "\n");
                emit(cfg, {{"scheme", scheme}, {"out", out}});
            }
        } else if (*enc) {
            emit(cfg, encrypt(read_json(key), in, rng), out);
        } else if (*dec) {
            emit(cfg, decrypt(read_json(key), read_json(in)), out);
        } else if (*sg) {
            json kj = read_json(key);
            if (rounds == 0) {
                if (scheme == "cve-fs") rounds = fs_rounds(matrix_from_json(kj.at("h")).field()->q(), 128);
                if (scheme == "ags-fs") rounds = 128;
            }
            emit(cfg, sign(scheme, kj, message(), rounds, cfg.seed), out);
        } else if (*vf) {
            if (!verify(scheme, read_json(key), message(), read_json(sig_path)))
                fail(Errc::verify_failed, "signature does not verify");
            emit(cfg, {{"scheme", scheme}, {"valid", true}});
        } else if (*at) {
            emit(cfg, attack(ao, slurp(instance), cfg));
        } else if (*es_isd) {
            CostReport c;
            if (alg == "prange")
                c = prange_cost(n, k, t, qq);
            else if (alg == "stern")
                c = e_ell && e_v ? stern_cost(n, k, t, qq, *e_ell, *e_v) : stern_cost_opt(n, k, t, qq);
            else {
                if (qq != 2) fail(Errc::invalid_argument, "BJMM costs are binary");
                c = bjmm_cost(n, k, t, e_ell.value_or(4), e_v.value_or(2), e_eps1.value_or(1), e_eps2.value_or(0));
            }
            json j = to_json(c);
            j["alg"] = alg;
            emit(cfg, j);
        } else if (*es_nist) {
            json rows = json::array();
            if (!scheme.empty() && !level.empty())
                rows.push_back(to_json(nist_sizes(scheme, level)));
            else
                for (auto& r : nist_table())
                    if (scheme.empty() || r.scheme == scheme) rows.push_back(to_json(r));
            emit(cfg, {{"rows", rows}});
        } else if (*es_asy) {
            auto a = isd_alg_from_string(alg);
            json j = to_json(rate ? asymptotic_at(a, *rate, q) : asymptotic_exponent(a, q));
            j["alg"] = alg;
            j["q"] = q;
            emit(cfg, j);
        } else if (*es_gv) {
            emit(cfg, {{"n", n}, {"k", k}, {"q", qq}, {"d", gv_distance(n, k, qq)}});
        } else if (*es_rank) {
            RankIsd v = variant == "basis_enum" ? RankIsd::basis_enum
                        : variant == "matrix_enum" ? RankIsd::matrix_enum
                                                   : RankIsd::algebraic;
            emit(cfg, to_json(rank_isd_cost(v, qq, m, n, k, t)));
        } else if (*ds) {
            Matrix g = read_any_matrix(matrix);
            auto v = alg == "square" ? square_distinguisher(g) : frobenius_distinguisher(g, ell);
            json j = to_json(v);
            j["kind"] = alg;
            if (alg == "frobenius") j["ell"] = ell;
            emit(cfg, j);
        } else if (*rd) {
            auto inst = tdm_from_json(read_json(in));
            auto f = Field::gf(q);
            json j = {{"to", to}, {"t", inst.ground.size()}, {"u", inst.triples.size()}};
            std::string text;
            if (to == "sdp") {
                auto sdp = tdm_to_sdp(inst, f);
                text = write_instance(sdp);
                j["rows"] = sdp.h.rows();
                j["cols"] = sdp.h.cols();
                if (solve) {
                    try {
                        auto e = brute_force_sdp(sdp, cfg.budget).e;
                        j["matching"] = sdp_solution_to_matching(inst, e);
                    } catch (const Error& err) {
                        if (err.code() != Errc::no_solution) throw;
                        j["matching"] = nullptr;
                    }
                }
            } else {
                auto g = tdm_to_gwcp(inst, f);
                text = json{{"problem", "gwcp"}, {"h", matrix_to_json(g.h)}, {"w", g.w}}.dump() + "\n";
                j["rows"] = g.h.rows();
                j["cols"] = g.h.cols();
                j["w"] = g.w;
                if (solve) {
                    auto c = gwcp_bruteforce(g, cfg.budget);
                    j["matching"] = c ? json(gwcp_solution_to_matching(inst, g, *c)) : json(nullptr);
                }
            }
            if (out.empty())
                j["instance"] = text;
            else {
                spit(out, text);
                j["out"] = out;
            }
            emit(cfg, j);
        } else if (*dm) {
            auto r = run_demo(example);
            if (cfg.format == "human")
                std::cout << to_human(r) << "seed: " << cfg.seed << "\n";
            else {
                json j = to_json(r);
                j["seed"] = cfg.seed;
                std::cout << j.dump(2) << "\n";
            }
            if (!r.ok()) {
                report_error("VerifyFailed", "demo output differs from the expected values", 3);
                return 3;
            }
        }
    } catch (const Error& e) {
        int code = exit_code(e.code());
        report_error(errc_name(e.code()), e.what(), code);
        return code;
    } catch (const std::exception& e) {
        report_error("Internal", e.what(), 1);
        return 1;
    }
    return 0;
}
