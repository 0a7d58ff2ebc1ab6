#include <doctest.h>

#include <codelab/demo.hpp>
#include <codelab/estimate.hpp>
#include <codelab/families.hpp>
#include <codelab/io.hpp>
#include <codelab/isd.hpp>
#include <codelab/pke.hpp>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace codelab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

fs::path scratch()
{
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("codelab_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

Run run(const std::string& args)
{
    const char* bin = std::getenv("CODELAB_BIN");
    REQUIRE_MESSAGE(bin, "CODELAB_BIN is not set");
    auto err = scratch() / "stderr.txt";
    std::string cmd = std::string(bin) + " " + args + " 2>" + err.string();
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int status = ::pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err)};
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

}

TEST_CASE("demos replay every worked example")
{
    for (auto& name : demo_names()) {
        CAPTURE(name);
        auto r = run("demo --example " + name);
        CHECK(r.code == 0);
        auto j = json::parse(r.out);
        CHECK(j["ok"] == true);
        CHECK(j["seed"] == 0);
        CHECK(run("demo --example " + name).out == r.out);
        CHECK(run_demo(name).ok());
    }
    auto r = run("demo --example prange-f5 --format human");
    CHECK(r.out.find("e = (2,0,0,4,0,0,0,0,0,0)") != std::string::npos);
    CHECK(json::parse(run("demo --example prange-f5").out)["result"]["e"] == "(2,0,0,4,0,0,0,0,0,0)");
}

TEST_CASE("brute force on the trivial instance")
{
    auto f = Field::make(3);
    SdpInstance inst{Matrix(f, {{1, 0, 2, 1}, {0, 1, 1, 1}}), Vec(2, 0), 0};
    spit(path("zero.txt"), write_instance(inst));
    auto r = run("attack --alg brute --instance " + path("zero.txt") + " --seed 17");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["e"] == "(0,0,0,0)");
    CHECK(j["weight"] == 0);
    CHECK(j["seed"] == 17);
}

TEST_CASE("solvers through the command line")
{
    Rng rng(4);
    auto pl = random_sdp(Field::make(2), 20, 10, 3, rng);
    spit(path("inst.txt"), write_instance(pl.inst));
    for (std::string alg : {"brute", "prange", "leebrickell", "stern", "bjmm"}) {
        CAPTURE(alg);
        auto r = run("attack --alg " + alg + " --instance " + path("inst.txt") + " --seed 3");
        REQUIRE(r.code == 0);
        auto j = json::parse(r.out);
        CHECK(j["valid"] == true);
        CHECK(j["weight"].get<size_t>() <= 3);
        CHECK(run("attack --alg " + alg + " --instance " + path("inst.txt") + " --seed 3").out == r.out);
    }
}

TEST_CASE("estimates")
{
    auto j = json::parse(run("estimate asymptotic --alg prange --q 2").out);
    CHECK(j["exponent"].get<double>() == doctest::Approx(0.1208).epsilon(0.0005 / 0.1208));
    auto nist = json::parse(run("estimate nist").out);
    CHECK(nist["rows"].size() == 11);
    CHECK(json::parse(run("estimate gv --n 128 --k 64").out)["d"] == gv_distance(128, 64, 2));
    auto isd = json::parse(run("estimate isd --alg prange --n 1024 --k 524 --t 50").out);
    CHECK(isd["log2_cost"].get<double>() == doctest::Approx(prange_cost(1024, 524, 50, 2).log2_cost));
}

TEST_CASE("key lifecycle and signatures")
{
    REQUIRE(run("keygen --scheme mceliece --seed 2 --out " + path("mc.json")).code == 0);
    auto key = mceliece_key_from_json(json::parse(slurp(path("mc.json"))));
    Vec m(key.g_pub.rows(), 0);
    m[0] = m[2] = 1;
    spit(path("m.json"), vec_to_json(*key.g_pub.field(), m).dump());
    REQUIRE(run("encrypt --key " + path("mc.json") + " --in " + path("m.json") + " --out " + path("c.json")).code == 0);
    auto r = run("decrypt --key " + path("mc.json") + " --in " + path("c.json"));
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["m"] == vec_to_json(*key.g_pub.field(), m));

    for (std::string s : {"cve", "ags", "niederreiter"}) {
        std::string scheme = s == "niederreiter" ? "cfs" : s + "-fs";
        CAPTURE(scheme);
        REQUIRE(run("keygen --scheme " + s + " --seed 5 --out " + path(s + ".json")).code == 0);
        std::string common = "--scheme " + scheme + " --key " + path(s + ".json");
        REQUIRE(run("sign " + common + " --msg hello --rounds 12 --out " + path("sig.json")).code == 0);
        CHECK(run("verify " + common + " --msg hello --sig " + path("sig.json")).code == 0);
        auto bad = run("verify " + common + " --msg hellp --sig " + path("sig.json"));
        CHECK(bad.code == 3);
        CHECK(json::parse(bad.err)["error"] == "VerifyFailed");
    }
    auto sig = json::parse(slurp(path("sig.json")));
    CHECK(sig["scheme"] == "cfs");
}

TEST_CASE("distinguisher and reduction commands")
{
    auto f = Field::make(13);
    GrsParams gp{f, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, Vec(12, 1), 4};
    spit(path("grs.txt"), write_matrix(grs_generator(gp)));
    auto j = json::parse(run("distinguish square --matrix " + path("grs.txt")).out);
    CHECK(j["verdict"] == "structured");
    CHECK(j["measured"] == 7);

    spit(path("3dm.json"), R"({"T": ["A","B","C","D"], "U": [["D","A","B"],["C","B","A"],["D","A","B"],["B","C","D"],["C","D","A"],["A","D","A"],["A","B","C"]]})");
    auto sdp = json::parse(run("reduce --in " + path("3dm.json") + " --to sdp --solve --out " + path("sdp.txt")).out);
    CHECK(sdp["rows"] == 12);
    CHECK(sdp["cols"] == 7);
    CHECK(sdp["matching"].size() == 4);
    auto solved = json::parse(run("attack --alg prange --instance " + path("sdp.txt")).out);
    CHECK(solved["weight"] == 4);

    auto gw = json::parse(run("reduce --in " + path("3dm.json") + " --to gwcp --out " + path("gw.json")).out);
    CHECK(gw["rows"] == 96);
    CHECK(gw["cols"] == 103);
    CHECK(gw["w"] == 64);
    auto c = json::parse(run("attack --alg brute --instance " + path("gw.json")).out);
    CHECK(c["weight"] == 64);
}

TEST_CASE("exit codes and error JSON")
{
    auto usage = run("attack --alg nope --instance x");
    CHECK(usage.code == 2);
    CHECK(json::parse(usage.err)["exit"] == 2);
    CHECK(run("").code == 2);
    CHECK(run("attack --alg brute --instance " + path("missing.txt")).code == 2);

    // about half the random syndromes of a t = 2 Goppa code do not decode
    REQUIRE(run("keygen --scheme niederreiter --seed 8 --out " + path("nd.json")).code == 0);
    auto key = niederreiter_key_from_json(json::parse(slurp(path("nd.json"))));
    Rng rng(1);
    int failures = 0;
    for (int i = 0; i < 10 && !failures; ++i) {
        Vec s = random_vec(*key.h_pub.field(), key.h_pub.rows(), rng);
        spit(path("ct.json"), json{{"scheme", "niederreiter"}, {"c", vec_to_json(*key.h_pub.field(), s)}}.dump());
        auto r = run("decrypt --key " + path("nd.json") + " --in " + path("ct.json"));
        if (r.code != 0) {
            CHECK(r.code == 4);
            CHECK(json::parse(r.err)["error"] == "DecodeFailure");
            ++failures;
        }
    }
    CHECK(failures == 1);

    auto pl = random_sdp(Field::make(2), 40, 20, 6, rng);
    spit(path("big.txt"), write_instance(pl.inst));
    auto big = run("attack --alg brute --budget 100 --instance " + path("big.txt"));
    CHECK(big.code == 5);
    CHECK(json::parse(big.err)["error"] == "TooLarge");
}
