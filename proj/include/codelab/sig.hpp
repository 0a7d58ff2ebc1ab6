#pragma once

#include <codelab/hash.hpp>
#include <codelab/pke.hpp>

#include <json.hpp>

#include <optional>

namespace codelab {

// ---- hashing seam

// SHA-256 over length-prefixed parts
Bytes commit_hash(const std::vector<Bytes>& parts);
Bytes encode(const Vec& v);
Bytes encode(const Permutation& p);
// hash calls made through commit_hash on this thread
uint64_t hash_calls();

// ---- monomial transforms: sigma_v(a) = sigma(v) * sigma(a)

struct Monomial {
    Permutation sigma;
    Vec v; // nonzero scalars
};
Monomial random_monomial(const Field& f, size_t n, Rng& rng);
Vec apply(const Field& f, const Monomial& m, const Vec& a);
Vec apply_inverse(const Field& f, const Monomial& m, const Vec& a);

// ---- CVE 5-pass identification

struct CvePublic {
    Matrix h;
    Vec s;
    size_t t = 0;
};
struct CveKeys {
    CvePublic pub;
    Vec e;
};
CveKeys cve_keygen(FieldPtr f, size_t n, size_t k, size_t t, Rng& rng);
CveKeys cve_keys(const Matrix& h, const Vec& e);

struct CveCommitment {
    Vec u;
    Monomial mono;
    Bytes c0, c1;
};
CveCommitment cve_commit(const CveKeys& keys, Rng& rng);
Vec cve_masked(const CveKeys& keys, const CveCommitment& cm, Elt z);

struct CveTranscript {
    Bytes c0, c1;
    Elt z = 1;
    Vec y;
    int b = 0;
    Monomial mono; // response when b = 0
    Vec se;        // response when b = 1: sigma_v(e)
};
CveTranscript cve_respond(const CveKeys& keys, const CveCommitment& cm, Elt z, int b);
// commitment c_b the verifier rebuilds from the response; nullopt if the response is malformed
std::optional<Bytes> cve_rebuild(const CvePublic& pub, const CveTranscript& tr);
bool cve_verify(const CvePublic& pub, const CveTranscript& tr);

struct CveChallenge {
    Elt z;
    int b;
};
CveChallenge cve_challenge(const Field& f, Rng& rng);
CveTranscript cve_round(const CveKeys& keys, uint64_t prover_seed, uint64_t verifier_seed);

// s0, s1 guess b; the primed versions also guess z
enum class CveStrategy { s0, s1, s0_improved, s1_improved };
CveStrategy cve_strategy_from_string(const std::string& s);
CveTranscript cve_cheat(CveStrategy st, const CvePublic& pub, Elt guess_z, CveChallenge ch, Rng& rng);
bool cve_impersonate(CveStrategy st, const CvePublic& pub, Elt guess_z, uint64_t verifier_seed,
                     uint64_t prover_seed = 0);

// ---- AGS identification over two-block quasi-cyclic binary codes

struct AgsPublic {
    Matrix g; // (circ(a) | circ(b)), k x 2k
    Vec c;
    size_t t = 0;
};
struct AgsKeys {
    AgsPublic pub;
    Vec m, e;
};
AgsKeys ags_keygen(size_t k, size_t t, Rng& rng);
// cyclic shift by i inside every block of the given length
Vec block_shift(const Vec& a, size_t block, size_t i);

struct AgsTranscript {
    Bytes c0, c1, c2;
    size_t z = 1; // 1..k
    int b = 0;
    Permutation sigma; // b = 0
    Vec um;            // b = 0: u + rho_z(m)
    Vec w1, w2;        // b = 1: sigma(uG), sigma(rho_z(e))
};
struct AgsCommitment {
    Vec u;
    Permutation sigma;
    Bytes c0, c1;
};
AgsCommitment ags_commit(const AgsKeys& keys, Rng& rng);
Bytes ags_c2(const AgsKeys& keys, const AgsCommitment& cm, size_t z);
AgsTranscript ags_respond(const AgsKeys& keys, const AgsCommitment& cm, size_t z, int b);
AgsTranscript ags_transcript(const AgsKeys& keys, size_t z, int b, Rng& rng);
AgsTranscript ags_round(const AgsKeys& keys, uint64_t prover_seed, uint64_t verifier_seed);
// c_b rebuilt from the response once c_2 checks out; nullopt otherwise
std::optional<Bytes> ags_rebuild(const AgsPublic& pub, const AgsTranscript& tr);
bool ags_verify(const AgsPublic& pub, const AgsTranscript& tr);
// guesses b before committing
AgsTranscript ags_cheat(int guess_b, const AgsPublic& pub, size_t z, int b, Rng& rng);

// ---- compression of N rounds

struct CompressionReport {
    size_t rounds = 0;
    size_t hashes_sent = 0;
    bool verified = false;
};
// CVE rounds with one aggregate commitment; corrupt flips a stored c_{1-b} in that round.
// Throws AggregateMismatch when the final check fails.
CompressionReport compress_protocol(const CveKeys& keys, size_t rounds, uint64_t seed,
                                    std::optional<size_t> corrupt = std::nullopt);

// ---- Fiat-Shamir over CVE

struct FsRound {
    Vec y;
    int b = 0;
    Monomial mono;
    Vec se;
    Bytes other; // c_{1-b}
};
struct FsSignature {
    Bytes a; // H(message, c_0^1, c_1^1, ..., c_0^N, c_1^N)
    size_t rounds = 0;
    std::vector<FsRound> responses;
};
// z_i from expand_hash(a); b_i from the bits of H(a, y_1, ..., y_N)
std::vector<Elt> fs_scalars(const Field& f, const Bytes& a, size_t rounds);
std::vector<CveChallenge> fs_challenges(const Field& f, const Bytes& a, const std::vector<Vec>& ys);
// smallest N with (q / (2(q-1)))^N <= 2^-lambda
size_t fs_rounds(uint64_t q, unsigned lambda);
FsSignature fiat_shamir_sign(const CveKeys& keys, const std::string& message, size_t rounds, uint64_t seed);
bool fiat_shamir_verify(const CvePublic& pub, const std::string& message, const FsSignature& sig);

nlohmann::json to_json(const FsSignature& s, const Field& f);
FsSignature fs_signature_from_json(const nlohmann::json& j, const Field& f, size_t n);
nlohmann::json to_json(const CveKeys& k, bool with_secret);
CveKeys cve_keys_from_json(const nlohmann::json& j);

// ---- Fiat-Shamir over AGS

struct AgsFsRound {
    int b = 0;
    Bytes c2, other; // other = c_{1-b}
    Permutation sigma;
    Vec um, w1, w2;
};
struct AgsFsSignature {
    Bytes a; // H(message, c_0^1, c_1^1, ..., c_0^N, c_1^N)
    size_t rounds = 0;
    std::vector<AgsFsRound> responses;
};
// z_i in 1..k from expand_hash(a); b_i from the bits of H(a, c_2^1, ..., c_2^N)
std::vector<size_t> ags_fs_shifts(size_t k, const Bytes& a, size_t rounds);
std::vector<int> ags_fs_bits(const Bytes& a, const std::vector<Bytes>& c2s);
AgsFsSignature ags_fs_sign(const AgsKeys& keys, const std::string& message, size_t rounds, uint64_t seed);
bool ags_fs_verify(const AgsPublic& pub, const std::string& message, const AgsFsSignature& sig);

nlohmann::json to_json(const AgsFsSignature& s);
AgsFsSignature ags_fs_signature_from_json(const nlohmann::json& j, size_t k);
nlohmann::json to_json(const AgsKeys& k, bool with_secret);
AgsKeys ags_keys_from_json(const nlohmann::json& j);

// ---- CFS hash-and-sign on a Niederreiter key

struct CfsSignature {
    uint64_t counter = 0;
    Vec e; // e P
    size_t attempts = 0;
};
inline constexpr size_t cfs_default_attempts = size_t(1) << 16;
Vec cfs_target(const Matrix& h_pub, const std::string& message, uint64_t counter);
// throws RetryLimit
CfsSignature cfs_sign(const NiederreiterKey& key, const std::string& message,
                      size_t max_attempts = cfs_default_attempts);
bool cfs_verify(const Matrix& h_pub, size_t t, const std::string& message, const CfsSignature& sig);

// ---- communication cost

enum class ZkScheme { cve, ags };
// min{n ceil(log2 q), t (ceil(log2 n) + ceil(log2 (q-1)))}
uint64_t psi(uint64_t n, uint64_t q, uint64_t t);
// bits for N compressed rounds; the average case can end in a half bit
double comm_cost(ZkScheme s, uint64_t n, uint64_t k, uint64_t q, uint64_t t, uint64_t rounds, uint64_t l_hash,
                 uint64_t l_seed, bool max_case);

}
