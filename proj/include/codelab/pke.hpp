#pragma once

#include <codelab/code.hpp>
#include <codelab/families.hpp>
#include <codelab/hash.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace codelab {

using BigInt = boost::multiprecision::cpp_int;

// ---- decodable secret codes

struct SecretCode {
    LinearCode code;
    size_t t = 0;
    // nearest codeword within distance t, throws DecodeFailure otherwise
    std::function<Vec(const Vec&)> decode;
    nlohmann::json desc;
};

// any code of minimum distance >= 3, one error of any value
SecretCode single_error_secret(const LinearCode& c);
SecretCode goppa_secret(const GoppaParams& p);
SecretCode grs_secret(const GrsParams& p);
SecretCode secret_from_json(const nlohmann::json& j);

// e of weight <= t with H e^T = s; h must be a parity check of the secret code
Vec syndrome_decode(const SecretCode& c, const Matrix& h, const Vec& s);

// ---- constant-weight encoding

BigInt binomial(size_t n, size_t k);
// binary weight-t vector of rank r in the colexicographic order of supports
Vec unrank_weight(size_t n, size_t t, const BigInt& rank);
BigInt rank_weight_vector(const Vec& v);
// rank taken from an expanded hash of the seed, reduced mod C(n, t)
Vec weight_vector_from_seed(size_t n, size_t t, const Bytes& seed);

// ---- the ring F[x]/(x^n - 1) on coefficient vectors

Vec ring_mul(const Field& f, const Vec& a, const Vec& b);
Vec ring_add(const Field& f, const Vec& a, const Vec& b);
Vec ring_sub(const Field& f, const Vec& a, const Vec& b);
// throws NoSolution when a is not a unit
Vec ring_inv(FieldPtr f, const Vec& a);
Vec ring_monomial(size_t n, size_t i);

// ---- McEliece

struct McElieceKey {
    Matrix g_pub;
    size_t t = 0;
    // secret part
    Matrix g, s;
    Permutation p;
    SecretCode secret;
};

McElieceKey mceliece_keygen(const SecretCode& c, Rng& rng);
// G' = S G P with the given pieces
McElieceKey mceliece_assemble(const SecretCode& c, const Matrix& g, const Matrix& s, const Permutation& p);
Vec mceliece_encrypt(const Matrix& g_pub, size_t t, const Vec& m, const Vec& e);
Vec mceliece_encrypt(const Matrix& g_pub, size_t t, const Vec& m, Rng& rng);
Vec mceliece_decrypt(const McElieceKey& k, const Vec& c);

// ---- Niederreiter

struct NiederreiterKey {
    Matrix h_pub;
    size_t t = 0;
    Matrix h, s;
    Permutation p;
    SecretCode secret;
};

NiederreiterKey niederreiter_keygen(const SecretCode& c, Rng& rng);
NiederreiterKey niederreiter_assemble(const SecretCode& c, const Matrix& h, const Matrix& s, const Permutation& p);
Vec niederreiter_encrypt(const Matrix& h_pub, size_t t, const Vec& m);
Vec niederreiter_decrypt(const NiederreiterKey& k, const Vec& c);

// ---- Alekhnovich, first variant (binary)

struct AlekhnovichKey {
    Matrix g; // generator of the kernel of (A ; xA + e)
    size_t t = 0;
    Vec e;
};

AlekhnovichKey alekhnovich_keygen(size_t n, size_t k, size_t t, Rng& rng);
Vec alekhnovich_encrypt_bit(const Matrix& g, size_t t, int bit, Rng& rng);
int alekhnovich_decrypt_bit(const Vec& e, const Vec& c);
// a bit sent reps times decrypts to 1 once at least reps/8 (and at least one) inner products are 1
std::vector<Vec> alekhnovich_encrypt_repeated(const Matrix& g, size_t t, int bit, size_t reps, Rng& rng);
int alekhnovich_decrypt_repeated(const Vec& e, const std::vector<Vec>& cs);

// ---- quasi-cyclic framework

struct QcCode {
    std::string name;
    Matrix g;
    size_t t = 0;
    std::function<Vec(const Vec&)> decode; // to a codeword
    nlohmann::json desc;
};

QcCode qc_repetition_code(size_t n);
// MDPC code given by its parity check, decoded by bit flipping
QcCode qc_mdpc_code(const Matrix& h, size_t t);
QcCode qc_code_from_json(const nlohmann::json& j);

struct QcParams {
    size_t n = 0, w = 0, w_e = 0, w_r = 0;
};

struct QcKey {
    QcParams params;
    QcCode code;
    Vec h, s; // s = y + h z
    Vec y, z;
};

struct QcCipher {
    Vec u, v;
};

QcKey qc_keygen(const QcCode& code, const QcParams& p, Rng& rng);
QcKey qc_assemble(const QcCode& code, const QcParams& p, const Vec& h, const Vec& y, const Vec& z);
QcCipher qc_encrypt(const QcKey& k, const Vec& m, const Vec& e, const Vec& r1, const Vec& r2);
QcCipher qc_encrypt(const QcKey& k, const Vec& m, Rng& rng);
Vec qc_decrypt(const QcKey& k, const QcCipher& c);
// y r2 - r1 z + e; decryption works when the decoder handles this error
Vec qc_noise(const QcKey& k, const Vec& e, const Vec& r1, const Vec& r2);

// ---- GPT (rank metric)

struct GptKey {
    Matrix g_pub;
    size_t t = 0;
    GabidulinParams gab;
    Matrix s, x, p; // p has entries in the prime subfield
};

GptKey gpt_keygen(FieldPtr f, size_t n, size_t k, size_t lambda, Rng& rng);
GptKey gpt_assemble(const GabidulinParams& gab, const Matrix& s, const Matrix& x, const Matrix& p, size_t t);
Vec gpt_encrypt(const Matrix& g_pub, size_t t, const Vec& m, const Vec& e);
Vec gpt_encrypt(const GptKey& k, const Vec& m, Rng& rng);
Vec gpt_decrypt(const GptKey& k, const Vec& c);
// random vector of rank weight <= t over the prime subfield
Vec random_rank_vec(const Field& f, size_t n, size_t t, Rng& rng);

// ---- BIKE (toy sizes)

bool check_bike_r(uint64_t r);

struct BikeParams {
    size_t r = 0, w = 0, t = 0;
};

struct BikeKey {
    BikeParams params;
    Vec h;      // h1 / h0
    Vec h0, h1; // secret
};

BikeKey bike_keygen(const BikeParams& p, Rng& rng);
// H = (circ(h0)^T | circ(h1)^T), so H (e0 | e1)^T = e0 h0 + e1 h1
Matrix bike_parity_check(const Vec& h0, const Vec& h1);
// s = e0 + e1 h
Vec bike_encrypt(const Vec& h, const Vec& e0, const Vec& e1);
Vec bike_encrypt(const BikeKey& k, const Bytes& seed);
// the error (e0 | e1) as one vector of length 2r
Vec bike_decrypt(const BikeKey& k, const Vec& s, size_t max_iters = 20);
Vec bike_error_from_seed(const BikeParams& p, const Bytes& seed);

// ---- Classic McEliece toy

struct CmceParams {
    unsigned m = 0;
    size_t n = 0, t = 0;
};

struct CmceKey {
    CmceParams params;
    Matrix t_pub; // H = (Id | T)
    GoppaParams goppa;
};

// resamples (g, support) until the expanded parity check reduces to (Id | T)
CmceKey cmce_keygen(const CmceParams& p, Rng& rng, size_t max_tries = 200);
Matrix cmce_parity_check(const Matrix& t_pub);
Vec cmce_encode(const Matrix& t_pub, const Vec& e);
Vec cmce_decode(const CmceKey& k, const Vec& c0);

struct Encapsulation {
    Vec c0;
    Bytes key;
};
Encapsulation cmce_encaps(const Matrix& t_pub, size_t t, Rng& rng);
Bytes cmce_decaps(const CmceKey& k, const Vec& c0);

// ---- key files: {scheme, params, public, secret?}

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json vec_to_json(const Field& f, const Vec& v);
Vec vec_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json key_to_json(const McElieceKey& k, bool with_secret);
nlohmann::json key_to_json(const NiederreiterKey& k, bool with_secret);
nlohmann::json key_to_json(const AlekhnovichKey& k, bool with_secret);
nlohmann::json key_to_json(const QcKey& k, bool with_secret);
nlohmann::json key_to_json(const GptKey& k, bool with_secret);
nlohmann::json key_to_json(const BikeKey& k, bool with_secret);
nlohmann::json key_to_json(const CmceKey& k, bool with_secret);

McElieceKey mceliece_key_from_json(const nlohmann::json& j);
NiederreiterKey niederreiter_key_from_json(const nlohmann::json& j);
AlekhnovichKey alekhnovich_key_from_json(const nlohmann::json& j);
QcKey qc_key_from_json(const nlohmann::json& j);
GptKey gpt_key_from_json(const nlohmann::json& j);
BikeKey bike_key_from_json(const nlohmann::json& j);
CmceKey cmce_key_from_json(const nlohmann::json& j);

}
