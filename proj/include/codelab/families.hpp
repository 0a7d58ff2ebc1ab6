#pragma once

#include <codelab/code.hpp>
#include <codelab/poly.hpp>

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace codelab {

// ---- generalized Reed-Solomon

struct GrsParams {
    FieldPtr f;
    Vec alpha; // distinct evaluation points
    Vec beta;  // nonzero column multipliers
    size_t k;
};

void check_grs(const GrsParams& p);
// rows (beta_j alpha_j^i)_j, i = 0..k-1
Matrix grs_generator(const GrsParams& p);
LinearCode grs_code(const GrsParams& p);
// multipliers of the dual GRS code of dimension n-k
Vec grs_dual_multipliers(const GrsParams& p);
// rational interpolation up to floor((n-k)/2) errors
Vec grs_decode(const GrsParams& p, const Vec& y);

// ---- classical Goppa

struct GoppaParams {
    FieldPtr base; // GF(p), prime
    FieldPtr ext;  // GF(p^m)
    Poly g;        // over ext, no roots in the support
    Vec support;   // distinct elements of ext
};

struct GoppaMatrices {
    Matrix ext; // deg g rows over GF(p^m)
    Matrix sub; // m * deg g rows over GF(p), by coefficient expansion
};

void check_goppa(const GoppaParams& p);
GoppaMatrices goppa_parity_check(const GoppaParams& p);
LinearCode goppa_code(const GoppaParams& p);
// deg g, or deg g / 2 unless binary with square-free g
size_t goppa_radius(const GoppaParams& p);
Vec goppa_decode(const GoppaParams& p, const Vec& y);
// random support and random monic irreducible g of degree t
GoppaParams random_goppa(uint32_t p, unsigned m, size_t n, size_t t, Rng& rng);
bool is_irreducible(const Poly& g);
bool is_squarefree(const Poly& g);

// ---- small classical codes

// the binary [7,4] Hamming generator used throughout the toys
Matrix hamming74_generator();
// corrects one error of any nonzero value by matching the syndrome to a scaled column
Vec single_error_decode(const Matrix& h, const Vec& y);
LinearCode repetition_code(FieldPtr f, size_t n);
// binary majority vote
Vec repetition_decode(const Vec& y);
// shift-circulant generator of the ideal <g> in F[x]/(x^n - 1)
LinearCode cyclic_from_genpoly(const Poly& g, size_t n);
// cyclic shift (c_n, c_1, ..., c_{n-1})
Vec cyclic_shift(const Vec& c);

// ---- MDPC and bit flipping

// r x r matrix whose row i holds x^i * a(x) mod x^r - 1
Matrix circulant(FieldPtr f, const Vec& first_row);

struct MdpcParams {
    size_t blocks, r, w; // row weight w split evenly over the blocks
};
Matrix mdpc_parity_check(const MdpcParams& p, Rng& rng);

struct BitflipResult {
    Vec codeword;
    size_t iterations;
};
// threshold 0: per column, floor(deg/2) + 1 unsatisfied checks;
// flip_max_upc: only the columns with the largest count
inline constexpr size_t flip_max_upc = SIZE_MAX;
BitflipResult bitflip_decode(const Matrix& h, const Vec& y, size_t threshold = 0, size_t max_iters = 20);
// same rule started from a syndrome; the result holds the error e with H e^T = s
BitflipResult bitflip_syndrome(const Matrix& h, const Vec& syndrome, size_t threshold = 0, size_t max_iters = 20);

struct DfrEstimate {
    size_t failures, trials;
    double rate() const { return trials ? double(failures) / trials : 0.0; }
};
// random weight-t errors against a fixed H; trials split over workers by seed stream
DfrEstimate estimate_dfr(const Matrix& h, size_t t, size_t trials, uint64_t seed, size_t max_iters = 20,
                         size_t threshold = 0, unsigned workers = 0);

// ---- Reed-Muller

// monomials in graded lexicographic order; point j has x_i = bit i-1 of j
Matrix reed_muller_generator(unsigned m, unsigned r);

// ---- rank metric over GF(p^m) relative to GF(p)

// n x m coefficient matrix over GF(p)
Matrix expand(const Field& f, const Vec& x);
size_t rank_weight(const Field& f, const Vec& x);
Vec rank_support(const Field& f, const Vec& x);

// entry (i, j) = g_j^(p^(s i))
Matrix moore_matrix(FieldPtr f, unsigned s, size_t k, const Vec& g);

struct GabidulinParams {
    FieldPtr f;
    Vec g;
    size_t k;
    unsigned s = 1;
};
void check_gabidulin(const GabidulinParams& p);
LinearCode gabidulin_code(const GabidulinParams& p);
// enumerates error supports of dimension <= t
Vec bruteforce_rank_decode(const LinearCode& c, const Vec& y, size_t t, uint64_t budget = default_enum_budget);

// ---- JSON

nlohmann::json field_to_json(const Field& f);
FieldPtr field_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GrsParams& p);
nlohmann::json to_json(const GoppaParams& p);
nlohmann::json to_json(const MdpcParams& p);
nlohmann::json to_json(const GabidulinParams& p);
GrsParams grs_from_json(const nlohmann::json& j);
GoppaParams goppa_from_json(const nlohmann::json& j);
MdpcParams mdpc_from_json(const nlohmann::json& j);
GabidulinParams gabidulin_from_json(const nlohmann::json& j);

}
