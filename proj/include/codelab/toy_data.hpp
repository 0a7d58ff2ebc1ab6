#pragma once

// Fixed small instances used by the demos, the tests and the acceptance run.

#include <codelab/matrix.hpp>
#include <codelab/poly.hpp>

#include <string>
#include <vector>

namespace codelab::toy {

// binary [7,4] Hamming toy for McEliece
struct HammingMcEliece {
    Matrix g, s, p, g_pub;
    Vec m, e, cipher;
    Vec c_perm;        // c * P^-1
    Vec ms;            // m * S
    Matrix s_inv;
    Matrix g_rref;     // public generator in reduced row echelon form
    Matrix h_rref;     // parity check of the reduced generator
    Vec syndrome;      // cipher against h_rref
    Vec m_bar;         // message w.r.t. g_rref
};
HammingMcEliece hamming_mceliece();

struct NiederreiterToy {
    Matrix h, s, p, h_pub;
    Vec m, cipher, s_inv_c, m_perm;
};
NiederreiterToy niederreiter();

struct AlekhnovichToy {
    Matrix a, h, g;
    Vec x, e, y, c0, c1;
};
AlekhnovichToy alekhnovich();

struct QcToy {
    size_t n;
    Vec h, y, z, s, e, r1, r2, m;
    Vec u, v, s_r2, uz, v_minus_uz;
};
QcToy qc();

struct GptToy {
    FieldPtr f;
    Matrix g, s, p, x_col, g_pub;
    Vec m, e, cipher, c_pinv, ms;
};
GptToy gpt();

struct PrangeF5 {
    Matrix h;
    Vec s;
    size_t t;
    std::vector<size_t> i1, i2, i_final; // 0-based
    Matrix u2h;
    Vec s2;
    Matrix uh_final;
    Vec s_final, e;
};
PrangeF5 prange_f5();

struct TdmToy {
    std::vector<std::string> ground;
    std::vector<std::vector<std::string>> triples;
    Matrix ht; // u x 3t incidence
    Vec e;
    std::vector<size_t> matching; // 0-based triple indices
};
TdmToy tdm();

struct PunctureToy {
    Matrix g;
    std::vector<size_t> t;
    Matrix punctured, shortened;
};
PunctureToy puncture_shorten();

}
