#pragma once

#include <codelab/matrix.hpp>

#include <json.hpp>

#include <string>

namespace codelab {

enum class Verdict { structured, random, inconclusive };
std::string to_string(Verdict v);

struct DistinguisherVerdict {
    size_t measured = 0;
    size_t random_expected = 0;
    size_t structured_expected = 0;
    Verdict verdict = Verdict::inconclusive;
};
nlohmann::json to_json(const DistinguisherVerdict& v);

// dimension of the square code against min{2k-1, n} (GRS) and min{k(k+1)/2, n} (random)
DistinguisherVerdict square_distinguisher(const Matrix& g);

// rows of M, then M with every entry raised to p, p^2, ..., p^ell
Matrix frobenius_stack(const Matrix& m, size_t ell);
// rank of the stack against k + ell (Gabidulin) and min{(ell+1)k, n} (random)
DistinguisherVerdict frobenius_distinguisher(const Matrix& m, size_t ell);

}
