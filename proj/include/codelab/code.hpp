#pragma once

#include <codelab/matrix.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace codelab {

inline constexpr uint64_t default_enum_budget = uint64_t(1) << 24;

struct WeightedVector {
    Vec v;
    size_t wt;
    explicit WeightedVector(Vec x) : v(std::move(x)), wt(weight(v)) {}
};

// Linear code held by one presentation; the other one is derived on first use.
class LinearCode {
public:
    enum class Presented : char { generator = 'G', parity_check = 'H' };

    LinearCode() = default;
    // rank-deficient input is reduced to its row space; the zero code is refused
    static LinearCode from_generator(const Matrix& g);
    static LinearCode from_parity_check(const Matrix& h);

    const FieldPtr& field() const;
    size_t n() const { return n_; }
    size_t k() const { return k_; }
    Presented presented() const { return tag_; }

    const Matrix& generator() const;
    const Matrix& parity_check() const;

    Vec encode(const Vec& m) const;
    Vec syndrome(const Vec& x) const;
    bool contains(const Vec& x) const;

private:
    struct State;
    std::shared_ptr<State> st_;
    size_t n_ = 0, k_ = 0;
    Presented tag_ = Presented::generator;
};

LinearCode dual(const LinearCode& c);
// 0-based positions; dimension may drop
LinearCode puncture(const LinearCode& c, const std::vector<size_t>& t);
// codewords vanishing on t, restricted to the other positions
LinearCode shorten(const LinearCode& c, const std::vector<size_t>& t);
// same code (equal row spaces)
bool same_code(const LinearCode& a, const LinearCode& b);

size_t min_distance_bruteforce(const LinearCode& c, uint64_t budget = default_enum_budget);

struct Nearest {
    Vec codeword;
    size_t distance;
};
// ties go to the lexicographically smallest message
Nearest nearest_codeword_bruteforce(const LinearCode& c, const Vec& x, uint64_t budget = default_enum_budget);

// visit every message with its codeword, messages in lexicographic order
void for_each_codeword(const LinearCode& c, uint64_t budget, const std::function<void(const Vec& msg, const Vec& cw)>& fn);

LinearCode schur_product(const LinearCode& a, const LinearCode& b);
LinearCode square_code(const LinearCode& c);

// outer over GF(p^k1), inner [n1,k1] over GF(p); basis: k1 elements of the outer field
// (empty = polynomial basis 1, x, x^2, ...)
Vec concat_encode(const LinearCode& outer, const LinearCode& inner, const Vec& basis, const Vec& m);

std::string write_code(const LinearCode& c);
LinearCode read_code(const std::string& text);

}
