#include <codelab/error.hpp>
#include <codelab/families.hpp>

#include <algorithm>

namespace codelab {

Matrix hamming74_generator()
{
    return Matrix::from_bits(Field::make(2), {"1000110", "0100101", "0010011", "0001111"});
}

Vec single_error_decode(const Matrix& h, const Vec& y)
{
    const Field& f = *h.field();
    Vec s = h.right_mul(y);
    if (weight(s) == 0) return y;
    for (size_t j = 0; j < h.cols(); ++j) {
        Vec col = h.col(j);
        for (Elt a = 1; a < f.q(); ++a)
            if (vscale(f, a, col) == s) {
                Vec c = y;
                c[j] = f.sub(c[j], a);
                return c;
            }
    }
    fail(Errc::decode_failure, "syndrome matches no scaled column");
}

LinearCode repetition_code(FieldPtr f, size_t n) { return LinearCode::from_generator(Matrix(f, {Vec(n, 1)})); }

Vec repetition_decode(const Vec& y)
{
    size_t ones = weight(y);
    return Vec(y.size(), 2 * ones > y.size() ? 1 : 0);
}

LinearCode cyclic_from_genpoly(const Poly& g, size_t n)
{
    auto f = g.field();
    if (g.is_zero() || !(Poly::xn_minus_one(f, n) % g).is_zero()) fail(Errc::not_a_divisor, "g does not divide x^n - 1");
    size_t r = g.degree();
    if (r >= n) fail(Errc::empty_code, "generator polynomial of degree n");
    Matrix gen(f, n - r, n);
    for (size_t i = 0; i < n - r; ++i)
        for (size_t j = 0; j <= r; ++j) gen.at(i, i + j) = g.coeff(j);
    return LinearCode::from_generator(gen);
}

Vec cyclic_shift(const Vec& c)
{
    Vec r(c.size());
    if (c.empty()) return r;
    std::rotate_copy(c.begin(), c.end() - 1, c.end(), r.begin());
    return r;
}

Matrix reed_muller_generator(unsigned m, unsigned r)
{
    if (r > m || m > 10) fail(Errc::invalid_argument, "need r <= m <= 10");
    auto f = Field::make(2);
    size_t n = size_t(1) << m;
    std::vector<Vec> rows;
    for (unsigned d = 0; d <= r; ++d) {
        // combinations of d variables in lexicographic order
        std::vector<unsigned> idx(d);
        for (unsigned i = 0; i < d; ++i) idx[i] = i;
        for (;;) {
            uint32_t mask = 0;
            for (auto i : idx) mask |= 1u << i;
            Vec row(n);
            for (size_t j = 0; j < n; ++j) row[j] = (j & mask) == mask;
            rows.push_back(row);
            int i = (int)d - 1;
            while (i >= 0 && idx[i] == m - d + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (unsigned l = i + 1; l < d; ++l) idx[l] = idx[l - 1] + 1;
        }
    }
    return Matrix(f, rows);
}

}
