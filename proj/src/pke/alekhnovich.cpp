#include <codelab/error.hpp>
#include <codelab/pke.hpp>

namespace codelab {

AlekhnovichKey alekhnovich_keygen(size_t n, size_t k, size_t t, Rng& rng)
{
    if (t * t >= n) fail(Errc::infeasible_params, "need t^2 < n");
    if (k + 1 >= n) fail(Errc::infeasible_params, "need k + 1 < n");
    auto f = Field::make(2);
    Matrix a = Matrix::random(f, k, n, rng);
    Vec e = random_weight_vec(*f, n, t, rng);
    Vec y = vadd(*f, a.left_mul(random_vec(*f, k, rng)), e);
    Matrix h = a.vstack(Matrix(f, std::vector<Vec>{y}));
    return {kernel(h), t, e};
}

Vec alekhnovich_encrypt_bit(const Matrix& g, size_t t, int bit, Rng& rng)
{
    const Field& f = *g.field();
    if (bit) return random_vec(f, g.cols(), rng);
    return vadd(f, g.left_mul(random_vec(f, g.rows(), rng)), random_weight_vec(f, g.cols(), t, rng));
}

int alekhnovich_decrypt_bit(const Vec& e, const Vec& c)
{
    if (e.size() != c.size()) fail(Errc::dim_mismatch, "cipher has wrong length");
    unsigned b = 0;
    for (size_t i = 0; i < e.size(); ++i) b ^= e[i] & c[i];
    return (int)b;
}

std::vector<Vec> alekhnovich_encrypt_repeated(const Matrix& g, size_t t, int bit, size_t reps, Rng& rng)
{
    std::vector<Vec> out;
    for (size_t i = 0; i < reps; ++i) out.push_back(alekhnovich_encrypt_bit(g, t, bit, rng));
    return out;
}

int alekhnovich_decrypt_repeated(const Vec& e, const std::vector<Vec>& cs)
{
    size_t ones = 0;
    for (auto& c : cs) ones += alekhnovich_decrypt_bit(e, c);
    return ones > 0 && 8 * ones >= cs.size();
}

}
