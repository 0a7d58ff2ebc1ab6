#include <codelab/error.hpp>
#include <codelab/families.hpp>

#include <set>

namespace codelab {

void check_grs(const GrsParams& p)
{
    size_t n = p.alpha.size();
    if (p.beta.size() != n) fail(Errc::dim_mismatch, "alpha and beta differ in length");
    if (p.k == 0 || p.k > n || n > p.f->q()) fail(Errc::invalid_argument, "need 1 <= k <= n <= q");
    std::set<Elt> seen(p.alpha.begin(), p.alpha.end());
    if (seen.size() != n) fail(Errc::duplicate_points, "evaluation points must be distinct");
    for (auto b : p.beta)
        if (b == 0) fail(Errc::zero_multiplier, "column multipliers must be nonzero");
}

Matrix grs_generator(const GrsParams& p)
{
    check_grs(p);
    const Field& f = *p.f;
    size_t n = p.alpha.size();
    Matrix g(p.f, p.k, n);
    for (size_t j = 0; j < n; ++j) {
        Elt x = p.beta[j];
        for (size_t i = 0; i < p.k; ++i) {
            g.at(i, j) = x;
            x = f.mul(x, p.alpha[j]);
        }
    }
    return g;
}

LinearCode grs_code(const GrsParams& p) { return LinearCode::from_generator(grs_generator(p)); }

Vec grs_dual_multipliers(const GrsParams& p)
{
    check_grs(p);
    const Field& f = *p.f;
    size_t n = p.alpha.size();
    Vec gamma(n);
    for (size_t i = 0; i < n; ++i) {
        Elt prod = p.beta[i];
        for (size_t j = 0; j < n; ++j)
            if (j != i) prod = f.mul(prod, f.sub(p.alpha[i], p.alpha[j]));
        gamma[i] = f.inv(prod);
    }
    return gamma;
}

Vec grs_decode(const GrsParams& p, const Vec& y)
{
    check_grs(p);
    const Field& f = *p.f;
    size_t n = p.alpha.size(), k = p.k, e = (n - k) / 2;
    if (y.size() != n) fail(Errc::dim_mismatch, "received word has wrong length");

    // Q(a_i) = r_i E(a_i), E monic of degree e, deg Q < e + k
    Vec r(n);
    for (size_t i = 0; i < n; ++i) r[i] = f.div(y[i], p.beta[i]);
    size_t nq = e + k, unknowns = nq + e;
    Matrix a(p.f, unknowns, n);
    Vec b(n);
    for (size_t i = 0; i < n; ++i) {
        Elt x = 1;
        for (size_t j = 0; j < nq; ++j) {
            a.at(j, i) = x;
            if (j < e) a.at(nq + j, i) = f.neg(f.mul(r[i], x));
            if (j == e) b[i] = f.mul(r[i], x);
            x = f.mul(x, p.alpha[i]);
        }
    }
    auto sol = solve_linear(a, b);
    if (!sol) fail(Errc::decode_failure, "no error locator");
    Vec qc(sol->begin(), sol->begin() + nq), ec(sol->begin() + nq, sol->end());
    ec.push_back(1);
    auto [msg, rem] = Poly(p.f, qc).divmod(Poly(p.f, ec));
    if (!rem.is_zero() || msg.degree() >= (int)k) fail(Errc::decode_failure, "error locator does not divide");
    Vec c(n);
    for (size_t i = 0; i < n; ++i) c[i] = f.mul(p.beta[i], msg.eval(p.alpha[i]));
    if (distance(c, y) > e) fail(Errc::decode_failure, "beyond the decoding radius");
    return c;
}

}
