#include <codelab/error.hpp>
#include <codelab/families.hpp>

#include <set>

namespace codelab {

static Poly powmod(Poly base, uint64_t e, const Poly& mod)
{
    Poly r = Poly::constant(mod.field(), 1) % mod;
    base = base % mod;
    while (e) {
        if (e & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const Poly& g)
{
    int d = g.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    auto f = g.field();
    Poly x = Poly::monomial(f, 1);
    Poly h = x;
    for (int i = 1; i <= d / 2; ++i) {
        h = powmod(h, f->q(), g);
        if (gcd(h - x, g).degree() > 0) return false;
    }
    return true;
}

bool is_squarefree(const Poly& g)
{
    if (g.degree() < 1) return true;
    Poly d = g.derivative();
    if (d.is_zero()) return false;
    return gcd(g, d).degree() == 0;
}

void check_goppa(const GoppaParams& p)
{
    if (p.base->m() != 1 || p.base->p() != p.ext->p()) fail(Errc::field_mismatch, "base must be the prime subfield");
    if (p.g.field() && *p.g.field() != *p.ext) fail(Errc::field_mismatch, "Goppa polynomial over the wrong field");
    if (p.g.degree() < 1) fail(Errc::invalid_argument, "Goppa polynomial must have positive degree");
    std::set<Elt> seen(p.support.begin(), p.support.end());
    if (seen.size() != p.support.size()) fail(Errc::duplicate_points, "support must be distinct");
    for (auto a : p.support)
        if (p.g.eval(a) == 0) fail(Errc::root_in_support, "g vanishes on the support");
}

GoppaMatrices goppa_parity_check(const GoppaParams& p)
{
    check_goppa(p);
    const Field& f = *p.ext;
    size_t n = p.support.size(), r = p.g.degree(), m = f.m();
    Matrix ext(p.ext, r, n), sub(p.base, r * m, n);
    for (size_t j = 0; j < n; ++j) {
        Elt x = f.inv(p.g.eval(p.support[j]));
        for (size_t i = 0; i < r; ++i) {
            ext.at(i, j) = x;
            auto cs = f.coeffs(x);
            for (size_t l = 0; l < m; ++l) sub.at(i * m + l, j) = cs[l];
            x = f.mul(x, p.support[j]);
        }
    }
    return {ext, sub};
}

LinearCode goppa_code(const GoppaParams& p) { return LinearCode::from_parity_check(goppa_parity_check(p).sub); }

static bool doubled(const GoppaParams& p) { return p.ext->p() == 2 && is_squarefree(p.g); }

size_t goppa_radius(const GoppaParams& p)
{
    size_t d = p.g.degree();
    return doubled(p) ? d : d / 2;
}

Vec goppa_decode(const GoppaParams& p, const Vec& y)
{
    check_goppa(p);
    if (y.size() != p.support.size()) fail(Errc::dim_mismatch, "received word has wrong length");
    for (auto v : y)
        if (v >= p.base->q()) fail(Errc::invalid_argument, "received word must lie in the base field");
    // binary square-free g: the code is also the Goppa code of g^2
    Poly g = doubled(p) ? p.g * p.g : p.g;
    size_t n = p.support.size(), r = g.degree();
    if (r >= n) fail(Errc::decode_failure, "supercode is trivial");
    const Field& f = *p.ext;
    // the Goppa code sits inside GRS_{n-r}(alpha, gamma), gamma_i = g(a_i) / prod (a_i - a_j)
    GrsParams sup{p.ext, p.support, Vec(n), n - r};
    for (size_t i = 0; i < n; ++i) {
        Elt prod = 1;
        for (size_t j = 0; j < n; ++j)
            if (j != i) prod = f.mul(prod, f.sub(p.support[i], p.support[j]));
        sup.beta[i] = f.div(g.eval(p.support[i]), prod);
    }
    Vec c = grs_decode(sup, y);
    for (auto v : c)
        if (v >= p.base->q()) fail(Errc::decode_failure, "decoded word leaves the base field");
    return c;
}

GoppaParams random_goppa(uint32_t p, unsigned m, size_t n, size_t t, Rng& rng)
{
    GoppaParams gp;
    gp.base = Field::make(p);
    gp.ext = Field::make(p, m);
    uint32_t q = gp.ext->q();
    if (n > q) fail(Errc::invalid_argument, "support larger than the field");
    for (auto i : rng.subset(q, n)) gp.support.push_back((Elt)i);
    for (;;) {
        Vec c(t + 1);
        for (size_t i = 0; i < t; ++i) c[i] = (Elt)rng.below(q);
        c[t] = 1;
        Poly g(gp.ext, c);
        if (!is_irreducible(g)) continue;
        bool ok = true;
        for (auto a : gp.support) ok = ok && g.eval(a) != 0;
        if (!ok) continue;
        gp.g = g;
        return gp;
    }
}

}
