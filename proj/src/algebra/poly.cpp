#include <codelab/poly.hpp>
#include <codelab/error.hpp>

namespace codelab {

Poly::Poly(FieldPtr f, Vec coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(FieldPtr f, size_t deg, Elt c)
{
    Vec v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(f), v);
}

Poly Poly::xn_minus_one(FieldPtr f, size_t n)
{
    Vec v(n + 1, 0);
    v[n] = 1;
    v[0] = f->neg(1);
    return Poly(std::move(f), v);
}

Poly Poly::operator+(const Poly& o) const
{
    check_same(*f_, *o.f_);
    Vec r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(f_, r);
}

Poly Poly::operator-(const Poly& o) const
{
    check_same(*f_, *o.f_);
    Vec r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(f_, r);
}

Poly Poly::operator*(const Poly& o) const
{
    check_same(*f_, *o.f_);
    if (is_zero() || o.is_zero()) return Poly(f_, {});
    Vec r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j]) r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(f_, r);
}

Poly Poly::scale(Elt s) const
{
    Vec r(c_);
    for (auto& x : r) x = f_->mul(s, x);
    return Poly(f_, r);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const
{
    check_same(*f_, *d.f_);
    if (d.is_zero()) fail(Errc::inverse_of_zero, "polynomial division by zero");
    if (degree() < d.degree()) return {Poly(f_, {}), *this};
    Vec rem(c_);
    Vec quo(c_.size() - d.c_.size() + 1, 0);
    Elt il = f_->inv(d.lead());
    for (int i = (int)rem.size() - 1; i >= d.degree(); --i) {
        Elt c = rem[i];
        if (!c) continue;
        Elt factor = f_->mul(c, il);
        size_t shift = i - d.degree();
        quo[shift] = factor;
        for (size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] = f_->sub(rem[shift + j], f_->mul(factor, d.c_[j]));
    }
    return {Poly(f_, quo), Poly(f_, rem)};
}

Elt Poly::eval(Elt x) const
{
    Elt r = 0;
    for (int i = degree(); i >= 0; --i) r = f_->add(f_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::monic() const
{
    if (is_zero()) return *this;
    return scale(f_->inv(lead()));
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) return Poly(f_, {});
    Vec r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_->mul(f_->from_int((int64_t)i), c_[i]);
    return Poly(f_, r);
}

Vec Poly::to_vec(size_t n) const
{
    Vec v(n, 0);
    for (size_t i = 0; i < n && i < c_.size(); ++i) v[i] = c_[i];
    return v;
}

std::string Poly::to_string() const
{
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!c_[i]) continue;
        if (!s.empty()) s += " + ";
        std::string c = f_->to_string(c_[i]);
        bool paren = c.find('+') != std::string::npos;
        if (i == 0) {
            s += paren ? "(" + c + ")" : c;
            continue;
        }
        if (c_[i] != 1) s += (paren ? "(" + c + ")" : c) + "*";
        s += "y";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

Poly gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}
