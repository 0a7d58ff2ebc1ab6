#pragma once

#include <codelab/field.hpp>
#include <codelab/matrix.hpp>

#include <string>
#include <utility>
#include <vector>

namespace codelab {

// univariate polynomial, coefficients low-to-high, no trailing zeros
class Poly {
public:
    Poly() = default;
    Poly(FieldPtr f, Vec coeffs);
    static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
    static Poly constant(FieldPtr f, Elt c) { return Poly(std::move(f), {c}); }
    static Poly monomial(FieldPtr f, size_t deg, Elt c = 1);
    // x^n - 1
    static Poly xn_minus_one(FieldPtr f, size_t n);

    const FieldPtr& field() const { return f_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const Vec& coeffs() const { return c_; }
    Elt coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elt lead() const { return c_.empty() ? 0 : c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scale(Elt s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly operator/(const Poly& d) const { return divmod(d).first; }

    Elt eval(Elt x) const;
    Poly monic() const;
    Poly derivative() const;
    // coefficient vector padded/truncated to length n
    Vec to_vec(size_t n) const;
    std::string to_string() const;

private:
    void trim();
    FieldPtr f_;
    Vec c_;
};

Poly gcd(Poly a, Poly b);

}
