#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace codelab {

// Elements are coefficient vectors over GF(p) packed base p: sum c_i p^i.
using Elt = uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    // GF(p^m) with the smallest irreducible monic modulus (ordered by packed lower coefficients)
    static FieldPtr make(uint32_t p, unsigned m = 1);
    // modulus given low-to-high, monic, degree m
    static FieldPtr make(uint32_t p, const std::vector<uint32_t>& modulus);
    // q must be a prime power
    static FieldPtr gf(uint32_t q);

    uint32_t p() const { return p_; }
    unsigned m() const { return m_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }

    bool operator==(const Field& o) const { return p_ == o.p_ && m_ == o.m_ && mod_ == o.mod_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, uint64_t e) const;
    // a^(p^i)
    Elt frob(Elt a, unsigned i = 1) const;

    // integer reduced into the prime subfield
    Elt from_int(int64_t v) const;
    // class of x in GF(p)[x]/(modulus); for m = 1 this is 0
    Elt x() const { return m_ > 1 ? p_ : 0; }
    // a generator of the multiplicative group
    Elt primitive() const { return prim_; }

    std::vector<uint32_t> coeffs(Elt a) const;
    Elt from_coeffs(const std::vector<uint32_t>& c) const;

    bool valid(Elt a) const { return a < q_; }
    std::string to_string(Elt a) const;
    Elt parse(const std::string& s) const;

    static bool is_prime(uint64_t n);
    // monic, low-to-high coefficients over GF(p)
    static bool is_irreducible(uint32_t p, const std::vector<uint32_t>& f);

private:
    Field(uint32_t p, std::vector<uint32_t> modulus);
    Elt mul_slow(Elt a, Elt b) const;
    Elt inv_slow(Elt a) const;

    uint32_t p_;
    unsigned m_;
    uint32_t q_;
    std::vector<uint32_t> mod_;
    uint32_t mod_bits_ = 0; // binary modulus as a bit mask
    std::vector<Elt> mul_tab_;
    std::vector<Elt> inv_tab_;
    Elt prim_ = 1;
};

void check_same(const Field& a, const Field& b);

}
