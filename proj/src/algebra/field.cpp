#include <codelab/field.hpp>
#include <codelab/error.hpp>

#include <cctype>
#include <map>
#include <mutex>

namespace codelab {

namespace {

// remainder of a mod f over GF(p), f monic; vectors low-to-high
std::vector<uint32_t> prem(std::vector<uint32_t> a, const std::vector<uint32_t>& f, uint32_t p)
{
    size_t df = f.size() - 1;
    while (a.size() > df) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (size_t i = 0; i <= df; ++i) {
                uint64_t sub = (uint64_t)lead * f[i] % p;
                a[shift + i] = (uint32_t)((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool all_zero(const std::vector<uint32_t>& a)
{
    for (auto c : a)
        if (c) return false;
    return true;
}

}

bool Field::is_prime(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool Field::is_irreducible(uint32_t p, const std::vector<uint32_t>& f)
{
    size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    // trial division by every monic polynomial of degree 1..m/2
    for (size_t d = 1; d <= m / 2; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            std::vector<uint32_t> g(d + 1);
            uint64_t c = code;
            for (size_t i = 0; i < d; ++i) {
                g[i] = (uint32_t)(c % p);
                c /= p;
            }
            g[d] = 1;
            if (all_zero(prem(f, g, p))) return false;
        }
    }
    return true;
}

Field::Field(uint32_t p, std::vector<uint32_t> modulus) : p_(p), mod_(std::move(modulus))
{
    m_ = (unsigned)(mod_.size() - 1);
    uint64_t q = 1;
    for (unsigned i = 0; i < m_; ++i) q *= p_;
    if (q > (1ULL << 30)) fail(Errc::too_large, "field too large");
    q_ = (uint32_t)q;
    if (p_ == 2)
        for (unsigned i = 0; i <= m_; ++i)
            if (mod_[i]) mod_bits_ |= 1u << i;

    if (q_ <= 256) {
        mul_tab_.resize((size_t)q_ * q_);
        for (Elt a = 0; a < q_; ++a)
            for (Elt b = 0; b < q_; ++b) mul_tab_[(size_t)a * q_ + b] = mul_slow(a, b);
    }
    if (q_ <= 65536) {
        inv_tab_.assign(q_, 0);
        for (Elt a = 1; a < q_; ++a)
            if (inv_tab_[a] == 0) {
                Elt b = inv_slow(a);
                inv_tab_[a] = b;
                inv_tab_[b] = a;
            }
    }
    // smallest primitive element
    uint64_t order = q_ - 1;
    std::vector<uint64_t> primes;
    uint64_t r = order;
    for (uint64_t d = 2; d * d <= r; ++d)
        if (r % d == 0) {
            primes.push_back(d);
            while (r % d == 0) r /= d;
        }
    if (r > 1) primes.push_back(r);
    for (Elt g = 1; g < q_; ++g) {
        bool ok = true;
        for (auto pr : primes)
            if (pow(g, order / pr) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            prim_ = g;
            break;
        }
    }
}

FieldPtr Field::make(uint32_t p, const std::vector<uint32_t>& modulus)
{
    if (!is_prime(p)) fail(Errc::invalid_argument, "characteristic must be prime");
    if (modulus.size() < 2 || modulus.back() != 1) fail(Errc::invalid_argument, "modulus must be monic of degree >= 1");
    for (auto c : modulus)
        if (c >= p) fail(Errc::invalid_argument, "modulus coefficient out of range");
    if (!is_irreducible(p, modulus)) fail(Errc::invalid_argument, "modulus is reducible");

    static std::mutex mu;
    static std::map<std::pair<uint32_t, std::vector<uint32_t>>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, modulus);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FieldPtr f(new Field(p, modulus));
    cache[key] = f;
    return f;
}

FieldPtr Field::make(uint32_t p, unsigned m)
{
    if (!is_prime(p)) fail(Errc::invalid_argument, "characteristic must be prime");
    if (m == 0) fail(Errc::invalid_argument, "extension degree must be >= 1");
    if (m == 1) return make(p, std::vector<uint32_t>{0, 1});
    uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
        std::vector<uint32_t> f(m + 1);
        uint64_t c = code;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = (uint32_t)(c % p);
            c /= p;
        }
        f[m] = 1;
        if (f[0] != 0 && is_irreducible(p, f)) return make(p, f);
    }
    fail(Errc::invalid_argument, "no irreducible modulus found");
}

FieldPtr Field::gf(uint32_t q)
{
    for (uint32_t p = 2; p <= q; ++p) {
        if (q % p) continue;
        unsigned m = 0;
        uint32_t r = q;
        while (r % p == 0) {
            r /= p;
            ++m;
        }
        if (r != 1 || !is_prime(p)) fail(Errc::invalid_argument, "q is not a prime power");
        return make(p, m);
    }
    fail(Errc::invalid_argument, "q is not a prime power");
}

Elt Field::add(Elt a, Elt b) const
{
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    Elt r = 0, w = 1;
    while (a || b) {
        r += w * (((a % p_) + (b % p_)) % p_);
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

Elt Field::neg(Elt a) const
{
    if (p_ == 2) return a;
    if (m_ == 1) return a ? p_ - a : 0;
    Elt r = 0, w = 1;
    while (a) {
        Elt d = a % p_;
        r += w * (d ? p_ - d : 0);
        a /= p_;
        w *= p_;
    }
    return r;
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::mul(Elt a, Elt b) const
{
    if (!mul_tab_.empty()) return mul_tab_[(size_t)a * q_ + b];
    return mul_slow(a, b);
}

Elt Field::mul_slow(Elt a, Elt b) const
{
    if (m_ == 1) return (Elt)((uint64_t)a * b % p_);
    if (p_ == 2) {
        uint64_t r = 0;
        for (unsigned i = 0; i < m_; ++i)
            if ((b >> i) & 1) r ^= (uint64_t)a << i;
        for (int i = 2 * (int)m_ - 2; i >= (int)m_; --i)
            if ((r >> i) & 1) r ^= (uint64_t)mod_bits_ << (i - m_);
        return (Elt)r;
    }
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<uint32_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = (uint32_t)((prod[i + j] + (uint64_t)ca[i] * cb[j]) % p_);
    auto r = prem(prod, mod_, p_);
    r.resize(m_, 0);
    return from_coeffs(r);
}

Elt Field::inv_slow(Elt a) const
{
    if (a == 0) fail(Errc::inverse_of_zero, "inverse of zero");
    return pow(a, q_ - 2);
}

Elt Field::inv(Elt a) const
{
    if (a == 0) fail(Errc::inverse_of_zero, "inverse of zero");
    if (!inv_tab_.empty()) return inv_tab_[a];
    return inv_slow(a);
}

Elt Field::pow(Elt a, uint64_t e) const
{
    Elt r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elt Field::frob(Elt a, unsigned i) const
{
    i %= m_;
    for (unsigned j = 0; j < i; ++j) a = pow(a, p_);
    return a;
}

Elt Field::from_int(int64_t v) const
{
    int64_t r = v % (int64_t)p_;
    if (r < 0) r += p_;
    return (Elt)r;
}

std::vector<uint32_t> Field::coeffs(Elt a) const
{
    std::vector<uint32_t> c(m_);
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elt Field::from_coeffs(const std::vector<uint32_t>& c) const
{
    // reduce longer inputs modulo the field polynomial
    std::vector<uint32_t> v(c);
    for (auto& x : v) x %= p_;
    if (v.size() > m_) {
        v = prem(v, mod_, p_);
    }
    Elt r = 0, w = 1;
    for (size_t i = 0; i < v.size() && i < m_; ++i) {
        r += w * v[i];
        w *= p_;
    }
    return r;
}

std::string Field::to_string(Elt a) const
{
    if (m_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    auto c = coeffs(a);
    std::string s;
    for (int i = (int)m_ - 1; i >= 0; --i) {
        if (!c[i]) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) s += std::to_string(c[i]);
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

Elt Field::parse(const std::string& in) const
{
    std::string s;
    for (char ch : in)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s.empty()) fail(Errc::parse_error, "empty field element");
    std::vector<uint32_t> acc;
    size_t i = 0;
    while (i < s.size()) {
        // term: [digits][x[^digits]]
        uint64_t coef = 1;
        bool have_coef = false;
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j > i) {
            coef = std::stoull(s.substr(i, j - i));
            have_coef = true;
        }
        size_t deg = 0;
        if (j < s.size() && (s[j] == 'x' || s[j] == 'z' || s[j] == 'a')) {
            deg = 1;
            ++j;
            if (j < s.size() && s[j] == '^') {
                size_t k = ++j;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                if (j == k) fail(Errc::parse_error, "bad exponent in '" + in + "'");
                deg = std::stoul(s.substr(k, j - k));
            }
        } else if (!have_coef) {
            fail(Errc::parse_error, "bad field element '" + in + "'");
        }
        if (m_ == 1 && deg > 0) fail(Errc::parse_error, "prime field element cannot contain x");
        if (acc.size() <= deg) acc.resize(deg + 1, 0);
        acc[deg] = (uint32_t)((acc[deg] + coef % p_) % p_);
        if (j < s.size()) {
            if (s[j] != '+') fail(Errc::parse_error, "bad field element '" + in + "'");
            ++j;
        }
        i = j;
    }
    if (m_ == 1) return acc[0];
    return from_coeffs(acc);
}

void check_same(const Field& a, const Field& b)
{
    if (a != b) fail(Errc::mixed_fields, "operands live in different fields");
}

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::mixed_fields: return "MixedFields";
    case Errc::inverse_of_zero: return "InverseOfZero";
    case Errc::bad_set_size: return "BadSetSize";
    case Errc::not_information_set: return "NotInformationSet";
    case Errc::no_solution: return "NoSolution";
    case Errc::dim_mismatch: return "DimMismatch";
    case Errc::empty_code: return "EmptyCode";
    case Errc::too_large: return "TooLarge";
    case Errc::decode_failure: return "DecodeFailure";
    case Errc::duplicate_points: return "DuplicatePoints";
    case Errc::zero_multiplier: return "ZeroMultiplier";
    case Errc::root_in_support: return "RootInSupport";
    case Errc::dependent_points: return "DependentPoints";
    case Errc::not_a_divisor: return "NotADivisor";
    case Errc::weight_too_high: return "WeightTooHigh";
    case Errc::invalid_block_size: return "InvalidBlockSize";
    case Errc::systematic_form_failure: return "SystematicFormFailure";
    case Errc::iteration_limit: return "IterationLimit";
    case Errc::no_solution_found: return "NoSolutionFound";
    case Errc::infeasible_params: return "InfeasibleParams";
    case Errc::unknown_param_set: return "UnknownParamSet";
    case Errc::aggregate_mismatch: return "AggregateMismatch";
    case Errc::verify_failed: return "VerifyFailed";
    case Errc::retry_limit: return "RetryLimit";
    case Errc::not_a_valid_solution: return "NotAValidSolution";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

}
