#include <codelab/io.hpp>
#include <codelab/error.hpp>

#include <sstream>

namespace codelab {

std::string write_matrix(const Matrix& m)
{
    const Field& f = *m.field();
    std::ostringstream os;
    os << f.q() << " " << f.m() << " " << m.rows() << " " << m.cols() << "\n";
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            auto c = f.coeffs(m(i, j));
            for (size_t t = 0; t < c.size(); ++t) os << (t ? "," : "") << c[t];
        }
        os << "\n";
    }
    return os.str();
}

Matrix read_matrix(const std::string& text)
{
    std::istringstream is(text);
    uint64_t q, m, r, c;
    if (!(is >> q >> m >> r >> c)) fail(Errc::parse_error, "bad matrix header");
    auto f = Field::gf((uint32_t)q);
    if (f->m() != m) fail(Errc::parse_error, "extension degree does not match q");
    Matrix out(f, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) {
            std::string tok;
            if (!(is >> tok)) fail(Errc::parse_error, "matrix body too short");
            std::vector<uint32_t> coef;
            std::stringstream ts(tok);
            std::string part;
            while (std::getline(ts, part, ',')) coef.push_back((uint32_t)std::stoul(part));
            if (coef.size() != m) fail(Errc::parse_error, "coefficient tuple has wrong length");
            for (auto x : coef)
                if (x >= f->p()) fail(Errc::parse_error, "coefficient out of range");
            out.at(i, j) = f->from_coeffs(coef);
        }
    return out;
}

unsigned bits_per_symbol(const Field& f)
{
    unsigned b = 0;
    while ((1ULL << b) < f.q()) ++b;
    return b == 0 ? 1 : b;
}

std::string to_hex(const std::vector<uint8_t>& bytes)
{
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (auto b : bytes) {
        s += digits[b >> 4];
        s += digits[b & 15];
    }
    return s;
}

std::vector<uint8_t> from_hex(const std::string& hex)
{
    if (hex.size() % 2) fail(Errc::parse_error, "odd-length hex string");
    auto val = [](char ch) -> int {
        if (ch >= '0' && ch <= '9') return ch - '0';
        if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
        if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
        fail(Errc::parse_error, "bad hex digit");
    };
    std::vector<uint8_t> out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) out[i] = (uint8_t)(val(hex[2 * i]) << 4 | val(hex[2 * i + 1]));
    return out;
}

std::string pack_hex(const Field& f, const Vec& v)
{
    unsigned b = bits_per_symbol(f);
    std::vector<uint8_t> bytes((v.size() * b + 7) / 8, 0);
    size_t pos = 0;
    for (auto x : v)
        for (unsigned i = 0; i < b; ++i, ++pos)
            if ((x >> i) & 1) bytes[pos / 8] |= (uint8_t)(1u << (pos % 8));
    return to_hex(bytes);
}

Vec unpack_hex(const Field& f, const std::string& hex, size_t n)
{
    unsigned b = bits_per_symbol(f);
    auto bytes = from_hex(hex);
    if (bytes.size() * 8 < n * b) fail(Errc::parse_error, "hex too short for vector");
    Vec v(n, 0);
    size_t pos = 0;
    for (size_t j = 0; j < n; ++j)
        for (unsigned i = 0; i < b; ++i, ++pos)
            if ((bytes[pos / 8] >> (pos % 8)) & 1) v[j] |= 1u << i;
    for (auto x : v)
        if (!f.valid(x)) fail(Errc::parse_error, "decoded symbol outside field");
    return v;
}

}
