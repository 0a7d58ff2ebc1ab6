#include <codelab/code.hpp>
#include <codelab/error.hpp>
#include <codelab/io.hpp>

#include <mutex>
#include <set>
#include <sstream>

namespace codelab {

struct LinearCode::State {
    Matrix presented;
    mutable Matrix derived;
    mutable std::once_flag once;
};

static Matrix full_rank(const Matrix& m)
{
    if (m.rank() == m.rows()) return m;
    return row_space(m);
}

LinearCode LinearCode::from_generator(const Matrix& g)
{
    LinearCode c;
    c.st_ = std::make_shared<State>();
    c.st_->presented = full_rank(g);
    c.n_ = g.cols();
    c.k_ = c.st_->presented.rows();
    c.tag_ = Presented::generator;
    if (c.k_ == 0) fail(Errc::empty_code, "code has dimension 0");
    return c;
}

LinearCode LinearCode::from_parity_check(const Matrix& h)
{
    LinearCode c;
    c.st_ = std::make_shared<State>();
    c.st_->presented = full_rank(h);
    c.n_ = h.cols();
    c.k_ = c.n_ - c.st_->presented.rows();
    c.tag_ = Presented::parity_check;
    if (c.k_ == 0) fail(Errc::empty_code, "code has dimension 0");
    return c;
}

const FieldPtr& LinearCode::field() const { return st_->presented.field(); }

const Matrix& LinearCode::generator() const
{
    if (tag_ == Presented::generator) return st_->presented;
    std::call_once(st_->once, [this] { st_->derived = kernel(st_->presented); });
    return st_->derived;
}

const Matrix& LinearCode::parity_check() const
{
    if (tag_ == Presented::parity_check) return st_->presented;
    std::call_once(st_->once, [this] { st_->derived = kernel(st_->presented); });
    return st_->derived;
}

Vec LinearCode::encode(const Vec& m) const
{
    if (m.size() != k_) fail(Errc::dim_mismatch, "message length " + std::to_string(m.size()) + " != k");
    return generator().left_mul(m);
}

Vec LinearCode::syndrome(const Vec& x) const
{
    if (x.size() != n_) fail(Errc::dim_mismatch, "word length " + std::to_string(x.size()) + " != n");
    if (n_ == k_) return {};
    return parity_check().right_mul(x);
}

bool LinearCode::contains(const Vec& x) const
{
    auto s = syndrome(x);
    return weight(s) == 0;
}

LinearCode dual(const LinearCode& c)
{
    if (c.k() == c.n()) fail(Errc::empty_code, "dual of the full space is the zero code");
    if (c.presented() == LinearCode::Presented::generator) return LinearCode::from_parity_check(c.generator());
    return LinearCode::from_generator(c.parity_check());
}

static void check_positions(size_t n, const std::vector<size_t>& t)
{
    std::set<size_t> seen;
    for (auto i : t)
        if (i >= n || !seen.insert(i).second) fail(Errc::invalid_argument, "bad position set");
}

LinearCode puncture(const LinearCode& c, const std::vector<size_t>& t)
{
    check_positions(c.n(), t);
    if (t.empty()) return c;
    return LinearCode::from_generator(c.generator().select_cols(complement(c.n(), t)));
}

LinearCode shorten(const LinearCode& c, const std::vector<size_t>& t)
{
    check_positions(c.n(), t);
    if (t.empty()) return c;
    const Matrix& g = c.generator();
    // messages whose codewords vanish on t
    Matrix msgs = kernel(g.select_cols(t).transpose());
    if (msgs.rows() == 0) fail(Errc::empty_code, "shortening leaves the zero code");
    return LinearCode::from_generator((msgs * g).select_cols(complement(c.n(), t)));
}

bool same_code(const LinearCode& a, const LinearCode& b)
{
    if (a.n() != b.n() || a.k() != b.k() || *a.field() != *b.field()) return false;
    return row_space(a.generator()) == row_space(b.generator());
}

static uint64_t message_count(const LinearCode& c, uint64_t budget)
{
    uint64_t total = 1, q = c.field()->q();
    for (size_t i = 0; i < c.k(); ++i) {
        if (total > budget / q) fail(Errc::too_large, "q^k exceeds the enumeration budget");
        total *= q;
    }
    if (total > budget) fail(Errc::too_large, "q^k exceeds the enumeration budget");
    return total;
}

void for_each_codeword(const LinearCode& c, uint64_t budget, const std::function<void(const Vec&, const Vec&)>& fn)
{
    message_count(c, budget);
    const Field& f = *c.field();
    const Matrix& g = c.generator();
    size_t k = c.k(), n = c.n();
    uint32_t q = f.q();
    Vec msg(k, 0), cw(n, 0);
    std::vector<Vec> rows = g.row_list();
    for (;;) {
        fn(msg, cw);
        // odometer, last coordinate fastest
        size_t i = k;
        while (i > 0) {
            --i;
            Elt old = msg[i];
            Elt nxt = old + 1 < q ? old + 1 : 0;
            Elt diff = f.sub(nxt, old);
            msg[i] = nxt;
            for (size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(diff, rows[i][j]));
            if (nxt != 0) break;
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

size_t min_distance_bruteforce(const LinearCode& c, uint64_t budget)
{
    size_t best = c.n() + 1;
    for_each_codeword(c, budget, [&](const Vec&, const Vec& cw) {
        size_t w = weight(cw);
        if (w > 0 && w < best) best = w;
    });
    return best;
}

Nearest nearest_codeword_bruteforce(const LinearCode& c, const Vec& x, uint64_t budget)
{
    if (x.size() != c.n()) fail(Errc::dim_mismatch, "word length != n");
    Nearest best{Vec(), c.n() + 1};
    for_each_codeword(c, budget, [&](const Vec&, const Vec& cw) {
        size_t d = distance(cw, x);
        if (d < best.distance) best = {cw, d};
    });
    return best;
}

LinearCode schur_product(const LinearCode& a, const LinearCode& b)
{
    if (a.n() != b.n()) fail(Errc::length_mismatch, "codes have different lengths");
    check_same(*a.field(), *b.field());
    const Field& f = *a.field();
    std::vector<Vec> rows;
    auto ra = a.generator().row_list(), rb = b.generator().row_list();
    for (auto& x : ra)
        for (auto& y : rb) rows.push_back(vmul(f, x, y));
    return LinearCode::from_generator(Matrix(a.field(), rows));
}

LinearCode square_code(const LinearCode& c)
{
    const Field& f = *c.field();
    std::vector<Vec> rows;
    auto r = c.generator().row_list();
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = i; j < r.size(); ++j) rows.push_back(vmul(f, r[i], r[j]));
    return LinearCode::from_generator(Matrix(c.field(), rows));
}

Vec concat_encode(const LinearCode& outer, const LinearCode& inner, const Vec& basis, const Vec& m)
{
    const Field& fo = *outer.field();
    const Field& fi = *inner.field();
    if (fi.m() != 1 || fo.p() != fi.p() || fo.m() != inner.k())
        fail(Errc::field_mismatch, "inner dimension must equal the outer extension degree over a prime field");
    size_t k1 = inner.k();
    // coordinates w.r.t. the basis: coeffs(a) = abar * B, B rows = coeffs(basis_i)
    Matrix binv;
    if (!basis.empty()) {
        if (basis.size() != k1) fail(Errc::invalid_argument, "basis must have k1 elements");
        std::vector<Vec> rows;
        for (auto b : basis) {
            auto cs = fo.coeffs(b);
            rows.emplace_back(cs.begin(), cs.end());
        }
        binv = inverse(Matrix(inner.field(), rows));
    }
    Vec outer_cw = outer.encode(m);
    Vec out;
    out.reserve(outer_cw.size() * inner.n());
    for (Elt a : outer_cw) {
        auto cs = fo.coeffs(a);
        Vec abar(cs.begin(), cs.end());
        if (!basis.empty()) abar = binv.left_mul(abar);
        Vec piece = inner.encode(abar);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

std::string write_code(const LinearCode& c)
{
    const Matrix& m = c.presented() == LinearCode::Presented::generator ? c.generator() : c.parity_check();
    return std::string(1, (char)c.presented()) + "\n" + write_matrix(m);
}

LinearCode read_code(const std::string& text)
{
    if (text.size() < 2 || text[1] != '\n') fail(Errc::parse_error, "missing presentation tag");
    Matrix m = read_matrix(text.substr(2));
    if (text[0] == 'G') return LinearCode::from_generator(m);
    if (text[0] == 'H') return LinearCode::from_parity_check(m);
    fail(Errc::parse_error, "unknown presentation tag");
}

}
