#include <codelab/matrix.hpp>
#include <codelab/error.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace codelab {

std::vector<size_t> Rng::subset(size_t n, size_t k)
{
    auto all = shuffle(n);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<size_t> Rng::shuffle(size_t n)
{
    std::vector<size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    for (size_t i = n; i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    return v;
}

static void need_len(const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) fail(Errc::dim_mismatch, "vector length mismatch");
}

Vec vadd(const Field& f, const Vec& a, const Vec& b)
{
    need_len(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vsub(const Field& f, const Vec& a, const Vec& b)
{
    need_len(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vec vscale(const Field& f, Elt c, const Vec& a)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

Vec vmul(const Field& f, const Vec& a, const Vec& b)
{
    need_len(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], b[i]);
    return r;
}

Elt dot(const Field& f, const Vec& a, const Vec& b)
{
    need_len(a, b);
    Elt r = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) r = f.add(r, f.mul(a[i], b[i]));
    return r;
}

size_t weight(const Vec& a)
{
    size_t w = 0;
    for (auto x : a) w += x != 0;
    return w;
}

std::vector<size_t> support(const Vec& a)
{
    std::vector<size_t> s;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]) s.push_back(i);
    return s;
}

size_t distance(const Vec& a, const Vec& b)
{
    need_len(a, b);
    size_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

Vec random_vec(const Field& f, size_t n, Rng& rng)
{
    Vec v(n);
    for (auto& x : v) x = (Elt)rng.below(f.q());
    return v;
}

Vec random_weight_vec(const Field& f, size_t n, size_t w, Rng& rng)
{
    if (w > n) fail(Errc::invalid_argument, "weight exceeds length");
    Vec v(n, 0);
    for (auto i : rng.subset(n, w)) v[i] = (Elt)rng.between(1, f.q() - 1);
    return v;
}

std::string vec_to_string(const Field& f, const Vec& a)
{
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += f.to_string(a[i]);
    }
    return s + ")";
}

Matrix::Matrix(FieldPtr f, size_t rows, size_t cols) : f_(std::move(f)), r_(rows), c_(cols), d_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr f, const std::vector<Vec>& rows) : f_(std::move(f)), r_(rows.size()), c_(rows.empty() ? 0 : rows[0].size())
{
    d_.reserve(r_ * c_);
    for (auto& row : rows) {
        if (row.size() != c_) fail(Errc::dim_mismatch, "ragged matrix rows");
        for (auto x : row) {
            if (!f_->valid(x)) fail(Errc::invalid_argument, "element outside field");
            d_.push_back(x);
        }
    }
}

Matrix Matrix::identity(FieldPtr f, size_t n)
{
    Matrix m(std::move(f), n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_bits(FieldPtr f, const std::vector<std::string>& rows)
{
    std::vector<Vec> v;
    for (auto& s : rows) {
        Vec r;
        for (char ch : s)
            if (ch == '0' || ch == '1') r.push_back(ch == '1');
        v.push_back(r);
    }
    return Matrix(std::move(f), v);
}

Matrix Matrix::from_digits(FieldPtr f, const std::vector<std::string>& rows)
{
    std::vector<Vec> v;
    for (auto& s : rows) {
        Vec r;
        for (char ch : s)
            if (ch >= '0' && ch <= '9') r.push_back(f->from_int(ch - '0'));
        v.push_back(r);
    }
    return Matrix(std::move(f), v);
}

Matrix Matrix::random(FieldPtr f, size_t rows, size_t cols, Rng& rng)
{
    Matrix m(f, rows, cols);
    for (auto& x : m.d_) x = (Elt)rng.below(f->q());
    return m;
}

Matrix Matrix::random_full_rank(FieldPtr f, size_t rows, size_t cols, Rng& rng)
{
    if (rows > cols) fail(Errc::invalid_argument, "full row rank needs rows <= cols");
    for (;;) {
        Matrix m = random(f, rows, cols, rng);
        if (m.rank() == rows) return m;
    }
}

Vec Matrix::row(size_t i) const { return Vec(d_.begin() + i * c_, d_.begin() + (i + 1) * c_); }

Vec Matrix::col(size_t j) const
{
    Vec v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_row(size_t i, const Vec& v)
{
    if (v.size() != c_) fail(Errc::dim_mismatch, "row length mismatch");
    std::copy(v.begin(), v.end(), d_.begin() + i * c_);
}

std::vector<Vec> Matrix::row_list() const
{
    std::vector<Vec> out;
    for (size_t i = 0; i < r_; ++i) out.push_back(row(i));
    return out;
}

Matrix Matrix::operator*(const Matrix& b) const
{
    check_same(*f_, *b.f_);
    if (c_ != b.r_) fail(Errc::dim_mismatch, "matrix product shape mismatch");
    const Field& f = *f_;
    Matrix out(f_, r_, b.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            Elt a = at(i, k);
            if (!a) continue;
            for (size_t j = 0; j < b.c_; ++j) {
                Elt y = b.at(k, j);
                if (y) out.at(i, j) = f.add(out.at(i, j), f.mul(a, y));
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& b) const
{
    check_same(*f_, *b.f_);
    if (r_ != b.r_ || c_ != b.c_) fail(Errc::dim_mismatch, "matrix sum shape mismatch");
    Matrix out(f_, r_, c_);
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = f_->add(d_[i], b.d_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& b) const
{
    check_same(*f_, *b.f_);
    if (r_ != b.r_ || c_ != b.c_) fail(Errc::dim_mismatch, "matrix difference shape mismatch");
    Matrix out(f_, r_, c_);
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = f_->sub(d_[i], b.d_[i]);
    return out;
}

bool Matrix::operator==(const Matrix& b) const
{
    if (!f_ || !b.f_) return !f_ && !b.f_;
    return *f_ == *b.f_ && r_ == b.r_ && c_ == b.c_ && d_ == b.d_;
}

Matrix Matrix::transpose() const
{
    Matrix out(f_, c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::select_cols(const std::vector<size_t>& idx) const
{
    Matrix out(f_, r_, idx.size());
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= c_) fail(Errc::invalid_argument, "column index out of range");
            out.at(i, j) = at(i, idx[j]);
        }
    return out;
}

Matrix Matrix::select_rows(const std::vector<size_t>& idx) const
{
    Matrix out(f_, idx.size(), c_);
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= r_) fail(Errc::invalid_argument, "row index out of range");
        for (size_t j = 0; j < c_; ++j) out.at(i, j) = at(idx[i], j);
    }
    return out;
}

Matrix Matrix::hstack(const Matrix& b) const
{
    check_same(*f_, *b.f_);
    if (r_ != b.r_) fail(Errc::dim_mismatch, "hstack row mismatch");
    Matrix out(f_, r_, c_ + b.c_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) out.at(i, j) = at(i, j);
        for (size_t j = 0; j < b.c_; ++j) out.at(i, c_ + j) = b.at(i, j);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& b) const
{
    if (r_ == 0 && c_ == 0) return b;
    check_same(*f_, *b.f_);
    if (c_ != b.c_) fail(Errc::dim_mismatch, "vstack column mismatch");
    Matrix out(f_, r_ + b.r_, c_);
    std::copy(d_.begin(), d_.end(), out.d_.begin());
    std::copy(b.d_.begin(), b.d_.end(), out.d_.begin() + d_.size());
    return out;
}

Matrix Matrix::permute_cols(const Permutation& p) const
{
    if (p.size() != c_) fail(Errc::dim_mismatch, "permutation size mismatch");
    Matrix out(f_, r_, c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out.at(i, p[j]) = at(i, j);
    return out;
}

Vec Matrix::left_mul(const Vec& x) const
{
    if (x.size() != r_) fail(Errc::dim_mismatch, "vector-matrix shape mismatch");
    const Field& f = *f_;
    Vec out(c_, 0);
    for (size_t i = 0; i < r_; ++i) {
        if (!x[i]) continue;
        for (size_t j = 0; j < c_; ++j) {
            Elt y = at(i, j);
            if (y) out[j] = f.add(out[j], f.mul(x[i], y));
        }
    }
    return out;
}

Vec Matrix::right_mul(const Vec& x) const
{
    if (x.size() != c_) fail(Errc::dim_mismatch, "matrix-vector shape mismatch");
    Vec out(r_, 0);
    for (size_t i = 0; i < r_; ++i) {
        Elt acc = 0;
        for (size_t j = 0; j < c_; ++j)
            if (x[j] && at(i, j)) acc = f_->add(acc, f_->mul(at(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

size_t Matrix::rank() const { return rref(*this).pivots.size(); }

bool Matrix::is_zero() const
{
    for (auto x : d_)
        if (x) return false;
    return true;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    for (size_t i = 0; i < r_; ++i) {
        os << vec_to_string(*f_, row(i));
        if (i + 1 < r_) os << "\n";
    }
    return os.str();
}

Rref rref(const Matrix& m)
{
    const FieldPtr& fp = m.field();
    const Field& f = *fp;
    size_t r = m.rows(), c = m.cols();
    Matrix a = m;
    Matrix u = Matrix::identity(fp, r);
    std::vector<size_t> piv;
    size_t row = 0;
    for (size_t col = 0; col < c && row < r; ++col) {
        size_t sel = r;
        for (size_t i = row; i < r; ++i)
            if (a.at(i, col)) {
                sel = i;
                break;
            }
        if (sel == r) continue;
        if (sel != row)
            for (size_t j = 0; j < std::max(c, r); ++j) {
                if (j < c) std::swap(a.at(sel, j), a.at(row, j));
                if (j < r) std::swap(u.at(sel, j), u.at(row, j));
            }
        Elt iv = f.inv(a.at(row, col));
        if (iv != 1) {
            for (size_t j = 0; j < c; ++j) a.at(row, j) = f.mul(iv, a.at(row, j));
            for (size_t j = 0; j < r; ++j) u.at(row, j) = f.mul(iv, u.at(row, j));
        }
        for (size_t i = 0; i < r; ++i) {
            if (i == row) continue;
            Elt fac = a.at(i, col);
            if (!fac) continue;
            Elt nf = f.neg(fac);
            for (size_t j = 0; j < c; ++j)
                if (a.at(row, j)) a.at(i, j) = f.add(a.at(i, j), f.mul(nf, a.at(row, j)));
            for (size_t j = 0; j < r; ++j)
                if (u.at(row, j)) u.at(i, j) = f.add(u.at(i, j), f.mul(nf, u.at(row, j)));
        }
        piv.push_back(col);
        ++row;
    }
    return {a, u, piv};
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) fail(Errc::dim_mismatch, "inverse of non-square matrix");
    auto rr = rref(m);
    if (rr.pivots.size() != m.rows()) fail(Errc::no_solution, "matrix is singular");
    return rr.transform;
}

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b)
{
    // x * A = b  <=>  A^T x^T = b^T
    if (b.size() != a.cols()) fail(Errc::dim_mismatch, "right-hand side length mismatch");
    Matrix at = a.transpose();
    Matrix bcol(a.field(), b.size(), 1);
    for (size_t i = 0; i < b.size(); ++i) bcol.at(i, 0) = b[i];
    auto rr = rref(at.hstack(bcol));
    Vec x(a.rows(), 0);
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        size_t pc = rr.pivots[i];
        if (pc == a.rows()) return std::nullopt; // pivot in augmented column
        x[pc] = rr.reduced.at(i, a.rows());
    }
    return x;
}

Matrix kernel(const Matrix& m)
{
    const Field& f = *m.field();
    auto rr = rref(m);
    size_t n = m.cols();
    std::vector<bool> is_piv(n, false);
    for (auto p : rr.pivots) is_piv[p] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < n; ++free) {
        if (is_piv[free]) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = f.neg(rr.reduced.at(i, free));
        basis.push_back(v);
    }
    if (basis.empty()) return Matrix(m.field(), 0, n);
    return Matrix(m.field(), basis);
}

Matrix row_space(const Matrix& m)
{
    auto rr = rref(m);
    std::vector<size_t> idx(rr.pivots.size());
    std::iota(idx.begin(), idx.end(), 0);
    return rr.reduced.select_rows(idx);
}

Matrix random_invertible(FieldPtr f, size_t k, Rng& rng)
{
    for (;;) {
        Matrix m = Matrix::random(f, k, k, rng);
        if (m.rank() == k) return m;
    }
}

Permutation::Permutation(std::vector<size_t> image) : img_(std::move(image))
{
    std::vector<bool> seen(img_.size(), false);
    for (auto x : img_) {
        if (x >= img_.size() || seen[x]) fail(Errc::invalid_argument, "not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(size_t n)
{
    std::vector<size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(v);
}

Permutation Permutation::random(size_t n, Rng& rng) { return Permutation(rng.shuffle(n)); }

Permutation Permutation::from_matrix(const Matrix& p)
{
    if (p.rows() != p.cols()) fail(Errc::dim_mismatch, "permutation matrix must be square");
    std::vector<size_t> img(p.rows());
    for (size_t i = 0; i < p.rows(); ++i) {
        size_t ones = 0;
        for (size_t j = 0; j < p.cols(); ++j) {
            if (p.at(i, j) == 1) {
                img[i] = j;
                ++ones;
            } else if (p.at(i, j) != 0) {
                fail(Errc::invalid_argument, "not a permutation matrix");
            }
        }
        if (ones != 1) fail(Errc::invalid_argument, "not a permutation matrix");
    }
    return Permutation(img);
}

Permutation Permutation::inverse() const
{
    std::vector<size_t> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) v[img_[i]] = i;
    return Permutation(v);
}

Permutation Permutation::then(const Permutation& other) const
{
    std::vector<size_t> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) v[i] = other[img_[i]];
    return Permutation(v);
}

Vec Permutation::apply(const Vec& a) const
{
    if (a.size() != img_.size()) fail(Errc::dim_mismatch, "permutation size mismatch");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[img_[i]] = a[i];
    return out;
}

Matrix Permutation::as_matrix(FieldPtr f) const
{
    Matrix m(std::move(f), img_.size(), img_.size());
    for (size_t i = 0; i < img_.size(); ++i) m.at(i, img_[i]) = 1;
    return m;
}

std::vector<size_t> complement(size_t n, const std::vector<size_t>& set)
{
    std::vector<bool> in(n, false);
    for (auto i : set) {
        if (i >= n) fail(Errc::invalid_argument, "index out of range");
        in[i] = true;
    }
    std::vector<size_t> out;
    for (size_t i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

static void check_info_size(const Matrix& h, const std::vector<size_t>& info)
{
    std::vector<size_t> s(info);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(Errc::bad_set_size, "repeated index in information set");
    if (h.rows() > h.cols() || info.size() != h.cols() - h.rows())
        fail(Errc::bad_set_size, "information set must have size n - rows(H)");
}

bool is_information_set(const Matrix& h, const std::vector<size_t>& info)
{
    check_info_size(h, info);
    auto comp = complement(h.cols(), info);
    return h.select_cols(comp).rank() == h.rows();
}

Systematic systematic_form(const Matrix& h, const std::vector<size_t>& info)
{
    check_info_size(h, info);
    auto comp = complement(h.cols(), info);
    auto rr = rref(h.select_cols(comp));
    if (rr.pivots.size() != h.rows()) fail(Errc::not_information_set, "complement columns are singular");
    std::vector<size_t> sorted_info(info);
    std::sort(sorted_info.begin(), sorted_info.end());
    std::vector<size_t> img(h.cols());
    size_t pos = 0;
    for (auto i : sorted_info) img[i] = pos++;
    for (auto i : comp) img[i] = pos++;
    return {rr.transform, Permutation(img)};
}

}
