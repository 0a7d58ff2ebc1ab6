#pragma once

#include <codelab/field.hpp>
#include <codelab/rng.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace codelab {

using Vec = std::vector<Elt>;

// vector helpers over a field
Vec vadd(const Field& f, const Vec& a, const Vec& b);
Vec vsub(const Field& f, const Vec& a, const Vec& b);
Vec vscale(const Field& f, Elt c, const Vec& a);
Vec vmul(const Field& f, const Vec& a, const Vec& b); // coordinatewise (Schur) product
Elt dot(const Field& f, const Vec& a, const Vec& b);
size_t weight(const Vec& a);
std::vector<size_t> support(const Vec& a);
size_t distance(const Vec& a, const Vec& b);
Vec random_vec(const Field& f, size_t n, Rng& rng);
// random vector of Hamming weight w with nonzero entries uniform in GF(q)*
Vec random_weight_vec(const Field& f, size_t n, size_t w, Rng& rng);
std::string vec_to_string(const Field& f, const Vec& a);

class Permutation;

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, size_t rows, size_t cols);
    Matrix(FieldPtr f, const std::vector<Vec>& rows);

    static Matrix identity(FieldPtr f, size_t n);
    // rows of 0/1 strings such as "1000110" over any field
    static Matrix from_bits(FieldPtr f, const std::vector<std::string>& rows);
    // rows of decimal digit strings such as "3214304434" (prime fields, p <= 10)
    static Matrix from_digits(FieldPtr f, const std::vector<std::string>& rows);
    static Matrix random(FieldPtr f, size_t rows, size_t cols, Rng& rng);
    // random matrix of full row rank
    static Matrix random_full_rank(FieldPtr f, size_t rows, size_t cols, Rng& rng);

    const FieldPtr& field() const { return f_; }
    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    Elt& at(size_t i, size_t j) { return d_[i * c_ + j]; }
    Elt at(size_t i, size_t j) const { return d_[i * c_ + j]; }
    Elt operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

    Vec row(size_t i) const;
    Vec col(size_t j) const;
    void set_row(size_t i, const Vec& v);
    std::vector<Vec> row_list() const;

    Matrix operator*(const Matrix& b) const;
    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    bool operator==(const Matrix& b) const;
    bool operator!=(const Matrix& b) const { return !(*this == b); }

    Matrix transpose() const;
    Matrix select_cols(const std::vector<size_t>& idx) const;
    Matrix select_rows(const std::vector<size_t>& idx) const;
    Matrix hstack(const Matrix& b) const;
    Matrix vstack(const Matrix& b) const;
    Matrix permute_cols(const Permutation& p) const; // this * P

    // row vector times matrix
    Vec left_mul(const Vec& x) const;
    // matrix times column vector
    Vec right_mul(const Vec& x) const;

    size_t rank() const;
    bool is_zero() const;
    std::string to_string() const;

private:
    FieldPtr f_;
    size_t r_ = 0, c_ = 0;
    std::vector<Elt> d_;
};

struct Rref {
    Matrix reduced; // R = U * M
    Matrix transform; // U, invertible
    std::vector<size_t> pivots;
};

Rref rref(const Matrix& m);
// throws NoSolution when singular
Matrix inverse(const Matrix& m);
// some x with x * A = b, or nullopt
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);
// basis of the right kernel {x : M x^T = 0}, as rows
Matrix kernel(const Matrix& m);
// basis of the row space (nonzero rows of the rref)
Matrix row_space(const Matrix& m);
Matrix random_invertible(FieldPtr f, size_t k, Rng& rng);

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<size_t> image);
    static Permutation identity(size_t n);
    static Permutation random(size_t n, Rng& rng);
    // from a 0/1 permutation matrix: row i has its 1 in column image[i]
    static Permutation from_matrix(const Matrix& p);

    size_t size() const { return img_.size(); }
    size_t operator[](size_t i) const { return img_[i]; }
    const std::vector<size_t>& image() const { return img_; }

    Permutation inverse() const;
    // (this then other): i -> other[this[i]]
    Permutation then(const Permutation& other) const;
    // moves coordinate i to position image[i]; equals a * P
    Vec apply(const Vec& a) const;
    Matrix as_matrix(FieldPtr f) const;
    bool operator==(const Permutation& o) const { return img_ == o.img_; }

private:
    std::vector<size_t> img_;
};

// 0-based column sets
bool is_information_set(const Matrix& h, const std::vector<size_t>& info);

struct Systematic {
    Matrix transform; // U
    Permutation perm; // U*H*P = (B | Id): info columns first, complement after, both in ascending order
};

// U = (H restricted to the complement of I)^-1, so U*H carries the identity on the
// complement columns in ascending order
Systematic systematic_form(const Matrix& h, const std::vector<size_t>& info);

std::vector<size_t> complement(size_t n, const std::vector<size_t>& set);

}
