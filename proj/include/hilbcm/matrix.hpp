#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hilbcm/rational.hpp"

namespace hilbcm {

// Dense matrix over the rationals, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix column(const std::vector<Rational>& v);
    static Matrix diagonal(const std::vector<Rational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rational& s) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const = default;

    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    std::vector<Rational> col_vector(std::size_t c) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    // Horizontal / vertical stacking.
    static Matrix hstack(const std::vector<Matrix>& blocks);
    static Matrix vstack(const std::vector<Matrix>& blocks);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix mat_pow(const Matrix& m, std::size_t k);

// Rank over the rationals by exact elimination.
std::size_t mat_rank(const Matrix& m);

// Basis of the right null space; empty when injective. Each vector v
// satisfies m*v = 0 exactly.
std::vector<std::vector<Rational>> mat_kernel(const Matrix& m);

// Solves m*x = rhs; nullopt when inconsistent. For square invertible m
// the solution is unique; otherwise one particular solution is returned.
std::optional<std::vector<Rational>> mat_solve(const Matrix& m, const std::vector<Rational>& rhs);

// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> mat_inverse(const Matrix& m);

// Characteristic polynomial coefficients (degree ascending: p[0] + p[1] x
// + ... + p[c] x^c, monic) via Faddeev-LeVerrier.
std::vector<Rational> char_poly(const Matrix& m);

// Grows a linearly independent set one vector at a time, remembering how
// dependent vectors decompose over the accepted ones.
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    struct InsertResult {
        bool was_new;
        // When !was_new: coordinates of v over the accepted vectors, in
        // insertion order.
        std::optional<std::vector<Rational>> coords;
    };

    InsertResult insert(const std::vector<Rational>& v);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return accepted_.size(); }
    const std::vector<std::vector<Rational>>& accepted() const { return accepted_; }

    // Coordinates of v over the accepted vectors without inserting;
    // nullopt when v is outside the span.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

private:
    std::size_t ambient_;
    std::vector<std::vector<Rational>> accepted_;
    // Reduced rows: echelon[k] = sum_m mix_[k][m] * accepted_[m].
    std::vector<std::vector<Rational>> echelon_;
    std::vector<std::vector<Rational>> mix_;
    std::vector<std::size_t> pivots_;
};

}  // namespace hilbcm
