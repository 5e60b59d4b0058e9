#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hla/rational.hpp"

namespace hla {

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
    Matrix(std::size_t rows, std::size_t cols, Vec entries);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vec& d);
    static Matrix from_rows(const std::vector<Vec>& rows);
    /// Convenience for literals: {{1,2},{3,4}} with integer entries.
    static Matrix of(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    const Vec& flat() const { return a_; }

    Matrix transposed() const;
    bool is_zero() const;
    bool is_identity() const;

    bool operator==(const Matrix&) const = default;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix scaled(const Rational& c) const;

    /// "[[a,b],[c,d]]" with canonical entries and no spaces.
    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec a_;
};

/// Stack blocks vertically / horizontally. Throws on width/height mismatch.
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

/// Unique reduced row-echelon form; row space preserved.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact inverse. Throws Error on non-square or singular input.
Matrix inverse(const Matrix& m);

/// One exact solution of a*x = b, or nullopt when inconsistent.
/// Free variables are set to zero. Throws Error when a.rows() != b.size().
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace hla
