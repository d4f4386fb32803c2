#pragma once

#include "rsq/field.hpp"

#include <vector>

namespace rsq {

using Vec = std::vector<Scalar>;

// Dense matrix over the active exact field.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(int n);
    static Matrix jordan_block(int m, const Scalar& lambda); // lambda on diagonal, 1 on superdiagonal

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[i * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    Vec apply(const Vec& x) const;

    // Row-reduced echelon form; pivot column indices appended to *pivots if given.
    Matrix rref(std::vector<int>* pivots = nullptr) const;
    int rank() const;
    std::vector<Vec> nullspace_basis() const; // kernel vectors (length cols)
    bool invertible() const;
    Matrix inverse() const; // throws std::domain_error if singular
    Scalar det() const;     // square only

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix from_columns(const std::vector<Vec>& cols, int rows);
    Vec column(int j) const;

    std::string str() const; // debugging aid

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

// Solve A x = b exactly; returns false if inconsistent.
bool solve_linear(const Matrix& A, const Vec& b, Vec& x);

// True iff v lies in the column span of B; coordinates returned through *coords when given.
bool in_column_span(const Matrix& B, const Vec& v, Vec* coords = nullptr);

// Basis of the column space, as a matrix whose columns are the chosen original columns.
Matrix column_space_basis(const Matrix& A);

} // namespace rsq
