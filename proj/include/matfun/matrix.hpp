#pragma once

#include <vector>

#include "matfun/complex_ops.hpp"

namespace matfun {

// Dense complex matrix, row-major. Most operations in this library act on
// square matrices; rectangular shapes appear as basis/column collections.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n);
    // Validating constructor for boundary input: rejects NaN/Inf and ragged rows.
    static Matrix from_rows(const std::vector<std::vector<Complex>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    // Dimension of a square matrix; throws DimensionMismatch otherwise.
    size_t dim() const;

    Complex& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    Complex operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator*(Complex s) const;

    Matrix adjoint() const;  // conjugate transpose
    double frobenius_norm() const;
    std::vector<Complex> column(size_t j) const;
    void set_column(size_t j, const std::vector<Complex>& v);

    // B = this with `extra` appended as new columns.
    Matrix with_columns(const Matrix& extra) const;

    bool operator==(const Matrix&) const = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> data_;
};

std::vector<Complex> operator*(const Matrix& a, const std::vector<Complex>& x);

// ---- dense factorizations (partial-pivot elimination, Householder QR) ----

// Solves a x = b for square a; throws SingularMatrix on pivot breakdown.
Matrix solve(const Matrix& a, const Matrix& b);
Matrix gauss_inverse(const Matrix& a);
Complex determinant(const Matrix& a);

// ||a||_F * ||a^-1||_F, a cheap condition estimate.
double condition_estimate(const Matrix& a);

// Householder QR with column pivoting. q is `rows x rows` unitary, r upper
// trapezoidal with |r(0,0)| >= |r(1,1)| >= ...; a * P = q * r.
struct ColPivQR {
    Matrix q;
    Matrix r;
    std::vector<size_t> perm;

    // Number of diagonal entries of r above rel_tol * |r(0,0)|.
    size_t rank(double rel_tol) const;
    // Number of diagonal entries of r above an absolute cutoff. Nilpotent
    // powers need this: their "zero" magnitude scales with |M|^g, not with
    // the largest surviving pivot.
    size_t rank_above(double cutoff) const;
};

ColPivQR col_piv_qr(const Matrix& a);

// Orthonormal basis of the range of a (first `rank` Householder Q columns).
Matrix orthonormal_range(const Matrix& a, double rel_tol, size_t* rank_out = nullptr);

// Orthonormal basis of the kernel of a, as the complement of range(a^H),
// with an absolute pivot cutoff.
Matrix orthonormal_kernel(const Matrix& a, double cutoff);

}  // namespace matfun
