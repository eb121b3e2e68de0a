#include "matfun/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "matfun/errors.hpp"

namespace matfun {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0};
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
    const size_t cols = rows[0].size();
    if (cols == 0) throw std::invalid_argument("matrix needs at least one column");
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < cols; ++j) {
            if (!is_finite(rows[i][j])) throw std::invalid_argument("matrix entry is not finite");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

size_t Matrix::dim() const {
    if (!is_square())
        throw Error(ErrorKind::DimensionMismatch,
                    std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix is not square");
    return rows_;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix addition shape mismatch");
    Matrix out = *this;
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix subtraction shape mismatch");
    Matrix out = *this;
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{0.0}) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

Matrix Matrix::operator*(Complex s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

double Matrix::frobenius_norm() const {
    double acc = 0.0;
    for (const auto& x : data_) acc += std::norm(x);
    return std::sqrt(acc);
}

std::vector<Complex> Matrix::column(size_t j) const {
    std::vector<Complex> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(size_t j, const std::vector<Complex>& v) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::with_columns(const Matrix& extra) const {
    if (rows_ != extra.rows_ && cols_ != 0)
        throw Error(ErrorKind::DimensionMismatch, "column append shape mismatch");
    if (cols_ == 0) return extra;
    Matrix out(rows_, cols_ + extra.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (size_t j = 0; j < extra.cols_; ++j) out(i, cols_ + j) = extra(i, j);
    }
    return out;
}

std::vector<Complex> operator*(const Matrix& a, const std::vector<Complex>& x) {
    if (a.cols() != x.size())
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<Complex> y(a.rows(), Complex{0.0});
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

namespace {

// LU with partial pivoting, in place; perm holds row swaps.
struct LU {
    Matrix lu;
    std::vector<size_t> perm;
    int sign = 1;
};

LU lu_decompose(const Matrix& a) {
    const size_t n = a.dim();
    LU f{a, std::vector<size_t>(n), 1};
    for (size_t i = 0; i < n; ++i) f.perm[i] = i;

    double scale = a.frobenius_norm();
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        double best = std::abs(f.lu(k, k));
        for (size_t i = k + 1; i < n; ++i)
            if (std::abs(f.lu(i, k)) > best) {
                best = std::abs(f.lu(i, k));
                pivot = i;
            }
        if (best <= 1e-300 + 1e-15 * scale)
            throw Error(ErrorKind::SingularMatrix, "pivot breakdown in elimination");
        if (pivot != k) {
            for (size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(pivot, j));
            std::swap(f.perm[k], f.perm[pivot]);
            f.sign = -f.sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            const Complex m = cdiv(f.lu(i, k), f.lu(k, k));
            f.lu(i, k) = m;
            for (size_t j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
        }
    }
    return f;
}

}  // namespace

Matrix solve(const Matrix& a, const Matrix& b) {
    const size_t n = a.dim();
    if (b.rows() != n) throw Error(ErrorKind::DimensionMismatch, "solve shape mismatch");
    const LU f = lu_decompose(a);

    Matrix x(n, b.cols());
    for (size_t c = 0; c < b.cols(); ++c) {
        std::vector<Complex> y(n);
        for (size_t i = 0; i < n; ++i) {
            Complex acc = b(f.perm[i], c);
            for (size_t j = 0; j < i; ++j) acc -= f.lu(i, j) * y[j];
            y[i] = acc;
        }
        for (size_t i = n; i-- > 0;) {
            Complex acc = y[i];
            for (size_t j = i + 1; j < n; ++j) acc -= f.lu(i, j) * y[j];
            y[i] = cdiv(acc, f.lu(i, i));
        }
        x.set_column(c, y);
    }
    return x;
}

Matrix gauss_inverse(const Matrix& a) { return solve(a, Matrix::identity(a.dim())); }

Complex determinant(const Matrix& a) {
    LU f;
    try {
        f = lu_decompose(a);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SingularMatrix) return Complex{0.0};
        throw;
    }
    Complex det{static_cast<double>(f.sign)};
    for (size_t i = 0; i < a.dim(); ++i) det *= f.lu(i, i);
    return det;
}

double condition_estimate(const Matrix& a) {
    return a.frobenius_norm() * gauss_inverse(a).frobenius_norm();
}

size_t ColPivQR::rank(double rel_tol) const {
    if (std::min(r.rows(), r.cols()) == 0) return 0;
    return rank_above(rel_tol * std::abs(r(0, 0)));
}

size_t ColPivQR::rank_above(double cutoff) const {
    const size_t k = std::min(r.rows(), r.cols());
    size_t rank = 0;
    while (rank < k && std::abs(r(rank, rank)) > cutoff) ++rank;
    return rank;
}

ColPivQR col_piv_qr(const Matrix& a) {
    const size_t m = a.rows(), n = a.cols();
    ColPivQR out{Matrix::identity(m), a, std::vector<size_t>(n)};
    for (size_t j = 0; j < n; ++j) out.perm[j] = j;

    std::vector<double> col_norms(n);
    for (size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (size_t i = 0; i < m; ++i) s += std::norm(out.r(i, j));
        col_norms[j] = s;
    }

    const size_t steps = std::min(m, n);
    for (size_t k = 0; k < steps; ++k) {
        // pivot: remaining column with the largest tail norm
        size_t pivot = k;
        double best = -1.0;
        for (size_t j = k; j < n; ++j) {
            double s = 0.0;
            for (size_t i = k; i < m; ++i) s += std::norm(out.r(i, j));
            if (s > best) {
                best = s;
                pivot = j;
            }
        }
        if (pivot != k) {
            for (size_t i = 0; i < m; ++i) std::swap(out.r(i, k), out.r(i, pivot));
            std::swap(out.perm[k], out.perm[pivot]);
            std::swap(col_norms[k], col_norms[pivot]);
        }

        // Householder reflector for column k below row k
        double norm_x = 0.0;
        for (size_t i = k; i < m; ++i) norm_x += std::norm(out.r(i, k));
        norm_x = std::sqrt(norm_x);
        if (norm_x == 0.0) continue;

        const Complex x0 = out.r(k, k);
        const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0};
        const Complex alpha = -phase * norm_x;

        std::vector<Complex> v(m, Complex{0.0});
        for (size_t i = k; i < m; ++i) v[i] = out.r(i, k);
        v[k] -= alpha;
        double vnorm2 = 0.0;
        for (size_t i = k; i < m; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0) continue;

        // apply H = I - 2 v v^H / |v|^2 to R from the left, accumulate Q <- Q H
        for (size_t j = k; j < n; ++j) {
            Complex dot{0.0};
            for (size_t i = k; i < m; ++i) dot += std::conj(v[i]) * out.r(i, j);
            dot *= 2.0 / vnorm2;
            for (size_t i = k; i < m; ++i) out.r(i, j) -= dot * v[i];
        }
        for (size_t row = 0; row < m; ++row) {
            Complex dot{0.0};
            for (size_t i = k; i < m; ++i) dot += out.q(row, i) * v[i];
            dot *= 2.0 / vnorm2;
            for (size_t i = k; i < m; ++i) out.q(row, i) -= dot * std::conj(v[i]);
        }
        out.r(k, k) = alpha;
        for (size_t i = k + 1; i < m; ++i) out.r(i, k) = Complex{0.0};
    }
    return out;
}

Matrix orthonormal_range(const Matrix& a, double rel_tol, size_t* rank_out) {
    const ColPivQR f = col_piv_qr(a);
    const size_t r = f.rank(rel_tol);
    if (rank_out) *rank_out = r;
    Matrix basis(a.rows(), r);
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < a.rows(); ++i) basis(i, j) = f.q(i, j);
    return basis;
}

Matrix orthonormal_kernel(const Matrix& a, double cutoff) {
    // ker(a) is the orthogonal complement of range(a^H)
    const ColPivQR f = col_piv_qr(a.adjoint());
    const size_t r = f.rank_above(cutoff);
    const size_t n = a.cols();
    Matrix basis(n, n - r);
    for (size_t j = r; j < n; ++j)
        for (size_t i = 0; i < n; ++i) basis(i, j - r) = f.q(i, j);
    return basis;
}

}  // namespace matfun
