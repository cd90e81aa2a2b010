#ifndef DOPK_MATRIX_HPP
#define DOPK_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dopk/scalar.hpp"

namespace dopk {

/// Dense square-or-rectangular matrix over a scalar field. Sized for the
/// desk-scale grids this library works with; elimination is exact on the
/// rational backend.
template <ScalarField T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: size mismatch");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        T t{};
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Submatrix on the given row and column index sets (ascending).
    Matrix submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const {
        Matrix r(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                r(i, j) = (*this)(row_idx[i], col_idx[j]);
        return r;
    }

    Matrix principal_submatrix(const std::vector<std::size_t>& idx) const {
        return submatrix(idx, idx);
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

/// Determinant by Gaussian elimination with pivot-by-magnitude; exact on the
/// rational backend (any nonzero pivot would do there).
template <ScalarField T>
T det(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    T d{1};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(m(pivot, col)) < abs(m(r, col))) pivot = r;
        if (m(pivot, col).is_zero()) return T{};
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m(col, j), m(pivot, j));
            d = -d;
        }
        d *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const T f = m(r, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return d;
}

/// Exact rank over a field (meaningful on the rational backend).
template <ScalarField T>
std::size_t rank(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = col; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, col).is_zero()) continue;
            const T f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace dopk

#endif // DOPK_MATRIX_HPP
