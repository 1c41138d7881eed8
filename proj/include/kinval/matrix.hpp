#pragma once

#include <cstddef>
#include <vector>

#include "kinval/qpi.hpp"

namespace kinval {

/// Dense matrix over Q(pi), row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, PiScalar(0)) {}
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    PiScalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const PiScalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const PiScalar& c) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    std::vector<PiScalar> e_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan over Q(pi). Pivots: first nonzero entry in column order.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact inverse; throws std::domain_error when singular.
Matrix invert(const Matrix& m);

/// One exact solution of M x = rhs (rhs may have several columns).
/// Underdetermined systems get free variables set to 0; inconsistent
/// systems throw std::domain_error.
Matrix solve(const Matrix& m, const Matrix& rhs);

}  // namespace kinval
