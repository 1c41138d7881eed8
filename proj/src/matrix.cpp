#include "kinval/matrix.hpp"

#include <stdexcept>

namespace kinval {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = PiScalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("Matrix: shape mismatch in product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const PiScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("Matrix: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("Matrix: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::scaled(const PiScalar& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        PiScalar inv = a.at(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            PiScalar f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("Matrix: inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = PiScalar(1);
    }
    RrefResult r = rref(aug);
    if (r.pivots.size() != n || r.pivots.back() != n - 1)
        throw std::domain_error("Matrix: singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.matrix.at(i, n + j);
    return inv;
}

Matrix solve(const Matrix& m, const Matrix& rhs) {
    if (m.rows() != rhs.rows()) throw std::domain_error("Matrix: rhs row count mismatch");
    std::size_t n = m.rows(), k = m.cols(), w = rhs.cols();
    Matrix aug(n, k + w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = m.at(i, j);
        for (std::size_t j = 0; j < w; ++j) aug.at(i, k + j) = rhs.at(i, j);
    }
    RrefResult r = rref(aug);
    for (std::size_t p = 0; p < r.pivots.size(); ++p)
        if (r.pivots[p] >= k) throw std::domain_error("Matrix: inconsistent linear system");
    Matrix x(k, w);
    for (std::size_t p = 0; p < r.pivots.size(); ++p)
        for (std::size_t j = 0; j < w; ++j) x.at(r.pivots[p], j) = r.matrix.at(p, k + j);
    return x;
}

}  // namespace kinval
