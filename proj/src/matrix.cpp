#include "almost_hilbert/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ah {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match shape");
    }
    if (!all_finite()) {
        throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    if (!m.all_finite()) throw std::invalid_argument("ComplexMatrix: non-finite entry");
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    if (!m.all_finite()) throw std::invalid_argument("ComplexMatrix: non-finite entry");
    return m;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
    ComplexVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void ComplexMatrix::set_column(std::size_t j, std::span<const Complex> v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : entries_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
    ComplexMatrix r(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) r(i, j) += a * rhs(k, j);
        }
    return r;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> x) {
    if (m.cols() != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
    ComplexVector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex s{};
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

ComplexMatrix scale_rows(std::span<const double> d, ComplexMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= d[i];
    return m;
}

ComplexMatrix scale_cols(ComplexMatrix m, std::span<const double> d) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= d[j];
    return m;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix h = m + m.adjoint();
    h *= 0.5;
    return h;
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
    Complex s{};
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

double norm2(std::span<const Complex> x) {
    double s = 0.0;
    for (const auto& z : x) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

}  // namespace ah
