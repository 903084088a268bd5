#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ah {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. Constructors reject non-finite entries.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> d);
    static ComplexMatrix diagonal(std::span<const Complex> d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return entries_; }
    std::span<Complex> entries() noexcept { return entries_; }

    ComplexVector column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Complex> v);

    /// Conjugate transpose.
    ComplexMatrix adjoint() const;
    double frobenius_norm() const;
    double max_abs() const;
    Complex trace() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> x);

/// diag(d) * m
ComplexMatrix scale_rows(std::span<const double> d, ComplexMatrix m);
/// m * diag(d)
ComplexMatrix scale_cols(ComplexMatrix m, std::span<const double> d);

/// (M + M^H) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Standard inner product sum conj(x_i) y_i.
Complex dot(std::span<const Complex> x, std::span<const Complex> y);
double norm2(std::span<const Complex> x);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ah
