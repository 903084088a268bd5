#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "almost_hilbert/matrix.hpp"

namespace ah {

/// Iterative kernel failed to converge; carries the final residual.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct EigenResult {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // orthonormal columns
};

struct SvdResult {
    ComplexMatrix u;             // m x k, k = min(m, n)
    std::vector<double> sigma;   // descending, nonnegative
    ComplexMatrix v;             // n x k
};

/// Cyclic complex Jacobi. Input must satisfy ||M - M^H||_F <= tol * ||M||_F;
/// callers holding a matrix that is Hermitian only up to rounding should pass
/// hermitian_part(M).
EigenResult hermitian_eigen(const ComplexMatrix& m, double tol = 1e-14);

/// One-sided (Hestenes) Jacobi SVD; thin factors.
SvdResult svd(const ComplexMatrix& m, double tol = 1e-15);

inline std::vector<double> singular_values_of(const ComplexMatrix& m) { return svd(m).sigma; }

/// Householder Hessenberg reduction followed by single-shift complex QR.
/// Eigenvalues are returned with algebraic multiplicity, in deflation order.
ComplexVector general_eigenvalues(const ComplexMatrix& m);

/// Scaling and squaring with a Taylor core.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// Induced p -> p norm of a matrix on C^n with the coordinate p-norm.
/// p = 1 and p = kInfinity are exact; otherwise the result is the best
/// value seen by a power iteration, a lower bound on the true norm.
double opnorm_p_estimate(const ComplexMatrix& m, double p, int restarts, std::uint64_t seed);

/// Riesz-Thorin upper bound ||M||_1^{1/p} ||M||_inf^{1-1/p}.
double opnorm_p_upper(const ComplexMatrix& m, double p);

/// Coordinate p-norm of a vector; p may be kInfinity.
double vector_pnorm(std::span<const Complex> x, double p);

/// Conjugate exponent p / (p - 1), with 1 <-> infinity.
double conjugate_exponent(double p);

}  // namespace ah
