#pragma once

#include <cstdint>
#include <vector>

#include "almost_hilbert/hilbert_embed.hpp"
#include "almost_hilbert/matrix.hpp"
#include "almost_hilbert/random.hpp"
#include "almost_hilbert/report.hpp"

namespace ah {

/// Truncated operator on B: an N x N matrix acting on S-basis coefficients,
/// together with the embedding weights that define the H metric.
class BOperator {
public:
    BOperator(ComplexMatrix matrix, std::vector<double> weights);
    BOperator(ComplexMatrix matrix, const EmbeddingSpace& space);

    static BOperator identity(std::vector<double> weights);
    static BOperator zero(std::vector<double> weights);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t dim() const noexcept { return weights_.size(); }

    ComplexVector apply(std::span<const Complex> coeffs) const { return matrix_ * coeffs; }
    GridFunction apply(const GridFunction& u, const EmbeddingSpace& space) const;

    BOperator operator+(const BOperator& rhs) const;
    BOperator operator-(const BOperator& rhs) const;
    BOperator operator*(const BOperator& rhs) const;
    friend BOperator operator*(Complex a, const BOperator& op);

private:
    ComplexMatrix matrix_;
    std::vector<double> weights_;
};

std::vector<double> dyadic_weights(std::size_t n);

/// A* = W^{-1} A^H W with W = diag(t): the operator J_B^{-1} A' J_B.
BOperator adjoint(const BOperator& a);

/// W^{1/2} A W^{-1/2}: the operator in an H-orthonormal frame.
ComplexMatrix h_symmetrized(const BOperator& a);
BOperator from_h_symmetrized(const ComplexMatrix& m, std::vector<double> weights);

/// Induced operator norm in the H metric.
double h_operator_norm(const BOperator& a);

/// Random operators for property sweeps.
BOperator random_operator(Rng& rng, std::vector<double> weights);
BOperator random_selfadjoint(Rng& rng, std::vector<double> weights);
/// exp(iH) for random Hermitian H, transported to the weighted frame.
BOperator random_h_unitary(Rng& rng, std::vector<double> weights);

/// Relative discrepancy ||X - Y||_F / max(1, ||Y||_F).
double relative_gap(const ComplexMatrix& x, const ComplexMatrix& y);

/// (aA)* = conj(a) A*, A** = A, (A+B)* = A* + B*, (AB)* = B*A*, (A*A)* = A*A.
VerificationReport adjoint_algebra_check(const BOperator& a, const BOperator& b, Complex scalar, double tol = 1e-10);

/// Measures ||A||_B, ||A*||_B, ||A*A||_B in the coordinate p-norm model and
/// reports their ratios; asserts only the H-metric identity ||A*A||_H = ||A||_H^2.
VerificationReport norm_inequality_report(const BOperator& a, double p, int restarts, std::uint64_t seed);

// Relative tolerances: ||A - A*||_F <= tol max(1, ||A||_F); the commutator is
// compared against max(1, ||A||_F^2); unitarity is absolute.
bool is_naturally_selfadjoint(const BOperator& a, double tol);
bool is_normal(const BOperator& a, double tol);
bool is_unitary(const BOperator& u, double tol);

/// True iff (v, u)_H = 0 within tol for every pair, both orders.
bool orthogonal_subspaces(const std::vector<GridFunction>& us, const std::vector<GridFunction>& vs,
                          const EmbeddingSpace& space, double tol);

/// Lax checks for an H-symmetric operator: point spectrum in B coordinates
/// against the symmetrized form, ||T*T||_H = ||T||_H^2, and the measured
/// constant k = ||T||_H^2 / ||T||_B^2.
VerificationReport lax_check(const BOperator& t, double p, int restarts, std::uint64_t seed, double tol);

/// True iff exp(+-itA) is an H-isometry for every t in tgrid.
bool self_conjugacy_check(const BOperator& a, std::span<const double> tgrid, double tol);
/// Worst isometry defect of exp(+-itA) over tgrid.
double self_conjugacy_defect(const BOperator& a, std::span<const double> tgrid);

struct PolarDecomposition {
    BOperator u;               // partial isometry, completed on ker T
    BOperator t;               // (A*A)^{1/2}, naturally self-adjoint, nonnegative
    bool rank_deficient = false;  // U is arbitrary on the complement of range(T)
};

PolarDecomposition polar_decompose(const BOperator& a, double tol);

struct SpectralDecomposition {
    std::vector<double> eigenvalues;     // distinct, descending
    std::vector<BOperator> projections;  // one per eigenvalue
};

/// Eigenvalues within a relative gap of tol are merged into one projection.
SpectralDecomposition spectral_decompose(const BOperator& a, double tol);

/// Courant-Fischer estimate of the k-th largest eigenvalue (k >= 1): the best
/// k-th Ritz value over `trials` randomly seeded Krylov subspaces built with
/// the H inner product.
double minmax_eigenvalue(const BOperator& a, std::size_t k, int trials, std::uint64_t seed);

struct RayleighComparison {
    Complex b_ratio;  // <A psi, psi*> / <psi, psi*> with psi* the duality map of psi
    Complex h_ratio;  // (A psi, psi)_H / (psi, psi)_H
    double gap;
};

RayleighComparison rayleigh_compare(const BOperator& a, const GridFunction& psi, const EmbeddingSpace& space);

/// Periodic central-difference discretization of a(x) u'' + x b(x) u' on the
/// basis grid, projected onto the basis. Requires Re a >= ellipticity.
BOperator finite_difference_operator(const GridFunction& a, const GridFunction& b, const EmbeddingSpace& space,
                                     double ellipticity = 1e-8);

}  // namespace ah
