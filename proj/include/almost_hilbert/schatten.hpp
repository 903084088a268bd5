#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "almost_hilbert/operator_algebra.hpp"

namespace ah {

struct SingularSpectrum {
    std::vector<double> mu;  // descending, nonnegative
    ComplexVector lambda;    // eigenvalues of the coordinate matrix, algebraic multiplicity
};

SingularSpectrum singular_spectrum(const BOperator& a);

/// Singular values in the H metric, from the SVD of W^{1/2} A W^{-1/2}.
std::vector<double> singular_values(const BOperator& a);
/// Square roots of the eigenvalues of A*A (negative rounding clamped to zero).
std::vector<double> singular_values_via_star_product(const BOperator& a);
/// max_n |mu_n(i) - mu_n(ii)| / max(1, mu_1).
double singular_value_path_gap(const BOperator& a);

struct SchattenPaths {
    double bracket;  // {sum <A*A phi_n, phi_n*>^{p/2}}^{1/p} over the eigenbasis of A*A
    double mu_sum;   // {sum mu_n^p}^{1/p}
    double relative_gap() const;
};

SchattenPaths schatten_norm_paths(const BOperator& a, double p);
/// The mu-sum value; p = kInfinity gives mu_1.
double schatten_norm(const BOperator& a, double p);

/// Monotone nonnegative map used by the Weyl and Horn sums.
struct PhiMap {
    std::string name;
    std::function<double(double)> f;
};

PhiMap power_map(double p);

VerificationReport weyl_check(const BOperator& a, const PhiMap& phi);
VerificationReport horn_check(const BOperator& a1, const BOperator& a2, const PhiMap& phi);
VerificationReport lalesco_check(const BOperator& a);
VerificationReport lidskii_check(const BOperator& a);

enum class ApproxMetric { h, b_estimate };

struct ApproximationNumbers {
    /// s_0 .. s_N. In the H metric s_n = mu_{n+1} and s_N = 0. In the B
    /// estimate each s_n is a Riesz-Thorin upper bound of ||A - K|| over
    /// truncated-SVD candidates K of rank <= n.
    std::vector<double> s;
    /// B estimate only: power-iteration values of ||A - K_n||_B for the same candidates.
    std::vector<double> estimates;
    bool upper_bounds = false;
};

ApproximationNumbers approximation_numbers(const BOperator& a, ApproxMetric metric, double p_for_b = 2.0,
                                           int restarts = 4, std::uint64_t seed = 0);

/// C_p = sum_{i >= 1} s_i^p.
double pietsch_cp(const BOperator& a, double p, ApproxMetric metric, double p_for_b = 2.0, int restarts = 4,
                  std::uint64_t seed = 0);

struct NuclearBound {
    double upper;              // sum mu_n ||f_n||_{B'} ||psi_n||_B for the H singular representation
    double operator_estimate;  // ||A||_B from the power iteration, a lower bound on N_1(A)
};

/// One representation A = sum mu_n f_n (x) psi_n in the coordinate p-norm
/// model with p the conjugate of p_dual.
NuclearBound nuclear_norm_upper(const BOperator& a, double p_dual, int restarts, std::uint64_t seed);

}  // namespace ah
