#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "almost_hilbert/grid_function.hpp"
#include "almost_hilbert/report.hpp"

namespace ah {

/// Samples at t_j = j / M on the unit circle; M a power of two, M >= 4.
class PeriodicSignal {
public:
    explicit PeriodicSignal(ComplexVector samples);
    static PeriodicSignal sample(std::size_t m, const std::function<Complex(double)>& f);

    std::size_t size() const noexcept { return samples_.size(); }
    std::span<const Complex> samples() const noexcept { return samples_; }
    Complex operator[](std::size_t j) const { return samples_[j]; }
    double spacing() const noexcept { return 1.0 / static_cast<double>(samples_.size()); }
    double point(std::size_t j) const noexcept { return static_cast<double>(j) * spacing(); }

private:
    ComplexVector samples_;
};

/// (1/M) sum f conj(g)
Complex signal_inner(const PeriodicSignal& f, const PeriodicSignal& g);
/// ((1/M) sum |f|^p)^{1/p}; p may be infinite.
double signal_norm(const PeriodicSignal& f, double p);

/// Multiplier -i sgn(k); the zero and Nyquist modes are set to zero.
PeriodicSignal hilbert_multiplier(const PeriodicSignal& f);

/// Values Omega(+1), Omega(-1) of an odd kernel on the two-point sphere.
struct OddKernel {
    double plus;
    double minus;
};

/// Periodic truncated singular integral
///   sum over |d| >= eps of Omega(sgn d) pi cot(pi |d|) f(x + d) / M
/// with d the periodic offset y - x. Offsets exactly at eps get half weight.
PeriodicSignal odd_kernel_operator(const PeriodicSignal& f, OddKernel omega, double eps);

/// Cotangent-kernel principal value, Omega(+1) = -1/pi, Omega(-1) = 1/pi.
PeriodicSignal hilbert_pv(const PeriodicSignal& f, double eps);

using SignalOperator = std::function<PeriodicSignal(const PeriodicSignal&)>;

/// <op f, g> = sign <f, op g> relative to ||f||_2 ||g||_2.
VerificationReport adjoint_relation_check(const SignalOperator& op, const PeriodicSignal& f, const PeriodicSignal& g,
                                          int sign, double tol);

/// Empirical C_p over random mean-zero trigonometric polynomials of degree
/// <= 16 on M points. Asserts finiteness and that doubling the trial count
/// moves the maximum by a factor <= 1.5.
VerificationReport lp_bound_report(const SignalOperator& op, double p, int trials, std::uint64_t seed,
                                   std::size_t m = 1024);

/// 2^a sqrt(pi) Gamma(a/2) / Gamma((1 - a)/2)
double riesz_gamma(double alpha);

/// gamma(alpha)^{-1} int f(y) |x - y|^{alpha - 1} dy at the cell midpoints,
/// with each cell integrated exactly against the singular kernel.
GridFunction riesz_potential(const GridFunction& f, double alpha);
/// The same quadrature at an arbitrary point x.
Complex riesz_potential_at(const GridFunction& f, double alpha, double x);

/// 1/q = 1/p - alpha; throws unless 1 < p < q < infinity.
double hls_exponent(double p, double alpha);

/// Empirical A_{p,q} over random step functions supported in [-1/2, 1/2],
/// with the potential evaluated on [-2, 2].
VerificationReport hls_bound_report(double alpha, double p, int trials, std::uint64_t seed,
                                    std::size_t resolution = 1024);

}  // namespace ah
