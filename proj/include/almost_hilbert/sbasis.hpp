#pragma once

#include <cstddef>
#include <vector>

#include "almost_hilbert/grid_function.hpp"
#include "almost_hilbert/random.hpp"

namespace ah {

/// L^p norm by composite midpoint quadrature; p = kInfinity gives max |sample|.
double lp_norm(const GridFunction& f, double p);

/// Duality bracket <f, g> = integral of f * conj(g).
Complex pairing(const GridFunction& f, const GridFunction& g);

/// u* = ||u||_p^{2-p} |u|^{p-2} u, so that <u, u*> = ||u||_p^2 = ||u*||_q^2.
/// The zero function maps to zero.
GridFunction duality_map(const GridFunction& u, double p);

/// Ordered unit-norm basis with biorthonormal coefficient functionals.
/// Each functional is held as a representer d_n, acting by <u, d_n>.
struct SchauderBasis {
    std::vector<GridFunction> members;
    std::vector<GridFunction> duals;
    double p = 2.0;

    std::size_t size() const noexcept { return members.size(); }
    const GridFunction& grid() const { return members.front(); }
};

/// First n members of {1, cos 2pi t, sin 2pi t, cos 4pi t, sin 4pi t, ...} on
/// [0, 1], each rescaled to unit p-norm at the working resolution.
SchauderBasis fourier_sbasis(std::size_t n, double p, std::size_t resolution);

/// u_n = <E_n*, u>
ComplexVector coefficients(const GridFunction& u, const SchauderBasis& basis);
GridFunction reconstruct(std::span<const Complex> coeffs, const SchauderBasis& basis);

/// Dual norms ||E_n*||_{B'} = ||d_n||_q.
std::vector<double> dual_norms(const SchauderBasis& basis);

/// Element of the basis span with standard complex normal coefficients.
GridFunction random_span_element(const SchauderBasis& basis, Rng& rng);

}  // namespace ah
