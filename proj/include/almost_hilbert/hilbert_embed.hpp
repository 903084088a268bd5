#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "almost_hilbert/matrix.hpp"
#include "almost_hilbert/sbasis.hpp"

namespace ah {

/// Truncated natural Hilbert space of a Banach space with an S-basis.
/// The completion is never materialized: H is coefficient space with the
/// diagonal metric diag(t_1, ..., t_N).
class EmbeddingSpace {
public:
    /// Dyadic weights t_n = 2^{-n}.
    static EmbeddingSpace dyadic(SchauderBasis basis);

    /// Custom positive weights. Only the dyadic schedule is used by the suites.
    EmbeddingSpace(SchauderBasis basis, std::vector<double> weights);

    const SchauderBasis& basis() const noexcept { return *basis_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t dim() const noexcept { return weights_.size(); }
    double p() const noexcept { return basis_->p; }

    /// 1 - sum of the retained weights; 2^{-N} for the dyadic schedule.
    double tail_bound() const;

private:
    std::shared_ptr<const SchauderBasis> basis_;
    std::vector<double> weights_;
};

/// sum_n w_n x_n conj(y_n)
Complex weighted_inner(std::span<const Complex> x, std::span<const Complex> y, std::span<const double> w);

Complex h_inner(const GridFunction& u, const GridFunction& v, const EmbeddingSpace& space);
double h_norm(const GridFunction& u, const EmbeddingSpace& space);

/// G_mk = (E_m, E_k)_H evaluated by quadrature; diag(t) in exact arithmetic.
ComplexMatrix gram_matrix(const EmbeddingSpace& space);

/// The functional (., u)_H, i.e. J_B applied to the representer u.
class DualFunctional {
public:
    DualFunctional(GridFunction representer, EmbeddingSpace space);

    const GridFunction& representer() const noexcept { return representer_; }
    const EmbeddingSpace& space() const noexcept { return space_; }
    Complex operator()(const GridFunction& v) const;

    DualFunctional operator+(const DualFunctional& rhs) const;
    /// Scaling the functional by a scales the representer by conj(a).
    DualFunctional scaled(Complex a) const;

private:
    GridFunction representer_;
    EmbeddingSpace space_;
    ComplexVector coeffs_;
};

DualFunctional jb_apply(const GridFunction& u, const EmbeddingSpace& space);
inline Complex evaluate(const DualFunctional& f, const GridFunction& v) { return f(v); }

struct JbNormBound {
    double functional_estimate;  // max |(v, u)_H| / ||v||_B over probes
    double h_norm;
    double b_norm;
};

JbNormBound jb_norm_bound(const GridFunction& u, const EmbeddingSpace& space, int probes, std::uint64_t seed);

class RankDeficientError : public std::invalid_argument {
public:
    RankDeficientError(const std::string& what, std::size_t index)
        : std::invalid_argument(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

struct BiorthonormalSystem {
    std::vector<GridFunction> phi;    // H-orthogonal
    std::vector<GridFunction> psi;    // phi / ||phi||_B
    std::vector<DualFunctional> duals;  // <psi_i, psi_j*> = delta_ij
};

/// Modified Gram-Schmidt in the H metric followed by B-normalization.
/// Throws RankDeficientError when an input vector is dependent on its
/// predecessors (squared H-norm of the residual below 1e-12 of the input's).
BiorthonormalSystem gram_schmidt_biorthonormal(const std::vector<GridFunction>& vectors,
                                               const EmbeddingSpace& space);

}  // namespace ah
