#include "almost_hilbert/hilbert_embed.hpp"

#include <cmath>

#include "almost_hilbert/random.hpp"

namespace ah {

EmbeddingSpace EmbeddingSpace::dyadic(SchauderBasis basis) {
    std::vector<double> w(basis.size());
    for (std::size_t n = 0; n < w.size(); ++n) w[n] = std::ldexp(1.0, -static_cast<int>(n + 1));
    return EmbeddingSpace(std::move(basis), std::move(w));
}

EmbeddingSpace::EmbeddingSpace(SchauderBasis basis, std::vector<double> weights)
    : basis_(std::make_shared<const SchauderBasis>(std::move(basis))), weights_(std::move(weights)) {
    if (basis_->size() == 0) throw std::invalid_argument("EmbeddingSpace: empty basis");
    if (weights_.size() != basis_->size()) throw std::invalid_argument("EmbeddingSpace: one weight per basis member");
    for (double w : weights_)
        if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("EmbeddingSpace: weights must be positive");
}

double EmbeddingSpace::tail_bound() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return 1.0 - s;
}

Complex weighted_inner(std::span<const Complex> x, std::span<const Complex> y, std::span<const double> w) {
    Complex s{};
    for (std::size_t n = 0; n < w.size(); ++n) s += w[n] * x[n] * std::conj(y[n]);
    return s;
}

Complex h_inner(const GridFunction& u, const GridFunction& v, const EmbeddingSpace& space) {
    require_same_grid(u, space.basis().grid(), "h_inner");
    require_same_grid(v, space.basis().grid(), "h_inner");
    return weighted_inner(coefficients(u, space.basis()), coefficients(v, space.basis()), space.weights());
}

double h_norm(const GridFunction& u, const EmbeddingSpace& space) {
    return std::sqrt(std::max(h_inner(u, u, space).real(), 0.0));
}

ComplexMatrix gram_matrix(const EmbeddingSpace& space) {
    const auto& b = space.basis();
    const std::size_t n = b.size();
    std::vector<ComplexVector> coeffs;
    for (const auto& e : b.members) coeffs.push_back(coefficients(e, b));
    ComplexMatrix g(n, n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) g(m, k) = weighted_inner(coeffs[m], coeffs[k], space.weights());
    return g;
}

DualFunctional::DualFunctional(GridFunction representer, EmbeddingSpace space)
    : representer_(std::move(representer)), space_(std::move(space)) {
    require_same_grid(representer_, space_.basis().grid(), "DualFunctional");
    coeffs_ = coefficients(representer_, space_.basis());
}

Complex DualFunctional::operator()(const GridFunction& v) const {
    require_same_grid(v, representer_, "DualFunctional::evaluate");
    return weighted_inner(coefficients(v, space_.basis()), coeffs_, space_.weights());
}

DualFunctional DualFunctional::operator+(const DualFunctional& rhs) const {
    return DualFunctional(representer_ + rhs.representer_, space_);
}

DualFunctional DualFunctional::scaled(Complex a) const {
    return DualFunctional(std::conj(a) * representer_, space_);
}

DualFunctional jb_apply(const GridFunction& u, const EmbeddingSpace& space) { return DualFunctional(u, space); }

JbNormBound jb_norm_bound(const GridFunction& u, const EmbeddingSpace& space, int probes, std::uint64_t seed) {
    if (probes < 1) throw std::invalid_argument("jb_norm_bound: probes must be >= 1");
    const double p = space.p();
    const DualFunctional f = jb_apply(u, space);
    JbNormBound r{0.0, h_norm(u, space), lp_norm(u, p)};
    const auto ratio = [&](const GridFunction& v) {
        const double vb = lp_norm(v, p);
        return vb > 0.0 ? std::abs(f(v)) / vb : 0.0;
    };
    r.functional_estimate = ratio(u);
    Rng rng(seed);
    for (int k = 0; k < probes; ++k) r.functional_estimate = std::max(r.functional_estimate, ratio(random_span_element(space.basis(), rng)));
    return r;
}

BiorthonormalSystem gram_schmidt_biorthonormal(const std::vector<GridFunction>& vectors, const EmbeddingSpace& space) {
    BiorthonormalSystem out;
    std::vector<ComplexVector> phi_coeffs;
    const auto w = space.weights();
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        GridFunction phi = vectors[i];
        const double original = h_norm(phi, space);
        // two passes of modified Gram-Schmidt for stability
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < out.phi.size(); ++j) {
                const ComplexVector c = coefficients(phi, space.basis());
                const Complex proj = weighted_inner(c, phi_coeffs[j], w) / weighted_inner(phi_coeffs[j], phi_coeffs[j], w);
                phi -= proj * out.phi[j];
            }
        }
        const double residual = h_norm(phi, space);
        if (!(original > 0.0) || residual * residual <= 1e-12 * original * original) {
            throw RankDeficientError("gram_schmidt_biorthonormal: vector " + std::to_string(i) +
                                         " is dependent on its predecessors",
                                     i);
        }
        const double b_norm = lp_norm(phi, space.p());
        GridFunction psi = phi;
        psi *= 1.0 / b_norm;
        // <psi_i, c phi_j>_H = delta_ij  with  c = ||phi_j||_B / ||phi_j||_H^2
        GridFunction representer = phi;
        representer *= b_norm / (residual * residual);
        phi_coeffs.push_back(coefficients(phi, space.basis()));
        out.duals.emplace_back(std::move(representer), space);
        out.phi.push_back(std::move(phi));
        out.psi.push_back(std::move(psi));
    }
    return out;
}

}  // namespace ah
