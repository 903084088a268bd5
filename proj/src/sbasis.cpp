#include "almost_hilbert/sbasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "almost_hilbert/numerics.hpp"

namespace ah {

double lp_norm(const GridFunction& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    double scale = 0.0;
    for (const auto& z : f.samples()) scale = std::max(scale, std::abs(z));
    if (std::isinf(p) || scale == 0.0) return scale;
    double s = 0.0;
    for (const auto& z : f.samples()) {
        const double a = std::abs(z) / scale;
        s += p == 2.0 ? a * a : std::pow(a, p);
    }
    return scale * std::pow(s * f.cell_volume(), 1.0 / p);
}

Complex pairing(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g, "pairing");
    Complex s{};
    const auto fs = f.samples();
    const auto gs = g.samples();
    for (std::size_t i = 0; i < fs.size(); ++i) s += fs[i] * std::conj(gs[i]);
    return s * f.cell_volume();
}

GridFunction duality_map(const GridFunction& u, double p) {
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("duality_map: p must lie in (1, inf)");
    GridFunction out = GridFunction::zeros(u.box(), u.resolution());
    const double norm = lp_norm(u, p);
    if (norm == 0.0) return out;
    // ||u||^{2-p} |u|^{p-2} u = ||u|| (|u|/||u||)^{p-1} sgn(u)
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double a = std::abs(u[i]);
        if (a == 0.0) continue;
        out[i] = norm * std::pow(a / norm, p - 1.0) * (u[i] / a);
    }
    return out;
}

SchauderBasis fourier_sbasis(std::size_t n, double p, std::size_t resolution) {
    if (n == 0) throw std::invalid_argument("fourier_sbasis: need at least one member");
    if (!(p >= 1.0)) throw std::invalid_argument("fourier_sbasis: p must be >= 1");
    if (resolution < 8 * n) throw std::invalid_argument("fourier_sbasis: resolution too coarse for the highest frequency");
    SchauderBasis basis;
    basis.p = p;
    for (std::size_t m = 0; m < n; ++m) {
        const double freq = 2.0 * std::numbers::pi * static_cast<double>((m + 1) / 2);
        GridFunction phi = GridFunction::sample({0.0, 1.0}, resolution, [&](double t) -> Complex {
            if (m == 0) return 1.0;
            return (m % 2 == 1) ? std::cos(freq * t) : std::sin(freq * t);
        });
        phi *= 1.0 / lp_norm(phi, p);
        GridFunction dual = phi;
        dual *= 1.0 / pairing(phi, phi).real();
        basis.members.push_back(std::move(phi));
        basis.duals.push_back(std::move(dual));
    }
    return basis;
}

ComplexVector coefficients(const GridFunction& u, const SchauderBasis& basis) {
    ComplexVector c(basis.size());
    for (std::size_t n = 0; n < basis.size(); ++n) c[n] = pairing(u, basis.duals[n]);
    return c;
}

GridFunction reconstruct(std::span<const Complex> coeffs, const SchauderBasis& basis) {
    if (coeffs.size() != basis.size()) throw std::invalid_argument("reconstruct: coefficient count mismatch");
    GridFunction u = GridFunction::zeros(basis.grid().box(), basis.grid().resolution());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n] == Complex{}) continue;
        const auto member = basis.members[n].samples();
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += coeffs[n] * member[i];
    }
    return u;
}

std::vector<double> dual_norms(const SchauderBasis& basis) {
    const double q = conjugate_exponent(basis.p);
    std::vector<double> out;
    for (const auto& d : basis.duals) out.push_back(lp_norm(d, q));
    return out;
}

GridFunction random_span_element(const SchauderBasis& basis, Rng& rng) {
    const ComplexVector c = random_vector(rng, basis.size());
    return reconstruct(c, basis);
}

}  // namespace ah
