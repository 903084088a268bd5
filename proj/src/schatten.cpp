#include "almost_hilbert/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "almost_hilbert/numerics.hpp"

namespace ah {

namespace {

double p_sum(const std::vector<double>& x, double p) {
    if (std::isinf(p)) return x.empty() ? 0.0 : *std::max_element(x.begin(), x.end());
    double acc = 0.0;
    for (double v : x) acc += std::pow(v, p);
    return std::pow(acc, 1.0 / p);
}

void require_p(double p, const char* where) {
    if (!(p >= 1.0)) throw std::invalid_argument(std::string(where) + ": p must be >= 1");
}

std::vector<double> abs_sorted(const ComplexVector& z) {
    std::vector<double> out(z.size());
    std::transform(z.begin(), z.end(), out.begin(), [](Complex c) { return std::abs(c); });
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double phi_sum(const std::vector<double>& x, const PhiMap& phi) {
    double acc = 0.0;
    for (double v : x) acc += phi.f(v);
    return acc;
}

/// Truncation of A to its n largest H singular triples.
BOperator truncated(const SvdResult& f, std::size_t n, std::span<const double> weights) {
    const std::size_t dim = weights.size();
    ComplexMatrix m(dim, dim);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) += f.sigma[k] * f.u(i, k) * std::conj(f.v(j, k));
    return from_h_symmetrized(m, {weights.begin(), weights.end()});
}

}  // namespace

std::vector<double> singular_values(const BOperator& a) { return singular_values_of(h_symmetrized(a)); }

std::vector<double> singular_values_via_star_product(const BOperator& a) {
    const auto eig = hermitian_eigen(hermitian_part(h_symmetrized(adjoint(a) * a)));
    std::vector<double> mu(eig.values.size());
    std::transform(eig.values.begin(), eig.values.end(), mu.begin(), [](double x) { return std::sqrt(std::max(x, 0.0)); });
    return mu;
}

double singular_value_path_gap(const BOperator& a) {
    const auto x = singular_values(a);
    const auto y = singular_values_via_star_product(a);
    double worst = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) worst = std::max(worst, std::abs(x[n] - y[n]));
    return worst / std::max(1.0, x.empty() ? 0.0 : x.front());
}

SingularSpectrum singular_spectrum(const BOperator& a) { return {singular_values(a), general_eigenvalues(a.matrix())}; }

double SchattenPaths::relative_gap() const {
    const double scale = std::max(bracket, mu_sum);
    return scale > 0.0 ? std::abs(bracket - mu_sum) / scale : 0.0;
}

SchattenPaths schatten_norm_paths(const BOperator& a, double p) {
    require_p(p, "schatten_norm");
    const auto w = a.weights();
    const std::size_t n = a.dim();
    const auto eig = hermitian_eigen(hermitian_part(h_symmetrized(adjoint(a) * a)));

    // <A*A phi, phi*> with phi* the H-biorthonormal dual equals ||A phi||_H^2 / ||phi||_H^2.
    std::vector<double> root_brackets(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto phi = eig.vectors.column(k);
        for (std::size_t i = 0; i < n; ++i) phi[i] /= std::sqrt(w[i]);
        const auto aphi = a.apply(phi);
        const double num = weighted_inner(aphi, aphi, w).real();
        const double den = weighted_inner(phi, phi, w).real();
        root_brackets[k] = std::sqrt(std::max(num, 0.0) / den);
    }
    return {p_sum(root_brackets, p), p_sum(singular_values(a), p)};
}

double schatten_norm(const BOperator& a, double p) {
    require_p(p, "schatten_norm");
    return p_sum(singular_values(a), p);
}

PhiMap power_map(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("power_map: exponent must be positive");
    return {"t^" + param_value(p), [p](double t) { return std::pow(t, p); }};
}

VerificationReport weyl_check(const BOperator& a, const PhiMap& phi) {
    const auto s = singular_spectrum(a);
    const double lhs = phi_sum(abs_sorted(s.lambda), phi);
    const double rhs = phi_sum(s.mu, phi);
    VerificationReport r;
    r.add_check("weyl", std::max(0.0, lhs - rhs), 1e-9 * (rhs + 1.0), 1, {{"phi", phi.name}});
    return r;
}

VerificationReport horn_check(const BOperator& a1, const BOperator& a2, const PhiMap& phi) {
    const auto lambda = abs_sorted(general_eigenvalues((a1 * a2).matrix()));
    const auto mu1 = singular_values(a1);
    const auto mu2 = singular_values(a2);
    std::vector<double> prod(mu1.size());
    for (std::size_t n = 0; n < prod.size(); ++n) prod[n] = mu1[n] * mu2[n];
    const double lhs = phi_sum(lambda, phi);
    const double rhs = phi_sum(prod, phi);
    VerificationReport r;
    r.add_check("horn", std::max(0.0, lhs - rhs), 1e-9 * (rhs + 1.0), 1, {{"phi", phi.name}});
    return r;
}

VerificationReport lalesco_check(const BOperator& a) {
    const auto s = singular_spectrum(a);
    double lhs = 0.0;
    for (const auto& z : s.lambda) lhs += std::abs(z);
    double rhs = 0.0;
    for (double m : s.mu) rhs += m;
    VerificationReport r;
    r.add_check("lalesco", std::max(0.0, lhs - rhs), 1e-9 * (rhs + 1.0), 1);
    return r;
}

VerificationReport lidskii_check(const BOperator& a) {
    Complex sum{};
    for (const auto& z : general_eigenvalues(a.matrix())) sum += z;
    const Complex tr = a.matrix().trace();
    VerificationReport r;
    r.add_check("lidskii", std::abs(sum - tr), 1e-9 * (std::abs(tr) + 1.0), 1);
    return r;
}

ApproximationNumbers approximation_numbers(const BOperator& a, ApproxMetric metric, double p_for_b, int restarts,
                                           std::uint64_t seed) {
    const std::size_t n = a.dim();
    ApproximationNumbers out;
    if (metric == ApproxMetric::h) {
        out.s = singular_values(a);
        out.s.push_back(0.0);
        return out;
    }
    require_p(p_for_b, "approximation_numbers");
    const auto f = svd(h_symmetrized(a));
    out.upper_bounds = true;
    double best = kInfinity;
    for (std::size_t k = 0; k <= n; ++k) {
        const auto diff = (a - truncated(f, k, a.weights())).matrix();
        best = std::min(best, k == n ? 0.0 : opnorm_p_upper(diff, p_for_b));
        out.s.push_back(best);
        out.estimates.push_back(k == n ? 0.0 : opnorm_p_estimate(diff, p_for_b, restarts, trial_seed(seed, k)));
    }
    return out;
}

double pietsch_cp(const BOperator& a, double p, ApproxMetric metric, double p_for_b, int restarts, std::uint64_t seed) {
    require_p(p, "pietsch_cp");
    const auto s = approximation_numbers(a, metric, p_for_b, restarts, seed).s;
    double acc = 0.0;
    for (std::size_t i = 1; i < s.size(); ++i) acc += std::pow(s[i], p);
    return acc;
}

NuclearBound nuclear_norm_upper(const BOperator& a, double p_dual, int restarts, std::uint64_t seed) {
    require_p(p_dual, "nuclear_norm_upper");
    const double p = conjugate_exponent(p_dual);
    const auto w = a.weights();
    const std::size_t n = a.dim();
    const auto f = svd(h_symmetrized(a));

    double upper = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (f.sigma[k] == 0.0) continue;
        ComplexVector psi(n);
        ComplexVector functional(n);
        for (std::size_t i = 0; i < n; ++i) {
            psi[i] = f.u(i, k) / std::sqrt(w[i]);
            functional[i] = std::conj(f.v(i, k)) * std::sqrt(w[i]);
        }
        upper += f.sigma[k] * vector_pnorm(functional, p_dual) * vector_pnorm(psi, p);
    }
    return {upper, opnorm_p_estimate(a.matrix(), p, restarts, seed)};
}

}  // namespace ah
