#include "almost_hilbert/operator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "almost_hilbert/numerics.hpp"

namespace ah {

namespace {

void require_weights(std::span<const double> w, std::size_t n, const char* where) {
    if (w.size() != n) throw std::invalid_argument(std::string(where) + ": dimension mismatch");
    for (double t : w)
        if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument(std::string(where) + ": weights must be positive");
}

void require_compatible(const BOperator& a, const BOperator& b, const char* where) {
    if (a.dim() != b.dim() || !std::equal(a.weights().begin(), a.weights().end(), b.weights().begin()))
        throw std::invalid_argument(std::string(where) + ": operators live on different spaces");
}

std::vector<double> sqrt_weights(std::span<const double> w) {
    std::vector<double> s(w.size());
    std::transform(w.begin(), w.end(), s.begin(), [](double t) { return std::sqrt(t); });
    return s;
}

std::vector<double> inverse(std::span<const double> w) {
    std::vector<double> s(w.size());
    std::transform(w.begin(), w.end(), s.begin(), [](double t) { return 1.0 / t; });
    return s;
}

std::vector<double> to_vector(std::span<const double> w) { return {w.begin(), w.end()}; }

double adjoint_defect(const BOperator& a) {
    return (a.matrix() - adjoint(a).matrix()).frobenius_norm() / std::max(1.0, a.matrix().frobenius_norm());
}

}  // namespace

BOperator::BOperator(ComplexMatrix matrix, std::vector<double> weights)
    : matrix_(std::move(matrix)), weights_(std::move(weights)) {
    if (!matrix_.is_square()) throw std::invalid_argument("BOperator: matrix must be square");
    require_weights(weights_, matrix_.rows(), "BOperator");
}

BOperator::BOperator(ComplexMatrix matrix, const EmbeddingSpace& space)
    : BOperator(std::move(matrix), to_vector(space.weights())) {}

BOperator BOperator::identity(std::vector<double> weights) {
    const std::size_t n = weights.size();
    return {ComplexMatrix::identity(n), std::move(weights)};
}

BOperator BOperator::zero(std::vector<double> weights) {
    const std::size_t n = weights.size();
    return {ComplexMatrix(n, n), std::move(weights)};
}

GridFunction BOperator::apply(const GridFunction& u, const EmbeddingSpace& space) const {
    if (space.dim() != dim()) throw std::invalid_argument("BOperator::apply: dimension mismatch");
    const auto c = coefficients(u, space.basis());
    return reconstruct(matrix_ * c, space.basis());
}

BOperator BOperator::operator+(const BOperator& rhs) const {
    require_compatible(*this, rhs, "BOperator::operator+");
    return {matrix_ + rhs.matrix_, weights_};
}

BOperator BOperator::operator-(const BOperator& rhs) const {
    require_compatible(*this, rhs, "BOperator::operator-");
    return {matrix_ - rhs.matrix_, weights_};
}

BOperator BOperator::operator*(const BOperator& rhs) const {
    require_compatible(*this, rhs, "BOperator::operator*");
    return {matrix_ * rhs.matrix_, weights_};
}

BOperator operator*(Complex a, const BOperator& op) { return {a * op.matrix_, op.weights_}; }

std::vector<double> dyadic_weights(std::size_t n) {
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = std::ldexp(1.0, -static_cast<int>(k + 1));
    return w;
}

BOperator adjoint(const BOperator& a) {
    const auto w = a.weights();
    const std::size_t n = a.dim();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = std::conj(a.matrix()(j, i)) * (w[j] / w[i]);
    return {std::move(m), to_vector(w)};
}

ComplexMatrix h_symmetrized(const BOperator& a) {
    const auto s = sqrt_weights(a.weights());
    return scale_cols(scale_rows(s, a.matrix()), inverse(s));
}

BOperator from_h_symmetrized(const ComplexMatrix& m, std::vector<double> weights) {
    if (!m.is_square()) throw std::invalid_argument("from_h_symmetrized: matrix must be square");
    require_weights(weights, m.rows(), "from_h_symmetrized");
    const auto s = sqrt_weights(weights);
    return {scale_cols(scale_rows(inverse(s), m), s), std::move(weights)};
}

double h_operator_norm(const BOperator& a) {
    const auto sigma = singular_values_of(h_symmetrized(a));
    return sigma.empty() ? 0.0 : sigma.front();
}

BOperator random_operator(Rng& rng, std::vector<double> weights) {
    const std::size_t n = weights.size();
    return {random_matrix(rng, n, n), std::move(weights)};
}

BOperator random_selfadjoint(Rng& rng, std::vector<double> weights) {
    const std::size_t n = weights.size();
    return from_h_symmetrized(random_hermitian(rng, n), std::move(weights));
}

BOperator random_h_unitary(Rng& rng, std::vector<double> weights) {
    const std::size_t n = weights.size();
    return from_h_symmetrized(matrix_exp(Complex{0.0, 1.0} * random_hermitian(rng, n)), std::move(weights));
}

double relative_gap(const ComplexMatrix& x, const ComplexMatrix& y) {
    return (x - y).frobenius_norm() / std::max(1.0, y.frobenius_norm());
}

VerificationReport adjoint_algebra_check(const BOperator& a, const BOperator& b, Complex scalar, double tol) {
    require_compatible(a, b, "adjoint_algebra_check");
    const auto as = adjoint(a);
    const auto bs = adjoint(b);
    const Params params{{"dim", param_value(static_cast<std::int64_t>(a.dim()))}};

    VerificationReport r;
    r.add_check("conjugate_homogeneity", relative_gap(adjoint(scalar * a).matrix(), (std::conj(scalar) * as).matrix()), tol, 1, params);
    r.add_check("involution", relative_gap(adjoint(as).matrix(), a.matrix()), tol, 1, params);
    r.add_check("additivity", relative_gap(adjoint(a + b).matrix(), (as + bs).matrix()), tol, 1, params);
    r.add_check("anti_multiplicativity", relative_gap(adjoint(a * b).matrix(), (bs * as).matrix()), tol, 1, params);
    const auto sa = as * a;
    r.add_check("star_product_selfadjoint", relative_gap(adjoint(sa).matrix(), sa.matrix()), tol, 1, params);
    return r;
}

VerificationReport norm_inequality_report(const BOperator& a, double p, int restarts, std::uint64_t seed) {
    const auto as = adjoint(a);
    const auto sa = as * a;
    const double na = opnorm_p_estimate(a.matrix(), p, restarts, seed);
    const double nas = opnorm_p_estimate(as.matrix(), p, restarts, mix64(seed + 1));
    const double nsa = opnorm_p_estimate(sa.matrix(), p, restarts, mix64(seed + 2));
    const Params params{{"p", param_value(p)}, {"restarts", param_value(static_cast<std::int64_t>(restarts))}};

    VerificationReport r;
    r.seed = seed;
    r.add_measurement("b_norm", na, 1, params);
    r.add_measurement("b_norm_adjoint", nas, 1, params);
    r.add_measurement("b_norm_star_product", nsa, 1, params);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.add_measurement("ratio_star_product", na > 0.0 ? nsa / (na * na) : nan, 1, params);
    r.add_measurement("ratio_adjoint", na > 0.0 ? nas / na : nan, 1, params);

    const double h = h_operator_norm(a);
    const double hs = h_operator_norm(sa);
    const double gap = h > 0.0 ? std::abs(hs - h * h) / (h * h) : hs;
    r.add_check("h_star_product_identity", gap, 1e-8, 1);
    return r;
}

bool is_naturally_selfadjoint(const BOperator& a, double tol) { return adjoint_defect(a) <= tol; }

bool is_normal(const BOperator& a, double tol) {
    const auto as = adjoint(a);
    const double scale = std::max(1.0, a.matrix().frobenius_norm() * a.matrix().frobenius_norm());
    return ((a * as).matrix() - (as * a).matrix()).frobenius_norm() <= tol * scale;
}

bool is_unitary(const BOperator& u, double tol) {
    const auto us = adjoint(u);
    const auto id = ComplexMatrix::identity(u.dim());
    return ((u * us).matrix() - id).frobenius_norm() <= tol && ((us * u).matrix() - id).frobenius_norm() <= tol;
}

bool orthogonal_subspaces(const std::vector<GridFunction>& us, const std::vector<GridFunction>& vs,
                          const EmbeddingSpace& space, double tol) {
    if (us.empty() || vs.empty()) throw std::invalid_argument("orthogonal_subspaces: empty vector set");
    for (const auto& u : us)
        for (const auto& v : vs)
            if (std::abs(h_inner(v, u, space)) > tol || std::abs(h_inner(u, v, space)) > tol) return false;
    return true;
}

VerificationReport lax_check(const BOperator& t, double p, int restarts, std::uint64_t seed, double tol) {
    if (!is_naturally_selfadjoint(t, tol)) throw std::invalid_argument("lax_check: operator is not H-symmetric");
    const auto eig = hermitian_eigen(hermitian_part(h_symmetrized(t)));
    double norm_h = 0.0;
    for (double x : eig.values) norm_h = std::max(norm_h, std::abs(x));
    const double norm_b = opnorm_p_estimate(t.matrix(), p, restarts, seed);
    const Params params{{"p", param_value(p)}, {"dim", param_value(static_cast<std::int64_t>(t.dim()))}};

    VerificationReport r;
    r.seed = seed;
    r.add_measurement("h_norm", norm_h, 1, params);
    r.add_measurement("b_norm", norm_b, 1, params);
    r.add_measurement("lax_constant", norm_b > 0.0 ? norm_h * norm_h / (norm_b * norm_b) : 0.0, 1, params);

    auto lambda = general_eigenvalues(t.matrix());
    std::sort(lambda.begin(), lambda.end(), [](Complex x, Complex y) { return x.real() > y.real(); });
    double worst = 0.0;
    for (std::size_t k = 0; k < lambda.size(); ++k) worst = std::max(worst, std::abs(lambda[k] - eig.values[k]));
    r.add_check("point_spectrum", worst, 1e-8 * std::max(1.0, norm_h), lambda.size(), params);

    const double hs = h_operator_norm(adjoint(t) * t);
    r.add_check("h_star_product_identity", norm_h > 0.0 ? std::abs(hs - norm_h * norm_h) / (norm_h * norm_h) : hs, 1e-8, 1,
                params);
    return r;
}

double self_conjugacy_defect(const BOperator& a, std::span<const double> tgrid) {
    const auto m = h_symmetrized(a);
    const auto id = ComplexMatrix::identity(a.dim());
    double worst = 0.0;
    for (double t : tgrid) {
        for (double sign : {1.0, -1.0}) {
            const auto e = matrix_exp(Complex{0.0, sign * t} * m);
            worst = std::max(worst, (e.adjoint() * e - id).frobenius_norm());
        }
    }
    return worst;
}

bool self_conjugacy_check(const BOperator& a, std::span<const double> tgrid, double tol) {
    return self_conjugacy_defect(a, tgrid) <= tol;
}

PolarDecomposition polar_decompose(const BOperator& a, double tol) {
    const auto f = svd(h_symmetrized(a));
    const std::size_t n = a.dim();
    const double smax = f.sigma.empty() ? 0.0 : f.sigma.front();
    bool deficient = smax == 0.0;
    for (double s : f.sigma) deficient = deficient || s <= tol * smax;

    ComplexMatrix tt(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < n; ++k) acc += f.v(i, k) * f.sigma[k] * std::conj(f.v(j, k));
            tt(i, j) = acc;
        }
    const auto w = to_vector(a.weights());
    return {from_h_symmetrized(f.u * f.v.adjoint(), w), from_h_symmetrized(hermitian_part(tt), w), deficient};
}

SpectralDecomposition spectral_decompose(const BOperator& a, double tol) {
    if (!is_naturally_selfadjoint(a, tol)) throw std::invalid_argument("spectral_decompose: operator is not naturally self-adjoint");
    const auto eig = hermitian_eigen(hermitian_part(h_symmetrized(a)));
    const std::size_t n = a.dim();
    double scale = 1.0;
    for (double x : eig.values) scale = std::max(scale, std::abs(x));

    SpectralDecomposition out;
    const auto w = to_vector(a.weights());
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && eig.values[end - 1] - eig.values[end] <= tol * scale) ++end;
        double mean = 0.0;
        ComplexMatrix proj(n, n);
        for (std::size_t k = start; k < end; ++k) {
            mean += eig.values[k];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) proj(i, j) += eig.vectors(i, k) * std::conj(eig.vectors(j, k));
        }
        out.eigenvalues.push_back(mean / static_cast<double>(end - start));
        out.projections.push_back(from_h_symmetrized(proj, w));
        start = end;
    }
    return out;
}

double minmax_eigenvalue(const BOperator& a, std::size_t k, int trials, std::uint64_t seed) {
    const std::size_t n = a.dim();
    if (k == 0 || k > n) throw std::invalid_argument("minmax_eigenvalue: k out of range");
    if (trials < 1) throw std::invalid_argument("minmax_eigenvalue: trials must be positive");
    if (!is_naturally_selfadjoint(a, 1e-8)) throw std::invalid_argument("minmax_eigenvalue: operator is not naturally self-adjoint");
    const auto m = hermitian_part(h_symmetrized(a));
    const double scale = std::max(1.0, m.frobenius_norm());

    double best = -std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(trial)));
        std::vector<ComplexVector> q;
        ComplexVector next = random_vector(rng, n);
        while (q.size() < n) {
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : q) {
                    const Complex c = dot(b, next);
                    for (std::size_t i = 0; i < n; ++i) next[i] -= c * b[i];
                }
            const double len = norm2(next);
            if (len <= 1e-10 * scale) {
                next = random_vector(rng, n);
                continue;
            }
            for (auto& z : next) z /= len;
            q.push_back(next);
            next = m * q.back();
        }
        ComplexMatrix basis(n, n);
        for (std::size_t j = 0; j < n; ++j) basis.set_column(j, q[j]);
        const auto ritz = hermitian_eigen(hermitian_part(basis.adjoint() * m * basis));
        best = std::max(best, ritz.values[k - 1]);
    }
    return best;
}

RayleighComparison rayleigh_compare(const BOperator& a, const GridFunction& psi, const EmbeddingSpace& space) {
    if (lp_norm(psi, space.p()) == 0.0) throw std::invalid_argument("rayleigh_compare: psi must be nonzero");
    const auto apsi = a.apply(psi, space);
    const auto dual = duality_map(psi, space.p());
    const Complex b = pairing(apsi, dual) / pairing(psi, dual);
    const Complex h = h_inner(apsi, psi, space) / h_inner(psi, psi, space);
    return {b, h, std::abs(b - h)};
}

BOperator finite_difference_operator(const GridFunction& a, const GridFunction& b, const EmbeddingSpace& space,
                                     double ellipticity) {
    const auto& basis = space.basis();
    const auto& grid = basis.grid();
    if (grid.dim() != 1) throw std::invalid_argument("finite_difference_operator: one-dimensional grids only");
    require_same_grid(a, grid, "finite_difference_operator");
    require_same_grid(b, grid, "finite_difference_operator");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].real() >= ellipticity)) throw std::invalid_argument("finite_difference_operator: ellipticity violated");

    const std::size_t m = grid.size();
    const double h = grid.cell_width(0);
    const std::size_t n = space.dim();
    ComplexMatrix op(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const auto& e = basis.members[col];
        GridFunction le = GridFunction::zeros(grid.box(), grid.resolution());
        for (std::size_t i = 0; i < m; ++i) {
            const Complex up = e[(i + 1) % m];
            const Complex down = e[(i + m - 1) % m];
            const Complex second = (up - 2.0 * e[i] + down) / (h * h);
            const Complex first = (up - down) / (2.0 * h);
            le[i] = a[i] * second + grid.midpoint(0, i) * b[i] * first;
        }
        op.set_column(col, coefficients(le, basis));
    }
    return {std::move(op), to_vector(space.weights())};
}

}  // namespace ah
