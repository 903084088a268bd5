#include "almost_hilbert/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "almost_hilbert/random.hpp"

namespace ah {

namespace {

struct Rotation {
    double c;
    double s;
    Complex phase_conj;  // conj(e) where e is the phase of the coupling term
};

// Complex Jacobi rotation G = [[c, s], [-s*conj(e), c*conj(e)]] annihilating
// the coupling g*e between two coordinates with diagonal weights alpha, beta.
Rotation jacobi_rotation(double alpha, double beta, Complex coupling) {
    const double g = std::abs(coupling);
    const Complex e = coupling / g;
    const double zeta = (beta - alpha) / (2.0 * g);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c, std::conj(e)};
}

// columns p, q of m <- [m_p, m_q] * G
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& r) {
    const Complex g11 = r.c, g12 = r.s;
    const Complex g21 = -r.s * r.phase_conj, g22 = r.c * r.phase_conj;
    for (std::size_t k = 0; k < m.rows(); ++k) {
        const Complex x = m(k, p), y = m(k, q);
        m(k, p) = x * g11 + y * g21;
        m(k, q) = x * g12 + y * g22;
    }
}

// rows p, q of m <- G^H [m_p; m_q]
void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& r) {
    const Complex g11 = r.c, g12 = r.s;
    const Complex g21 = -r.s * r.phase_conj, g22 = r.c * r.phase_conj;
    for (std::size_t k = 0; k < m.cols(); ++k) {
        const Complex x = m(p, k), y = m(q, k);
        m(p, k) = std::conj(g11) * x + std::conj(g21) * y;
        m(q, k) = std::conj(g12) * x + std::conj(g22) * y;
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Extend the first `filled` orthonormal columns of u to an orthonormal set.
void complete_orthonormal(ComplexMatrix& u, std::vector<bool> filled) {
    const std::size_t m = u.rows();
    std::size_t candidate = 0;
    for (std::size_t j = 0; j < u.cols(); ++j) {
        if (filled[j]) continue;
        while (candidate < m) {
            ComplexVector v(m);
            v[candidate++] = 1.0;
            // two passes of Gram-Schmidt
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t k = 0; k < u.cols(); ++k) {
                    if (!filled[k]) continue;
                    const ComplexVector col = u.column(k);
                    const Complex proj = dot(col, v);
                    for (std::size_t i = 0; i < m; ++i) v[i] -= proj * col[i];
                }
            const double n = norm2(v);
            if (n > 1e-8) {
                for (auto& z : v) z /= n;
                u.set_column(j, v);
                filled[j] = true;
                break;
            }
        }
    }
}

ComplexMatrix hessenberg(ComplexMatrix h) {
    const std::size_t n = h.rows();
    if (n < 3) return h;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        ComplexVector v(n - k - 1);
        for (std::size_t i = k + 1; i < n; ++i) v[i - k - 1] = h(i, k);
        const double xnorm = norm2(v);
        if (xnorm == 0.0) continue;
        const Complex phase = std::abs(v[0]) > 0.0 ? v[0] / std::abs(v[0]) : Complex{1.0};
        v[0] += phase * xnorm;
        const double vnorm = norm2(v);
        for (auto& z : v) z /= vnorm;
        // H <- (I - 2 v v^H) H
        for (std::size_t j = 0; j < n; ++j) {
            Complex s{};
            for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * h(k + 1 + i, j);
            for (std::size_t i = 0; i < v.size(); ++i) h(k + 1 + i, j) -= 2.0 * v[i] * s;
        }
        // H <- H (I - 2 v v^H)
        for (std::size_t i = 0; i < n; ++i) {
            Complex s{};
            for (std::size_t j = 0; j < v.size(); ++j) s += h(i, k + 1 + j) * v[j];
            for (std::size_t j = 0; j < v.size(); ++j) h(i, k + 1 + j) -= 2.0 * s * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
    return h;
}

ComplexVector dual_vector(std::span<const Complex> v, double p) {
    // w with ||w||_q = 1 and w^H v = ||v||_p
    const double norm = vector_pnorm(v, p);
    ComplexVector w(v.size());
    if (norm == 0.0) return w;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a == 0.0) continue;
        w[i] = (v[i] / a) * std::pow(a / norm, p - 1.0);
    }
    return w;
}

}  // namespace

double vector_pnorm(std::span<const Complex> x, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& z : x) m = std::max(m, std::abs(z));
        return m;
    }
    double scale = 0.0;
    for (const auto& z : x) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return 0.0;
    double s = 0.0;
    for (const auto& z : x) s += std::pow(std::abs(z) / scale, p);
    return scale * std::pow(s, 1.0 / p);
}

double conjugate_exponent(double p) {
    if (p == 1.0) return kInfinity;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

EigenResult hermitian_eigen(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) throw std::invalid_argument("hermitian_eigen: matrix is not square");
    if (!(tol > 0.0)) throw std::invalid_argument("hermitian_eigen: tol must be positive");
    const std::size_t n = m.rows();
    const double scale = m.frobenius_norm();
    if ((m - m.adjoint()).frobenius_norm() > tol * std::max(scale, 1e-300)) {
        throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian within tolerance");
    }
    ComplexMatrix a = hermitian_part(m);
    ComplexMatrix v = ComplexMatrix::identity(n);

    const std::size_t sweep_cap = std::max<std::size_t>(100 * n * n, 100);
    bool converged = n <= 1 || scale == 0.0;
    for (std::size_t sweep = 0; sweep < sweep_cap && !converged; ++sweep) {
        if (off_diagonal_norm(a) <= tol * scale) {
            converged = true;
            break;
        }
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                const double diag = std::abs(a(p, p).real()) + std::abs(a(q, q).real());
                if (g == 0.0 || (diag > 0.0 && g < 1e-18 * diag)) continue;
                const Rotation r = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
                rotate_columns(a, p, q, r);
                rotate_rows(a, p, q, r);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                rotate_columns(v, p, q, r);
                rotated = true;
            }
        if (!rotated) converged = true;
    }
    if (!converged) {
        throw ConvergenceError("hermitian_eigen: sweep cap reached", off_diagonal_norm(a));
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    EigenResult result{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        result.values[k] = a(order[k], order[k]).real();
        result.vectors.set_column(k, v.column(order[k]));
    }
    return result;
}

SvdResult svd(const ComplexMatrix& m, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("svd: tol must be positive");
    if (m.rows() < m.cols()) {
        SvdResult t = svd(m.adjoint(), tol);
        return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
    }
    const std::size_t rows = m.rows(), n = m.cols();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const std::size_t sweep_cap = std::max<std::size_t>(100 * n * n, 100);
    bool converged = n <= 1;
    double worst = 0.0;
    for (std::size_t sweep = 0; sweep < sweep_cap && !converged; ++sweep) {
        converged = true;
        worst = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                Complex gamma{};
                for (std::size_t k = 0; k < rows; ++k) {
                    alpha += std::norm(a(k, p));
                    beta += std::norm(a(k, q));
                    gamma += std::conj(a(k, p)) * a(k, q);
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) continue;
                worst = std::max(worst, g / std::sqrt(alpha * beta));
                converged = false;
                const Rotation r = jacobi_rotation(alpha, beta, gamma);
                rotate_columns(a, p, q, r);
                rotate_columns(v, p, q, r);
            }
    }
    if (!converged) throw ConvergenceError("svd: sweep cap reached", worst);

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) norms[j] = norm2(a.column(j));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return norms[i] > norms[j]; });

    SvdResult r{ComplexMatrix(rows, n), std::vector<double>(n), ComplexMatrix(n, n)};
    const double smax = n > 0 ? norms[order[0]] : 0.0;
    std::vector<bool> filled(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        r.sigma[k] = norms[j];
        r.v.set_column(k, v.column(j));
        if (norms[j] > 1e-13 * smax && norms[j] > 0.0) {
            ComplexVector col = a.column(j);
            for (auto& z : col) z /= norms[j];
            r.u.set_column(k, col);
            filled[k] = true;
        }
    }
    complete_orthonormal(r.u, filled);
    return r;
}

ComplexVector general_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("general_eigenvalues: matrix is not square");
    const std::size_t n = m.rows();
    ComplexVector eig(n);
    if (n == 0) return eig;
    ComplexMatrix h = hessenberg(m);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double scale = std::max(m.frobenius_norm(), std::numeric_limits<double>::min());

    std::size_t hi = n - 1;
    std::size_t iter = 0, total = 0;
    const std::size_t cap = 100 * n * n + 100;
    while (true) {
        if (hi == 0) {
            eig[0] = h(0, 0);
            break;
        }
        std::size_t lo = hi;
        while (lo > 0) {
            const double sub = std::abs(h(lo, lo - 1));
            const double ref = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            if (sub <= eps * (ref > 0.0 ? ref : scale)) {
                h(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig[hi] = h(hi, hi);
            --hi;
            iter = 0;
            continue;
        }
        if (++total > cap) {
            throw ConvergenceError("general_eigenvalues: QR iteration cap reached",
                                   std::abs(h(hi, hi - 1)));
        }
        ++iter;
        Complex mu;
        if (iter % 11 == 10) {
            mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
            const Complex tr_half = 0.5 * (a + d);
            const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
            const Complex l1 = tr_half + disc, l2 = tr_half - disc;
            mu = std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
        }
        for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
        std::vector<std::pair<Complex, Complex>> rots;
        rots.reserve(hi - lo);
        for (std::size_t k = lo; k < hi; ++k) {
            const Complex a = h(k, k), b = h(k + 1, k);
            const double r = std::hypot(std::abs(a), std::abs(b));
            Complex c = 1.0, s = 0.0;
            if (r > 0.0) {
                c = a / r;
                s = b / r;
            }
            for (std::size_t j = k; j <= hi; ++j) {
                const Complex x = h(k, j), y = h(k + 1, j);
                h(k, j) = std::conj(c) * x + std::conj(s) * y;
                h(k + 1, j) = -s * x + c * y;
            }
            rots.emplace_back(c, s);
        }
        for (std::size_t k = lo; k < hi; ++k) {
            const auto [c, s] = rots[k - lo];
            const std::size_t last = std::min(k + 2, hi);
            for (std::size_t i = lo; i <= last; ++i) {
                const Complex x = h(i, k), y = h(i, k + 1);
                h(i, k) = x * c + y * s;
                h(i, k + 1) = -x * std::conj(s) + y * std::conj(c);
            }
        }
        for (std::size_t k = lo; k <= hi; ++k) h(k, k) += mu;
    }
    return eig;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("matrix_exp: matrix is not square");
    const std::size_t n = m.rows();
    double norm1 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::abs(m(i, j));
        norm1 = std::max(norm1, s);
    }
    if (norm1 > 700.0) throw std::overflow_error("matrix_exp: norm too large, result would overflow");
    int squarings = 0;
    if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    ComplexMatrix a = m;
    a *= std::ldexp(1.0, -squarings);

    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k < 40; ++k) {
        term = a * term;
        term *= 1.0 / k;
        result += term;
        if (term.max_abs() <= 1e-18 * result.max_abs()) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    if (!result.all_finite()) throw std::overflow_error("matrix_exp: overflow");
    return result;
}

double opnorm_p_upper(const ComplexMatrix& m, double p) {
    double n1 = 0.0, ninf = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
        n1 = std::max(n1, s);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
        ninf = std::max(ninf, s);
    }
    if (p == 1.0) return n1;
    if (std::isinf(p)) return ninf;
    return std::pow(n1, 1.0 / p) * std::pow(ninf, 1.0 - 1.0 / p);
}

double opnorm_p_estimate(const ComplexMatrix& m, double p, int restarts, std::uint64_t seed) {
    if (!(p >= 1.0)) throw std::invalid_argument("opnorm_p_estimate: p must be >= 1");
    if (restarts < 1) throw std::invalid_argument("opnorm_p_estimate: restarts must be >= 1");
    if (p == 1.0 || std::isinf(p)) return opnorm_p_upper(m, p);
    const std::size_t n = m.cols();
    if (n == 0) return 0.0;
    const double q = conjugate_exponent(p);
    const ComplexMatrix mh = m.adjoint();
    Rng rng(seed);
    double best = 0.0;
    for (int r = 0; r < restarts; ++r) {
        ComplexVector x(n);
        if (r == 0) {
            std::fill(x.begin(), x.end(), Complex{1.0});
        } else {
            x = random_vector(rng, n);
        }
        const double xn = vector_pnorm(x, p);
        for (auto& z : x) z /= xn;
        double prev = -1.0;
        int stagnant = 0;
        for (int it = 0; it < 5000; ++it) {
            const ComplexVector y = m * std::span<const Complex>(x);
            const double est = vector_pnorm(y, p);
            best = std::max(best, est);
            if (est == 0.0) break;
            if (std::abs(est - prev) <= 1e-15 * est) {
                if (++stagnant >= 3) break;
            } else {
                stagnant = 0;
            }
            prev = est;
            const ComplexVector z = mh * std::span<const Complex>(dual_vector(y, p));
            const double znorm = vector_pnorm(z, q);
            if (znorm == 0.0) break;
            x = dual_vector(z, q);
        }
    }
    return best;
}

}  // namespace ah
