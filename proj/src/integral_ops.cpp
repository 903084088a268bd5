#include "almost_hilbert/integral_ops.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "almost_hilbert/kernels.hpp"
#include "almost_hilbert/random.hpp"
#include "almost_hilbert/sbasis.hpp"

namespace ah {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// FFTW planning is not thread-safe; execution on a private plan is.
void fft(ComplexVector& x, int direction) {
    auto* data = reinterpret_cast<fftw_complex*>(x.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(x.size()), data, data, direction, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
}

void require_same_size(const PeriodicSignal& f, const PeriodicSignal& g, const char* where) {
    if (f.size() != g.size()) throw std::invalid_argument(std::string(where) + ": signal lengths differ");
}

void add_constant_checks(VerificationReport& r, const std::vector<double>& ratios, const Params& params) {
    const std::size_t half = std::max<std::size_t>(1, ratios.size() / 2);
    const double first = *std::max_element(ratios.begin(), ratios.begin() + static_cast<std::ptrdiff_t>(half));
    const double all = *std::max_element(ratios.begin(), ratios.end());
    r.add_measurement("constant", all, ratios.size(), params);
    r.add_check("finite", std::isfinite(all) ? 0.0 : std::numeric_limits<double>::infinity(), 0.0, ratios.size(), params);
    r.add_check("doubling_stability", first > 0.0 ? all / first : 1.0, 1.5, ratios.size(), params);
}

double cell_antiderivative(double u, double alpha) {
    return std::copysign(std::pow(std::abs(u), alpha) / alpha, u);
}

void require_alpha(double alpha, const char* where) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument(std::string(where) + ": alpha must lie in (0, 1)");
}

}  // namespace

PeriodicSignal::PeriodicSignal(ComplexVector samples) : samples_(std::move(samples)) {
    if (samples_.size() < 4 || !std::has_single_bit(samples_.size()))
        throw std::invalid_argument("PeriodicSignal: length must be a power of two >= 4");
    for (const auto& z : samples_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument("PeriodicSignal: non-finite sample");
}

PeriodicSignal PeriodicSignal::sample(std::size_t m, const std::function<Complex(double)>& f) {
    ComplexVector s(m);
    for (std::size_t j = 0; j < m; ++j) s[j] = f(static_cast<double>(j) / static_cast<double>(m));
    return PeriodicSignal(std::move(s));
}

Complex signal_inner(const PeriodicSignal& f, const PeriodicSignal& g) {
    require_same_size(f, g, "signal_inner");
    Complex acc{};
    for (std::size_t j = 0; j < f.size(); ++j) acc += f[j] * std::conj(g[j]);
    return acc / static_cast<double>(f.size());
}

double signal_norm(const PeriodicSignal& f, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& z : f.samples()) m = std::max(m, std::abs(z));
        return m;
    }
    double acc = 0.0;
    for (const auto& z : f.samples()) acc += std::pow(std::abs(z), p);
    return std::pow(acc / static_cast<double>(f.size()), 1.0 / p);
}

PeriodicSignal hilbert_multiplier(const PeriodicSignal& f) {
    const std::size_t m = f.size();
    ComplexVector x(f.samples().begin(), f.samples().end());
    fft(x, FFTW_FORWARD);
    x[0] = 0.0;
    x[m / 2] = 0.0;
    for (std::size_t k = 1; k < m / 2; ++k) {
        x[k] *= Complex{0.0, -1.0};
        x[m - k] *= Complex{0.0, 1.0};
    }
    fft(x, FFTW_BACKWARD);
    for (auto& z : x) z /= static_cast<double>(m);
    return PeriodicSignal(std::move(x));
}

PeriodicSignal odd_kernel_operator(const PeriodicSignal& f, OddKernel omega, double eps) {
    const std::size_t m = f.size();
    const double md = static_cast<double>(m);
    if (std::abs(omega.plus + omega.minus) > 1e-12 * std::max({1.0, std::abs(omega.plus), std::abs(omega.minus)}))
        throw std::invalid_argument("odd_kernel_operator: kernel violates the cancellation condition");
    if (!(eps * md >= 1.0 - 1e-9)) throw std::invalid_argument("odd_kernel_operator: eps below the grid spacing");
    if (!(eps <= 0.5)) throw std::invalid_argument("odd_kernel_operator: eps must be <= 1/2");

    const double cut = eps * md;
    // c[(i - j) mod M] multiplies f_j in output i; the offset y - x is -(i - j).
    ComplexVector c(m);
    for (std::size_t r = 1; r < m; ++r) {
        const bool forward = r > m / 2;
        const double dist = static_cast<double>(forward ? m - r : r);
        if (dist < cut - 1e-9) continue;
        const double weight = std::abs(dist - cut) <= 1e-9 ? 0.5 : 1.0;
        const double om = forward ? omega.plus : omega.minus;
        c[r] = weight * om * std::numbers::pi / std::tan(std::numbers::pi * dist / md) / md;
    }
    return PeriodicSignal(kernels::parallel::circulant_apply(c, f.samples()));
}

PeriodicSignal hilbert_pv(const PeriodicSignal& f, double eps) {
    return odd_kernel_operator(f, {-1.0 / std::numbers::pi, 1.0 / std::numbers::pi}, eps);
}

VerificationReport adjoint_relation_check(const SignalOperator& op, const PeriodicSignal& f, const PeriodicSignal& g,
                                          int sign, double tol) {
    require_same_size(f, g, "adjoint_relation_check");
    if (sign != 1 && sign != -1) throw std::invalid_argument("adjoint_relation_check: sign must be +1 or -1");
    const Complex lhs = signal_inner(op(f), g);
    const Complex rhs = static_cast<double>(sign) * signal_inner(f, op(g));
    const double scale = signal_norm(f, 2.0) * signal_norm(g, 2.0);
    VerificationReport r;
    r.add_check("adjoint_relation", scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs), tol, 1,
                {{"sign", param_value(static_cast<std::int64_t>(sign))}});
    return r;
}

VerificationReport lp_bound_report(const SignalOperator& op, double p, int trials, std::uint64_t seed, std::size_t m) {
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("lp_bound_report: p must lie in (1, infinity)");
    if (trials < 1) throw std::invalid_argument("lp_bound_report: trials must be >= 1");
    constexpr int kDegree = 16;
    const auto ratios = map_trials<double>(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng(trial_seed(seed, t));
        std::vector<Complex> coef(2 * kDegree);
        for (auto& z : coef) z = rng.complex_normal();
        const auto f = PeriodicSignal::sample(m, [&](double x) {
            Complex acc{};
            for (int k = 1; k <= kDegree; ++k) {
                const double ang = 2.0 * std::numbers::pi * k * x;
                acc += coef[2 * k - 2] * std::polar(1.0, ang) + coef[2 * k - 1] * std::polar(1.0, -ang);
            }
            return acc;
        });
        return signal_norm(op(f), p) / signal_norm(f, p);
    });
    VerificationReport r;
    r.seed = seed;
    add_constant_checks(r, ratios,
                        {{"p", param_value(p)},
                         {"probe", "trig_degree_16"},
                         {"points", param_value(static_cast<std::int64_t>(m))},
                         {"trials", param_value(static_cast<std::int64_t>(trials))}});
    return r;
}

double riesz_gamma(double alpha) {
    require_alpha(alpha, "riesz_gamma");
    return std::pow(2.0, alpha) * std::sqrt(std::numbers::pi) * std::tgamma(alpha / 2) / std::tgamma((1.0 - alpha) / 2);
}

GridFunction riesz_potential(const GridFunction& f, double alpha) {
    require_alpha(alpha, "riesz_potential");
    if (f.dim() != 1) throw std::invalid_argument("riesz_potential: one-dimensional grids only");
    const std::size_t n = f.size();
    const double h = f.cell_width(0);
    std::vector<double> t(n);
    for (std::size_t d = 0; d < n; ++d) {
        const double dd = static_cast<double>(d);
        t[d] = cell_antiderivative((dd + 0.5) * h, alpha) - cell_antiderivative((dd - 0.5) * h, alpha);
    }
    auto y = kernels::parallel::toeplitz_apply(t, f.samples());
    const double g = riesz_gamma(alpha);
    for (auto& z : y) z /= g;
    return {f.box(), f.resolution(), std::move(y)};
}

Complex riesz_potential_at(const GridFunction& f, double alpha, double x) {
    require_alpha(alpha, "riesz_potential_at");
    if (f.dim() != 1) throw std::invalid_argument("riesz_potential_at: one-dimensional grids only");
    const double h = f.cell_width(0);
    const double lo = f.box()[0].lo;
    Complex acc{};
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double a = lo + static_cast<double>(j) * h - x;
        acc += f[j] * (cell_antiderivative(a + h, alpha) - cell_antiderivative(a, alpha));
    }
    return acc / riesz_gamma(alpha);
}

double hls_exponent(double p, double alpha) {
    require_alpha(alpha, "hls_exponent");
    if (!(p > 1.0)) throw std::invalid_argument("hls_exponent: p must exceed 1");
    const double inv = 1.0 / p - alpha;
    if (!(inv > 0.0)) throw std::invalid_argument("hls_exponent: 1/p - alpha must be positive");
    return 1.0 / inv;
}

VerificationReport hls_bound_report(double alpha, double p, int trials, std::uint64_t seed, std::size_t resolution) {
    const double q = hls_exponent(p, alpha);
    if (trials < 1) throw std::invalid_argument("hls_bound_report: trials must be >= 1");
    const Interval box{-2.0, 2.0};
    const auto ratios = map_trials<double>(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng(trial_seed(seed, t));
        const std::size_t pieces = 1 + rng.index(16);
        std::vector<double> values(pieces);
        for (auto& v : values) v = rng.normal();
        const double a = rng.uniform(-0.5, 0.25);
        const double b = rng.uniform(a + 0.05, 0.5);
        const auto f = GridFunction::sample(box, resolution, [&](double x) {
            if (x < a || x >= b) return Complex{};
            const auto idx = std::min(pieces - 1, static_cast<std::size_t>((x - a) / (b - a) * static_cast<double>(pieces)));
            return Complex{values[idx]};
        });
        const double fp = lp_norm(f, p);
        if (fp == 0.0) return 0.0;
        return lp_norm(riesz_potential(f, alpha), q) / fp;
    });
    VerificationReport r;
    r.seed = seed;
    const Params params{{"alpha", param_value(alpha)},
                        {"p", param_value(p)},
                        {"q", param_value(q)},
                        {"resolution", param_value(static_cast<std::int64_t>(resolution))},
                        {"trials", param_value(static_cast<std::int64_t>(trials))}};
    r.add_check("exponent_in_range", (q > p && std::isfinite(q)) ? 0.0 : 1.0, 0.0, 1, params);
    add_constant_checks(r, ratios, params);
    return r;
}

}  // namespace ah
