#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "almost_hilbert/cli.hpp"
#include "almost_hilbert/hilbert_embed.hpp"
#include "almost_hilbert/integral_ops.hpp"
#include "almost_hilbert/kernels.hpp"
#include "almost_hilbert/ks2.hpp"
#include "almost_hilbert/numerics.hpp"
#include "almost_hilbert/operator_algebra.hpp"
#include "almost_hilbert/random.hpp"
#include "almost_hilbert/sbasis.hpp"
#include "almost_hilbert/schatten.hpp"

namespace ah {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
const std::vector<double> kDualityExponents{1.5, 2.0, 3.0, 4.0};

double worst_of(const std::vector<double>& v) {
    double w = 0.0;
    for (double x : v) {
        if (std::isnan(x)) return kNan;
        w = std::max(w, x);
    }
    return w;
}

std::string num(double v) { return param_value(v); }
std::string num(std::size_t v) { return param_value(static_cast<std::int64_t>(v)); }

std::string dims_label(const std::vector<std::size_t>& dims) {
    std::string s;
    for (auto d : dims) s += (s.empty() ? "" : "/") + std::to_string(d);
    return s;
}

class Context {
public:
    Context(std::string suite, const SuiteParams& params, VerificationReport& report)
        : suite_(std::move(suite)), params_(params), report_(report) {}

    const SuiteParams& params() const { return params_; }

    std::string full(const std::string& name) const { return suite_ + "." + name; }
    std::uint64_t stream(const std::string& name) const { return stream_seed(params_.seed, full(name)); }
    std::size_t trials(std::size_t fallback) const { return params_.trials > 0 ? params_.trials : fallback; }

    std::vector<std::size_t> dims() const {
        if (params_.dim > 0) return {params_.dim};
        return {4, 8, 16};
    }
    std::size_t dim_or(std::size_t fallback) const { return params_.dim > 0 ? params_.dim : fallback; }

    /// Runs f(rng, t) for each trial on its own stream and returns every result.
    template <class R, class F>
    std::vector<R> sweep(const std::string& name, std::size_t n, F&& f) const {
        const auto s = stream(name);
        return map_trials<R>(n, [&](std::size_t t) {
            Rng rng(trial_seed(s, t));
            return f(rng, t);
        });
    }

    void check(const std::string& name, double worst, double tol, std::size_t samples, Params params = {}) {
        report_.add_check(full(name), worst, tol * params_.tol_scale, samples, std::move(params));
    }
    void measure(const std::string& name, double value, std::size_t samples, Params params = {}) {
        report_.add_measurement(full(name), value, samples, std::move(params));
    }
    void tail(const std::string& name, double value) { report_.add_tail_bound(full(name), value); }

    /// Copies a module-level report, rescaling checked tolerances.
    void absorb(const VerificationReport& sub, const std::string& prefix) {
        for (const auto& c : sub.checks) {
            if (c.status == CheckStatus::measured)
                measure(prefix + c.name, c.worst_violation, c.samples, c.params);
            else
                check(prefix + c.name, c.worst_violation, c.tolerance, c.samples, c.params);
        }
        for (const auto& [k, v] : sub.tail_bounds) tail(prefix + k, v);
    }

private:
    std::string suite_;
    const SuiteParams& params_;
    VerificationReport& report_;
};

// ---------------------------------------------------------------- embedding

void embedding_suite(Context& cx) {
    const auto& P = cx.params();
    const std::size_t n = cx.dim_or(8);
    const auto dims = cx.dims();

    {
        const auto v = cx.sweep<double>("eigen_sorted", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto e = hermitian_eigen(random_hermitian(rng, dims[t % dims.size()]));
            double w = 0.0;
            for (std::size_t i = 1; i < e.values.size(); ++i) w = std::max(w, e.values[i] - e.values[i - 1]);
            return w;
        });
        cx.check("eigen_sorted", worst_of(v), 0.0, v.size(), {{"dims", dims_label(dims)}});
    }
    {
        const auto v = cx.sweep<double>("eigen_reconstruction", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto m = random_hermitian(rng, dims[t % dims.size()]);
            const auto e = hermitian_eigen(m);
            const auto r = scale_cols(e.vectors, e.values) * e.vectors.adjoint();
            return relative_gap(r, m);
        });
        cx.check("eigen_reconstruction", worst_of(v), 1e-12, v.size(), {{"dims", dims_label(dims)}});
    }
    {
        const auto v = cx.sweep<double>("svd_adjoint_invariance", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto m = random_matrix(rng, dims[t % dims.size()], dims[t % dims.size()]);
            const auto a = singular_values_of(m);
            const auto b = singular_values_of(m.adjoint());
            double w = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
            return w / std::max(1.0, a.front());
        });
        cx.check("svd_adjoint_invariance", worst_of(v), 1e-12, v.size(), {{"dims", dims_label(dims)}});
    }
    {
        const std::size_t d = cx.dim_or(8);
        const auto v = cx.sweep<double>("opnorm_two", cx.trials(100), [&](Rng& rng, std::size_t) {
            const auto m = random_matrix(rng, d, d);
            const double s = singular_values_of(m).front();
            return std::abs(opnorm_p_estimate(m, 2.0, 4, rng.next()) - s) / s;
        });
        cx.check("opnorm_two", worst_of(v), 1e-8, v.size(), {{"dim", num(d)}});
    }
    {
        const auto v = cx.sweep<double>("matrix_exp_commuting", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const std::size_t d = dims[t % dims.size()];
            ComplexMatrix a(d, d), b(d, d);
            if (t % 2 == 0) {
                for (std::size_t i = 0; i < d; ++i) {
                    a(i, i) = rng.complex_normal();
                    b(i, i) = rng.complex_normal();
                }
            } else {
                a = Complex{1.0 / std::sqrt(static_cast<double>(d))} * random_matrix(rng, d, d);
                b = Complex{0.5} * a * a - Complex{0.25} * a;
            }
            return relative_gap(matrix_exp(a + b), matrix_exp(a) * matrix_exp(b));
        });
        cx.check("matrix_exp_commuting", worst_of(v), 1e-10, v.size(), {{"pairs", "diagonal/polynomial"}});
    }

    std::map<double, SchauderBasis> bases;
    for (double p : kDualityExponents) bases.emplace(p, fourier_sbasis(n, p, P.grid));
    const Params pgrid{{"n", num(n)}, {"p", "1.5/2/3/4"}, {"resolution", num(P.grid)}};

    {
        std::vector<double> all;
        for (double p : kDualityExponents) {
            const auto& basis = bases.at(p);
            const double q = conjugate_exponent(p);
            const auto v = cx.sweep<double>("duality_identity:" + num(p), cx.trials(200), [&](Rng& rng, std::size_t) {
                const auto u = random_span_element(basis, rng);
                const auto j = duality_map(u, p);
                const double n2 = std::pow(lp_norm(u, p), 2);
                return std::max(std::abs(pairing(u, j) - n2), std::abs(std::pow(lp_norm(j, q), 2) - n2)) / n2;
            });
            all.insert(all.end(), v.begin(), v.end());
        }
        cx.check("duality_identity", worst_of(all), 1e-6, all.size(), pgrid);
    }
    {
        std::vector<double> all;
        for (double p : kDualityExponents) {
            const auto& basis = bases.at(p);
            const double q = conjugate_exponent(p);
            const auto v = cx.sweep<double>("duality_homogeneity:" + num(p), cx.trials(50), [&](Rng& rng, std::size_t) {
                const auto u = random_span_element(basis, rng);
                const Complex c = rng.complex_normal();
                const auto ju = duality_map(u, p);
                return lp_norm(duality_map(c * u, p) - c * ju, q) / (std::abs(c) * lp_norm(ju, q));
            });
            all.insert(all.end(), v.begin(), v.end());
        }
        cx.check("duality_homogeneity", worst_of(all), 1e-8, all.size(), pgrid);
    }
    {
        const auto& basis = bases.at(kDualityExponents.back());
        const auto v = cx.sweep<double>("projection_idempotent", cx.trials(100), [&](Rng& rng, std::size_t) {
            auto f = GridFunction::zeros(basis.grid().box(), P.grid);
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = rng.complex_normal();
            const auto once = reconstruct(coefficients(f, basis), basis);
            const auto twice = reconstruct(coefficients(once, basis), basis);
            return lp_norm(twice - once, 2.0) / std::max(1e-300, lp_norm(once, 2.0));
        });
        cx.check("projection_idempotent", worst_of(v), 1e-10, v.size(), {{"n", num(n)}});
    }

    std::map<double, EmbeddingSpace> spaces;
    for (double p : kDualityExponents) spaces.emplace(p, EmbeddingSpace::dyadic(bases.at(p)));

    {
        struct Chain {
            double sup_gap, b_gap, sup_over_b;
        };
        std::vector<Chain> all;
        double dual_max = 0.0;
        for (double p : kDualityExponents) {
            const auto& s = spaces.at(p);
            for (double d : dual_norms(s.basis())) dual_max = std::max(dual_max, d);
            const auto v = cx.sweep<Chain>("norm_chain:" + num(p), cx.trials(500), [&](Rng& rng, std::size_t) {
                const auto u = random_span_element(s.basis(), rng);
                double sup = 0.0;
                for (const auto& z : coefficients(u, s.basis())) sup = std::max(sup, std::abs(z));
                const double h = h_norm(u, s);
                const double b = lp_norm(u, p);
                return Chain{std::max(0.0, h - sup), std::max(0.0, h - b), sup / b};
            });
            all.insert(all.end(), v.begin(), v.end());
        }
        std::vector<double> a, b, c;
        for (const auto& x : all) {
            a.push_back(x.sup_gap);
            b.push_back(x.b_gap);
            c.push_back(x.sup_over_b);
        }
        cx.check("norm_chain_sup", worst_of(a), 1e-12, a.size(), pgrid);
        cx.check("norm_chain_b", worst_of(b), 5e-7, b.size(), pgrid);
        cx.measure("coefficient_sup_over_b_norm", worst_of(c), c.size(), pgrid);
        cx.measure("dual_norm_max", dual_max, n * kDualityExponents.size(), pgrid);
    }
    {
        const auto ref = EmbeddingSpace::dyadic(fourier_sbasis(n, P.p, 4096));
        const auto g = gram_matrix(ref);
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) off = std::max(off, std::abs(g(i, j)));
        cx.check("gram_offdiagonal", off, 1e-8, 1, {{"n", num(n)}, {"p", num(P.p)}, {"resolution", "4096"}});
    }

    const auto space = EmbeddingSpace::dyadic(fourier_sbasis(n, P.p, P.grid));
    const Params pspace{{"n", num(n)}, {"p", num(P.p)}, {"resolution", num(P.grid)}};
    {
        struct Lin {
            double add, hom;
        };
        const auto v = cx.sweep<Lin>("jb_linearity", cx.trials(100), [&](Rng& rng, std::size_t) {
            const auto u = random_span_element(space.basis(), rng);
            const auto w = random_span_element(space.basis(), rng);
            const auto x = random_span_element(space.basis(), rng);
            const Complex a = rng.complex_normal();
            const Complex sum = jb_apply(u + w, space)(x);
            const Complex parts = jb_apply(u, space)(x) + jb_apply(w, space)(x);
            const Complex scaled = jb_apply(a * u, space)(x);
            const Complex expect = std::conj(a) * jb_apply(u, space)(x);
            return Lin{std::abs(sum - parts) / std::max(1.0, std::abs(sum)),
                       std::abs(scaled - expect) / std::max(1.0, std::abs(expect))};
        });
        std::vector<double> a, h;
        for (const auto& x : v) {
            a.push_back(x.add);
            h.push_back(x.hom);
        }
        cx.check("jb_additivity", worst_of(a), 1e-12, a.size(), pspace);
        cx.check("jb_conjugate_homogeneity", worst_of(h), 1e-12, h.size(), pspace);
    }
    {
        const auto v = cx.sweep<double>("jb_norm_bound", cx.trials(100), [&](Rng& rng, std::size_t) {
            const auto r = jb_norm_bound(random_span_element(space.basis(), rng), space, 20, rng.next());
            return std::max(0.0, r.functional_estimate - r.h_norm);
        });
        cx.check("jb_norm_bound", worst_of(v), 1e-8, v.size(), pspace);
    }
    {
        struct Gs {
            double orth, unit, bio;
        };
        const std::size_t count = std::min<std::size_t>(3, n);
        const auto v = cx.sweep<Gs>("gram_schmidt", cx.trials(50), [&](Rng& rng, std::size_t) {
            std::vector<GridFunction> in;
            for (std::size_t i = 0; i < count; ++i) in.push_back(random_span_element(space.basis(), rng));
            const auto sys = gram_schmidt_biorthonormal(in, space);
            Gs g{0, 0, 0};
            for (std::size_t i = 0; i < count; ++i) {
                g.unit = std::max(g.unit, std::abs(lp_norm(sys.psi[i], P.p) - 1.0));
                for (std::size_t j = 0; j < count; ++j) {
                    if (i != j) {
                        const double scale = h_norm(sys.phi[i], space) * h_norm(sys.phi[j], space);
                        g.orth = std::max(g.orth, std::abs(h_inner(sys.phi[i], sys.phi[j], space)) / scale);
                    }
                    g.bio = std::max(g.bio, std::abs(sys.duals[j](sys.psi[i]) - (i == j ? 1.0 : 0.0)));
                }
            }
            return g;
        });
        std::vector<double> o, u, b;
        for (const auto& x : v) {
            o.push_back(x.orth);
            u.push_back(x.unit);
            b.push_back(x.bio);
        }
        cx.check("gram_schmidt_orthogonality", worst_of(o), 1e-8, o.size(), pspace);
        cx.check("gram_schmidt_unit_norm", worst_of(u), 1e-8, u.size(), pspace);
        cx.check("biorthonormality", worst_of(b), 1e-8, b.size(), pspace);
    }
    cx.tail("h_truncation", space.tail_bound());
}

// ------------------------------------------------------------------ adjoint

void adjoint_suite(Context& cx) {
    const auto& P = cx.params();
    const auto dims = cx.dims();
    const Params pdims{{"dims", dims_label(dims)}};

    {
        const auto reports = cx.sweep<VerificationReport>("algebra", cx.trials(500), [&](Rng& rng, std::size_t t) {
            const auto w = dyadic_weights(dims[t % dims.size()]);
            const auto a = random_operator(rng, w);
            const auto b = random_operator(rng, w);
            return adjoint_algebra_check(a, b, rng.complex_normal(), 1e-10);
        });
        std::map<std::string, std::vector<double>> by_name;
        for (const auto& r : reports)
            for (const auto& c : r.checks) by_name[c.name].push_back(c.worst_violation);
        for (const auto& [name, v] : by_name) cx.check(name, worst_of(v), 1e-10, v.size(), pdims);
    }
    {
        const auto v = cx.sweep<double>("defining_identity", cx.trials(1000), [&](Rng& rng, std::size_t t) {
            const std::size_t d = dims[t % dims.size()];
            const auto w = dyadic_weights(d);
            const auto a = random_operator(rng, w);
            const auto u = random_vector(rng, d);
            const auto x = random_vector(rng, d);
            const Complex lhs = weighted_inner(a.apply(u), x, w);
            const Complex rhs = weighted_inner(u, adjoint(a).apply(x), w);
            const double nu = std::sqrt(weighted_inner(u, u, w).real());
            const double nx = std::sqrt(weighted_inner(x, x, w).real());
            return std::abs(lhs - rhs) / (h_operator_norm(a) * nu * nx);
        });
        cx.check("defining_identity", worst_of(v), 1e-10, v.size(), pdims);
    }
    {
        const auto v = cx.sweep<double>("star_product_spectrum", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto a = random_operator(rng, dyadic_weights(dims[t % dims.size()]));
            const auto sa = adjoint(a) * a;
            const double scale = std::max(1.0, h_operator_norm(sa));
            double w = 0.0;
            for (const auto& z : general_eigenvalues(sa.matrix()))
                w = std::max({w, std::abs(z.imag()), -z.real()});
            return w / scale;
        });
        cx.check("star_product_spectrum", worst_of(v), 1e-10, v.size(), pdims);
    }
    {
        const std::vector<double> tgrid{0.5, 1.0, 2.0};
        const auto v = cx.sweep<double>("self_conjugacy", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto w = dyadic_weights(dims[t % dims.size()]);
            const auto sa = random_selfadjoint(rng, w);
            auto ns = random_operator(rng, w);
            ns = Complex{1.0 / h_operator_norm(ns)} * ns;
            double miss = 0.0;
            if (self_conjugacy_check(sa, tgrid, 1e-8) != is_naturally_selfadjoint(sa, 1e-8)) miss += 1.0;
            if (self_conjugacy_check(ns, tgrid, 1e-8) != is_naturally_selfadjoint(ns, 1e-8)) miss += 1.0;
            return miss;
        });
        double misses = 0.0;
        for (double x : v) misses += x;
        cx.check("self_conjugacy_agreement", misses, 0.0, 2 * v.size(), pdims);
    }
    {
        const auto reports = cx.sweep<VerificationReport>("lax", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto a = random_selfadjoint(rng, dyadic_weights(dims[t % dims.size()]));
            return lax_check(a, P.p, 3, rng.next(), 1e-8);
        });
        std::vector<double> spec, star, k;
        double spec_tol_ratio = 0.0;
        for (const auto& r : reports) {
            const auto* c = r.find("point_spectrum");
            spec_tol_ratio = std::max(spec_tol_ratio, c->worst_violation / c->tolerance);
            star.push_back(r.find("h_star_product_identity")->worst_violation);
            k.push_back(r.find("lax_constant")->worst_violation);
        }
        Params pp = pdims;
        pp.emplace_back("p", num(P.p));
        cx.check("lax_point_spectrum", spec_tol_ratio * 1e-8, 1e-8, reports.size(), pp);
        cx.check("lax_star_product_identity", worst_of(star), 1e-8, reports.size(), pp);
        cx.measure("lax_constant", worst_of(k), k.size(), pp);
    }
    {
        const auto v = cx.sweep<double>("point_spectrum_similarity", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto a = random_operator(rng, dyadic_weights(dims[t % dims.size()]));
            auto x = general_eigenvalues(a.matrix());
            auto y = general_eigenvalues(h_symmetrized(a));
            double w = 0.0;
            for (const auto& z : x) {
                auto it = std::min_element(y.begin(), y.end(),
                                           [&](Complex l, Complex r) { return std::abs(l - z) < std::abs(r - z); });
                w = std::max(w, std::abs(*it - z));
                y.erase(it);
            }
            return w / std::max(1.0, h_operator_norm(a));
        });
        cx.check("point_spectrum_similarity", worst_of(v), 1e-8, v.size(), pdims);
    }
    {
        struct Norms {
            double h_identity, adjoint_ratio, star_ratio;
        };
        const auto v = cx.sweep<Norms>("norm_ratios", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto a = random_operator(rng, dyadic_weights(dims[t % dims.size()]));
            const auto r = norm_inequality_report(a, P.p, 3, rng.next());
            return Norms{r.find("h_star_product_identity")->worst_violation, r.find("ratio_adjoint")->worst_violation,
                         r.find("ratio_star_product")->worst_violation};
        });
        std::vector<double> h, ra, rs;
        for (const auto& x : v) {
            h.push_back(x.h_identity);
            ra.push_back(x.adjoint_ratio);
            rs.push_back(x.star_ratio);
        }
        Params pp = pdims;
        pp.emplace_back("p", num(P.p));
        cx.check("h_star_product_identity", worst_of(h), 1e-8, h.size(), pp);
        cx.measure("adjoint_ratio_max", worst_of(ra), ra.size(), pp);
        cx.measure("adjoint_ratio_min", *std::min_element(ra.begin(), ra.end()), ra.size(), pp);
        cx.measure("star_product_ratio_max", worst_of(rs), rs.size(), pp);
    }
    {
        struct Polar {
            double recon, factors;
        };
        const auto v = cx.sweep<Polar>("polar", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto a = random_operator(rng, dyadic_weights(dims[t % dims.size()]));
            const auto p = polar_decompose(a, 1e-12);
            const double recon = ((p.u * p.t) - a).matrix().frobenius_norm() / a.matrix().frobenius_norm();
            const auto id = ComplexMatrix::identity(a.dim());
            const double f = std::max(relative_gap(adjoint(p.t).matrix(), p.t.matrix()),
                                      relative_gap((adjoint(p.u) * p.u).matrix(), id));
            return Polar{recon, f};
        });
        std::vector<double> r, f;
        for (const auto& x : v) {
            r.push_back(x.recon);
            f.push_back(x.factors);
        }
        cx.check("polar_reconstruction", worst_of(r), 1e-9, r.size(), pdims);
        cx.check("polar_factors", worst_of(f), 1e-9, f.size(), pdims);
    }
    {
        struct Spec {
            double recon, axioms;
        };
        const auto v = cx.sweep<Spec>("spectral", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto w = dyadic_weights(dims[t % dims.size()]);
            const auto a = random_selfadjoint(rng, w);
            const auto d = spectral_decompose(a, 1e-8);
            auto sum = BOperator::zero(w);
            auto recon = BOperator::zero(w);
            double ax = 0.0;
            for (std::size_t j = 0; j < d.projections.size(); ++j) {
                const auto& pj = d.projections[j];
                ax = std::max(ax, relative_gap((pj * pj).matrix(), pj.matrix()));
                ax = std::max(ax, relative_gap(adjoint(pj).matrix(), pj.matrix()));
                for (std::size_t k = 0; k < j; ++k) ax = std::max(ax, (pj * d.projections[k]).matrix().frobenius_norm());
                sum = sum + pj;
                recon = recon + Complex{d.eigenvalues[j]} * pj;
            }
            ax = std::max(ax, relative_gap(sum.matrix(), ComplexMatrix::identity(w.size())));
            return Spec{relative_gap(recon.matrix(), a.matrix()), ax};
        });
        std::vector<double> r, ax;
        for (const auto& x : v) {
            r.push_back(x.recon);
            ax.push_back(x.axioms);
        }
        cx.check("spectral_reconstruction", worst_of(r), 1e-8, r.size(), pdims);
        cx.check("spectral_projection_axioms", worst_of(ax), 1e-8, ax.size(), pdims);
    }
    {
        const auto v = cx.sweep<double>("minmax_eigenvalue", cx.trials(50), [&](Rng& rng, std::size_t t) {
            const auto a = random_selfadjoint(rng, dyadic_weights(dims[t % dims.size()]));
            const auto eig = hermitian_eigen(hermitian_part(h_symmetrized(a)));
            const double scale = std::max(1.0, h_operator_norm(a));
            double w = 0.0;
            for (std::size_t k = 1; k <= a.dim(); ++k)
                w = std::max(w, std::abs(minmax_eigenvalue(a, k, 4, rng.next()) - eig.values[k - 1]) / scale);
            return w;
        });
        cx.check("minmax_eigenvalue", worst_of(v), 1e-6, v.size(), pdims);
    }
    {
        std::vector<double> gaps;
        const std::size_t per = std::max<std::size_t>(1, cx.trials(100) / dims.size());
        for (std::size_t d : dims) {
            const auto space = EmbeddingSpace::dyadic(fourier_sbasis(d, P.p, P.grid));
            const auto v = cx.sweep<double>("rayleigh_gap:" + num(d), per, [&](Rng& rng, std::size_t) {
                const auto a = random_operator(rng, dyadic_weights(d));
                return rayleigh_compare(a, random_span_element(space.basis(), rng), space).gap;
            });
            gaps.insert(gaps.end(), v.begin(), v.end());
        }
        cx.measure("rayleigh_gap", worst_of(gaps), gaps.size(), {{"dims", dims_label(dims)}, {"p", num(P.p)}});
    }
}

// ----------------------------------------------------------------- schatten

void schatten_suite(Context& cx) {
    const auto& P = cx.params();
    const auto dims = cx.dims();
    const Params pdims{{"dims", dims_label(dims)}};
    const auto random_op = [&](Rng& rng, std::size_t t) { return random_operator(rng, dyadic_weights(dims[t % dims.size()])); };

    {
        const auto v = cx.sweep<double>("singular_value_paths", cx.trials(200),
                                        [&](Rng& rng, std::size_t t) { return singular_value_path_gap(random_op(rng, t)); });
        cx.check("singular_value_paths", worst_of(v), 1e-10, v.size(), pdims);
    }
    {
        const auto v = cx.sweep<double>("two_path_norm", cx.trials(500), [&](Rng& rng, std::size_t t) {
            const auto a = random_op(rng, t);
            double w = 0.0;
            for (double p : {1.0, 2.0, 4.0}) w = std::max(w, schatten_norm_paths(a, p).relative_gap());
            return w;
        });
        Params pp = pdims;
        pp.emplace_back("p", "1/2/4");
        cx.check("two_path_norm", worst_of(v), 1e-9, v.size(), pp);
    }
    {
        const auto v = cx.sweep<double>("hoelder_monotonicity", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto a = random_op(rng, t);
            const std::vector<double> ps{1.0, 1.5, 2.0, 3.0, 4.0, kInfinity};
            double w = 0.0;
            for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
                const double lo = schatten_norm(a, ps[i]);
                const double hi = schatten_norm(a, ps[i + 1]);
                w = std::max(w, (hi - lo) / lo);
            }
            return std::max(0.0, w);
        });
        cx.check("hoelder_monotonicity", worst_of(v), 1e-12, v.size(), pdims);
    }
    {
        const auto v = cx.sweep<double>("unitary_invariance", cx.trials(200), [&](Rng& rng, std::size_t t) {
            const auto w = dyadic_weights(dims[t % dims.size()]);
            const auto a = random_operator(rng, w);
            const auto u = random_h_unitary(rng, w);
            const auto x = random_h_unitary(rng, w);
            const auto b = u * a * x;
            double gap = 0.0;
            for (double p : {1.0, 2.0, 4.0}) {
                const double s = schatten_norm(a, p);
                gap = std::max(gap, std::abs(schatten_norm(b, p) - s) / s);
            }
            return gap;
        });
        cx.check("unitary_invariance", worst_of(v), 1e-9, v.size(), pdims);
    }

    // Module checks carry tolerance 1e-9 (bound + 1); rescale to that slack.
    const auto normalized = [](const VerificationReport& r) {
        const auto& c = r.checks.front();
        return c.tolerance > 0.0 ? c.worst_violation / c.tolerance * 1e-9 : c.worst_violation;
    };
    {
        const auto v = cx.sweep<double>("weyl", cx.trials(500), [&](Rng& rng, std::size_t t) {
            return normalized(weyl_check(random_op(rng, t), power_map(t % 2 == 0 ? 1.0 : 2.0)));
        });
        cx.check("weyl", worst_of(v), 1e-9, v.size(), {{"dims", dims_label(dims)}, {"phi", "t/t^2"}});
    }
    {
        const auto v = cx.sweep<double>("horn", cx.trials(500), [&](Rng& rng, std::size_t t) {
            const auto a = random_op(rng, t);
            const auto b = random_operator(rng, std::vector<double>(a.weights().begin(), a.weights().end()));
            return normalized(horn_check(a, b, power_map(t % 2 == 0 ? 1.0 : 2.0)));
        });
        cx.check("horn", worst_of(v), 1e-9, v.size(), {{"dims", dims_label(dims)}, {"phi", "t/t^2"}});
    }
    {
        const auto v = cx.sweep<double>("lalesco", cx.trials(500),
                                        [&](Rng& rng, std::size_t t) { return normalized(lalesco_check(random_op(rng, t))); });
        cx.check("lalesco", worst_of(v), 1e-9, v.size(), pdims);
    }
    {
        const auto v = cx.sweep<double>("lidskii", cx.trials(500),
                                        [&](Rng& rng, std::size_t t) { return normalized(lidskii_check(random_op(rng, t))); });
        cx.check("lidskii", worst_of(v), 1e-9, v.size(), pdims);
    }
    {
        const auto v = cx.sweep<double>("approximation_numbers", cx.trials(100), [&](Rng& rng, std::size_t t) {
            const auto a = random_op(rng, t);
            const auto s = approximation_numbers(a, ApproxMetric::h).s;
            const auto d = svd(h_symmetrized(a));
            const std::size_t n = a.dim();
            double w = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                // distance to the rank-k truncation
                ComplexMatrix r = h_symmetrized(a);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t r0 = 0; r0 < n; ++r0)
                        for (std::size_t c0 = 0; c0 < n; ++c0)
                            r(r0, c0) -= d.sigma[i] * d.u(r0, i) * std::conj(d.v(c0, i));
                const double dist = k < n ? singular_values_of(r).front() : 0.0;
                w = std::max(w, std::abs(s[k] - dist) / d.sigma.front());
            }
            return w;
        });
        cx.check("approximation_numbers", worst_of(v), 1e-9, v.size(), pdims);
    }
    {
        const auto v = cx.sweep<double>("pietsch_containment", cx.trials(100), [&](Rng& rng, std::size_t t) {
            const auto a = random_op(rng, t);
            double w = 0.0;
            for (double p : {1.0, 2.0, 4.0}) {
                const double bound = std::pow(schatten_norm(a, p), p);
                w = std::max(w, (pietsch_cp(a, p, ApproxMetric::h) - bound) / bound);
            }
            return std::max(0.0, w);
        });
        cx.check("pietsch_containment", worst_of(v), 1e-12, v.size(), pdims);
    }
    {
        struct Nuc {
            double gap, ratio;
        };
        const auto v = cx.sweep<Nuc>("nuclear_bound", cx.trials(50), [&](Rng& rng, std::size_t t) {
            const auto a = random_op(rng, t);
            const auto nb = nuclear_norm_upper(a, conjugate_exponent(P.p), 3, rng.next());
            const auto sb = approximation_numbers(a, ApproxMetric::b_estimate, P.p, 3, rng.next());
            return Nuc{std::max(0.0, nb.operator_estimate - nb.upper) / nb.upper, sb.s.front() / singular_values(a).front()};
        });
        std::vector<double> g, r;
        for (const auto& x : v) {
            g.push_back(x.gap);
            r.push_back(x.ratio);
        }
        Params pp = pdims;
        pp.emplace_back("p", num(P.p));
        cx.check("nuclear_dominates_operator_norm", worst_of(g), 1e-9, g.size(), pp);
        cx.measure("b_approximation_ratio", worst_of(r), r.size(), pp);
    }
}

// ---------------------------------------------------------------------- ks2

GridFunction random_step(Rng& rng, const Interval& box, std::size_t resolution) {
    const std::size_t pieces = 1 + rng.index(16);
    std::vector<double> cuts(pieces - 1);
    for (auto& c : cuts) c = rng.uniform(box.lo, box.hi);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> values(pieces);
    for (auto& v : values) v = rng.normal();
    return GridFunction::sample(box, resolution, [&](double x) {
        const auto idx = static_cast<std::size_t>(std::upper_bound(cuts.begin(), cuts.end(), x) - cuts.begin());
        return Complex{values[idx]};
    });
}

GridFunction random_step_2d(Rng& rng, std::size_t resolution) {
    struct Box {
        double x0, x1, y0, y1, v;
    };
    std::vector<Box> boxes(1 + rng.index(4));
    for (auto& b : boxes) {
        b.x0 = rng.uniform(0.0, 0.8);
        b.x1 = rng.uniform(b.x0 + 0.1, 1.0);
        b.y0 = rng.uniform(0.0, 0.8);
        b.y1 = rng.uniform(b.y0 + 0.1, 1.0);
        b.v = rng.normal();
    }
    return GridFunction::sample({0, 1}, {0, 1}, resolution, [&](double x, double y) {
        double acc = 0.0;
        for (const auto& b : boxes)
            if (x >= b.x0 && x < b.x1 && y >= b.y0 && y < b.y1) acc += b.v;
        return Complex{acc};
    });
}

void ks2_suite(Context& cx) {
    const auto& P = cx.params();
    const std::size_t K = P.cubes;
    const auto sys = CubeSystem::unit(1);
    const Interval unit{0, 1};
    const Params pk{{"cubes", num(K)}, {"resolution", num(P.grid)}};

    {
        const std::vector<std::pair<std::size_t, std::size_t>> expect{{1, 1}, {2, 1}, {1, 2}, {1, 3},
                                                                       {2, 2}, {3, 1}, {3, 2}, {2, 3}};
        double miss = 0.0;
        for (std::size_t k = 1; k <= expect.size(); ++k) {
            const auto c = pairing_order(k);
            if (c.l != expect[k - 1].first || c.i != expect[k - 1].second) miss += 1.0;
        }
        cx.check("pairing_prefix", miss, 0.0, expect.size());
    }
    {
        double miss = 0.0;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t k = 1; k <= 10000; ++k) {
            const auto c = pairing_order(k);
            if (pairing_index(c.l, c.i) != k || !seen.emplace(c.l, c.i).second) miss += 1.0;
        }
        cx.check("pairing_roundtrip", miss, 0.0, 10000);
    }
    {
        const std::size_t count = std::min<std::size_t>(K, 64);
        const auto v = cx.sweep<double>("gram_psd", cx.trials(50), [&](Rng& rng, std::size_t) {
            constexpr std::size_t m = 6;
            std::vector<GridFunction> fs;
            for (std::size_t i = 0; i < m; ++i) fs.push_back(random_step(rng, unit, P.grid));
            ComplexMatrix g(m, m);
            double diag = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) g(i, j) = ks2_inner(fs[i], fs[j], count, sys);
            for (std::size_t i = 0; i < m; ++i) diag = std::max(diag, g(i, i).real());
            double herm = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) herm = std::max(herm, std::abs(g(i, j) - std::conj(g(j, i))));
            const double lo = hermitian_eigen(hermitian_part(g)).values.back();
            return std::max(herm, -lo) / std::max(1.0, diag);
        });
        cx.check("gram_psd", worst_of(v), 1e-10, v.size(), {{"cubes", num(count)}, {"functions", "6"}});
    }
    {
        struct Mono {
            double drop, tail;
        };
        const auto v = cx.sweep<Mono>("truncation_monotone", cx.trials(200), [&](Rng& rng, std::size_t) {
            const auto f = random_step(rng, unit, P.grid);
            const auto F = functionals(f, K, sys);
            double prev = 0.0, drop = 0.0, sup = 0.0;
            for (std::size_t k = 1; k <= K; k *= 2) {
                const double n = ks2_norm(f, k, sys);
                drop = std::max(drop, prev - n);
                prev = n;
            }
            drop = std::max(drop, prev - ks2_norm(f, K, sys));
            for (const auto& z : F) sup = std::max(sup, std::norm(z));
            return Mono{drop, std::ldexp(sup, -static_cast<int>(K))};
        });
        std::vector<double> d, tl;
        for (const auto& x : v) {
            d.push_back(x.drop);
            tl.push_back(x.tail);
        }
        cx.check("truncation_monotone", worst_of(d), 0.0, d.size(), pk);
        cx.tail("truncation_tail", worst_of(tl));
    }
    {
        const auto v = cx.sweep<double>("functional_l1_bound", cx.trials(500), [&](Rng& rng, std::size_t) {
            const auto f = random_step(rng, unit, P.grid);
            const double l1 = lp_norm(f, 1.0);
            double w = 0.0;
            for (const auto& z : functionals(f, K, sys)) w = std::max(w, std::abs(z) - l1);
            return std::max(0.0, w) / std::max(1.0, l1);
        });
        cx.check("functional_l1_bound", worst_of(v), 1e-12, v.size(), pk);
    }
    {
        const auto v = cx.sweep<double>("fundamentality", cx.trials(200), [&](Rng& rng, std::size_t) {
            const auto f = random_step(rng, unit, P.grid);
            double m = 0.0;
            for (const auto& z : functionals(f, K, sys)) m = std::max(m, std::abs(z));
            return m > 0.0 ? 0.0 : 1.0;
        });
        double zeros = 0.0;
        for (double x : v) zeros += x;
        cx.check("fundamentality", zeros, 0.0, v.size(), pk);
    }

    const auto embedding = [&](const std::string& name, double q) {
        const auto v = cx.sweep<double>(name, cx.trials(200), [&](Rng& rng, std::size_t) {
            const auto& c = embedding_bound_check(random_step(rng, unit, P.grid), q, K, sys).checks.front();
            return c.worst_violation / c.tolerance * 1e-9;
        });
        Params pp = pk;
        pp.emplace_back("q", num(q));
        cx.check(name, worst_of(v), 1e-9, v.size(), pp);
    };
    embedding("embedding_q1", 1.0);
    embedding("embedding_q2", 2.0);
    embedding("embedding_q4", 4.0);
    embedding("embedding_qinf", kInfinity);
    embedding("embedding_q", P.q);
    {
        const auto sys2 = CubeSystem::unit(2);
        const std::size_t count = std::min<std::size_t>(K, 256);
        const auto v = cx.sweep<double>("embedding_2d", cx.trials(20), [&](Rng& rng, std::size_t) {
            const auto f = random_step_2d(rng, 128);
            double w = 0.0;
            for (double q : {2.0, kInfinity}) {
                const auto& c = embedding_bound_check(f, q, count, sys2).checks.front();
                w = std::max(w, c.worst_violation / c.tolerance * 1e-9);
            }
            return w;
        });
        cx.check("embedding_2d", worst_of(v), 1e-9, v.size(), {{"cubes", num(count)}, {"q", "2/inf"}, {"resolution", "128"}});
    }
    {
        const auto r = weak_strong_demo(64, K, sys, 8192);
        for (const auto& c : r.checks) {
            if (c.name == "decay_ratio")
                cx.check("weak_strong_decay", c.worst_violation, 0.2, c.samples, c.params);
            else if (c.name == "functional_envelope")
                cx.check("weak_strong_envelope", c.worst_violation, c.tolerance, c.samples, c.params);
            else if (c.name == "tail_envelope")
                cx.measure("weak_strong_tail_envelope", c.worst_violation, c.samples, c.params);
        }
        for (const auto& [k, val] : r.tail_bounds) cx.tail("weak_strong_" + k, val);
    }
}

// ----------------------------------------------------------------- integral

PeriodicSignal random_mean_zero(Rng& rng, std::size_t m) {
    ComplexVector s(m);
    for (auto& z : s) z = rng.complex_normal();
    Complex mean{}, nyq{};
    for (std::size_t j = 0; j < m; ++j) {
        mean += s[j];
        nyq += s[j] * (j % 2 == 0 ? 1.0 : -1.0);
    }
    mean /= static_cast<double>(m);
    nyq /= static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) s[j] -= mean + nyq * (j % 2 == 0 ? 1.0 : -1.0);
    return PeriodicSignal(std::move(s));
}

double sup_diff(const PeriodicSignal& a, const PeriodicSignal& b) {
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
    return d;
}

GridFunction random_real_grid(Rng& rng, std::size_t res) {
    std::vector<Complex> s(res);
    for (auto& z : s) z = rng.normal();
    return {{{0, 1}}, res, std::move(s)};
}

void integral_suite(Context& cx) {
    const auto& P = cx.params();
    const std::size_t m = P.grid;
    const Params pm{{"points", num(m)}};

    {
        struct Mult {
            double square, isometry, skew;
        };
        const auto v = cx.sweep<Mult>("multiplier", cx.trials(200), [&](Rng& rng, std::size_t) {
            const auto f = random_mean_zero(rng, m);
            const auto g = random_mean_zero(rng, m);
            const auto h = hilbert_multiplier(f);
            const auto hh = hilbert_multiplier(h);
            double sq = 0.0;
            for (std::size_t j = 0; j < m; ++j) sq = std::max(sq, std::abs(hh[j] + f[j]));
            const double skew = adjoint_relation_check(hilbert_multiplier, f, g, -1, 1e-10).checks.front().worst_violation;
            return Mult{sq / signal_norm(f, kInfinity), std::abs(signal_norm(h, 2.0) / signal_norm(f, 2.0) - 1.0), skew};
        });
        std::vector<double> a, b, c;
        for (const auto& x : v) {
            a.push_back(x.square);
            b.push_back(x.isometry);
            c.push_back(x.skew);
        }
        cx.check("multiplier_square", worst_of(a), 1e-12, a.size(), pm);
        cx.check("multiplier_isometry", worst_of(b), 1e-12, b.size(), pm);
        cx.check("multiplier_skew_adjoint", worst_of(c), 1e-10, c.size(), pm);
    }
    {
        const auto cosine = [](std::size_t n) {
            return PeriodicSignal::sample(n, [](double t) { return Complex{std::cos(2 * std::numbers::pi * t)}; });
        };
        std::vector<double> gaps;
        for (std::size_t n : {m / 2, m, 2 * m}) {
            const auto f = cosine(n);
            gaps.push_back(sup_diff(hilbert_pv(f, 4.0 / static_cast<double>(n)), hilbert_multiplier(f)));
        }
        double order = kInfinity;
        for (std::size_t i = 1; i < gaps.size(); ++i) order = std::min(order, std::log2(gaps[i - 1] / gaps[i]));
        const Params pp{{"eps", "4/M"}, {"points", num(m / 2) + "/" + num(m) + "/" + num(2 * m)}};
        cx.check("pv_convergence_order", std::max(0.0, 1.0 - order), 0.01, gaps.size(), pp);
        cx.measure("pv_gap", gaps[1], 1, {{"eps", "4/M"}, {"points", num(m)}});
    }
    {
        const std::size_t n = std::min<std::size_t>(m, 256);
        const SignalOperator op = [](const PeriodicSignal& f) { return hilbert_pv(f, 4.0 / static_cast<double>(f.size())); };
        const auto v = cx.sweep<double>("pv_skew_adjoint", cx.trials(20), [&](Rng& rng, std::size_t) {
            return adjoint_relation_check(op, random_mean_zero(rng, n), random_mean_zero(rng, n), -1, 1e-3)
                .checks.front()
                .worst_violation;
        });
        cx.check("pv_skew_adjoint", worst_of(v), 1e-3, v.size(), {{"eps", "4/M"}, {"points", num(n)}});
    }
    {
        const auto v = cx.sweep<double>("odd_kernel_shared_path", cx.trials(20), [&](Rng& rng, std::size_t) {
            const auto f = random_mean_zero(rng, m);
            const double eps = 3.0 / static_cast<double>(m);
            return sup_diff(odd_kernel_operator(f, {-1.0 / std::numbers::pi, 1.0 / std::numbers::pi}, eps), hilbert_pv(f, eps));
        });
        cx.check("odd_kernel_shared_path", worst_of(v), 0.0, v.size(), pm);
    }
    {
        const auto r = lp_bound_report(hilbert_multiplier, 2.0, static_cast<int>(cx.trials(64)), cx.stream("lp_isometry"), m);
        cx.check("lp_isometry", std::abs(r.find("constant")->worst_violation - 1.0), 1e-10, r.find("constant")->samples, pm);
    }
    cx.absorb(lp_bound_report(hilbert_multiplier, P.p, static_cast<int>(cx.trials(500)), cx.stream("lp_bound"), m), "lp_");

    const std::size_t res = std::min<std::size_t>(m, 1024);
    {
        struct Rz {
            double sym, pos;
        };
        const auto v = cx.sweep<Rz>("riesz", cx.trials(50), [&](Rng& rng, std::size_t) {
            const auto f = random_real_grid(rng, res);
            const auto g = random_real_grid(rng, res);
            const auto If = riesz_potential(f, P.alpha);
            const double sym = std::abs(pairing(If, g) - pairing(f, riesz_potential(g, P.alpha)));
            return Rz{sym / (lp_norm(f, 2.0) * lp_norm(g, 2.0)), std::max(0.0, -pairing(If, f).real())};
        });
        std::vector<double> s, p;
        for (const auto& x : v) {
            s.push_back(x.sym);
            p.push_back(x.pos);
        }
        const Params pa{{"alpha", num(P.alpha)}, {"resolution", num(res)}};
        cx.check("riesz_symmetry", worst_of(s), 1e-8, s.size(), pa);
        cx.check("riesz_positivity", worst_of(p), 1e-8, p.size(), pa);
    }
    {
        const auto one = GridFunction::sample({0, 1}, 8192, [](double) { return Complex{1.0}; });
        const double expected = 2 * std::pow(0.5, P.alpha) / P.alpha / riesz_gamma(P.alpha);
        cx.check("riesz_spot_value", std::abs(riesz_potential_at(one, P.alpha, 0.5) - expected), 1e-4, 1,
                 {{"alpha", num(P.alpha)}, {"resolution", "8192"}, {"x", "0.5"}});
    }
    cx.absorb(hls_bound_report(P.alpha, P.p, static_cast<int>(cx.trials(500)), cx.stream("hls"), res), "hls_");
}

// ----------------------------------------------------------------- registry

using SuiteFn = void (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s{{"adjoint", adjoint_suite},
                                                                {"embedding", embedding_suite},
                                                                {"integral", integral_suite},
                                                                {"ks2", ks2_suite},
                                                                {"schatten", schatten_suite}};
    return s;
}

const std::map<std::string, std::vector<std::string>>& registry() {
    static const std::map<std::string, std::vector<std::string>> r{
        {"embedding",
         {"biorthonormality", "coefficient_sup_over_b_norm", "dual_norm_max", "duality_homogeneity", "duality_identity",
          "eigen_reconstruction", "eigen_sorted", "gram_offdiagonal", "gram_schmidt_orthogonality",
          "gram_schmidt_unit_norm", "jb_additivity", "jb_conjugate_homogeneity", "jb_norm_bound",
          "matrix_exp_commuting", "norm_chain_b", "norm_chain_sup", "opnorm_two", "projection_idempotent",
          "svd_adjoint_invariance"}},
        {"adjoint",
         {"additivity", "adjoint_ratio_max", "adjoint_ratio_min", "anti_multiplicativity", "conjugate_homogeneity",
          "defining_identity", "h_star_product_identity", "involution", "lax_constant", "lax_point_spectrum",
          "lax_star_product_identity", "minmax_eigenvalue", "point_spectrum_similarity", "polar_factors",
          "polar_reconstruction", "rayleigh_gap", "self_conjugacy_agreement", "spectral_projection_axioms",
          "spectral_reconstruction", "star_product_ratio_max", "star_product_selfadjoint",
          "star_product_spectrum"}},
        {"schatten",
         {"approximation_numbers", "b_approximation_ratio", "hoelder_monotonicity", "horn", "lalesco", "lidskii",
          "nuclear_dominates_operator_norm", "pietsch_containment", "singular_value_paths", "two_path_norm",
          "unitary_invariance", "weyl"}},
        {"ks2",
         {"embedding_2d", "embedding_q", "embedding_q1", "embedding_q2", "embedding_q4", "embedding_qinf",
          "functional_l1_bound", "fundamentality", "gram_psd", "pairing_prefix", "pairing_roundtrip",
          "truncation_monotone", "weak_strong_decay", "weak_strong_envelope", "weak_strong_tail_envelope"}},
        {"integral",
         {"hls_constant", "hls_doubling_stability", "hls_exponent_in_range", "hls_finite", "lp_constant",
          "lp_doubling_stability", "lp_finite", "lp_isometry", "multiplier_isometry", "multiplier_skew_adjoint",
          "multiplier_square", "odd_kernel_shared_path", "pv_convergence_order", "pv_gap", "pv_skew_adjoint",
          "riesz_positivity", "riesz_spot_value", "riesz_symmetry"}}};
    return r;
}

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

void validate(const SuiteParams& p) {
    const auto bad = [](const std::string& what) { throw std::invalid_argument("invalid parameter: " + what); };
    if (p.dim > 32) bad("--dim must lie in [1, 32]");
    if (!is_power_of_two(p.grid) || p.grid < 64 || p.grid > 8192) bad("--grid must be a power of two in [64, 8192]");
    if (!(p.p > 1.0) || !std::isfinite(p.p)) bad("--p must lie in (1, inf)");
    if (!(p.q >= 1.0)) bad("--q must be >= 1");
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) bad("--alpha must lie in (0, 1)");
    if (!(1.0 / p.p - p.alpha > 0.0)) bad("--p and --alpha need 1/p - alpha > 0");
    if (p.trials == 1 || p.trials > 100000) bad("--trials must lie in [2, 100000]");
    if (!(p.tol_scale >= 0.0) || !std::isfinite(p.tol_scale)) bad("--tol must be a finite nonnegative scale");
    if (p.cubes < 1 || p.cubes > 1024) bad("--cubes must lie in [1, 1024]");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"embedding", "adjoint", "schatten", "ks2", "integral"};
    return names;
}

std::vector<std::string> check_names(const std::string& suite) {
    std::vector<std::string> out;
    for (const auto& [name, checks] : registry())
        if (suite == "all" || suite == name)
            for (const auto& c : checks) out.push_back(name + "." + c);
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    std::sort(out.begin(), out.end());
    return out;
}

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
    if (name != "all" && !registry().contains(name)) throw std::invalid_argument("unknown suite: " + name);
    validate(params);
    VerificationReport report;
    report.suite = name;
    report.seed = params.seed;
    for (const auto& [suite, fn] : suites()) {
        if (name != "all" && name != suite) continue;
        Context cx(suite, params, report);
        fn(cx);
    }
    report.sort_checks();
    std::sort(report.tail_bounds.begin(), report.tail_bounds.end());
    return report;
}

}  // namespace ah
