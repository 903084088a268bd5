#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "almost_hilbert/numerics.hpp"
#include "almost_hilbert/operator_algebra.hpp"

using namespace ah;

namespace {

const std::vector<double> kW2{0.5, 0.25};

ComplexMatrix nilpotent() { return ComplexMatrix(2, 2, {0, 1, 0, 0}); }

ComplexMatrix diag(std::initializer_list<double> d) { return ComplexMatrix::diagonal(std::vector<double>(d)); }

EmbeddingSpace make_space(std::size_t n, double p, std::size_t res = 1024) {
    return EmbeddingSpace::dyadic(fourier_sbasis(n, p, res));
}

}  // namespace

TEST(Adjoint, Identity) {
    const auto a = adjoint(BOperator::identity(dyadic_weights(5)));
    EXPECT_EQ(max_abs_diff(a.matrix(), ComplexMatrix::identity(5)), 0.0);
}

TEST(Adjoint, WeightedNilpotentFollowsTheDefiningIdentity) {
    // W^{-1} A^H W puts w_1 / w_2 = 2 in the lower-left corner.
    const auto a = adjoint(BOperator(nilpotent(), kW2));
    EXPECT_EQ(max_abs_diff(a.matrix(), ComplexMatrix(2, 2, {0, 0, 2, 0})), 0.0);
}

TEST(Adjoint, DefiningIdentityOnRandomTriples) {
    Rng rng(17);
    for (std::size_t n : {4u, 8u, 16u}) {
        const auto w = dyadic_weights(n);
        for (int t = 0; t < 1000 / 3; ++t) {
            const auto a = random_operator(rng, w);
            const auto as = adjoint(a);
            const auto u = random_vector(rng, n);
            const auto v = random_vector(rng, n);
            const Complex lhs = weighted_inner(a.apply(u), v, w);
            const Complex rhs = weighted_inner(u, as.apply(v), w);
            const double nu = std::sqrt(weighted_inner(u, u, w).real());
            const double nv = std::sqrt(weighted_inner(v, v, w).real());
            EXPECT_LE(std::abs(lhs - rhs), 1e-10 * h_operator_norm(a) * nu * nv);
        }
    }
}

TEST(Adjoint, ApplyOnGridFunctionsMatchesHInner) {
    const auto s = make_space(6, 3.0);
    Rng rng(5);
    const auto a = random_operator(rng, dyadic_weights(6));
    const auto u = random_span_element(s.basis(), rng);
    const auto v = random_span_element(s.basis(), rng);
    const Complex lhs = h_inner(a.apply(u, s), v, s);
    const Complex rhs = h_inner(u, adjoint(a).apply(v, s), s);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9 * std::max(1.0, std::abs(lhs)));
}

TEST(BOperator, RejectsBadShapes) {
    EXPECT_THROW(BOperator(ComplexMatrix(2, 3), kW2), std::invalid_argument);
    EXPECT_THROW(BOperator(ComplexMatrix(3, 3), kW2), std::invalid_argument);
    EXPECT_THROW(BOperator(ComplexMatrix(2, 2), std::vector<double>{1.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(BOperator::identity(kW2) + BOperator::identity({0.5, 0.5}), std::invalid_argument);
}

TEST(HSymmetrized, RoundTrip) {
    Rng rng(2);
    const auto a = random_operator(rng, dyadic_weights(7));
    const auto back = from_h_symmetrized(h_symmetrized(a), dyadic_weights(7));
    EXPECT_LE(relative_gap(back.matrix(), a.matrix()), 1e-14);
}

TEST(AdjointAlgebra, IdentityPairIsExact) {
    const auto id = BOperator::identity(dyadic_weights(4));
    const auto r = adjoint_algebra_check(id, id, {0.0, 1.0});
    EXPECT_TRUE(r.passed());
    for (const auto& c : r.checks) EXPECT_EQ(c.worst_violation, 0.0) << c.name;
}

TEST(AdjointAlgebra, ZeroScalar) {
    Rng rng(3);
    const auto a = random_operator(rng, dyadic_weights(4));
    EXPECT_EQ(adjoint(Complex{} * a).matrix().frobenius_norm(), 0.0);
}

TEST(AdjointAlgebra, RandomPairs) {
    Rng rng(11);
    double worst = 0.0;
    for (std::size_t n : {4u, 8u, 16u}) {
        const auto w = dyadic_weights(n);
        for (int t = 0; t < 500 / 3 + 1; ++t) {
            const auto r = adjoint_algebra_check(random_operator(rng, w), random_operator(rng, w), rng.complex_normal());
            for (const auto& c : r.checks) worst = std::max(worst, c.worst_violation);
        }
    }
    EXPECT_LE(worst, 1e-10);
}

TEST(NormInequality, IdentityRatiosAreOne) {
    const auto r = norm_inequality_report(BOperator::identity(dyadic_weights(4)), 3.0, 4, 1);
    EXPECT_NEAR(r.find("ratio_star_product")->worst_violation, 1.0, 1e-12);
    EXPECT_NEAR(r.find("ratio_adjoint")->worst_violation, 1.0, 1e-12);
    EXPECT_TRUE(r.passed());
}

TEST(NormInequality, HIdentityHoldsAndBRatiosAreOnlyMeasured) {
    Rng rng(4);
    const auto w = dyadic_weights(6);
    for (int t = 0; t < 20; ++t) {
        const auto r = norm_inequality_report(random_operator(rng, w), 3.0, 3, 100 + t);
        EXPECT_TRUE(r.passed());
        EXPECT_EQ(r.find("ratio_adjoint")->status, CheckStatus::measured);
        EXPECT_GT(r.find("ratio_adjoint")->worst_violation, 0.0);
    }
    const auto sa = norm_inequality_report(random_selfadjoint(rng, w), 2.0, 3, 7);
    EXPECT_LE(sa.find("h_star_product_identity")->worst_violation, 1e-8);
}

TEST(Predicates, Identity) {
    const auto id = BOperator::identity(dyadic_weights(3));
    EXPECT_TRUE(is_naturally_selfadjoint(id, 1e-12));
    EXPECT_TRUE(is_normal(id, 1e-12));
    EXPECT_TRUE(is_unitary(id, 1e-12));
}

TEST(Predicates, DiagonalIsSelfAdjoint) {
    EXPECT_TRUE(is_naturally_selfadjoint(BOperator(diag({1, 2}), kW2), 1e-12));
}

TEST(Predicates, NilpotentFailsAll) {
    const BOperator a(nilpotent(), kW2);
    EXPECT_FALSE(is_naturally_selfadjoint(a, 1e-8));
    EXPECT_FALSE(is_normal(a, 1e-8));
    EXPECT_FALSE(is_unitary(a, 1e-8));
}

TEST(Predicates, RandomUnitaryAndSelfAdjoint) {
    Rng rng(6);
    const auto w = dyadic_weights(8);
    for (int t = 0; t < 10; ++t) {
        const auto u = random_h_unitary(rng, w);
        EXPECT_TRUE(is_unitary(u, 1e-9));
        EXPECT_TRUE(is_normal(u, 1e-9));
        const auto a = random_selfadjoint(rng, w);
        EXPECT_TRUE(is_naturally_selfadjoint(a, 1e-12));
        EXPECT_TRUE(is_normal(a, 1e-10));
        EXPECT_FALSE(is_naturally_selfadjoint(random_operator(rng, w), 1e-8));
    }
}

TEST(OrthogonalSubspaces, BasisMembers) {
    const auto s = make_space(3, 3.0);
    const auto& e = s.basis().members;
    EXPECT_TRUE(orthogonal_subspaces({e[0]}, {e[1]}, s, 1e-10));
    EXPECT_FALSE(orthogonal_subspaces({e[0]}, {e[0]}, s, 1e-10));
    EXPECT_THROW(orthogonal_subspaces({}, {e[1]}, s, 1e-10), std::invalid_argument);
    EXPECT_THROW(orthogonal_subspaces({e[0]}, {}, s, 1e-10), std::invalid_argument);
}

TEST(StarProduct, IsSelfAdjointWithNonnegativeSpectrum) {
    Rng rng(8);
    for (std::size_t n : {4u, 8u, 16u}) {
        const auto w = dyadic_weights(n);
        for (int t = 0; t < 30; ++t) {
            const auto a = random_operator(rng, w);
            const auto sa = adjoint(a) * a;
            EXPECT_TRUE(is_naturally_selfadjoint(sa, 1e-12));
            const double scale = std::max(1.0, h_operator_norm(sa));
            for (const auto& z : general_eigenvalues(sa.matrix())) {
                EXPECT_LE(std::abs(z.imag()), 1e-10 * scale);
                EXPECT_GE(z.real(), -1e-10 * scale);
            }
        }
    }
}

TEST(Lax, Identity) {
    const auto r = lax_check(BOperator::identity(dyadic_weights(5)), 3.0, 3, 1, 1e-10);
    EXPECT_TRUE(r.passed());
    EXPECT_NEAR(r.find("h_norm")->worst_violation, 1.0, 1e-14);
    EXPECT_NEAR(r.find("b_norm")->worst_violation, 1.0, 1e-12);
}

TEST(Lax, StarProductSpectraMatch) {
    Rng rng(12);
    for (std::size_t n : {4u, 8u, 16u}) {
        const auto a = random_operator(rng, dyadic_weights(n));
        const auto r = lax_check(adjoint(a) * a, 3.0, 3, n, 1e-10);
        EXPECT_TRUE(r.passed()) << n << " " << r.find("point_spectrum")->worst_violation;
    }
}

TEST(Lax, DiagonalConstantIsFinite) {
    // For a diagonal operator both norms equal the largest |entry|.
    const auto r = lax_check(BOperator(diag({3, -1, 2}), dyadic_weights(3)), 3.0, 3, 2, 1e-10);
    EXPECT_NEAR(r.find("h_norm")->worst_violation, 3.0, 1e-12);
    EXPECT_NEAR(r.find("b_norm")->worst_violation, 3.0, 1e-9);
    EXPECT_NEAR(r.find("lax_constant")->worst_violation, 1.0, 1e-8);
}

TEST(Lax, RejectsNonSymmetric) {
    EXPECT_THROW(lax_check(BOperator(nilpotent(), kW2), 3.0, 3, 1, 1e-10), std::invalid_argument);
}

TEST(PointSpectrum, SimilarityInvariance) {
    Rng rng(31);
    for (std::size_t n : {4u, 8u, 12u}) {
        const auto a = random_operator(rng, dyadic_weights(n));
        auto x = general_eigenvalues(a.matrix());
        auto y = general_eigenvalues(h_symmetrized(a));
        // greedy matching of the two multisets
        double worst = 0.0;
        for (const auto& z : x) {
            auto it = std::min_element(y.begin(), y.end(), [&](Complex l, Complex r) { return std::abs(l - z) < std::abs(r - z); });
            worst = std::max(worst, std::abs(*it - z));
            y.erase(it);
        }
        EXPECT_LE(worst, 1e-8 * std::max(1.0, h_operator_norm(a)));
    }
}

TEST(SelfConjugacy, Examples) {
    const std::vector<double> tgrid{0.25, 1.0, 3.0};
    EXPECT_TRUE(self_conjugacy_check(BOperator(diag({1, 2}), kW2), tgrid, 1e-10));
    EXPECT_FALSE(self_conjugacy_check(BOperator(nilpotent(), kW2), tgrid, 1e-10));
    EXPECT_TRUE(self_conjugacy_check(BOperator::zero(kW2), tgrid, 1e-14));
}

TEST(SelfConjugacy, AgreesWithNaturalSelfAdjointness) {
    Rng rng(41);
    const std::vector<double> tgrid{0.5, 1.0, 2.0};
    const auto w = dyadic_weights(6);
    for (int t = 0; t < 200; ++t) {
        const auto sa = random_selfadjoint(rng, w);
        EXPECT_EQ(self_conjugacy_check(sa, tgrid, 1e-8), is_naturally_selfadjoint(sa, 1e-8));
        const auto ns = random_operator(rng, w);
        EXPECT_EQ(self_conjugacy_check(ns, tgrid, 1e-8), is_naturally_selfadjoint(ns, 1e-8));
    }
}

TEST(Polar, Identity) {
    const auto p = polar_decompose(BOperator::identity(dyadic_weights(4)), 1e-12);
    EXPECT_LE(max_abs_diff(p.u.matrix(), ComplexMatrix::identity(4)), 1e-14);
    EXPECT_LE(max_abs_diff(p.t.matrix(), ComplexMatrix::identity(4)), 1e-14);
    EXPECT_FALSE(p.rank_deficient);
}

TEST(Polar, PositiveSelfAdjoint) {
    Rng rng(7);
    const auto w = dyadic_weights(6);
    const auto b = random_operator(rng, w);
    const auto a = adjoint(b) * b + BOperator::identity(w);
    const auto p = polar_decompose(a, 1e-12);
    EXPECT_LE(relative_gap(p.u.matrix(), ComplexMatrix::identity(6)), 1e-9);
    EXPECT_LE(relative_gap(p.t.matrix(), a.matrix()), 1e-9);
}

TEST(Polar, RandomReconstruction) {
    Rng rng(9);
    const auto w = dyadic_weights(12);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_operator(rng, w);
        const auto p = polar_decompose(a, 1e-12);
        EXPECT_LE(((p.u * p.t) - a).matrix().frobenius_norm(), 1e-9 * a.matrix().frobenius_norm());
        EXPECT_TRUE(is_naturally_selfadjoint(p.t, 1e-9));
        EXPECT_TRUE(is_unitary(p.u, 1e-9));
        const auto eig = hermitian_eigen(hermitian_part(h_symmetrized(p.t)));
        EXPECT_GE(eig.values.back(), -1e-10);
    }
}

TEST(Polar, RankDeficientIsFlagged) {
    const auto p = polar_decompose(BOperator(nilpotent(), kW2), 1e-12);
    EXPECT_TRUE(p.rank_deficient);
    EXPECT_LE(((p.u * p.t) - BOperator(nilpotent(), kW2)).matrix().frobenius_norm(), 1e-12);
}

TEST(Spectral, Identity) {
    const auto d = spectral_decompose(BOperator::identity(dyadic_weights(4)), 1e-8);
    ASSERT_EQ(d.eigenvalues.size(), 1u);
    EXPECT_NEAR(d.eigenvalues[0], 1.0, 1e-14);
    EXPECT_LE(max_abs_diff(d.projections[0].matrix(), ComplexMatrix::identity(4)), 1e-13);
}

TEST(Spectral, DiagonalClusters) {
    const auto d = spectral_decompose(BOperator(diag({1, 1, 2}), dyadic_weights(3)), 1e-8);
    ASSERT_EQ(d.eigenvalues.size(), 2u);
    EXPECT_NEAR(d.eigenvalues[0], 2.0, 1e-14);
    EXPECT_NEAR(d.eigenvalues[1], 1.0, 1e-14);
    EXPECT_NEAR(d.projections[0].matrix().trace().real(), 1.0, 1e-13);
    EXPECT_NEAR(d.projections[1].matrix().trace().real(), 2.0, 1e-13);
}

TEST(Spectral, RandomInvariants) {
    Rng rng(13);
    const auto w = dyadic_weights(10);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_selfadjoint(rng, w);
        const auto d = spectral_decompose(a, 1e-8);
        auto sum = BOperator::zero(w);
        auto recon = BOperator::zero(w);
        for (std::size_t j = 0; j < d.projections.size(); ++j) {
            const auto& pj = d.projections[j];
            EXPECT_LE(relative_gap((pj * pj).matrix(), pj.matrix()), 1e-8);
            EXPECT_TRUE(is_naturally_selfadjoint(pj, 1e-8));
            for (std::size_t k = 0; k < j; ++k) EXPECT_LE((pj * d.projections[k]).matrix().frobenius_norm(), 1e-8);
            sum = sum + pj;
            recon = recon + Complex{d.eigenvalues[j]} * pj;
        }
        EXPECT_LE(relative_gap(sum.matrix(), ComplexMatrix::identity(10)), 1e-8);
        EXPECT_LE(relative_gap(recon.matrix(), a.matrix()), 1e-8);
        const auto u = random_vector(rng, 10);
        ComplexVector pu(10);
        for (std::size_t j = 0; j < d.projections.size(); ++j) {
            const auto v = d.projections[j].apply(u);
            for (std::size_t i = 0; i < 10; ++i) pu[i] += d.eigenvalues[j] * v[i];
        }
        const auto au = a.apply(u);
        for (std::size_t i = 0; i < 10; ++i) EXPECT_NEAR(std::abs(au[i] - pu[i]), 0.0, 1e-8 * std::max(1.0, norm2(au)));
    }
    EXPECT_THROW(spectral_decompose(BOperator(nilpotent(), kW2), 1e-8), std::invalid_argument);
}

TEST(MinMax, Examples) {
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_NEAR(minmax_eigenvalue(BOperator::identity(dyadic_weights(4)), k, 3, 1), 1.0, 1e-12);
    EXPECT_NEAR(minmax_eigenvalue(BOperator(diag({3, 2, 1}), dyadic_weights(3)), 1, 3, 2), 3.0, 1e-12);
    EXPECT_THROW(minmax_eigenvalue(BOperator::identity(kW2), 0, 1, 1), std::invalid_argument);
    EXPECT_THROW(minmax_eigenvalue(BOperator::identity(kW2), 3, 1, 1), std::invalid_argument);
}

TEST(MinMax, MatchesSpectralDecomposition) {
    Rng rng(19);
    for (std::size_t n : {4u, 8u, 16u}) {
        const auto a = random_selfadjoint(rng, dyadic_weights(n));
        const auto eig = hermitian_eigen(hermitian_part(h_symmetrized(a)));
        for (std::size_t k = 1; k <= n; ++k) EXPECT_NEAR(minmax_eigenvalue(a, k, 4, 100 + k), eig.values[k - 1], 1e-6);
    }
}

TEST(Rayleigh, EigenvectorAndIdentity) {
    const auto s = make_space(5, 3.0);
    const auto& e = s.basis().members;
    const auto a = BOperator(diag({4, 3, 2, 1, 0.5}), s);
    const auto r = rayleigh_compare(a, e[2], s);
    EXPECT_NEAR(std::abs(r.b_ratio - 2.0), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(r.h_ratio - 2.0), 0.0, 1e-10);
    EXPECT_LE(r.gap, 1e-10);

    Rng rng(2);
    const auto u = random_span_element(s.basis(), rng);
    const auto id = rayleigh_compare(BOperator::identity(dyadic_weights(5)), u, s);
    EXPECT_NEAR(std::abs(id.b_ratio - 1.0), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(id.h_ratio - 1.0), 0.0, 1e-9);

    const auto rnd = rayleigh_compare(random_operator(rng, dyadic_weights(5)), u, s);
    EXPECT_TRUE(std::isfinite(rnd.gap));
    EXPECT_THROW(rayleigh_compare(a, GridFunction::zeros({{0, 1}}, 1024), s), std::invalid_argument);
}

TEST(FiniteDifference, LaplacianIsSelfAdjointAndScales) {
    const auto s = make_space(7, 2.0, 512);
    const auto& g = s.basis().grid();
    const auto one = GridFunction::sample(g.box()[0], g.resolution(), [](double) { return Complex{1.0}; });
    const auto two = GridFunction::sample(g.box()[0], g.resolution(), [](double) { return Complex{2.0}; });
    const auto zero = GridFunction::zeros(g.box(), g.resolution());

    const auto lap = finite_difference_operator(one, zero, s);
    const BOperator uniform(lap.matrix(), std::vector<double>(7, 1.0));
    EXPECT_TRUE(is_naturally_selfadjoint(uniform, 1e-8));
    EXPECT_TRUE(is_naturally_selfadjoint(lap, 1e-8));

    const auto lap2 = finite_difference_operator(two, zero, s);
    auto e1 = hermitian_eigen(hermitian_part(h_symmetrized(lap))).values;
    auto e2 = hermitian_eigen(hermitian_part(h_symmetrized(lap2))).values;
    for (std::size_t k = 0; k < e1.size(); ++k) EXPECT_NEAR(e2[k], 2.0 * e1[k], 1e-8 * std::abs(e1.back()));

    const auto drift = finite_difference_operator(one, one, s);
    EXPECT_GT((drift.matrix() - adjoint(drift).matrix()).frobenius_norm(), 1e-3);
    EXPECT_FALSE(is_naturally_selfadjoint(drift, 1e-8));

    EXPECT_THROW(finite_difference_operator(zero, zero, s), std::invalid_argument);
}
