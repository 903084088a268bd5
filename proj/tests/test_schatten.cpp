#include <gtest/gtest.h>

#include <cmath>

#include "almost_hilbert/numerics.hpp"
#include "almost_hilbert/schatten.hpp"

using namespace ah;

namespace {

ComplexMatrix nilpotent() { return ComplexMatrix(2, 2, {0, 1, 0, 0}); }

/// Operator with prescribed H singular values, built in an H-orthonormal frame.
BOperator with_singular_values(Rng& rng, const std::vector<double>& mu, std::vector<double> w) {
    const auto u = h_symmetrized(random_h_unitary(rng, w));
    const auto v = h_symmetrized(random_h_unitary(rng, w));
    return from_h_symmetrized(u * ComplexMatrix::diagonal(mu) * v.adjoint(), std::move(w));
}

}  // namespace

TEST(SingularValues, Identity) {
    for (double m : singular_values(BOperator::identity(dyadic_weights(5)))) EXPECT_NEAR(m, 1.0, 1e-14);
}

TEST(SingularValues, NilpotentUniformWeights) {
    const auto mu = singular_values(BOperator(nilpotent(), {1.0, 1.0}));
    EXPECT_NEAR(mu[0], 1.0, 1e-15);
    EXPECT_NEAR(mu[1], 0.0, 1e-15);
}

TEST(SingularValues, NilpotentDyadicWeights) {
    // W^{1/2} A W^{-1/2} has the single entry sqrt(w_1 / w_2) = sqrt(2).
    const BOperator a(nilpotent(), {0.5, 0.25});
    const auto mu = singular_values(a);
    EXPECT_NEAR(mu[0], std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(mu[1], 0.0, 1e-15);
    EXPECT_LE(singular_value_path_gap(a), 1e-10);
}

TEST(SingularValues, PathsAgreeOnRandomOperators) {
    Rng rng(1);
    for (std::size_t n : {4u, 8u, 16u})
        for (int t = 0; t < 30; ++t) EXPECT_LE(singular_value_path_gap(random_operator(rng, dyadic_weights(n))), 1e-10);
}

TEST(SingularSpectrum, Sizes) {
    Rng rng(1);
    const auto s = singular_spectrum(random_operator(rng, dyadic_weights(6)));
    EXPECT_EQ(s.mu.size(), 6u);
    EXPECT_EQ(s.lambda.size(), 6u);
    EXPECT_TRUE(std::is_sorted(s.mu.rbegin(), s.mu.rend()));
}

TEST(SchattenNorm, PrescribedSpectrum) {
    Rng rng(2);
    const auto a = with_singular_values(rng, {3.0, 1.0}, {0.5, 0.25});
    EXPECT_NEAR(schatten_norm(a, 1.0), 4.0, 1e-12);
    EXPECT_NEAR(schatten_norm(a, 2.0), std::sqrt(10.0), 1e-12);
    EXPECT_NEAR(schatten_norm(a, kInfinity), 3.0, 1e-12);
    EXPECT_LE(schatten_norm_paths(a, 1.0).relative_gap(), 1e-9);
}

TEST(SchattenNorm, ZeroAndBadExponent) {
    const auto z = BOperator::zero(dyadic_weights(4));
    for (double p : {1.0, 2.0, 4.0}) {
        EXPECT_EQ(schatten_norm(z, p), 0.0);
        EXPECT_EQ(schatten_norm_paths(z, p).bracket, 0.0);
    }
    EXPECT_THROW(schatten_norm(z, 0.5), std::invalid_argument);
}

TEST(SchattenNorm, HilbertSchmidtIsFrobenius) {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_operator(rng, dyadic_weights(8));
        EXPECT_NEAR(schatten_norm(a, 2.0), h_symmetrized(a).frobenius_norm(), 1e-10 * schatten_norm(a, 2.0));
    }
}

TEST(SchattenNorm, TwoPathsAgree) {
    Rng rng(4);
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        const auto a = random_operator(rng, dyadic_weights(4 + 4 * (t % 3)));
        for (double p : {1.0, 2.0, 4.0}) worst = std::max(worst, schatten_norm_paths(a, p).relative_gap());
    }
    EXPECT_LE(worst, 1e-9);
}

TEST(SchattenNorm, HoelderMonotonicity) {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_operator(rng, dyadic_weights(8));
        double prev = kInfinity;
        for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, kInfinity}) {
            const double v = schatten_norm(a, p);
            EXPECT_LE(v, prev * (1 + 1e-12));
            prev = v;
        }
    }
}

TEST(SchattenNorm, UnitaryInvariance) {
    Rng rng(6);
    const auto w = dyadic_weights(8);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_operator(rng, w);
        const auto u = random_h_unitary(rng, w);
        const auto v = random_h_unitary(rng, w);
        for (double p : {1.0, 2.0, 4.0})
            EXPECT_NEAR(schatten_norm(u * a * v, p), schatten_norm(a, p), 1e-9 * schatten_norm(a, p));
    }
}

TEST(Weyl, NilpotentAndNormal) {
    const auto r = weyl_check(BOperator(nilpotent(), {1.0, 1.0}), power_map(1.0));
    EXPECT_TRUE(r.passed());
    Rng rng(7);
    const auto a = random_h_unitary(rng, dyadic_weights(6));
    const auto d = BOperator(ComplexMatrix::diagonal(std::vector<double>{2, -1, 0.5, 3, 1, 1}), dyadic_weights(6));
    for (const auto& op : {a, a * d * adjoint(a)}) {
        const auto s = singular_spectrum(op);
        std::vector<double> lam;
        for (auto z : s.lambda) lam.push_back(std::abs(z));
        std::sort(lam.rbegin(), lam.rend());
        for (std::size_t k = 0; k < lam.size(); ++k) EXPECT_NEAR(lam[k], s.mu[k], 1e-9);
    }
}

TEST(Weyl, RandomSweep) {
    Rng rng(8);
    for (int t = 0; t < 500; ++t) {
        const auto a = random_operator(rng, dyadic_weights(4 + 4 * (t % 3)));
        for (double p : {1.0, 2.0, 4.0}) EXPECT_TRUE(weyl_check(a, power_map(p)).passed());
    }
}

TEST(Weyl, UserHook) {
    Rng rng(8);
    const PhiMap log1p{"log1p", [](double t) { return std::log1p(t); }};
    EXPECT_TRUE(weyl_check(random_operator(rng, dyadic_weights(6)), log1p).passed());
}

TEST(Horn, IdentityAndZero) {
    const auto w = dyadic_weights(4);
    const auto id = BOperator::identity(w);
    const auto r = horn_check(id, id, power_map(2.0));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks[0].worst_violation, 0.0);
    Rng rng(9);
    EXPECT_TRUE(horn_check(random_operator(rng, w), BOperator::zero(w), power_map(1.0)).passed());
}

TEST(Horn, RandomSweep) {
    Rng rng(10);
    for (int t = 0; t < 500; ++t) {
        const auto w = dyadic_weights(4 + 4 * (t % 3));
        const auto a = random_operator(rng, w);
        const auto b = random_operator(rng, w);
        for (double p : {1.0, 2.0, 4.0}) EXPECT_TRUE(horn_check(a, b, power_map(p)).passed());
    }
}

TEST(LalescoLidskii, Examples) {
    const BOperator tri(ComplexMatrix(2, 2, {1, 2, 0, 3}), {0.5, 0.25});
    EXPECT_TRUE(lidskii_check(tri).passed());
    EXPECT_LE(lidskii_check(tri).checks[0].worst_violation, 1e-12);
    const BOperator d(ComplexMatrix::diagonal(std::vector<double>{1, -2}), {1.0, 1.0});
    const auto s = singular_spectrum(d);
    EXPECT_NEAR(std::abs(s.lambda[0]) + std::abs(s.lambda[1]), 3.0, 1e-14);
    EXPECT_NEAR(s.mu[0] + s.mu[1], 3.0, 1e-14);
    EXPECT_TRUE(lalesco_check(d).passed());
}

TEST(LalescoLidskii, RandomSweep) {
    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        const auto a = random_operator(rng, dyadic_weights(4 + 4 * (t % 3)));
        EXPECT_TRUE(lalesco_check(a).passed());
        EXPECT_TRUE(lidskii_check(a).passed());
    }
}

TEST(ApproximationNumbers, IdentityAndZero) {
    const auto s = approximation_numbers(BOperator::identity(dyadic_weights(3)), ApproxMetric::h).s;
    ASSERT_EQ(s.size(), 4u);
    for (std::size_t n = 0; n < 3; ++n) EXPECT_NEAR(s[n], 1.0, 1e-14);
    EXPECT_EQ(s[3], 0.0);
    for (double v : approximation_numbers(BOperator::zero(dyadic_weights(3)), ApproxMetric::h).s) EXPECT_EQ(v, 0.0);
}

TEST(ApproximationNumbers, EckartYoung) {
    Rng rng(12);
    const auto w = dyadic_weights(8);
    const auto a = random_operator(rng, w);
    const auto s = approximation_numbers(a, ApproxMetric::h).s;
    const auto f = svd(h_symmetrized(a));
    for (std::size_t n = 0; n < 8; ++n) {
        // the truncated SVD attains s_n in the H operator norm
        ComplexMatrix k(8, 8);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t j = 0; j < 8; ++j) k(i, j) += f.sigma[r] * f.u(i, r) * std::conj(f.v(j, r));
        EXPECT_NEAR(h_operator_norm(a - from_h_symmetrized(k, w)), s[n], 1e-10);
    }
}

TEST(ApproximationNumbers, BEstimateIsFlaggedAndMonotone) {
    Rng rng(13);
    const auto a = random_operator(rng, dyadic_weights(6));
    const auto r = approximation_numbers(a, ApproxMetric::b_estimate, 3.0, 4, 99);
    EXPECT_TRUE(r.upper_bounds);
    ASSERT_EQ(r.s.size(), 7u);
    EXPECT_EQ(r.s.back(), 0.0);
    EXPECT_TRUE(std::is_sorted(r.s.rbegin(), r.s.rend()));
    // the first bound dominates the estimated norm of A itself
    EXPECT_GE(r.s[0], r.estimates[0] * (1 - 1e-12));
}

TEST(Pietsch, Examples) {
    EXPECT_EQ(pietsch_cp(BOperator::zero(dyadic_weights(3)), 1.0, ApproxMetric::h), 0.0);
    EXPECT_NEAR(pietsch_cp(BOperator::identity(dyadic_weights(3)), 1.0, ApproxMetric::h), 2.0, 1e-13);
    Rng rng(14);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_operator(rng, dyadic_weights(6));
        for (double p : {1.0, 2.0}) {
            const double cp = pietsch_cp(a, p, ApproxMetric::h);
            const double sp = std::pow(schatten_norm(a, p), p);
            EXPECT_LE(cp, sp + 1e-10);
            EXPECT_NEAR(sp - cp, std::pow(singular_values(a)[0], p), 1e-9 * sp);
        }
    }
}

TEST(NuclearNorm, ZeroAndRankOne) {
    EXPECT_EQ(nuclear_norm_upper(BOperator::zero(dyadic_weights(3)), 1.5, 3, 1).upper, 0.0);

    // A x = f(x) u with ||u||_3 = 1 and ||f||_{3/2} = 1
    const double p = 3.0;
    const double q = 1.5;
    ComplexVector u{1.0, 2.0, -1.0, Complex{0.0, 1.0}};
    ComplexVector f{0.5, -1.0, Complex{1.0, 1.0}, 2.0};
    const double nu = vector_pnorm(u, p);
    const double nf = vector_pnorm(f, q);
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = u[i] / nu * f[j] / nf;
    const auto b = nuclear_norm_upper(BOperator(m, dyadic_weights(4)), q, 3, 1);
    EXPECT_NEAR(b.upper, 1.0, 1e-12);
    EXPECT_LE(b.operator_estimate, b.upper + 1e-12);
}

TEST(NuclearNorm, DominatesOperatorNorm) {
    Rng rng(15);
    for (int t = 0; t < 30; ++t) {
        const auto a = random_operator(rng, dyadic_weights(6));
        for (double q : {1.5, 2.0, 3.0}) {
            const auto b = nuclear_norm_upper(a, q, 3, t);
            EXPECT_GE(b.upper, b.operator_estimate * (1 - 1e-10));
        }
        // p = 2 with uniform weights: the representation is exactly the trace norm
        const BOperator e(a.matrix(), std::vector<double>(6, 1.0));
        EXPECT_NEAR(nuclear_norm_upper(e, 2.0, 3, t).upper, schatten_norm(e, 1.0), 1e-10 * schatten_norm(e, 1.0));
    }
}
