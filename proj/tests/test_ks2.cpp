#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "almost_hilbert/ks2.hpp"
#include "almost_hilbert/numerics.hpp"
#include "almost_hilbert/random.hpp"
#include "almost_hilbert/sbasis.hpp"

using namespace ah;

namespace {

GridFunction random_step(Rng& rng, std::size_t res = 1024, std::size_t pieces = 12) {
    std::vector<Complex> values(pieces);
    for (auto& v : values) v = rng.complex_normal();
    std::vector<Complex> s(res);
    for (std::size_t i = 0; i < res; ++i) s[i] = values[i * pieces / res];
    return {{{0, 1}}, res, std::move(s)};
}

GridFunction constant(double c, std::size_t res = 1024) {
    return GridFunction::sample({0, 1}, res, [c](double) { return Complex{c}; });
}

double overlap(double lo, double hi) { return std::max(0.0, std::min(hi, 1.0) - std::max(lo, 0.0)); }

}  // namespace

TEST(PairingOrder, ListedPrefix) {
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{1, 1}, {2, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}, {2, 3}};
    for (std::size_t k = 1; k <= 8; ++k) {
        const auto c = pairing_order(k);
        EXPECT_EQ(c.k, k);
        EXPECT_EQ(c.l, expected[k - 1].first);
        EXPECT_EQ(c.i, expected[k - 1].second);
    }
    EXPECT_EQ(pairing_order(5).l, 2u);
    EXPECT_EQ(pairing_order(5).i, 2u);
    EXPECT_THROW(pairing_order(0), std::invalid_argument);
}

TEST(PairingOrder, Continuation) {
    EXPECT_EQ(pairing_order(9).l, 4u);
    EXPECT_EQ(pairing_order(9).i, 1u);
    EXPECT_EQ(pairing_order(10).l, 1u);
    EXPECT_EQ(pairing_order(10).i, 4u);
    EXPECT_EQ(pairing_order(11).l, 1u);
    EXPECT_EQ(pairing_order(11).i, 5u);
    EXPECT_EQ(pairing_order(15).l, 5u);
    EXPECT_EQ(pairing_order(16).l, 6u);
}

TEST(PairingOrder, BijectiveRoundTrip) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 1; k <= 10000; ++k) {
        const auto c = pairing_order(k);
        EXPECT_EQ(pairing_index(c.l, c.i), k);
        EXPECT_TRUE(seen.insert({c.l, c.i}).second);
    }
    // every pair with l + i <= 100 has appeared (the first 4950 indices)
    for (std::size_t s = 2; s <= 100; ++s)
        for (std::size_t l = 1; l < s; ++l) EXPECT_TRUE(seen.count({l, s - l}));
}

TEST(RationalCenter, OneDimensional) {
    const std::vector<Interval> box{{0, 1}};
    EXPECT_EQ(rational_center(1, 1, box)[0], 0.0);
    EXPECT_EQ(rational_center(1, 2, box)[0], 1.0);
    EXPECT_EQ(rational_center(1, 3, box)[0], 0.5);
    EXPECT_EQ(rational_center(1, 4, box)[0], 0.25);
    EXPECT_EQ(rational_center(1, 5, box)[0], 0.75);
    EXPECT_EQ(rational_center(1, 3, {{-2, 2}})[0], 0.0);
    EXPECT_THROW(rational_center(1, 0, box), std::invalid_argument);
    EXPECT_THROW(rational_center(3, 1, box), std::invalid_argument);
}

TEST(RationalCenter, TwoDimensional) {
    const std::vector<Interval> box{{0, 1}, {0, 1}};
    const std::vector<std::vector<double>> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 0.5}, {0.5, 0}, {0.5, 0.5}, {0.5, 1}, {1, 0.5}};
    for (std::size_t i = 1; i <= expected.size(); ++i) EXPECT_EQ(rational_center(2, i, box), expected[i - 1]) << i;
}

TEST(RationalCenter, FirstThousandDistinct) {
    for (int n : {1, 2}) {
        std::vector<Interval> box(static_cast<std::size_t>(n), Interval{0, 1});
        std::set<std::vector<double>> seen;
        for (std::size_t i = 1; i <= 1000; ++i) EXPECT_TRUE(seen.insert(rational_center(n, i, box)).second);
    }
}

TEST(CubeSystem, Geometry) {
    const auto s1 = CubeSystem::unit(1);
    EXPECT_EQ(s1.cube(1).side, 0.5);
    EXPECT_EQ(s1.cube(2).side, 0.25);
    const auto s2 = CubeSystem::unit(2);
    const auto c = s2.cube(1);
    EXPECT_NEAR(c.side * std::sqrt(2.0), 0.5, 1e-15);
    double total = 0.0;
    for (std::size_t k = 1; k <= 40; ++k) total += s1.weight(k);
    EXPECT_LT(total, 1.0);
    EXPECT_EQ(1.0 - total, std::ldexp(1.0, -40));
    EXPECT_THROW(CubeSystem(1, {{1, 0}}), std::invalid_argument);
}

TEST(Functional, HandOverlaps) {
    const auto s = CubeSystem::unit(1);
    const auto one = constant(1.0);
    EXPECT_NEAR(functional_Fk(one, 1, s).real(), 0.25, 1e-15);
    EXPECT_NEAR(functional_Fk(one, 2, s).real(), 0.125, 1e-15);
    EXPECT_NEAR(functional_Fk(one, 3, s).real(), 0.25, 1e-15);
    EXPECT_NEAR(functional_Fk(one, 4, s).real(), 0.5, 1e-15);
    EXPECT_EQ(functional_Fk(GridFunction::zeros({{0, 1}}, 64), 3, s), Complex{});
}

TEST(Functional, InteriorCubeHasSideLength) {
    const auto s = CubeSystem::unit(1);
    const auto one = constant(1.0, 4096);
    for (std::size_t k = 1; k <= 200; ++k) {
        const auto c = s.cube(k);
        if (c.center[0] - c.side / 2 >= 0 && c.center[0] + c.side / 2 <= 1)
            EXPECT_NEAR(functional_Fk(one, k, s).real(), std::ldexp(1.0, -static_cast<int>(c.l)), 1e-14) << k;
    }
}

TEST(Functional, TwoDimensionalCorner) {
    const auto s = CubeSystem::unit(2);
    const auto one = GridFunction::sample({0, 1}, {0, 1}, 128, [](double, double) { return Complex{1.0}; });
    const double half = s.cube(1).side / 2;
    EXPECT_NEAR(functional_Fk(one, 1, s).real(), half * half, 1e-14);
    // k = 4 sits on the corner (1, 0)
    const double quarter = s.cube(4).side / 2;
    EXPECT_NEAR(functional_Fk(one, 4, s).real(), quarter * quarter, 1e-14);
}

TEST(Functional, BoundedByL1Norm) {
    Rng rng(1);
    const auto s = CubeSystem::unit(1);
    for (int t = 0; t < 500; ++t) {
        const auto f = random_step(rng);
        const double l1 = lp_norm(f, 1.0);
        for (const auto& v : functionals(f, 64, s)) EXPECT_LE(std::abs(v), l1 + 1e-12);
    }
}

TEST(Functional, SingleAndBatchAgree) {
    Rng rng(2);
    const auto s = CubeSystem::unit(1);
    const auto f = random_step(rng);
    const auto all = functionals(f, 40, s);
    for (std::size_t k = 1; k <= 40; ++k) EXPECT_EQ(functional_Fk(f, k, s), all[k - 1]);
}

TEST(Ks2Inner, IndicatorAgainstIntervalOracle) {
    const auto s = CubeSystem::unit(1);
    const auto one = constant(1.0, 2048);
    double oracle = 0.0;
    for (std::size_t k = 1; k <= 64; ++k) {
        const auto idx = pairing_order(k);
        const double side = std::ldexp(1.0, -static_cast<int>(idx.l));
        const double c = rational_center(1, idx.i, {{0, 1}})[0];
        oracle += std::ldexp(1.0, -static_cast<int>(k)) * std::pow(overlap(c - side / 2, c + side / 2), 2);
    }
    EXPECT_NEAR(ks2_inner(one, one, 64, s).real(), oracle, 1e-12);
    EXPECT_NEAR(ks2_norm(one, 64, s), std::sqrt(oracle), 1e-12);
}

TEST(Ks2Inner, ZeroHermitianAndGridChecks) {
    Rng rng(3);
    const auto s = CubeSystem::unit(1);
    const auto f = random_step(rng);
    const auto g = random_step(rng);
    EXPECT_EQ(ks2_inner(f, GridFunction::zeros({{0, 1}}, 1024), 32, s), Complex{});
    EXPECT_GE(ks2_inner(f, f, 32, s).real(), 0.0);
    EXPECT_NEAR(std::abs(ks2_inner(f, g, 32, s) - std::conj(ks2_inner(g, f, 32, s))), 0.0, 1e-15);
    EXPECT_THROW(ks2_inner(f, random_step(rng, 512), 32, s), std::invalid_argument);
    EXPECT_THROW(ks2_inner(f, g, 0, s), std::invalid_argument);
    EXPECT_EQ(ks2_norm(GridFunction::zeros({{0, 1}}, 64), 16, s), 0.0);
}

TEST(Ks2Inner, GramIsPositiveSemidefinite) {
    Rng rng(4);
    const auto s = CubeSystem::unit(1);
    for (int t = 0; t < 20; ++t) {
        std::vector<GridFunction> fs;
        for (int i = 0; i < 6; ++i) fs.push_back(random_step(rng, 512));
        ComplexMatrix g(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) g(i, j) = ks2_inner(fs[i], fs[j], 128, s);
        EXPECT_GE(hermitian_eigen(hermitian_part(g)).values.back(), -1e-10);
    }
}

TEST(Ks2Norm, SupBoundAndMonotoneInK) {
    Rng rng(5);
    const auto s = CubeSystem::unit(1);
    for (int t = 0; t < 200; ++t) {
        const auto f = random_step(rng, 512);
        const auto fk = functionals(f, 128, s);
        double sup = 0.0;
        for (const auto& v : fk) sup = std::max(sup, std::abs(v));
        double prev = 0.0;
        for (std::size_t k : {1u, 4u, 16u, 64u, 128u}) {
            const double n = ks2_norm(f, k, s);
            EXPECT_GE(n, prev);
            prev = n;
        }
        EXPECT_LE(prev, sup + 1e-12);
    }
}

TEST(Ks2Norm, Fundamentality) {
    Rng rng(6);
    const auto s = CubeSystem::unit(1);
    for (int t = 0; t < 200; ++t) {
        const auto f = random_step(rng, 512, 1 + rng.index(40));
        const auto fk = functionals(f, 256, s);
        EXPECT_TRUE(std::any_of(fk.begin(), fk.end(), [](Complex v) { return std::abs(v) > 1e-14; }));
    }
}

TEST(Embedding, Examples) {
    const auto s = CubeSystem::unit(1);
    const auto z = embedding_bound_check(GridFunction::zeros({{0, 1}}, 64), 2.0, 32, s);
    EXPECT_TRUE(z.passed());
    EXPECT_EQ(z.find("ks2_norm")->worst_violation, 0.0);
    const auto one = embedding_bound_check(constant(1.0), 2.0, 64, s);
    EXPECT_TRUE(one.passed());
    EXPECT_LE(one.find("ks2_norm")->worst_violation, 1.0);

    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        const auto f = random_step(rng);
        for (double q : {1.0, 2.0, 4.0, kInfinity}) EXPECT_TRUE(embedding_bound_check(f, q, 128, s).passed()) << q;
        const auto inf = embedding_bound_check(f, kInfinity, 128, s);
        EXPECT_NEAR(inf.find("bound")->worst_violation, 0.5 * lp_norm(f, kInfinity), 1e-15);
    }
}

TEST(Embedding, TwoDimensionalConstant) {
    const auto s = CubeSystem::unit(2);
    Rng rng(8);
    std::vector<Complex> v(64 * 64);
    for (auto& z : v) z = rng.complex_normal();
    const GridFunction f({{0, 1}, {0, 1}}, 64, v);
    for (double q : {1.0, 2.0, kInfinity}) {
        const auto r = embedding_bound_check(f, q, 64, s);
        EXPECT_TRUE(r.passed());
    }
    EXPECT_NEAR(embedding_bound_check(f, kInfinity, 8, s).find("bound")->worst_violation, 0.125 * lp_norm(f, kInfinity), 1e-15);
}

TEST(WeakStrong, DecayWitness) {
    const auto s = CubeSystem::unit(1);
    const auto r = weak_strong_demo(64, 256, s);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.find("decay_ratio")->status, CheckStatus::pass);
    EXPECT_LE(r.find("decay_ratio")->worst_violation, 0.2);
    EXPECT_TRUE(r.find("norm_m=1") != nullptr);
    EXPECT_TRUE(r.find("norm_m=64") != nullptr);

    const auto small = weak_strong_demo(8, 32, s, 1024);
    EXPECT_EQ(small.find("decay_ratio")->status, CheckStatus::measured);
    EXPECT_THROW(weak_strong_demo(8, 32, CubeSystem::unit(2)), std::invalid_argument);
}

TEST(WeakStrong, PerFunctionalEnvelope) {
    const auto s = CubeSystem::unit(1);
    for (std::size_t m : {1u, 3u, 10u, 32u, 100u}) {
        const double freq = 2.0 * std::numbers::pi * static_cast<double>(m);
        const auto f = GridFunction::sample({0, 1}, 8192, [freq](double x) { return Complex{std::sin(freq * x)}; });
        const auto fk = functionals(f, 8, s);
        for (const auto& v : fk) EXPECT_LE(std::abs(v), (1 + 1e-3) / (std::numbers::pi * static_cast<double>(m)));
    }
}

TEST(CubeDump, CsvLayout) {
    std::ostringstream out;
    write_cube_csv(out, CubeSystem::unit(1), 3);
    EXPECT_EQ(out.str(), "k,l,i,center_0,side\n1,1,1,0,0.5\n2,2,1,0,0.25\n3,1,2,1,0.5\n");
    std::ostringstream out2;
    write_cube_csv(out2, CubeSystem::unit(2), 1);
    EXPECT_EQ(out2.str().substr(0, 27), "k,l,i,center_0,center_1,sid");
}
