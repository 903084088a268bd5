#include <benchmark/benchmark.h>

#include <cmath>

#include "almost_hilbert/integral_ops.hpp"
#include "almost_hilbert/kernels.hpp"
#include "almost_hilbert/ks2.hpp"
#include "almost_hilbert/operator_algebra.hpp"
#include "almost_hilbert/random.hpp"

using namespace ah;

namespace {

ComplexVector random_signal(std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    return random_vector(rng, m);
}

std::vector<double> decaying_row(std::size_t m) {
    std::vector<double> t(m);
    for (std::size_t d = 0; d < m; ++d) t[d] = 1.0 / (1.0 + static_cast<double>(d));
    return t;
}

template <ComplexVector (*Apply)(std::span<const Complex>, std::span<const Complex>)>
void circulant(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto c = random_signal(m, 1);
    const auto x = random_signal(m, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Apply(c, x));
}

template <ComplexVector (*Apply)(std::span<const double>, std::span<const Complex>)>
void toeplitz(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto t = decaying_row(m);
    const auto x = random_signal(m, 3);
    for (auto _ : state) benchmark::DoNotOptimize(Apply(t, x));
}

template <std::vector<Complex> (*Apply)(const CumulativeIntegral&, std::span<const Rect>)>
void rects(benchmark::State& state) {
    const auto sys = CubeSystem::unit(2);
    const auto f = GridFunction::sample({0, 1}, {0, 1}, 256, [](double x, double y) { return Complex{std::sin(7 * x) * y}; });
    const CumulativeIntegral table(f);
    const auto rs = sys.clipped_rects(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Apply(table, rs));
}

void trial_sweep(benchmark::State& state, bool parallel) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto out = map_trials<double>(
            n,
            [](std::size_t t) {
                Rng rng(trial_seed(7, t));
                const auto a = random_operator(rng, dyadic_weights(8));
                return h_operator_norm(a);
            },
            parallel);
        benchmark::DoNotOptimize(out);
    }
}

}  // namespace

BENCHMARK(circulant<kernels::serial::circulant_apply>)->Name("circulant/serial")->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(circulant<kernels::parallel::circulant_apply>)->Name("circulant/parallel")->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(toeplitz<kernels::serial::toeplitz_apply>)->Name("toeplitz/serial")->RangeMultiplier(4)->Range(256, 8192);
BENCHMARK(toeplitz<kernels::parallel::toeplitz_apply>)->Name("toeplitz/parallel")->RangeMultiplier(4)->Range(256, 8192);
BENCHMARK(rects<kernels::serial::rect_integrals>)->Name("rect_integrals/serial")->Arg(256)->Arg(1024);
BENCHMARK(rects<kernels::parallel::rect_integrals>)->Name("rect_integrals/parallel")->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(trial_sweep, serial, false)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(trial_sweep, parallel, true)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
