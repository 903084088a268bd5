#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "almost_hilbert/matrix.hpp"

namespace ah {

/// Seeded generator. Every randomized routine takes one of these (or a seed)
/// explicitly; there is no global RNG.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }
    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Per-check stream derived from the master seed and a stable hash of the
/// check name, so adding a check never perturbs another check's draws.
std::uint64_t stream_seed(std::uint64_t master, std::string_view name);

/// Per-trial seed within a stream.
std::uint64_t trial_seed(std::uint64_t stream, std::uint64_t trial);

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix random_hermitian(Rng& rng, std::size_t n);
ComplexVector random_vector(Rng& rng, std::size_t n);

}  // namespace ah
