#include "almost_hilbert/random.hpp"

namespace ah {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::string_view name) {
    // FNV-1a
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return mix64(master ^ mix64(h));
}

std::uint64_t trial_seed(std::uint64_t stream, std::uint64_t trial) {
    return mix64(stream + mix64(trial + 1));
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (auto& z : m.entries()) z = rng.complex_normal();
    return m;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
    return hermitian_part(random_matrix(rng, n, n));
}

ComplexVector random_vector(Rng& rng, std::size_t n) {
    ComplexVector v(n);
    for (auto& z : v) z = rng.complex_normal();
    return v;
}

}  // namespace ah
