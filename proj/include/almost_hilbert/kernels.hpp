#pragma once

#include <array>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <vector>

#include "almost_hilbert/grid_function.hpp"
#include "almost_hilbert/matrix.hpp"

namespace ah {

/// Exact antiderivative of a piecewise-constant grid function: 1-D prefix
/// sums, 2-D summed-area table with bilinear interpolation inside a cell.
class CumulativeIntegral {
public:
    explicit CumulativeIntegral(const GridFunction& f);

    int dim() const noexcept { return static_cast<int>(box_.size()); }

    /// Integral over the axis-aligned rectangle, clipped to the grid box.
    Complex integrate(std::span<const Interval> rect) const;

private:
    Complex cumulative(double x) const;
    Complex cumulative(double x, double y) const;

    std::vector<Interval> box_;
    std::size_t resolution_;
    std::vector<Complex> table_;  // (resolution + 1)^dim corner values
};

struct Rect {
    std::array<Interval, 2> sides;
    int dim = 1;
    std::span<const Interval> view() const { return {sides.data(), static_cast<std::size_t>(dim)}; }
};

// Every parallel kernel writes disjoint output indices and accumulates each
// output in the same order as its serial twin, so results are bit-identical.

namespace kernels::serial {

/// y_i = sum_j c[(i - j) mod M] x_j
ComplexVector circulant_apply(std::span<const Complex> c, std::span<const Complex> x);
/// y_i = sum_j t[|i - j|] x_j
ComplexVector toeplitz_apply(std::span<const double> t, std::span<const Complex> x);
std::vector<Complex> rect_integrals(const CumulativeIntegral& table, std::span<const Rect> rects);

}  // namespace kernels::serial

namespace kernels::parallel {

ComplexVector circulant_apply(std::span<const Complex> c, std::span<const Complex> x);
ComplexVector toeplitz_apply(std::span<const double> t, std::span<const Complex> x);
std::vector<Complex> rect_integrals(const CumulativeIntegral& table, std::span<const Rect> rects);

}  // namespace kernels::parallel

/// out[t] = f(t) for t < n, evaluated concurrently when `parallel` is set.
/// The first exception thrown by any trial is rethrown after the loop.
template <class R, class F>
std::vector<R> map_trials(std::size_t n, F&& f, bool parallel = true) {
    std::vector<R> out(n);
    std::exception_ptr error;
    std::mutex guard;
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
        try {
            out[static_cast<std::size_t>(t)] = f(static_cast<std::size_t>(t));
        } catch (...) {
            std::lock_guard<std::mutex> lock(guard);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace ah
