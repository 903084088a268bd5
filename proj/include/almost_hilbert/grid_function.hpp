#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "almost_hilbert/matrix.hpp"

namespace ah {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    double length() const noexcept { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Complex samples at cell midpoints of a uniform grid over a box in R^1 or
/// R^2. Samples are stored row-major with axis 0 slowest. Integrals treat the
/// function as constant on each cell (composite midpoint rule).
class GridFunction {
public:
    GridFunction(std::vector<Interval> box, std::size_t resolution, std::vector<Complex> samples);

    static GridFunction zeros(std::vector<Interval> box, std::size_t resolution);
    static GridFunction sample(Interval box, std::size_t resolution, const std::function<Complex(double)>& f);
    static GridFunction sample(Interval box0, Interval box1, std::size_t resolution,
                               const std::function<Complex(double, double)>& f);

    int dim() const noexcept { return static_cast<int>(box_.size()); }
    const std::vector<Interval>& box() const noexcept { return box_; }
    std::size_t resolution() const noexcept { return resolution_; }
    std::size_t size() const noexcept { return samples_.size(); }
    std::span<const Complex> samples() const noexcept { return samples_; }
    std::span<Complex> samples() noexcept { return samples_; }
    Complex operator[](std::size_t i) const { return samples_[i]; }
    Complex& operator[](std::size_t i) { return samples_[i]; }

    double cell_width(int axis) const { return box_[axis].length() / static_cast<double>(resolution_); }
    double cell_volume() const;
    double midpoint(int axis, std::size_t index) const {
        return box_[axis].lo + (static_cast<double>(index) + 0.5) * cell_width(axis);
    }

    bool same_grid(const GridFunction& other) const noexcept {
        return box_ == other.box_ && resolution_ == other.resolution_;
    }

    GridFunction& operator+=(const GridFunction& rhs);
    GridFunction& operator-=(const GridFunction& rhs);
    GridFunction& operator*=(Complex s);

private:
    std::vector<Interval> box_;
    std::size_t resolution_;
    std::vector<Complex> samples_;
};

GridFunction operator+(GridFunction lhs, const GridFunction& rhs);
GridFunction operator-(GridFunction lhs, const GridFunction& rhs);
GridFunction operator*(Complex s, GridFunction f);

/// Throws std::invalid_argument unless the two functions share a grid.
void require_same_grid(const GridFunction& a, const GridFunction& b, const char* where);

// Fixture formats; see docs/formats.md.
void write_csv(std::ostream& out, const GridFunction& f);
GridFunction read_csv(std::istream& in);
void write_binary(std::ostream& out, const GridFunction& f);
GridFunction read_binary(std::istream& in);

}  // namespace ah
