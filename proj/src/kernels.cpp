#include "almost_hilbert/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ah {

CumulativeIntegral::CumulativeIntegral(const GridFunction& f) : box_(f.box()), resolution_(f.resolution()) {
    const std::size_t r = resolution_;
    const std::size_t stride = r + 1;
    if (dim() == 1) {
        table_.assign(stride, Complex{});
        const double h = f.cell_width(0);
        for (std::size_t i = 0; i < r; ++i) table_[i + 1] = table_[i] + f[i] * h;
        return;
    }
    table_.assign(stride * stride, Complex{});
    const double vol = f.cell_volume();
    for (std::size_t i = 0; i < r; ++i) {
        Complex row{};
        for (std::size_t j = 0; j < r; ++j) {
            row += f[i * r + j] * vol;
            table_[(i + 1) * stride + j + 1] = table_[i * stride + j + 1] + row;
        }
    }
}

Complex CumulativeIntegral::cumulative(double x) const {
    const double t = std::clamp((x - box_[0].lo) / (box_[0].length() / static_cast<double>(resolution_)), 0.0,
                                static_cast<double>(resolution_));
    const auto i = std::min(static_cast<std::size_t>(t), resolution_ - 1);
    const double u = t - static_cast<double>(i);
    return table_[i] + u * (table_[i + 1] - table_[i]);
}

Complex CumulativeIntegral::cumulative(double x, double y) const {
    const double rr = static_cast<double>(resolution_);
    const double tx = std::clamp((x - box_[0].lo) / box_[0].length() * rr, 0.0, rr);
    const double ty = std::clamp((y - box_[1].lo) / box_[1].length() * rr, 0.0, rr);
    const auto i = std::min(static_cast<std::size_t>(tx), resolution_ - 1);
    const auto j = std::min(static_cast<std::size_t>(ty), resolution_ - 1);
    const double u = tx - static_cast<double>(i);
    const double v = ty - static_cast<double>(j);
    const std::size_t s = resolution_ + 1;
    const Complex s00 = table_[i * s + j];
    const Complex s10 = table_[(i + 1) * s + j];
    const Complex s01 = table_[i * s + j + 1];
    const Complex s11 = table_[(i + 1) * s + j + 1];
    return (1 - u) * (1 - v) * s00 + u * (1 - v) * s10 + (1 - u) * v * s01 + u * v * s11;
}

Complex CumulativeIntegral::integrate(std::span<const Interval> rect) const {
    if (rect.size() != box_.size()) throw std::invalid_argument("CumulativeIntegral: dimension mismatch");
    for (std::size_t a = 0; a < rect.size(); ++a)
        if (rect[a].hi <= box_[a].lo || rect[a].lo >= box_[a].hi) return {};
    if (dim() == 1) return cumulative(rect[0].hi) - cumulative(rect[0].lo);
    return cumulative(rect[0].hi, rect[1].hi) - cumulative(rect[0].lo, rect[1].hi) - cumulative(rect[0].hi, rect[1].lo) +
           cumulative(rect[0].lo, rect[1].lo);
}

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": length mismatch");
}

Complex circulant_row(std::span<const Complex> c, std::span<const Complex> x, std::size_t i) {
    const std::size_t m = x.size();
    Complex acc{};
    for (std::size_t j = 0; j < m; ++j) acc += c[(i + m - j) % m] * x[j];
    return acc;
}

Complex toeplitz_row(std::span<const double> t, std::span<const Complex> x, std::size_t i) {
    const std::size_t m = x.size();
    Complex acc{};
    for (std::size_t j = 0; j < m; ++j) acc += t[i > j ? i - j : j - i] * x[j];
    return acc;
}

}  // namespace

namespace kernels::serial {

ComplexVector circulant_apply(std::span<const Complex> c, std::span<const Complex> x) {
    require_same_length(c.size(), x.size(), "circulant_apply");
    ComplexVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = circulant_row(c, x, i);
    return y;
}

ComplexVector toeplitz_apply(std::span<const double> t, std::span<const Complex> x) {
    require_same_length(t.size(), x.size(), "toeplitz_apply");
    ComplexVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = toeplitz_row(t, x, i);
    return y;
}

std::vector<Complex> rect_integrals(const CumulativeIntegral& table, std::span<const Rect> rects) {
    std::vector<Complex> out(rects.size());
    for (std::size_t k = 0; k < rects.size(); ++k) out[k] = table.integrate(rects[k].view());
    return out;
}

}  // namespace kernels::serial

namespace kernels::parallel {

ComplexVector circulant_apply(std::span<const Complex> c, std::span<const Complex> x) {
    require_same_length(c.size(), x.size(), "circulant_apply");
    ComplexVector y(x.size());
    const auto m = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < m; ++i) y[i] = circulant_row(c, x, static_cast<std::size_t>(i));
    return y;
}

ComplexVector toeplitz_apply(std::span<const double> t, std::span<const Complex> x) {
    require_same_length(t.size(), x.size(), "toeplitz_apply");
    ComplexVector y(x.size());
    const auto m = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < m; ++i) y[i] = toeplitz_row(t, x, static_cast<std::size_t>(i));
    return y;
}

std::vector<Complex> rect_integrals(const CumulativeIntegral& table, std::span<const Rect> rects) {
    std::vector<Complex> out(rects.size());
    const auto n = static_cast<std::ptrdiff_t>(rects.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) out[k] = table.integrate(rects[k].view());
    return out;
}

}  // namespace kernels::parallel

}  // namespace ah
