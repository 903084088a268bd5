#include "almost_hilbert/ks2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "almost_hilbert/sbasis.hpp"

namespace ah {

namespace {

constexpr std::array<std::array<std::size_t, 2>, 8> kPrefix{{{1, 1}, {2, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}};

std::size_t pairs_below(std::size_t s) { return (s - 1) * (s - 2) / 2; }  // pairs with l + i < s

std::size_t level_size(int n, std::size_t j) {
    if (j == 0) return n == 1 ? 2 : 4;
    const std::size_t full = (std::size_t{1} << j) + 1;
    const std::size_t prev = (std::size_t{1} << (j - 1)) + 1;
    return n == 1 ? full - prev : full * full - prev * prev;
}

/// Dyadic coordinates in [0, 1]^n of the i-th point.
std::vector<double> unit_center(int n, std::size_t i) {
    std::size_t r = i - 1;
    std::size_t j = 0;
    while (r >= level_size(n, j)) {
        r -= level_size(n, j);
        ++j;
    }
    if (j == 0) {
        if (n == 1) return {static_cast<double>(r)};
        return {static_cast<double>(r / 2), static_cast<double>(r % 2)};
    }
    const double scale = std::ldexp(1.0, -static_cast<int>(j));
    if (n == 1) return {static_cast<double>(2 * r + 1) * scale};
    const std::size_t side = (std::size_t{1} << j) + 1;
    const std::size_t half = std::size_t{1} << (j - 1);
    for (std::size_t a = 0; a < side; ++a) {
        const std::size_t row = a % 2 == 1 ? side : half;
        if (r < row) {
            const std::size_t b = a % 2 == 1 ? r : 2 * r + 1;
            return {static_cast<double>(a) * scale, static_cast<double>(b) * scale};
        }
        r -= row;
    }
    throw std::logic_error("rational_center: enumeration overrun");
}

void require_dim(int n) {
    if (n != 1 && n != 2) throw std::invalid_argument("ks2: dimension must be 1 or 2");
}

}  // namespace

CubeIndex pairing_order(std::size_t k) {
    if (k == 0) throw std::invalid_argument("pairing_order: k must be >= 1");
    if (k <= kPrefix.size()) return {k, kPrefix[k - 1][0], kPrefix[k - 1][1]};
    if (k == 9) return {k, 4, 1};
    if (k == 10) return {k, 1, 4};
    std::size_t s = 6;
    while (pairs_below(s + 1) < k) ++s;
    const std::size_t pos = k - pairs_below(s) - 1;
    const std::size_t l = s % 2 == 1 ? s - 1 - pos : pos + 1;
    return {k, l, s - l};
}

std::size_t pairing_index(std::size_t l, std::size_t i) {
    if (l == 0 || i == 0) throw std::invalid_argument("pairing_index: indices must be >= 1");
    for (std::size_t k = 0; k < kPrefix.size(); ++k)
        if (kPrefix[k][0] == l && kPrefix[k][1] == i) return k + 1;
    const std::size_t s = l + i;
    if (s == 5) return l == 4 ? 9 : 10;
    const std::size_t pos = s % 2 == 1 ? s - 1 - l : l - 1;
    return pairs_below(s) + pos + 1;
}

std::vector<double> rational_center(int n, std::size_t i, const std::vector<Interval>& box) {
    require_dim(n);
    if (i == 0) throw std::invalid_argument("rational_center: i must be >= 1");
    if (box.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("rational_center: box dimension mismatch");
    auto c = unit_center(n, i);
    for (int a = 0; a < n; ++a) c[a] = box[a].lo + box[a].length() * c[a];
    return c;
}

std::vector<Interval> Cube::bounds() const {
    std::vector<Interval> out;
    for (double c : center) out.push_back({c - side / 2, c + side / 2});
    return out;
}

double Cube::volume() const { return std::pow(side, static_cast<double>(center.size())); }

CubeSystem::CubeSystem(int dim, std::vector<Interval> box) : dim_(dim), box_(std::move(box)) {
    require_dim(dim);
    if (box_.size() != static_cast<std::size_t>(dim)) throw std::invalid_argument("CubeSystem: box dimension mismatch");
    for (const auto& iv : box_)
        if (!(iv.hi > iv.lo)) throw std::invalid_argument("CubeSystem: empty box");
}

CubeSystem CubeSystem::unit(int dim) { return {dim, std::vector<Interval>(static_cast<std::size_t>(std::max(dim, 0)), Interval{0, 1})}; }

Cube CubeSystem::cube(std::size_t k) const {
    const auto idx = pairing_order(k);
    const double side = std::ldexp(1.0, -static_cast<int>(idx.l)) / std::sqrt(static_cast<double>(dim_));
    return {rational_center(dim_, idx.i, box_), side, idx.l};
}

double CubeSystem::weight(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("CubeSystem::weight: k must be >= 1");
    return std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(k, 2000)));
}

Rect CubeSystem::clipped_rect(std::size_t k) const {
    const auto b = cube(k).bounds();
    Rect r;
    r.dim = dim_;
    for (int a = 0; a < dim_; ++a) {
        const double lo = std::max(b[a].lo, box_[a].lo);
        const double hi = std::min(b[a].hi, box_[a].hi);
        r.sides[a] = {lo, std::max(lo, hi)};
    }
    return r;
}

std::vector<Rect> CubeSystem::clipped_rects(std::size_t count) const {
    std::vector<Rect> rects;
    rects.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) rects.push_back(clipped_rect(k));
    return rects;
}

Complex functional_Fk(const GridFunction& f, std::size_t k, const CubeSystem& system) {
    if (f.dim() != system.dim()) throw std::invalid_argument("functional_Fk: dimension mismatch");
    const auto rect = system.clipped_rect(k);
    return CumulativeIntegral(f).integrate(rect.view());
}

ComplexVector functionals(const GridFunction& f, std::size_t count, const CubeSystem& system) {
    if (f.dim() != system.dim()) throw std::invalid_argument("functionals: dimension mismatch");
    const auto rects = system.clipped_rects(count);
    return kernels::parallel::rect_integrals(CumulativeIntegral(f), rects);
}

Complex ks2_inner(const GridFunction& f, const GridFunction& g, std::size_t count, const CubeSystem& system) {
    require_same_grid(f, g, "ks2_inner");
    if (count == 0) throw std::invalid_argument("ks2_inner: K must be >= 1");
    const auto ff = functionals(f, count, system);
    const auto fg = functionals(g, count, system);
    Complex acc{};
    for (std::size_t k = 0; k < count; ++k) acc += system.weight(k + 1) * ff[k] * std::conj(fg[k]);
    return acc;
}

double ks2_norm(const GridFunction& f, std::size_t count, const CubeSystem& system) {
    if (count == 0) throw std::invalid_argument("ks2_norm: K must be >= 1");
    const auto ff = functionals(f, count, system);
    double acc = 0.0;
    for (std::size_t k = 0; k < count; ++k) acc += system.weight(k + 1) * std::norm(ff[k]);
    return std::sqrt(acc);
}

VerificationReport embedding_bound_check(const GridFunction& f, double q, std::size_t count, const CubeSystem& system) {
    if (!(q >= 1.0)) throw std::invalid_argument("embedding_bound_check: q must be >= 1");
    const double ks = ks2_norm(f, count, system);
    const double fq = lp_norm(f, q);
    const double n = static_cast<double>(system.dim());
    const double bound = std::isinf(q) ? std::pow(1.0 / (2.0 * std::sqrt(n)), n) * fq : fq;
    const Params params{{"q", param_value(q)}, {"K", param_value(static_cast<std::int64_t>(count))}};

    VerificationReport r;
    r.add_check("embedding", std::max(0.0, ks - bound), 1e-9 * (1.0 + fq), 1, params);
    r.add_measurement("ks2_norm", ks, 1, params);
    r.add_measurement("bound", bound, 1, params);
    r.add_tail_bound("ks2_truncation", std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(count, 2000))) *
                                           std::pow(lp_norm(f, 1.0), 2));
    return r;
}

VerificationReport weak_strong_demo(std::size_t m_max, std::size_t count, const CubeSystem& system, std::size_t resolution) {
    if (system.dim() != 1 || system.box()[0] != Interval{0, 1})
        throw std::invalid_argument("weak_strong_demo: requires the unit interval");
    if (m_max == 0) throw std::invalid_argument("weak_strong_demo: m_max must be >= 1");

    VerificationReport r;
    std::vector<double> norms;
    double envelope = 0.0;
    for (std::size_t m = 1; m <= m_max; ++m) {
        const double freq = 2.0 * std::numbers::pi * static_cast<double>(m);
        const auto f = GridFunction::sample({0, 1}, resolution, [freq](double x) { return Complex{std::sin(freq * x)}; });
        const auto ff = functionals(f, count, system);
        double acc = 0.0;
        for (std::size_t k = 0; k < count; ++k) acc += system.weight(k + 1) * std::norm(ff[k]);
        norms.push_back(std::sqrt(acc));
        for (std::size_t k = 0; k < std::min<std::size_t>(8, count); ++k)
            envelope = std::max(envelope, std::abs(ff[k]) * std::numbers::pi * static_cast<double>(m));
        if ((m & (m - 1)) == 0 || m == m_max)
            r.add_measurement("norm_m=" + std::to_string(m), norms.back(), 1, {{"m", param_value(static_cast<std::int64_t>(m))}});
    }
    const Params params{{"m_max", param_value(static_cast<std::int64_t>(m_max))},
                        {"K", param_value(static_cast<std::int64_t>(count))},
                        {"resolution", param_value(static_cast<std::int64_t>(resolution))}};
    r.add_check("functional_envelope", envelope, 1.0 + 1e-3, m_max, params);

    const double ratio = norms.front() > 0.0 ? norms.back() / norms.front() : 0.0;
    if (m_max >= 64 && count >= 256)
        r.add_check("decay_ratio", ratio, 0.2, m_max, params);
    else
        r.add_measurement("decay_ratio", ratio, m_max, params);
    double tail = 0.0;
    for (std::size_t m = m_max / 2; m < m_max; ++m) tail = std::max(tail, norms[m]);
    r.add_measurement("tail_envelope", tail, m_max - m_max / 2, params);
    r.add_tail_bound("ks2_truncation", std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(count, 2000))));
    return r;
}

void write_cube_csv(std::ostream& out, const CubeSystem& system, std::size_t count) {
    out << "k,l,i,center_0";
    if (system.dim() == 2) out << ",center_1";
    out << ",side\n";
    char buf[32];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    };
    for (std::size_t k = 1; k <= count; ++k) {
        const auto idx = pairing_order(k);
        const auto c = system.cube(k);
        out << k << ',' << idx.l << ',' << idx.i;
        for (double x : c.center) out << ',' << num(x);
        out << ',' << num(c.side) << '\n';
    }
}

}  // namespace ah
