#include "almost_hilbert/grid_function.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ah {

GridFunction::GridFunction(std::vector<Interval> box, std::size_t resolution, std::vector<Complex> samples)
    : box_(std::move(box)), resolution_(resolution), samples_(std::move(samples)) {
    if (box_.size() != 1 && box_.size() != 2) throw std::invalid_argument("GridFunction: dim must be 1 or 2");
    if (resolution_ == 0) throw std::invalid_argument("GridFunction: resolution must be positive");
    for (const auto& iv : box_)
        if (!(iv.length() > 0.0) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw std::invalid_argument("GridFunction: box must have positive volume");
    std::size_t expected = resolution_;
    if (box_.size() == 2) expected *= resolution_;
    if (samples_.size() != expected) throw std::invalid_argument("GridFunction: samples length != resolution^dim");
}

GridFunction GridFunction::zeros(std::vector<Interval> box, std::size_t resolution) {
    const std::size_t n = box.size() == 2 ? resolution * resolution : resolution;
    return GridFunction(std::move(box), resolution, std::vector<Complex>(n));
}

GridFunction GridFunction::sample(Interval box, std::size_t resolution, const std::function<Complex(double)>& f) {
    GridFunction g = zeros({box}, resolution);
    for (std::size_t i = 0; i < resolution; ++i) g.samples_[i] = f(g.midpoint(0, i));
    return g;
}

GridFunction GridFunction::sample(Interval box0, Interval box1, std::size_t resolution,
                                  const std::function<Complex(double, double)>& f) {
    GridFunction g = zeros({box0, box1}, resolution);
    for (std::size_t i = 0; i < resolution; ++i)
        for (std::size_t j = 0; j < resolution; ++j)
            g.samples_[i * resolution + j] = f(g.midpoint(0, i), g.midpoint(1, j));
    return g;
}

double GridFunction::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim(); ++a) v *= cell_width(a);
    return v;
}

GridFunction& GridFunction::operator+=(const GridFunction& rhs) {
    require_same_grid(*this, rhs, "GridFunction::operator+=");
    for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += rhs.samples_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& rhs) {
    require_same_grid(*this, rhs, "GridFunction::operator-=");
    for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] -= rhs.samples_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(Complex s) {
    for (auto& z : samples_) z *= s;
    return *this;
}

GridFunction operator+(GridFunction lhs, const GridFunction& rhs) { return lhs += rhs; }
GridFunction operator-(GridFunction lhs, const GridFunction& rhs) { return lhs -= rhs; }
GridFunction operator*(Complex s, GridFunction f) { return f *= s; }

void require_same_grid(const GridFunction& a, const GridFunction& b, const char* where) {
    if (!a.same_grid(b)) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

// ---------------------------------------------------------------------------
// CSV

void write_csv(std::ostream& out, const GridFunction& f) {
    out << "# almost-hilbert grid function v1\n";
    out << "dim," << f.dim() << "\n";
    out << "box";
    out << std::setprecision(17);
    for (const auto& iv : f.box()) out << ',' << iv.lo << ',' << iv.hi;
    out << "\nresolution," << f.resolution() << "\n";
    out << "re,im\n";
    for (const auto& z : f.samples()) out << z.real() << ',' << z.imag() << '\n';
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(item);
    return fields;
}

std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        return line;
    }
    throw std::runtime_error("read_csv: unexpected end of input");
}

}  // namespace

GridFunction read_csv(std::istream& in) {
    auto dim_line = split_csv(next_data_line(in));
    if (dim_line.size() != 2 || dim_line[0] != "dim") throw std::runtime_error("read_csv: expected dim row");
    const int dim = std::stoi(dim_line[1]);
    auto box_line = split_csv(next_data_line(in));
    if (box_line.empty() || box_line[0] != "box" || box_line.size() != static_cast<std::size_t>(1 + 2 * dim))
        throw std::runtime_error("read_csv: malformed box row");
    std::vector<Interval> box;
    for (int a = 0; a < dim; ++a) box.push_back({std::stod(box_line[1 + 2 * a]), std::stod(box_line[2 + 2 * a])});
    auto res_line = split_csv(next_data_line(in));
    if (res_line.size() != 2 || res_line[0] != "resolution") throw std::runtime_error("read_csv: expected resolution row");
    const std::size_t res = std::stoull(res_line[1]);
    if (next_data_line(in) != "re,im") throw std::runtime_error("read_csv: expected re,im header");
    const std::size_t count = dim == 2 ? res * res : res;
    std::vector<Complex> samples(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto row = split_csv(next_data_line(in));
        if (row.size() != 2) throw std::runtime_error("read_csv: malformed sample row");
        samples[i] = {std::stod(row[0]), std::stod(row[1])};
    }
    return GridFunction(std::move(box), res, std::move(samples));
}

// ---------------------------------------------------------------------------
// Binary, explicit little-endian

namespace {

constexpr char kMagic[4] = {'A', 'H', 'G', 'F'};

void put_u64(std::ostream& out, std::uint64_t v) {
    char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(bytes, 8);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    char bytes[4];
    for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(bytes, 4);
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t get_u64(std::istream& in) {
    unsigned char bytes[8];
    if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw std::runtime_error("read_binary: truncated input");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return v;
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char bytes[4];
    if (!in.read(reinterpret_cast<char*>(bytes), 4)) throw std::runtime_error("read_binary: truncated input");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[i]) << (8 * i);
    return v;
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

}  // namespace

void write_binary(std::ostream& out, const GridFunction& f) {
    out.write(kMagic, 4);
    put_u32(out, 1);
    put_u32(out, static_cast<std::uint32_t>(f.dim()));
    put_u64(out, f.resolution());
    for (const auto& iv : f.box()) {
        put_f64(out, iv.lo);
        put_f64(out, iv.hi);
    }
    for (const auto& z : f.samples()) {
        put_f64(out, z.real());
        put_f64(out, z.imag());
    }
}

GridFunction read_binary(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kMagic)) throw std::runtime_error("read_binary: bad magic");
    if (get_u32(in) != 1) throw std::runtime_error("read_binary: unsupported version");
    const std::uint32_t dim = get_u32(in);
    if (dim != 1 && dim != 2) throw std::runtime_error("read_binary: bad dim");
    const std::uint64_t res = get_u64(in);
    if (res == 0 || res > (dim == 2 ? (1u << 14) : (1u << 26))) throw std::runtime_error("read_binary: bad resolution");
    std::vector<Interval> box(dim);
    for (auto& iv : box) {
        iv.lo = get_f64(in);
        iv.hi = get_f64(in);
    }
    const std::size_t count = dim == 2 ? res * res : res;
    std::vector<Complex> samples(count);
    for (auto& z : samples) {
        const double re = get_f64(in);
        const double im = get_f64(in);
        z = {re, im};
    }
    return GridFunction(std::move(box), res, std::move(samples));
}

}  // namespace ah
