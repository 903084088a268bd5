#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "almost_hilbert/grid_function.hpp"
#include "almost_hilbert/kernels.hpp"
#include "almost_hilbert/report.hpp"

namespace ah {

struct CubeIndex {
    std::size_t k;
    std::size_t l;  // scale, diagonal 2^{-l}
    std::size_t i;  // rational center index
};

/// k -> (l, i). The first eight terms are (1,1) (2,1) (1,2) (1,3) (2,2) (3,1)
/// (3,2) (2,3); afterwards diagonals l + i = s are walked with l descending
/// for odd s and ascending for even s, skipping pairs already listed.
CubeIndex pairing_order(std::size_t k);
std::size_t pairing_index(std::size_t l, std::size_t i);

/// i-th dyadic rational point of the box (i >= 1). Level 0 holds the corners
/// {0, 1}^n; level j adds the points of the (2^j + 1)^n grid not already
/// present. Points within a level are lexicographic in (x, y).
std::vector<double> rational_center(int n, std::size_t i, const std::vector<Interval>& box);

struct Cube {
    std::vector<double> center;
    double side;  // 2^{-l} / sqrt(n)
    std::size_t l;

    std::vector<Interval> bounds() const;
    double volume() const;
};

class CubeSystem {
public:
    CubeSystem(int dim, std::vector<Interval> box);
    static CubeSystem unit(int dim);

    int dim() const noexcept { return dim_; }
    const std::vector<Interval>& box() const noexcept { return box_; }

    Cube cube(std::size_t k) const;
    /// t_k = 2^{-k}
    double weight(std::size_t k) const;
    /// Cube k intersected with the box.
    Rect clipped_rect(std::size_t k) const;
    /// Cubes 1..count intersected with the box.
    std::vector<Rect> clipped_rects(std::size_t count) const;

private:
    int dim_;
    std::vector<Interval> box_;
};

Complex functional_Fk(const GridFunction& f, std::size_t k, const CubeSystem& system);
/// F_1(f) .. F_K(f), sharing one cumulative table.
ComplexVector functionals(const GridFunction& f, std::size_t count, const CubeSystem& system);

Complex ks2_inner(const GridFunction& f, const GridFunction& g, std::size_t count, const CubeSystem& system);
double ks2_norm(const GridFunction& f, std::size_t count, const CubeSystem& system);

/// ||f||_KS2 <= ||f||_q for q < infinity and <= (1/(2 sqrt n))^n ||f||_inf.
VerificationReport embedding_bound_check(const GridFunction& f, double q, std::size_t count, const CubeSystem& system);

/// KS2 norms of sin(2 pi m x), m = 1 .. m_max, on [0, 1]. The decay ratio
/// ||f_{m_max}|| / ||f_1|| is asserted below 0.2 once m_max >= 64 and K >= 256.
VerificationReport weak_strong_demo(std::size_t m_max, std::size_t count, const CubeSystem& system,
                                    std::size_t resolution = 8192);

/// CSV audit dump: k,l,i,center_0[,center_1],side
void write_cube_csv(std::ostream& out, const CubeSystem& system, std::size_t count);

}  // namespace ah
