#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mlab/kernels.hpp"

namespace mlab {

using Field = std::vector<double>;

enum class Weight { one, r, inv_r, inv_r2 };

// Uniform radial mesh r_i = i*h on [0, R]; N even so composite Simpson applies.
class Grid {
public:
    Grid(double R, int N);

    double R() const { return R_; }
    int N() const { return N_; }
    double h() const { return h_; }
    double r(std::size_t i) const { return static_cast<double>(i) * h_; }
    std::size_t size() const { return static_cast<std::size_t>(N_) + 1; }
    // Index of the even node closest to radius x.
    std::size_t even_node_near(double x) const;

    static constexpr int stencil_half_width = 2;

private:
    double R_;
    int N_;
    double h_;
};

// Fourth-order radial derivative of the given order (1, 2 or 3).
Field deriv_r(std::span<const double> f, int order, Parity p, const Grid& g,
              Exec ex = Exec::parallel);

// Composite Simpson on [0, R] of f * w(r).
double integrate(std::span<const double> f, Weight w, const Grid& g);

// Simpson over [r_i0, R]; (N - i0) must be even.
double integrate_from(std::span<const double> f, std::size_t i0, const Grid& g);

// Hadamard finite part of int_0^R g / r^p dr for an even, regular g
// (p = 1 or 2). The divergent piece g(0)/r^p is renormalised at r_ref:
//   FP = int (g - g0)/r^p dr + g0 * K_p,  K_1 = ln(R/r_ref), K_2 = 1/r_ref - 1/R.
// Exact (no regularisation) when g(0) = 0.
double integrate_finite_part(std::span<const double> g, int p, double r_ref, const Grid& grid);

// Running integral C_i = int_{r_i0}^{r_i} f dr (C_i = 0 for i <= i0).
// Even offsets use Simpson partial sums, odd offsets add a four-point cell rule.
Field cumulative(std::span<const double> f, const Grid& g, std::size_t i0 = 0);

// Axis value implied by parity from nodes 1..3: 0 for odd fields, the
// even polynomial fit (15 f1 - 6 f2 + f3)/10 for even ones.
double axis_from_parity(std::span<const double> f, Parity p);
void fill_axis(std::span<double> f, Parity p);

void require_finite(std::span<const double> f, const char* where);

}  // namespace mlab
