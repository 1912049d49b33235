#include "mlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlab/errors.hpp"

namespace mlab {

Grid::Grid(double R, int N) : R_(R), N_(N), h_(R / N) {
    if (!(R > 0.0) || N < 16) throw ContractViolation("Grid: need R > 0 and N >= 16");
    if (N % 2 != 0) throw ContractViolation("Grid: N must be even for Simpson quadrature");
}

std::size_t Grid::even_node_near(double x) const {
    long i = std::lround(x / h_);
    i = std::clamp(i, 0L, static_cast<long>(N_));
    if (i % 2 != 0) i = (i + 1 <= N_) ? i + 1 : i - 1;
    return static_cast<std::size_t>(i);
}

void require_finite(std::span<const double> f, const char* where) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!std::isfinite(f[i])) throw NonFiniteInput(i, where);
}

static void require_size(std::span<const double> f, const Grid& g, const char* where) {
    if (f.size() != g.size())
        throw ContractViolation(std::string(where) + ": sample count does not match grid");
}

Field deriv_r(std::span<const double> f, int order, Parity p, const Grid& g, Exec ex) {
    require_size(f, g, "deriv_r");
    require_finite(f, "deriv_r");
    Field out(g.size());
    switch (order) {
        case 1: kernels::d1(f.data(), f.size(), g.h(), p, out.data(), ex); break;
        case 2: kernels::d2(f.data(), f.size(), g.h(), p, out.data(), ex); break;
        case 3: {
            // d2 keeps parity, d1 then flips it; both steps are fourth order.
            Field tmp(g.size());
            kernels::d2(f.data(), f.size(), g.h(), p, tmp.data(), ex);
            kernels::d1(tmp.data(), tmp.size(), g.h(), p, out.data(), ex);
            break;
        }
        default: throw ContractViolation("deriv_r: order must be 1, 2 or 3");
    }
    return out;
}

static double simpson(std::span<const double> f, std::size_t i0, std::size_t iN, double h) {
    double odd = 0.0, even = 0.0;
    for (std::size_t i = i0 + 1; i < iN; i += 2) odd += f[i];
    for (std::size_t i = i0 + 2; i < iN; i += 2) even += f[i];
    return h / 3.0 * (f[i0] + 4.0 * odd + 2.0 * even + f[iN]);
}

static bool axis_vanishes(std::span<const double> f) {
    double scale = 0.0;
    for (double v : f) scale = std::max(scale, std::abs(v));
    return std::abs(f[0]) <= 1e-10 * scale;
}

double integrate(std::span<const double> f, Weight w, const Grid& g) {
    require_size(f, g, "integrate");
    require_finite(f, "integrate");
    const double h = g.h();
    Field v(f.begin(), f.end());
    switch (w) {
        case Weight::one: break;
        case Weight::r:
            for (std::size_t i = 0; i < v.size(); ++i) v[i] *= g.r(i);
            break;
        case Weight::inv_r:
            if (!axis_vanishes(f))
                throw AxisSingularity("integrate(inv_r): integrand does not vanish at r = 0");
            for (std::size_t i = 1; i < v.size(); ++i) v[i] /= g.r(i);
            // f/r -> f'(0), one-sided fourth order.
            v[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
            break;
        case Weight::inv_r2:
            if (!axis_vanishes(f))
                throw AxisSingularity("integrate(inv_r2): integrand does not vanish at r = 0");
            for (std::size_t i = 1; i < v.size(); ++i) v[i] /= g.r(i) * g.r(i);
            // f/r^2 -> f''(0)/2.
            v[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] -
                    10.0 * f[5]) /
                   (24.0 * h * h);
            break;
    }
    return simpson(v, 0, v.size() - 1, h);
}

double integrate_from(std::span<const double> f, std::size_t i0, const Grid& g) {
    require_size(f, g, "integrate_from");
    if (i0 > static_cast<std::size_t>(g.N()) || (g.N() - i0) % 2 != 0)
        throw ContractViolation("integrate_from: N - i0 must be even");
    if (i0 == static_cast<std::size_t>(g.N())) return 0.0;
    return simpson(f, i0, f.size() - 1, g.h());
}

double integrate_finite_part(std::span<const double> gs, int p, double r_ref, const Grid& grid) {
    require_size(gs, grid, "integrate_finite_part");
    require_finite(gs, "integrate_finite_part");
    if (p != 1 && p != 2) throw ContractViolation("integrate_finite_part: p must be 1 or 2");
    if (!(r_ref > 0.0)) throw ContractViolation("integrate_finite_part: r_ref must be positive");
    const double g0 = gs[0];
    Field v(gs.size());
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double r = grid.r(i);
        v[i] = (gs[i] - g0) / (p == 1 ? r : r * r);
    }
    // (g - g0)/r is odd, (g - g0)/r^2 is even.
    v[0] = p == 1 ? 0.0 : axis_from_parity(v, Parity::even);
    double value = simpson(v, 0, v.size() - 1, grid.h());
    if (g0 != 0.0) {
        const double K = p == 1 ? std::log(grid.R() / r_ref) : 1.0 / r_ref - 1.0 / grid.R();
        value += g0 * K;
    }
    return value;
}

Field cumulative(std::span<const double> f, const Grid& g, std::size_t i0) {
    require_size(f, g, "cumulative");
    const std::size_t n = f.size();
    const double h = g.h();
    Field c(n, 0.0);
    if (i0 + 4 > n - 1 || (n - 1 - i0) % 2 != 0)
        throw ContractViolation("cumulative: need an even number (>= 4) of cells");
    for (std::size_t i = i0 + 2; i < n; i += 2)
        c[i] = c[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    for (std::size_t i = i0 + 1; i < n; i += 2) {
        double cell;
        if (i == i0 + 1)
            cell = (9.0 * f[i - 1] + 19.0 * f[i] - 5.0 * f[i + 1] + f[i + 2]) * h / 24.0;
        else
            cell = (-f[i - 2] + 13.0 * f[i - 1] + 13.0 * f[i] - f[i + 1]) * h / 24.0;
        c[i] = c[i - 1] + cell;
    }
    return c;
}

double axis_from_parity(std::span<const double> f, Parity p) {
    if (p == Parity::odd) return 0.0;
    return (15.0 * f[1] - 6.0 * f[2] + f[3]) / 10.0;
}

void fill_axis(std::span<double> f, Parity p) { f[0] = axis_from_parity(f, p); }

}  // namespace mlab
