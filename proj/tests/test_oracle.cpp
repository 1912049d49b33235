#include <doctest.h>

#include <cmath>
#include <random>

#include "mlab/oracle.hpp"

using namespace mlab;
using namespace mlab::oracle;

TEST_CASE("J0 basics") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-12);
    CHECK(bessel_j1(0.0) == 0.0);
}

TEST_CASE("J0 agrees with the standard library") {
    for (double x = 0.0; x <= 200.0; x += 0.37)
        CHECK(std::abs(bessel_j0(x) - std::cyl_bessel_j(0.0, x)) < 1e-12);
}

TEST_CASE("J0 satisfies the Bessel ODE") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.5, 60.0);
    const double h = 1e-3;
    for (int k = 0; k < 50; ++k) {
        const double x = u(rng);
        const double d1 = -bessel_j1(x);
        // J0'' from a fourth-order difference of J0
        const double d2 = (-bessel_j0(x + 2 * h) + 16 * bessel_j0(x + h) - 30 * bessel_j0(x) + 16 * bessel_j0(x - h) -
                           bessel_j0(x - 2 * h)) /
                          (12 * h * h);
        CHECK(std::abs(d2 + d1 / x + bessel_j0(x)) < 1e-8);
    }
}

TEST_CASE("Richardson order estimates") {
    const OrderEstimate a = richardson_order({1.0, 1.0 / 16.0});
    CHECK(a.defined);
    CHECK(a.order == doctest::Approx(4.0));
    const OrderEstimate b = richardson_order({1.0, 1.0 / 8.0, 1.0 / 64.0});
    CHECK(b.order == doctest::Approx(3.0));
    CHECK(b.pairwise.size() == 2);
    const OrderEstimate z = richardson_order({0.0, 0.0, 0.0});
    CHECK(z.exact);
    CHECK_FALSE(z.defined);
    CHECK_FALSE(richardson_order({1.0, 2.0}).defined);
}

TEST_CASE("dense quadrature closed forms") {
    const double a = 0.7;
    CHECK(std::abs(dense_quadrature([&](double r) { return 4 * a * a * r * std::exp(-2 * r * r); }, Weight::one, 12.0,
                                    200) -
                   a * a) < 1e-12);
    CHECK(dense_quadrature([](double) { return 0.0; }, Weight::one, 5.0, 10) == 0.0);
    CHECK(dense_quadrature([](double) { return 1.0; }, Weight::r, 3.0, 10) == doctest::Approx(4.5).epsilon(1e-14));
}

TEST_CASE("manufactured field derivatives match finite differences") {
    const ManufacturedField f = r2gauss_sin();
    const double t = 0.4, r = 0.8, h = 1e-4;
    for (int nt = 0; nt < 3; ++nt)
        for (int nr = 0; nr < 3; ++nr) {
            const double fd_r = (f.d(nt, nr, t, r + h) - f.d(nt, nr, t, r - h)) / (2 * h);
            const double fd_t = (f.d(nt, nr, t + h, r) - f.d(nt, nr, t - h, r)) / (2 * h);
            CHECK(std::abs(fd_r - f.d(nt, nr + 1, t, r)) < 1e-7);
            CHECK(std::abs(fd_t - f.d(nt + 1, nr, t, r)) < 1e-7);
        }
    const ManufacturedField g = gaussian_cos();
    CHECK(g.d(0, 0, 0.0, 0.0) == doctest::Approx(0.1));
    CHECK(g.d(2, 0, 0.3, 1.1) == doctest::Approx(-g.d(0, 0, 0.3, 1.1)));
}
