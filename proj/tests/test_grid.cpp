#include <doctest.h>

#include <cmath>

#include "mlab/errors.hpp"
#include "mlab/grid.hpp"

using namespace mlab;

namespace {
Field sample(const Grid& g, double (*f)(double)) {
    Field v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(g.r(i));
    return v;
}
double max_err_d1_sin(int N) {
    const Grid g(2.0, N);
    const Field d = deriv_r(sample(g, [](double r) { return std::sin(r); }), 1, Parity::odd, g);
    double e = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) e = std::max(e, std::abs(d[i] - std::cos(g.r(i))));
    return e;
}
}  // namespace

TEST_CASE("grid rejects odd or tiny N") {
    CHECK_THROWS_AS(Grid(1.0, 17), ContractViolation);
    CHECK_THROWS_AS(Grid(1.0, 8), ContractViolation);
    CHECK_THROWS_AS(Grid(-1.0, 16), ContractViolation);
}

TEST_CASE("derivative of a constant vanishes") {
    const Grid g(3.0, 32);
    const Field c(g.size(), 4.25);
    for (int order = 1; order <= 3; ++order)
        for (double v : deriv_r(c, order, Parity::even, g)) CHECK(std::abs(v) < 1e-11);
}

TEST_CASE("first derivative of r^2 is 2r") {
    const Grid g(2.0, 40);
    const Field d = deriv_r(sample(g, [](double r) { return r * r; }), 1, Parity::even, g);
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == doctest::Approx(2.0 * g.r(i)).epsilon(1e-12));
}

TEST_CASE("d1 of sin converges at fourth order") {
    const double e1 = max_err_d1_sin(64), e2 = max_err_d1_sin(128);
    CHECK(e1 / e2 >= 14.0);
}

TEST_CASE("integrate closed forms") {
    const Grid g1(1.0, 16);
    CHECK(integrate(sample(g1, [](double r) { return r; }), Weight::one, g1) == doctest::Approx(0.5).epsilon(1e-14));

    const Grid g2(2.0, 16);
    CHECK(integrate(sample(g2, [](double r) { return r * r; }), Weight::inv_r, g2) ==
          doctest::Approx(2.0).epsilon(1e-14));

    const double a = 0.3;
    const Grid g3(10.0, 2000);
    Field f(g3.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = 4 * a * a * g3.r(i) * std::exp(-2 * g3.r(i) * g3.r(i));
    CHECK(std::abs(integrate(f, Weight::one, g3) - a * a) < 1e-10);

    const Grid g4(3.0, 16);
    CHECK(integrate(Field(g4.size(), 1.0), Weight::r, g4) == doctest::Approx(4.5).epsilon(1e-14));
}

TEST_CASE("inv_r weight refuses a nonzero axis value") {
    const Grid g(1.0, 16);
    CHECK_THROWS_AS(integrate(Field(g.size(), 1.0), Weight::inv_r, g), AxisSingularity);
}

TEST_CASE("cumulative ends at the full integral and converges at odd offsets") {
    auto f = [](double r) { return std::exp(-r) * std::cos(3 * r); };
    auto F = [](double x) { return (std::exp(-x) * (3 * std::sin(3 * x) - std::cos(3 * x)) + 1.0) / 10.0; };
    auto odd_err = [&](int N) {
        const Grid g(4.0, N);
        const Field v = sample(g, f);
        const Field c = cumulative(v, g);
        CHECK(c[0] == 0.0);
        CHECK(c.back() == doctest::Approx(integrate(v, Weight::one, g)).epsilon(1e-13));
        double e = 0.0;
        for (std::size_t i = 1; i < c.size(); i += 2) e = std::max(e, std::abs(c[i] - F(g.r(i))));
        return e;
    };
    CHECK(odd_err(64) / odd_err(128) >= 14.0);
}

TEST_CASE("finite part equals the plain integral when g(0) = 0") {
    // Only the axis sample of g/r differs: parity zero vs one-sided derivative.
    const Grid g(5.0, 200);
    const Field f = sample(g, [](double r) { return r * r * std::exp(-r * r); });
    CHECK(std::abs(integrate_finite_part(f, 1, 0.1, g) - integrate(f, Weight::inv_r, g)) < 5e-8);
    CHECK(std::abs(integrate_finite_part(f, 1, 0.1, g) - 0.5) < 5e-8);  // Simpson error h^4 |f'''(0)| / 180
}

TEST_CASE("finite part renormalises g(0) at r_ref") {
    // FP int_0^R 1/r dr = ln(R / r_ref)
    const Grid g(2.0, 40);
    CHECK(integrate_finite_part(Field(g.size(), 1.0), 1, 0.1, g) == doctest::Approx(std::log(20.0)).epsilon(1e-13));
}

TEST_CASE("axis fit is exact on even quartics") {
    const Grid g(1.0, 16);
    Field f = sample(g, [](double r) { return 1.0 + 2 * r * r - 3 * r * r * r * r; });
    f[0] = 99.0;
    fill_axis(f, Parity::even);
    CHECK(f[0] == doctest::Approx(1.0).epsilon(1e-12));
    f[0] = 5.0;
    fill_axis(f, Parity::odd);
    CHECK(f[0] == 0.0);
}

TEST_CASE("non-finite samples are reported with their index") {
    Field f(20, 0.0);
    f[7] = std::nan("");
    try {
        require_finite(f, "probe");
        FAIL("expected NonFiniteInput");
    } catch (const NonFiniteInput& e) {
        CHECK(e.index == 7);
    }
}
