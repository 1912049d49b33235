#include <doctest.h>

#include <cmath>

#include "mlab/errors.hpp"
#include "mlab/initial_data.hpp"

using namespace mlab;

TEST_CASE("zero-amplitude gaussian is identically zero") {
    const Grid g(10.0, 100);
    const InitialData d = realize(DataSpec{}, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(d.phi0[i] == 0.0);
        CHECK(d.phi1[i] == 0.0);
    }
    CHECK(hnorm(d.phi0, d.phi1, g) == 0.0);
}

TEST_CASE("hnorm of a unit-width gaussian is sqrt(2) a") {
    const Grid g(12.0, 1200);
    DataSpec s;
    s.amplitude = 0.01;
    const InitialData d = realize(s, g);
    CHECK(hnorm(d.phi0, d.phi1, g) == doctest::Approx(std::sqrt(2.0) * 0.01).epsilon(1e-9));
}

TEST_CASE("hnorm is homogeneous") {
    const Grid g(12.0, 600);
    DataSpec s;
    s.amplitude = 0.01;
    s.velocity_amplitude = 0.02;
    const InitialData a = realize(s, g);
    s.amplitude = -0.03;
    s.velocity_amplitude = -0.06;
    const InitialData b = realize(s, g);
    CHECK(hnorm(b.phi0, b.phi1, g) == doctest::Approx(3.0 * hnorm(a.phi0, a.phi1, g)).epsilon(1e-13));
}

TEST_CASE("family names round-trip") {
    for (Family f : {Family::gaussian, Family::bump, Family::bessel_oracle, Family::linear_time})
        CHECK(parse_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_family("sech"), ConfigError);
}

TEST_CASE("support radii") {
    DataSpec s;
    s.width = 2.0;
    CHECK(support_radius(s) == 12.0);
    s.family = Family::bump;
    CHECK(support_radius(s) == 4.0);
    const Grid g(10.0, 100);
    s.amplitude = 1.0;
    const InitialData d = realize(s, g);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.r(i) >= 4.0) CHECK(d.phi0[i] == 0.0);
    s.family = Family::bessel_oracle;
    CHECK(std::isinf(support_radius(s)));
}

TEST_CASE("superluminal drift is rejected") {
    DataSpec s;
    s.family = Family::linear_time;
    s.drift = 1.0;
    CHECK_THROWS(realize(s, Grid(1.0, 16)));
}
