#include <doctest.h>

#include <cmath>
#include <random>

#include "mlab/functionals.hpp"

using namespace mlab;

namespace {
FieldState gaussian_state(const Grid& g, double a, double c = 0.0) {
    FieldState s{0.0, Field(g.size()), Field(g.size())};
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double r = g.r(i);
        s.phi[i] = a * std::exp(-r * r);
        s.psi[i] = c * r * r * std::exp(-r * r);
    }
    return s;
}
FieldState vacuum(const Grid& g) { return {0.0, Field(g.size(), 0.0), Field(g.size(), 0.0)}; }
}  // namespace

TEST_CASE("vacuum functionals vanish except the area") {
    const Grid g(6.0, 60);
    const FunctionalRecord f = instant(bundle(vacuum(g), g), g);
    for (double v : {f.E1, f.E1hat, f.E2, f.E2hat, f.E3, f.E3q, f.E3s, f.E3l, f.E3hat, f.E3tilde, f.hnorm2})
        CHECK(v == 0.0);
    CHECK(f.area == doctest::Approx(18.0));
}

TEST_CASE("Gaussian moments: E1 = a^2 and hnorm2 = 2 a^2") {
    const double a = 0.01;
    const Grid g(12.0, 1200);
    const FunctionalRecord f = instant(bundle(gaussian_state(g, a), g), g);
    CHECK(f.E1 == doctest::Approx(a * a).epsilon(1e-6));
    CHECK(f.hnorm2 == doctest::Approx(2 * a * a).epsilon(1e-9));
}

TEST_CASE("E3 splits into its three parts") {
    const Grid g(10.0, 400);
    const FunctionalRecord f = instant(bundle(gaussian_state(g, 0.1, 0.05), g), g);
    CHECK(f.E3 == doctest::Approx(f.E3q + f.E3s + f.E3l).epsilon(1e-12));
}

TEST_CASE("accumulators: vacuum pair leaves the record unchanged, M01 + M02 = M0") {
    const Grid g(10.0, 200);
    AccumulatorRecord prev;
    prev.M = 1.5;
    prev.M0 = 0.25;
    const DerivBundle v = bundle(vacuum(g), g);
    const AccumulatorRecord same = accumulate(prev, v, v, 0.1, g);
    CHECK(same.M == 1.5);
    CHECK(same.M0 == 0.25);
    CHECK(same.eta2 == 0.0);

    const DerivBundle b0 = bundle(gaussian_state(g, 0.1, 0.02), g), b1 = bundle(gaussian_state(g, 0.11, 0.03), g);
    const AccumulatorRecord acc = accumulate(AccumulatorRecord{}, b0, b1, 0.1, g);
    CHECK(acc.M0 > 0.0);
    CHECK(acc.M01 + acc.M02 == doctest::Approx(acc.M0).epsilon(1e-13));
}

TEST_CASE("vacuum bundle has all-zero determinant fields") {
    const Grid g(4.0, 40);
    const DetRecord d = det_fields(bundle(vacuum(g), g), g);
    for (const Field* f : {&d.detA_m, &d.detA, &d.detB_m, &d.detB, &d.detC_m, &d.detC, &d.detD_m, &d.detD, &d.detA_r2})
        for (double x : *f) CHECK(x == 0.0);
}

TEST_CASE("detB_m is nonnegative on random bundles") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    const Grid g(2.0, 16);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Jet> jets(g.size());
        for (auto& j : jets) j = {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        const DetRecord d = det_fields(bundle_from_jets(jets), g);
        for (double x : d.detB_m) CHECK(x >= 0.0);
    }
}

TEST_CASE("shadow report lists every printed expansion") {
    const Grid g(6.0, 120);
    const auto rows = det_shadow_report(bundle(gaussian_state(g, 0.1, 0.05), g), g);
    CHECK(rows.size() == 7);
    for (const auto& r : rows) CHECK(std::isfinite(r.rel));
}

TEST_CASE("vacuum inequality report holds everywhere") {
    const Grid g(6.0, 60);
    const DerivBundle v = bundle(vacuum(g), g);
    FunctionalSeries s;
    for (int k = 0; k < 3; ++k) {
        s.t.push_back(0.1 * k);
        s.instant.push_back(instant(v, g));
        s.acc.push_back(AccumulatorRecord{});
        s.mon.push_back(monitors(v, g));
    }
    const auto rows = inequality_report(s);
    CHECK_FALSE(rows.empty());
    for (const auto& r : rows) {
        CAPTURE(r.name);
        CHECK(r.satisfied);
    }
}
