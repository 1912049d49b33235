#include <doctest.h>

#include <cmath>

#include "mlab/experiments.hpp"

using namespace mlab;

namespace {
double output(const StudyReport& r, const std::string& name) {
    for (const auto& [k, v] : r.outputs)
        if (k == name) return v;
    FAIL("missing output " << name);
    return 0.0;
}
}  // namespace

TEST_CASE("study report text and verdict") {
    StudyReport r;
    r.name = "demo";
    r.input("N", 400.0);
    r.output("x", 0.5);
    CHECK(r.check("small", 0.5, "<=", 1.0));
    CHECK(r.passed());
    CHECK_FALSE(r.check("large", 0.5, ">=", 1.0));
    CHECK_FALSE(r.passed());
    const std::string t = r.to_text();
    CHECK(t.find("study demo") != std::string::npos);
    CHECK(t.find("check large") != std::string::npos);
    CHECK(t.find("FAIL") != std::string::npos);
    CHECK(t.find("verdict FAIL") != std::string::npos);
}

TEST_CASE("zero-amplitude oracle is reproduced exactly") {
    DataSpec s;
    s.family = Family::bessel_oracle;
    s.amplitude = 0.0;
    s.wavenumber = 2.0;
    const StudyReport r = convergence_study(s, 10.0, 2.0, {100, 200, 400});
    CHECK(std::isinf(output(r, "order")));
    CHECK(output(r, "self_diff_N200") == 0.0);
}

TEST_CASE("identical specs give zero differences") {
    DataSpec a;
    a.amplitude = 0.005;
    const StudyReport r = stability_pair(a, a, 2.0, 10.0, 200);
    CHECK(r.passed());
    CHECK(output(r, "sup_difference") == 0.0);

    HomotopyOptions o;
    o.T = 2.0;
    o.R = 10.0;
    o.N = 200;
    const StudyReport h = homotopy_sweep(a, a, o);
    CHECK(h.passed());
}

TEST_CASE("nearby small data stay close") {
    DataSpec a, b;
    a.amplitude = 0.005;
    b.amplitude = 0.0055;
    const StudyReport r = stability_pair(a, b, 4.0, 12.0, 240);
    CHECK(r.passed());
    CHECK(output(r, "ratio_hom") <= 16.0);
}

TEST_CASE("zero epsilon keeps every functional at zero") {
    GlobalityOptions o;
    o.T = 2.0;
    o.h = 0.1;
    const StudyReport r = smalldata_globality({0.0}, o);
    CHECK(r.passed());
    CHECK(output(r, "eps0_hnorm") == 0.0);
    CHECK(output(r, "eps0_E3_ratio") == 0.0);
    CHECK(output(r, "eps0_sup_phit_phir") == 0.0);
}

TEST_CASE("blow-up ladder reports min Delta per amplitude") {
    const StudyReport r = blowup_probe({0.1, 0.4}, 2.0, 10.0, 200);
    CHECK(output(r, "a0.1_min_delta") > output(r, "a0.4_min_delta"));
}

TEST_CASE("manufactured trajectory samples the field") {
    const Grid g(4.0, 40);
    const auto f = oracle::gaussian_cos();
    const Trajectory tr = manufactured_trajectory(f, g, 1.0, 5);
    REQUIRE(tr.snapshots.size() == 5);
    CHECK(tr.snapshots[2].state.t == doctest::Approx(0.5));
    CHECK(tr.snapshots[2].state.phi[3] == doctest::Approx(f.d(0, 0, 0.5, g.r(3))));
    CHECK(tr.snapshots[2].bundle.has_value());
}
