#include <doctest.h>

#include <cmath>

#include "mlab/errors.hpp"
#include "mlab/kinematics.hpp"
#include "mlab/oracle.hpp"

using namespace mlab;

namespace {
FieldState constant_state(const Grid& g, double a, double b, double t = 0.0) {
    return {t, Field(g.size(), a + b * t), Field(g.size(), b)};
}
double sup_abs(const Field& f) {
    double m = 0.0;
    for (double x : f) m = std::max(m, std::abs(x));
    return m;
}
}  // namespace

TEST_CASE("vacuum has zero acceleration") {
    const Grid g(5.0, 50);
    const QuasiF q = quasilinear_rhs(constant_state(g, 0.0, 0.0), g);
    CHECK(sup_abs(q.value) == 0.0);
}

TEST_CASE("spatially constant drift is an exact solution") {
    const Grid g(5.0, 50);
    const QuasiF q = quasilinear_rhs(constant_state(g, 0.1, 0.3), g);
    CHECK(sup_abs(q.value) == 0.0);
}

TEST_CASE("small Bessel profile follows the linear operator") {
    const double a = 1e-4, k = 2.0;
    const Grid g(10.0, 800);
    FieldState s{0.0, Field(g.size()), Field(g.size(), 0.0)};
    for (std::size_t i = 0; i < g.size(); ++i) s.phi[i] = a * oracle::bessel_j0(k * g.r(i));
    const QuasiF q = quasilinear_rhs(s, g);
    // phi_rr + phi_r / r = -k^2 phi
    double err = 0.0;
    for (std::size_t i = 0; i + 3 < g.size(); ++i) err = std::max(err, std::abs(q.value[i] + k * k * s.phi[i]));
    CHECK(err < 1e-9);
}

TEST_CASE("timelike violation is detected") {
    const Grid g(5.0, 50);
    FieldState s = constant_state(g, 0.0, 0.0);
    s.psi[10] = 1.1;
    CHECK_THROWS_AS(quasilinear_rhs(s, g), TimelikeViolation);
}

TEST_CASE("vacuum window gives a zero bundle with unit Delta") {
    const Grid g(4.0, 40);
    const DerivBundle b = bundle(constant_state(g, 0, 0, -0.1), constant_state(g, 0, 0), constant_state(g, 0, 0, 0.1), g);
    for (const Field* f : {&b.phi_t, &b.phi_r, &b.phi_tt, &b.phi_tr, &b.phi_rr, &b.phi_ttt, &b.phi_ttr, &b.phi_trr,
                           &b.phi_rrr})
        CHECK(sup_abs(*f) == 0.0);
    for (double d : b.delta) CHECK(d == 1.0);
}

TEST_CASE("linear-time window: no acceleration, Delta = 1 - b^2") {
    const Grid g(4.0, 40);
    const double a = 0.1, b = 0.3, dt = 0.05;
    const DerivBundle bd = bundle(constant_state(g, a, b, -dt), constant_state(g, a, b), constant_state(g, a, b, dt), g);
    CHECK(sup_abs(bd.phi_tt) == 0.0);
    CHECK(sup_abs(bd.phi_ttt) == 0.0);
    REQUIRE(bd.phi_ttt_fd.has_value());
    CHECK(sup_abs(*bd.phi_ttt_fd) == 0.0);
    for (double d : bd.delta) CHECK(d == doctest::Approx(1.0 - b * b).epsilon(1e-15));
    for (double e : eq_residual_div(bd, g)) CHECK(std::abs(e) < 1e-15);
}

TEST_CASE("own quasilinear bundle has zero divergence-form residual") {
    const Grid g(6.0, 120);
    FieldState s{0.0, Field(g.size()), Field(g.size())};
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double r = g.r(i);
        s.phi[i] = 0.2 * std::exp(-r * r);
        s.psi[i] = 0.1 * r * r * std::exp(-r * r);
    }
    const DerivBundle b = bundle(s, g);
    for (double e : eq_residual_div(b, g)) CHECK(std::abs(e) < 1e-13);
}

TEST_CASE("residual of a manufactured non-solution matches the analytic value") {
    // phi = e^{-r^2} sin t at t = 1
    struct F : AnalyticField {
        double d(int nt, int nr, double t, double r) const override {
            const double e = std::exp(-r * r);
            const double sr[] = {e, -2 * r * e, (4 * r * r - 2) * e, (12 * r - 8 * r * r * r) * e};
            const double st[] = {std::sin(t), std::cos(t), -std::sin(t), -std::cos(t)};
            return sr[nr] * st[nt];
        }
    } f;
    auto err = [&](int N) {
        const Grid g(6.0, N);
        std::vector<Jet> jets;
        FieldState s{1.0, Field(g.size()), Field(g.size())};
        for (std::size_t i = 0; i < g.size(); ++i) {
            s.phi[i] = f.d(0, 0, 1.0, g.r(i));
            s.psi[i] = f.d(1, 0, 1.0, g.r(i));
            jets.push_back(f.jet(1.0, g.r(i)));
        }
        // bundle with phi_tt replaced by the manufactured value
        DerivBundle b = bundle(s, g);
        for (std::size_t i = 0; i < g.size(); ++i) b.phi_tt[i] = jets[i].tt;
        const Field e = eq_residual_div(b, g);
        double m = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) m = std::max(m, std::abs(e[i] - eq_residual(jets[i], g.r(i))));
        return m;
    };
    const double e1 = err(60), e2 = err(120);
    CHECK(e1 < 1e-3);
    CHECK(e1 / e2 > 12.0);
}

TEST_CASE("chain-rule phi_ttt agrees with its time difference") {
    const double a = 1e-3, k = 2.0, dt = 1e-3;
    const Grid g(10.0, 400);
    auto state = [&](double t) {
        FieldState s{t, Field(g.size()), Field(g.size())};
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double j = oracle::bessel_j0(k * g.r(i));
            s.phi[i] = a * j * std::cos(k * t);
            s.psi[i] = -a * k * j * std::sin(k * t);
        }
        return s;
    };
    const DerivBundle b = bundle(state(0.5 - dt), state(0.5), state(0.5 + dt), g);
    REQUIRE(b.phi_ttt_fd.has_value());
    double m = 0.0;
    for (std::size_t i = 0; i + 3 < g.size(); ++i) m = std::max(m, std::abs(b.phi_ttt[i] - (*b.phi_ttt_fd)[i]));
    CHECK(m < dt * dt * a * std::pow(k, 5) + 10 * a * a * a);
}
