#include <doctest.h>

#include <cmath>
#include <random>

#include "mlab/balance_laws.hpp"
#include "mlab/errors.hpp"
#include "mlab/initial_data.hpp"
#include "mlab/oracle.hpp"

using namespace mlab;

namespace {
Jet random_jet(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

Trajectory run_with_bundles(const DataSpec& s, double T, double R, int N) {
    EvolveConfig c;
    c.T_final = T;
    c.R = R;
    c.N = N;
    c.save_stride = 5;
    const Grid g(R, N);
    const InitialData d = realize(s, g);
    return evolve(d.phi0, d.phi1, c, support_radius(s));
}

double gap_sup(const BalanceLaw& L, const AnalyticField& f, int N) {
    const Grid g(8.0, N);
    const Field gap = multiplier_identity_gap(L, f, g, 0.7, 0.5 * g.h());
    return sup_norm_from(gap, g, 0.5);
}
}  // namespace

TEST_CASE("six laws are registered by name") {
    CHECK(all_laws().size() == 6);
    for (const char* n : {"PH1", "PH2", "PH3", "PH5", "PH6", "PH7"}) CHECK(law(n).name == n);
    CHECK_THROWS_AS(law("PH4"), ConfigError);
}

TEST_CASE("vacuum trajectory has zero residual for every law") {
    const Trajectory tr = run_with_bundles(DataSpec{}, 1.0, 10.0, 100);
    const Grid g(10.0, 100);
    for (const auto& L : all_laws())
        for (std::size_t k = 1; k + 1 < tr.snapshots.size(); ++k)
            for (double v : residual(L, tr, k, g)) CHECK(v == 0.0);
}

TEST_CASE("linear-time trajectory has zero PH1 residual") {
    DataSpec s;
    s.family = Family::linear_time;
    s.amplitude = 0.1;
    s.drift = 0.3;
    const Trajectory tr = run_with_bundles(s, 1.0, 10.0, 100);
    const Grid g(10.0, 100);
    const BalanceLaw& L = law(LawId::PH1);
    for (std::size_t k = 1; k + 1 < tr.snapshots.size(); ++k)
        CHECK(sup_norm_from(residual(L, tr, k, g), g, 0.5) < 1e-13);
}

TEST_CASE("PH1 residual shrinks under refinement on a small Gaussian") {
    DataSpec s;
    s.amplitude = 0.05;
    auto res = [&](int N) {
        const Trajectory tr = run_with_bundles(s, 1.0, 10.0, N);
        const Grid g(10.0, N);
        return sup_norm_from(residual(law(LawId::PH1), tr, tr.snapshots.size() / 2, g), g, 0.5);
    };
    const double e1 = res(200), e2 = res(400);
    CHECK(e1 / e2 >= std::pow(2.0, 1.8));
}

TEST_CASE("multiplier identity gap vanishes at second order for every law") {
    const auto f = oracle::gaussian_cos();
    const auto h = oracle::r2gauss_sin();
    for (const auto& L : all_laws()) {
        CAPTURE(L.name);
        for (const AnalyticField* field : {static_cast<const AnalyticField*>(&f), static_cast<const AnalyticField*>(&h)}) {
            const double e1 = gap_sup(L, *field, 160), e2 = gap_sup(L, *field, 320);
            CHECK(e1 / e2 >= std::pow(2.0, 1.8));
        }
    }
}

TEST_CASE("W1 intermediate form is the PH3 remainder; the collapsed form is not") {
    std::mt19937_64 rng(3);
    const BalanceLaw& L = law(LawId::PH3);
    double worst_int = 0.0, worst_col = 0.0;
    for (int k = 0; k < 200; ++k) {
        const Jet j = random_jet(rng);
        const double ref = L.remainder(j, 0.7);
        worst_int = std::max(worst_int, std::abs(shadow::W1_intermediate(j, 0.7) - ref));
        worst_col = std::max(worst_col, std::abs(shadow::W1_collapsed(j, 0.7) - ref));
    }
    CHECK(worst_int < 1e-14);
    CHECK(worst_col > 1e-4);
}

TEST_CASE("second printed T1 form differs from the PH7 remainder") {
    std::mt19937_64 rng(4);
    const BalanceLaw& L = law(LawId::PH7);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const Jet j = random_jet(rng);
        worst = std::max(worst, std::abs(shadow::T1_second_form(j, 1.3) - L.remainder(j, 1.3)));
    }
    CHECK(worst > 1e-4);
}

TEST_CASE("printed P2 differs from the normative PH6 remainder") {
    std::mt19937_64 rng(5);
    const BalanceLaw& L = law(LawId::PH6);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const Jet j = random_jet(rng);
        worst = std::max(worst, std::abs(shadow::P2_printed(j, 0.9) - L.remainder(j, 0.9)));
    }
    CHECK(worst > 1e-4);
}

TEST_CASE("windowed norms ignore the inner region") {
    const Grid g(2.0, 20);
    Field v(g.size(), 0.0);
    v[1] = 100.0;
    v[15] = -2.0;
    CHECK(sup_norm_from(v, g, 0.5) == 2.0);
    CHECK(l1_norm_from(v, g, 0.5) > 0.0);
}
