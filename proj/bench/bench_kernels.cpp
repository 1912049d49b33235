#include <benchmark/benchmark.h>

#include <cmath>

#include "mlab/evolution.hpp"
#include "mlab/initial_data.hpp"

using namespace mlab;

namespace {

FieldState gaussian_state(const Grid& g) {
    DataSpec s;
    s.amplitude = 0.1;
    s.velocity_amplitude = 0.05;
    const InitialData d = realize(s, g);
    return {0.0, d.phi0, d.phi1};
}

void BM_d2(benchmark::State& st, Exec ex) {
    const Grid g(20.0, static_cast<int>(st.range(0)));
    const FieldState s = gaussian_state(g);
    Field out(g.size());
    for (auto _ : st) {
        kernels::d2(s.phi.data(), g.size(), g.h(), Parity::even, out.data(), ex);
        benchmark::DoNotOptimize(out.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long>(g.size()));
}

void BM_quasilinear(benchmark::State& st, Exec ex) {
    const Grid g(20.0, static_cast<int>(st.range(0)));
    const FieldState s = gaussian_state(g);
    Field F(g.size()), D(g.size());
    for (auto _ : st) {
        kernels::quasilinear(s.phi.data(), s.psi.data(), g.size(), g.h(), kDefaultDeltaMin, F.data(), D.data(), ex);
        benchmark::DoNotOptimize(F.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long>(g.size()));
}

void BM_step(benchmark::State& st, Exec ex) {
    const Grid g(20.0, static_cast<int>(st.range(0)));
    FieldState s = gaussian_state(g);
    for (auto _ : st) {
        FieldState n = step(s, 0.4 * g.h(), g, kDefaultDeltaMin, ex);
        benchmark::DoNotOptimize(n.phi.data());
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_d2, serial, Exec::serial)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK_CAPTURE(BM_d2, openmp, Exec::parallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK_CAPTURE(BM_quasilinear, serial, Exec::serial)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK_CAPTURE(BM_quasilinear, openmp, Exec::parallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK_CAPTURE(BM_step, serial, Exec::serial)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);
BENCHMARK_CAPTURE(BM_step, openmp, Exec::parallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

BENCHMARK_MAIN();
