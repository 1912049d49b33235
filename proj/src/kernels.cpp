#include "mlab/kernels.hpp"

#include <cmath>

namespace mlab::kernels {
namespace {

// Below this size the OpenMP fork costs more than the loop.
constexpr std::size_t kParallelMin = 2048;

struct View {
    const double* f;
    long last;  // N
    double sign;

    // Reads across the axis use the declared parity.
    double operator()(long j) const { return j < 0 ? sign * f[-j] : f[j]; }
};

// Stencils are written as weighted differences against a reference sample so
// that spatially constant input gives exactly zero.
inline double d1_at(const View& v, long i, double h) {
    const long N = v.last;
    if (i <= N - 2) {
        return (8.0 * (v(i + 1) - v(i - 1)) - (v(i + 2) - v(i - 2))) / (12.0 * h);
    }
    if (i == N - 1) {
        const double c = v(N - 1);
        return (3.0 * (v(N) - c) - 18.0 * (v(N - 2) - c) + 6.0 * (v(N - 3) - c) - (v(N - 4) - c)) /
               (12.0 * h);
    }
    const double c = v(N);
    return (-48.0 * (v(N - 1) - c) + 36.0 * (v(N - 2) - c) - 16.0 * (v(N - 3) - c) +
            3.0 * (v(N - 4) - c)) /
           (12.0 * h);
}

inline double d2_at(const View& v, long i, double h) {
    const long N = v.last;
    const double h2 = 12.0 * h * h;
    if (i <= N - 2) {
        const double c = v(i);
        return (16.0 * ((v(i + 1) - c) + (v(i - 1) - c)) - ((v(i + 2) - c) + (v(i - 2) - c))) / h2;
    }
    if (i == N - 1) {
        const double c = v(N - 1);
        return (10.0 * (v(N) - c) - 4.0 * (v(N - 2) - c) + 14.0 * (v(N - 3) - c) -
                6.0 * (v(N - 4) - c) + (v(N - 5) - c)) /
               h2;
    }
    const double c = v(N);
    return (-154.0 * (v(N - 1) - c) + 214.0 * (v(N - 2) - c) - 156.0 * (v(N - 3) - c) +
            61.0 * (v(N - 4) - c) - 10.0 * (v(N - 5) - c)) /
           h2;
}

inline double sign_of(Parity p) { return p == Parity::even ? 1.0 : -1.0; }

// One node of the quasilinear operator. Returns false on breakdown.
inline bool rhs_at(const View& ph, const View& ps, long i, double h, double dmin, double& F,
                   double& delta) {
    const double pt = ps.f[i];
    const double pr = d1_at(ph, i, h);
    const double prr = d2_at(ph, i, h);
    const double ptr = d1_at(ps, i, h);
    delta = 1.0 + pr * pr - pt * pt;
    // phi_r / r tends to phi_rr on the axis.
    const double q = i == 0 ? prr : pr / (static_cast<double>(i) * h);
    F = ((1.0 - pt * pt) * prr + 2.0 * pt * pr * ptr + q * delta) / (1.0 + pr * pr);
    return delta >= dmin && std::isfinite(F) && std::isfinite(ph.f[i]);
}

template <class Body>
void for_nodes(std::size_t n, Exec ex, Body&& body) {
    const long ln = static_cast<long>(n);
    if (ex == Exec::parallel && n >= kParallelMin) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < ln; ++i) body(i);
    } else {
        for (long i = 0; i < ln; ++i) body(i);
    }
}

}  // namespace

void d1(const double* f, std::size_t n, double h, Parity p, double* out, Exec ex) {
    const View v{f, static_cast<long>(n) - 1, sign_of(p)};
    for_nodes(n, ex, [&](long i) { out[i] = d1_at(v, i, h); });
}

void d2(const double* f, std::size_t n, double h, Parity p, double* out, Exec ex) {
    const View v{f, static_cast<long>(n) - 1, sign_of(p)};
    for_nodes(n, ex, [&](long i) { out[i] = d2_at(v, i, h); });
}

long quasilinear(const double* phi, const double* psi, std::size_t n, double h, double delta_min,
                 double* F, double* delta, Exec ex) {
    const View ph{phi, static_cast<long>(n) - 1, 1.0};
    const View ps{psi, static_cast<long>(n) - 1, 1.0};
    const long ln = static_cast<long>(n);
    long bad = ln;
    auto body = [&](long i, long& first_bad) {
        double d = 0.0;
        if (!rhs_at(ph, ps, i, h, delta_min, F[i], d) && i < first_bad) first_bad = i;
        if (delta) delta[i] = d;
    };
    if (ex == Exec::parallel && n >= kParallelMin) {
#pragma omp parallel for schedule(static) reduction(min : bad)
        for (long i = 0; i < ln; ++i) body(i, bad);
    } else {
        for (long i = 0; i < ln; ++i) body(i, bad);
    }
    return bad == ln ? -1 : bad;
}

void axpy(const double* x, double a, const double* k, std::size_t n, double* y, Exec ex) {
    for_nodes(n, ex, [&](long i) { y[i] = x[i] + a * k[i]; });
}

}  // namespace mlab::kernels
