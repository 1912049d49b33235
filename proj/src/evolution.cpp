#include "mlab/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "mlab/errors.hpp"

namespace mlab {

const char* to_string(Status s) {
    switch (s) {
        case Status::completed: return "completed";
        case Status::breakdown: return "breakdown";
        case Status::boundary_touched: return "boundary_touched";
    }
    return "?";
}

namespace {

struct Workspace {
    Field F, delta, phi, psi;
    explicit Workspace(std::size_t n) : F(n), delta(n), phi(n), psi(n) {}
};

// psi_t at every node; the outer node is held at psi_t = 0.
void accel(const Field& phi, const Field& psi, double t, const Grid& g, double dmin, Exec ex,
           Workspace& w, double* min_delta) {
    const long bad = kernels::quasilinear(phi.data(), psi.data(), g.size(), g.h(), dmin, w.F.data(),
                                          w.delta.data(), ex);
    if (bad >= 0) {
        const double d = w.delta[bad];
        const bool finite = std::isfinite(d) && std::isfinite(w.F[bad]);
        throw Breakdown({t, static_cast<std::size_t>(bad), d,
                         finite ? "Delta below floor" : "non-finite value"});
    }
    w.F.back() = 0.0;
    if (min_delta) *min_delta = *std::min_element(w.delta.begin(), w.delta.end());
}

}  // namespace

static FieldState rk4(const FieldState& s, double dt, const Grid& g, double dmin, Exec ex,
                      double* min_delta) {
    const std::size_t n = g.size();
    Workspace w(n);
    Field k1p = s.psi, k1v(n), k2p(n), k2v(n), k3p(n), k3v(n), k4p(n), k4v(n);

    accel(s.phi, s.psi, s.t, g, dmin, ex, w, min_delta);
    k1v = w.F;

    kernels::axpy(s.phi.data(), 0.5 * dt, k1p.data(), n, w.phi.data(), ex);
    kernels::axpy(s.psi.data(), 0.5 * dt, k1v.data(), n, w.psi.data(), ex);
    k2p = w.psi;
    accel(w.phi, w.psi, s.t + 0.5 * dt, g, dmin, ex, w, nullptr);
    k2v = w.F;

    kernels::axpy(s.phi.data(), 0.5 * dt, k2p.data(), n, w.phi.data(), ex);
    kernels::axpy(s.psi.data(), 0.5 * dt, k2v.data(), n, w.psi.data(), ex);
    k3p = w.psi;
    accel(w.phi, w.psi, s.t + 0.5 * dt, g, dmin, ex, w, nullptr);
    k3v = w.F;

    kernels::axpy(s.phi.data(), dt, k3p.data(), n, w.phi.data(), ex);
    kernels::axpy(s.psi.data(), dt, k3v.data(), n, w.psi.data(), ex);
    k4p = w.psi;
    accel(w.phi, w.psi, s.t + dt, g, dmin, ex, w, nullptr);
    k4v = w.F;

    FieldState out;
    out.t = s.t + dt;
    out.phi.resize(n);
    out.psi.resize(n);
    const double c = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.phi[i] = s.phi[i] + c * (k1p[i] + 2.0 * k2p[i] + 2.0 * k3p[i] + k4p[i]);
        out.psi[i] = s.psi[i] + c * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
    }
    return out;
}

FieldState step(const FieldState& s, double dt, const Grid& g, double delta_min, Exec ex) {
    if (s.phi.size() != g.size() || s.psi.size() != g.size())
        throw ContractViolation("step: state does not match grid");
    return rk4(s, dt, g, delta_min, ex, nullptr);
}

void check_containment(const EvolveConfig& cfg, double support_radius) {
    if (cfg.N < 16 || cfg.N % 2 != 0) throw ConfigError("evolve.N must be even and >= 16");
    if (!(cfg.R > 0.0) || !(cfg.T_final >= 0.0) || !(cfg.cfl > 0.0) || cfg.save_stride < 1)
        throw ConfigError("evolve: R, T_final, cfl and save_stride must be positive");
    if (!std::isfinite(support_radius)) return;
    const double h = cfg.R / cfg.N;
    const double need = support_radius + cfg.T_final + 10.0 * h;
    if (cfg.R < need)
        throw ConfigError("containment violated: R = " + std::to_string(cfg.R) +
                          " < r_support + T_final + 10h = " + std::to_string(need));
}

Trajectory evolve_streaming(const Field& phi0, const Field& phi1, const EvolveConfig& cfg,
                            double support_radius, const SnapshotObserver& observe) {
    check_containment(cfg, support_radius);
    const Grid g(cfg.R, cfg.N);
    if (phi0.size() != g.size() || phi1.size() != g.size())
        throw ContractViolation("evolve: initial data do not match grid");

    Trajectory tr;
    const double dt_max = cfg.cfl * g.h();
    const long intervals =
        cfg.T_final > 0.0 ? static_cast<long>(std::ceil(cfg.T_final / (dt_max * cfg.save_stride) - 1e-12)) : 0;
    const long nsteps = intervals * cfg.save_stride;
    tr.dt = nsteps > 0 ? cfg.T_final / static_cast<double>(nsteps) : 0.0;
    tr.dt_snapshot = tr.dt * cfg.save_stride;

    // Outer-edge monitor for data with a finite support radius.
    double scale = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        scale = std::max({scale, std::abs(phi0[i]), std::abs(phi1[i])});
    const bool monitor_edge = std::isfinite(support_radius) && scale > 0.0;
    const Field edge_phi0(phi0.end() - 6, phi0.end());
    auto touched = [&](const FieldState& s) {
        for (std::size_t k = 0; k < 6; ++k) {
            const std::size_t i = g.size() - 6 + k;
            if (std::abs(s.psi[i]) > 1e-10 * scale || std::abs(s.phi[i] - edge_phi0[k]) > 1e-10 * scale)
                return true;
        }
        return false;
    };

    FieldState s{0.0, phi0, phi1};
    auto emit = [&](const FieldState& st) {
        if (cfg.keep_bundles) {
            const DerivBundle b = bundle(st, g, cfg.delta_min);
            observe(st, &b);
        } else {
            observe(st, nullptr);
        }
    };

    try {
        double md = 0.0;
        Workspace w(g.size());
        accel(s.phi, s.psi, 0.0, g, cfg.delta_min, cfg.exec, w, &md);
        tr.min_delta = md;
        emit(s);
        for (long n = 1; n <= nsteps; ++n) {
            s = rk4(s, tr.dt, g, cfg.delta_min, cfg.exec, &md);
            tr.min_delta = std::min(tr.min_delta, md);
            ++tr.steps;
            // Keep the nominal time grid free of accumulated round-off.
            s.t = static_cast<double>(n) * tr.dt;
            if (n % cfg.save_stride == 0) {
                if (monitor_edge && touched(s)) {
                    tr.status = Status::boundary_touched;
                    tr.breakdown = BreakdownInfo{s.t, g.size() - 1, 0.0, "signal reached outer boundary"};
                    return tr;
                }
                emit(s);
            }
        }
    } catch (const Breakdown& b) {
        tr.status = Status::breakdown;
        tr.breakdown = b.info;
        tr.min_delta = std::min(tr.min_delta, b.info.delta);
    } catch (const TimelikeViolation& v) {
        tr.status = Status::breakdown;
        tr.breakdown = BreakdownInfo{s.t, v.node, v.delta, "Delta below floor"};
        tr.min_delta = std::min(tr.min_delta, v.delta);
    }
    return tr;
}

Trajectory evolve(const Field& phi0, const Field& phi1, const EvolveConfig& cfg,
                  double support_radius) {
    std::vector<Snapshot> snaps;
    Trajectory tr = evolve_streaming(phi0, phi1, cfg, support_radius,
                                     [&](const FieldState& s, const DerivBundle* b) {
                                         Snapshot sn{s, std::nullopt};
                                         if (b) sn.bundle = *b;
                                         snaps.push_back(std::move(sn));
                                     });
    tr.snapshots = std::move(snaps);
    return tr;
}

double plumbing_energy(const FieldState& s, const Grid& g) {
    const Field pr = deriv_r(s.phi, 1, Parity::even, g);
    Field e(g.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        const double p2 = pr[i] * pr[i], v2 = s.psi[i] * s.psi[i];
        const double sd = std::sqrt(1.0 + p2 - v2);
        // (1 + p^2)/sqrt(Delta) - 1 without the cancellation against 1.
        e[i] = (p2 + p2 * p2 + v2) / (sd * (1.0 + p2 + sd));
    }
    return integrate(e, Weight::r, g);
}

}  // namespace mlab
