#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "mlab/csv.hpp"
#include "mlab/divcurl.hpp"
#include "mlab/errors.hpp"
#include "mlab/experiments.hpp"

namespace fs = std::filesystem;

namespace mlab::cli {

namespace {

void prepare(const Config& c, const fs::path& out) {
    fs::create_directories(out);
    c.write_manifest(out / "manifest.txt");
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream o(path);
    if (!o) throw ConfigError("cannot write " + path.string());
    o << text;
}

int finish_study(const StudyReport& rep, const fs::path& out) {
    const std::string text = rep.to_text();
    write_text(out / "report.txt", text);
    std::cout << text;
    return rep.passed() ? kOk : kInvariant;
}

const std::vector<std::string> kFunctionalColumns = {
    "t",    "E1",    "E1hat",  "E2",     "E2hat",  "E3",    "E3q",   "E3s",   "E3l",    "E3hat",
    "E3tilde", "hnorm2", "area", "M",     "M0",     "Mh",    "M01",   "M02",   "Mh1",    "Mh2",
    "M1",   "M2",    "eta1",   "eta2",   "xi1",    "xi2",   "zeta1", "zeta2", "gamma1", "gamma2"};

void write_functionals(const FunctionalSeries& fs_, const fs::path& path) {
    csv::Writer w(path, kFunctionalColumns);
    for (std::size_t k = 0; k < fs_.t.size(); ++k) {
        const auto& f = fs_.instant[k];
        const auto& a = fs_.acc[k];
        w.cell(fs_.t[k]);
        for (double v : {f.E1, f.E1hat, f.E2, f.E2hat, f.E3, f.E3q, f.E3s, f.E3l, f.E3hat, f.E3tilde,
                         f.hnorm2, f.area})
            w.cell(v);
        for (double v : {a.M, a.M0, a.Mh, a.M01, a.M02, a.Mh1, a.Mh2, a.M1, a.M2, a.eta1, a.eta2, a.xi1,
                         a.xi2, a.zeta1, a.zeta2, a.gamma1, a.gamma2})
            w.cell(v);
        w.end_row();
    }
}

void write_monitors(const FunctionalSeries& fs_, const fs::path& path) {
    csv::Writer w(path, {"t", "sup_delta", "min_delta", "phi_t_axis", "sup_phi_t", "sup_phi_r"});
    for (std::size_t k = 0; k < fs_.t.size(); ++k) {
        const auto& m = fs_.mon[k];
        w.cell(fs_.t[k]).cell(m.sup_delta).cell(m.min_delta).cell(m.phi_t_axis).cell(m.sup_phi_t)
            .cell(m.sup_phi_r);
        w.end_row();
    }
}

std::vector<const BalanceLaw*> selected_laws(const Config& c) {
    std::vector<const BalanceLaw*> out;
    std::stringstream ss(c.str("diagnostics.laws"));
    std::string name;
    while (std::getline(ss, name, ',')) {
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        if (name.empty()) continue;
        if (name == "all") {
            for (const auto& L : all_laws()) out.push_back(&L);
            continue;
        }
        try {
            out.push_back(&law(name));
        } catch (const std::exception&) {
            throw ConfigError("diagnostics.laws: unknown law '" + name + "'");
        }
    }
    return out;
}

FunctionalSeries series_from(const Trajectory& tr, const Grid& g, const AxisOptions& ax, double eps) {
    FunctionalSeries s;
    s.eps = eps;
    AccumulatorRecord prev;
    for (const auto& snap : tr.snapshots) {
        const DerivBundle& b = *snap.bundle;
        const AccumulatorRecord sl = slice(b, g, ax);
        AccumulatorRecord acc;
        if (!s.t.empty()) acc = accumulate(s.acc.back(), prev, sl, snap.state.t - s.t.back());
        prev = sl;
        s.t.push_back(snap.state.t);
        s.instant.push_back(instant(b, g, ax));
        s.acc.push_back(acc);
        s.mon.push_back(monitors(b, g));
    }
    return s;
}

// Full diagnostics of one run. echo=false keeps sweep members quiet.
int run_simulation(const Config& c, const fs::path& out, bool echo) {
    const DataSpec spec = c.data();
    EvolveConfig cfg = c.evolve();
    cfg.keep_bundles = true;
    const AxisOptions ax = c.axis();
    const auto laws = selected_laws(c);
    prepare(c, out);

    const Grid g(cfg.R, cfg.N);
    const InitialData d = realize(spec, g);
    const double eps = hnorm(d.phi0, d.phi1, g);
    const Trajectory tr = evolve(d.phi0, d.phi1, cfg, support_radius(spec));

    std::ostringstream rep;
    rep << "command simulate\n";
    rep << "status " << to_string(tr.status) << '\n';
    rep << "steps " << tr.steps << '\n';
    rep << "dt " << csv::num(tr.dt) << '\n';
    rep << "snapshots " << tr.snapshots.size() << '\n';
    rep << "t_last " << csv::num(tr.snapshots.empty() ? 0.0 : tr.snapshots.back().state.t) << '\n';
    rep << "min_delta " << csv::num(tr.min_delta) << '\n';
    rep << "eps " << csv::num(eps) << '\n';
    if (tr.breakdown) {
        const auto& b = *tr.breakdown;
        rep << "breakdown t " << csv::num(b.t) << " node " << b.node << " r " << csv::num(g.r(b.node))
            << " delta " << csv::num(b.delta) << " reason " << b.reason << '\n';
    }

    bool hard_failure = false;
    if (c.flag("diagnostics.functionals") && !tr.snapshots.empty()) {
        const FunctionalSeries s = series_from(tr, g, ax, eps);
        write_functionals(s, out / "functionals.csv");
        write_monitors(s, out / "monitors.csv");
        for (const auto& row : summarize(inequality_report(s))) {
            rep << "inequality " << row.name << " worst_ratio " << csv::num(row.worst_ratio) << " t "
                << csv::num(row.t_worst) << (row.hard ? " hard " : " soft ")
                << (row.all_satisfied ? "ok" : "VIOLATED") << '\n';
            if (row.hard && !row.all_satisfied) hard_failure = true;
        }
    }

    if (!laws.empty()) {
        const double window = c.num("diagnostics.axis_window");
        csv::Writer w(out / "residuals.csv", {"t", "law", "sup", "L1"});
        for (std::size_t k = 1; k + 1 < tr.snapshots.size(); ++k) {
            for (const BalanceLaw* L : laws) {
                const Field res = residual(*L, tr, k, g);
                w.cell(tr.snapshots[k].state.t).cell(std::string(L->name));
                w.cell(sup_norm_from(res, g, window)).cell(l1_norm_from(res, g, window));
                w.end_row();
            }
        }
    }

    if (c.flag("diagnostics.pairings") && tr.snapshots.size() >= 2) {
        const double T = tr.snapshots.back().state.t;
        const double r_in = c.num("divcurl.inner_radius");
        csv::Writer w(out / "pairing.csv",
                      {"pair", "lhs", "a1", "a2", "a3", "gap", "bound_rhs", "a4", "inner_radius"});
        for (const auto& p : matrix_pairings()) {
            try {
                const PairingReport pr = pair(p, tr, T, g, r_in);
                w.cell(pr.name).cell(pr.lhs).cell(pr.a1).cell(pr.a2).cell(pr.a3).cell(pr.gap)
                    .cell(pr.bound_rhs).cell(pr.a4).cell(pr.inner_radius);
                w.end_row();
                rep << "pairing " << pr.name << " gap " << csv::num(pr.gap) << '\n';
            } catch (const InadmissiblePair& e) {
                rep << "pairing " << p.name << " inadmissible: " << e.what() << '\n';
            }
        }
    }

    int code = kOk;
    if (tr.status == Status::breakdown) code = kBreakdown;
    else if (hard_failure || tr.status == Status::boundary_touched) code = kInvariant;
    rep << "exit " << code << '\n';
    write_text(out / "report.txt", rep.str());
    if (echo) std::cout << rep.str();
    return code;
}

// Run with data/evolve from the config and bundles kept, for the studies that
// consume a trajectory.
struct ConfiguredRun {
    Grid grid;
    Trajectory traj;
};
ConfiguredRun configured_run(const Config& c) {
    const DataSpec spec = c.data();
    EvolveConfig cfg = c.evolve();
    cfg.keep_bundles = true;
    ConfiguredRun r{Grid(cfg.R, cfg.N), {}};
    const InitialData d = realize(spec, r.grid);
    r.traj = evolve(d.phi0, d.phi1, cfg, support_radius(spec));
    return r;
}

}  // namespace

unsigned sweep_threads() {
    if (const char* env = std::getenv("MEMBRANE_LAB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int simulate(const Config& c, const fs::path& out) { return run_simulation(c, out, true); }

int convergence(const Config& c, const fs::path& out) {
    DataSpec s;
    s.family = Family::bessel_oracle;
    s.amplitude = c.num("convergence.amplitude");
    s.wavenumber = c.num("convergence.wavenumber");
    const double R = c.num("convergence.R"), T = c.num("convergence.T");
    prepare(c, out);
    StudyReport rep = convergence_study(s, R, T, c.integers("convergence.N"), c.num("evolve.cfl"));
    const StudyReport tmp = temporal_convergence(s, R, T, c.integers("convergence.N").back(),
                                                 c.nums("convergence.cfls"));
    for (const auto& o : tmp.outputs) rep.output("temporal_" + o.first, o.second);
    for (const auto& k : tmp.checks) rep.check("temporal_" + k.name, k.value, k.cmp, k.threshold);
    return finish_study(rep, out);
}

int identity_check(const Config& c, const fs::path& out) {
    prepare(c, out);
    return finish_study(mlab::identity_check(c.integers("identity.N"), c.num("identity.R"), c.num("identity.t0"),
                                             c.num("diagnostics.axis_window")),
                        out);
}

int det_check(const Config& c, const fs::path& out) {
    prepare(c, out);
    const ConfiguredRun run = configured_run(c);
    const double T = run.traj.snapshots.back().state.t;
    return finish_study(mlab::det_check(static_cast<unsigned>(c.integer("seed")), c.integer("detcheck.random_bundles"),
                                        &run.traj, &run.grid, T),
                        out);
}

int divcurl(const Config& c, const fs::path& out) {
    const EvolveConfig cfg = c.evolve();
    prepare(c, out);
    return finish_study(divcurl_study(c.data(), cfg.T_final, cfg.R, cfg.N, cfg.save_stride,
                                      c.num("divcurl.inner_radius")),
                        out);
}

int stability(const Config& c, const fs::path& out) {
    const EvolveConfig cfg = c.evolve();
    DataSpec b = c.data();
    b.amplitude = c.num("stability.amplitude_b");
    check_containment(cfg, support_radius(b));
    prepare(c, out);
    return finish_study(stability_pair(c.data(), b, cfg.T_final, cfg.R, cfg.N, cfg.save_stride), out);
}

int homotopy(const Config& c, const fs::path& out) {
    const EvolveConfig cfg = c.evolve();
    DataSpec b = c.data();
    b.amplitude = c.num("stability.amplitude_b");
    check_containment(cfg, support_radius(b));
    HomotopyOptions o;
    o.n_lambda = c.integer("homotopy.n_lambda");
    o.tol_fd = c.num("homotopy.tol_fd");
    o.T = cfg.T_final;
    o.R = cfg.R;
    o.N = cfg.N;
    o.stride = cfg.save_stride;
    prepare(c, out);
    return finish_study(homotopy_sweep(c.data(), b, o), out);
}

int blowup_probe(const Config& c, const fs::path& out) {
    const EvolveConfig cfg = c.evolve();
    prepare(c, out);
    return finish_study(mlab::blowup_probe(c.nums("blowup.amplitudes"), cfg.T_final, cfg.R, cfg.N), out);
}

int sweep(const Config& c, const fs::path& out) {
    const std::vector<double> amps = c.nums("sweep.amplitudes");
    if (amps.empty()) throw ConfigError("sweep.amplitudes is empty");
    std::vector<Config> members(amps.size(), c);
    for (std::size_t k = 0; k < amps.size(); ++k) {
        members[k].set("data.amplitude", csv::num(amps[k]));
        members[k].evolve();  // surface config errors before any thread starts
    }
    prepare(c, out);

    std::vector<int> codes(amps.size(), kOk);
    std::vector<std::string> errors(amps.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < amps.size(); k = next++) {
            try {
                codes[k] = run_simulation(members[k], out / ("member_" + std::to_string(k)), false);
            } catch (const ConfigError& e) {
                codes[k] = kConfig;
                errors[k] = e.what();
            } catch (const std::exception& e) {
                codes[k] = kInvariant;
                errors[k] = e.what();
            }
        }
    };
    const unsigned n = std::min<unsigned>(sweep_threads(), static_cast<unsigned>(amps.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    csv::Writer w(out / "sweep.csv", {"member", "amplitude", "exit"});
    std::ostringstream rep;
    rep << "command sweep\nthreads " << n << '\n';
    int code = kOk;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        w.cell("member_" + std::to_string(k)).cell(amps[k]).cell(std::to_string(codes[k]));
        w.end_row();
        rep << "member_" << k << " amplitude " << csv::num(amps[k]) << " exit " << codes[k];
        if (!errors[k].empty()) rep << " error " << errors[k];
        rep << '\n';
        // config error outranks invariant failure outranks breakdown
        auto rank = [](int x) { return x == kConfig ? 3 : x == kInvariant ? 2 : x == kBreakdown ? 1 : 0; };
        if (rank(codes[k]) > rank(code)) code = codes[k];
    }
    rep << "exit " << code << '\n';
    write_text(out / "report.txt", rep.str());
    std::cout << rep.str();
    return code;
}

}  // namespace mlab::cli
