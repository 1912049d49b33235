#pragma once

#include <string>
#include <vector>

#include "mlab/divcurl.hpp"
#include "mlab/functionals.hpp"
#include "mlab/initial_data.hpp"
#include "mlab/oracle.hpp"

namespace mlab {

// One asserted scalar: value compared against threshold with "<=" or ">=".
struct Check {
    std::string name;
    double value = 0.0;
    std::string cmp;
    double threshold = 0.0;
    bool passed = false;
};

struct StudyReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, double>> outputs;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    void input(const std::string& k, const std::string& v) { inputs.emplace_back(k, v); }
    void input(const std::string& k, double v);
    void output(const std::string& k, double v) { outputs.emplace_back(k, v); }
    bool check(const std::string& name, double value, const std::string& cmp, double threshold);
    bool passed() const;
    std::string to_text() const;
};

// Snapshot-wise diagnostics of one run.
struct RunSeries {
    Trajectory traj;  // snapshots hold states only
    FunctionalSeries fn;
    std::vector<double> sup_phit_plus_phir;  // ||phi_t||_inf + ||phi_r||_inf
};
RunSeries run_with_functionals(const DataSpec& spec, const EvolveConfig& cfg, const AxisOptions& ax = {});

// Joint (h, dt) refinement on the Bessel oracle. The asserted order comes from
// differences of successive resolutions on r <= R - T - 1; the error against
// a J0(kr) cos(kt) is reported.
StudyReport convergence_study(const DataSpec& oracle_spec, double R, double T, const std::vector<int>& Ns,
                              double cfl = 0.4, double min_order = 3.5);
// dt-only refinement at fixed N (cfl halved each level).
StudyReport temporal_convergence(const DataSpec& oracle_spec, double R, double T, int N,
                                 const std::vector<double>& cfls, double min_order = 3.5);

StudyReport stability_pair(const DataSpec& a, const DataSpec& b, double T, double R, int N, int stride = 10);

struct HomotopyOptions {
    int n_lambda = 5;
    double T = 100.0;
    double R = 110.0;
    int N = 2200;
    int stride = 10;
    double tol_fd = 0.2;
};
StudyReport homotopy_sweep(const DataSpec& a, const DataSpec& b, const HomotopyOptions& o);

struct GlobalityOptions {
    double T = 200.0;
    double h = 0.05;
    int stride = 10;
    double min_sme_exponent = 1.7;  // fitted p in sup_t X ~ eps^p for E1, E2, M0, M
};
StudyReport smalldata_globality(const std::vector<double>& epsilons, const GlobalityOptions& o);

StudyReport blowup_probe(const std::vector<double>& amplitudes, double T, double R, int N);

// Run of (lambda a e^{-(r/lambda sigma)^2}) to lambda T against the rescaled base run.
StudyReport scaling_check(const DataSpec& base, double lambda, double T, double R, int N);

StudyReport energy_drift(const DataSpec& spec, double T, double R, int N, double max_rel = 1e-8);

// multiplier_identity_gap for every law on both manufactured fields.
StudyReport identity_check(const std::vector<int>& Ns, double R = 8.0, double t0 = 0.7,
                           double window = 0.5, double min_order = 1.8);

// detB_m >= 0 on random bundles, printed-vs-direct shadow report, and the
// eta/xi/zeta/gamma dual-path cross-check on a run and on a manufactured field.
StudyReport det_check(unsigned seed, int n_random, const Trajectory* run, const Grid* run_grid, double T);

// Pairing identity gaps of the four matrix pairings at N and 2N.
StudyReport divcurl_study(const DataSpec& spec, double T, double R, int N, int stride, double inner_radius = 0.5);

// Trajectory of an analytic field sampled at n_snap equally spaced times.
Trajectory manufactured_trajectory(const AnalyticField& f, const Grid& g, double T, int n_snap);

}  // namespace mlab
