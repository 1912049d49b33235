#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlab/kinematics.hpp"

namespace mlab {

struct EvolveConfig {
    double T_final = 1.0;
    double cfl = 0.4;
    double R = 20.0;
    int N = 400;
    int save_stride = 10;
    double delta_min = kDefaultDeltaMin;
    bool keep_bundles = true;
    Exec exec = Exec::parallel;
};

enum class Status { completed, breakdown, boundary_touched };
const char* to_string(Status s);

struct BreakdownInfo {
    double t = 0.0;
    std::size_t node = 0;
    double delta = 0.0;
    std::string reason;
};

struct Snapshot {
    FieldState state;
    std::optional<DerivBundle> bundle;
};

struct Trajectory {
    std::vector<Snapshot> snapshots;
    Status status = Status::completed;
    std::optional<BreakdownInfo> breakdown;
    double dt = 0.0;           // RK4 step
    double dt_snapshot = 0.0;  // spacing of stored snapshots
    long steps = 0;
    double min_delta = std::numeric_limits<double>::infinity();
};

// Thrown by step(); evolve() turns it into a trajectory status.
struct Breakdown : std::runtime_error {
    BreakdownInfo info;
    explicit Breakdown(BreakdownInfo i)
        : std::runtime_error("breakdown: " + i.reason), info(std::move(i)) {}
};

// Classical RK4 for phi_t = psi, psi_t = F. The outer node keeps psi fixed.
FieldState step(const FieldState& s, double dt, const Grid& g, double delta_min = kDefaultDeltaMin,
                Exec ex = Exec::parallel);

// Signals at unit speed must not reach R before T_final.
void check_containment(const EvolveConfig& cfg, double support_radius);

// Called for every snapshot in time order, bundle is null when not kept.
using SnapshotObserver = std::function<void(const FieldState&, const DerivBundle*)>;

// Runs the evolution, storing nothing; returns a trajectory with no snapshots.
Trajectory evolve_streaming(const Field& phi0, const Field& phi1, const EvolveConfig& cfg,
                            double support_radius, const SnapshotObserver& observe);

Trajectory evolve(const Field& phi0, const Field& phi1, const EvolveConfig& cfg,
                  double support_radius = std::numeric_limits<double>::infinity());

// H = int r [(1 + phi_r^2)/sqrt(Delta) - 1] dr, conserved by the flow.
double plumbing_energy(const FieldState& s, const Grid& g);

}  // namespace mlab
