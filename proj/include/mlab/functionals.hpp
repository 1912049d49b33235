#pragma once

#include <string>
#include <vector>

#include "mlab/kinematics.hpp"

namespace mlab {

// Axis-singular integrands (those carrying phi_t^2/r or phi_t^2/r^2, which
// do not vanish once phi_t(t,0) != 0) are integrated as finite parts
// renormalised at ref_radius; see integrate_finite_part.
struct AxisOptions {
    double ref_radius = 0.1;
};

struct FunctionalRecord {
    double E1 = 0, E1hat = 0, E2 = 0, E2hat = 0, E3 = 0, E3q = 0, E3s = 0, E3l = 0, E3hat = 0,
           E3tilde = 0;
    double hnorm2 = 0;
    double area = 0;
};

// Running space-time integrals. M1 and M-type sums use the same finite-part rule.
struct AccumulatorRecord {
    double M = 0, M0 = 0, Mh = 0, M01 = 0, M02 = 0, Mh1 = 0, Mh2 = 0, M1 = 0, M2 = 0;
    double eta1 = 0, eta2 = 0, xi1 = 0, xi2 = 0, zeta1 = 0, zeta2 = 0, gamma1 = 0, gamma2 = 0;
};

// Determinant integrands of the four 2x2 "inner product" matrices, computed
// directly from the matrix entries. detA carries a 1/r^2 axis singularity, so
// detA_r2 = r^2 detA is stored as well; detA[0] is the finite-part density.
struct DetRecord {
    Field detA_m, detA, detB_m, detB, detC_m, detC, detD_m, detD;
    Field detA_r2;
};

// Pointwise quantities used by the inequality report.
struct Monitors {
    double sup_delta = 0, min_delta = 0;
    double phi_t_axis = 0;
    double sup_phi_t = 0, sup_phi_r = 0;
    double sup_r_phitt2 = 0, sup_r_phitr2 = 0, sup_r_phirr2 = 0;
    double int_r_phitt4 = 0, int_r_phitr4 = 0, int_r_phirr4 = 0;
    double int_r_phitt6 = 0, int_r_phitr6 = 0, int_r_phirr6 = 0;
    double int_r_phitt2 = 0, int_r_phitr2 = 0, int_r_phirr2 = 0;
    double int_r_phittr2 = 0, int_r_phitrr2 = 0, int_r_phirrr2 = 0;
    double int_phitt4 = 0, int_phitr4 = 0;
};

FunctionalRecord instant(const DerivBundle& b, const Grid& g, const AxisOptions& ax = {});
DetRecord det_fields(const DerivBundle& b, const Grid& g);
Monitors monitors(const DerivBundle& b, const Grid& g);

// Spatial integrals of every accumulator integrand at one instant.
AccumulatorRecord slice(const DerivBundle& b, const Grid& g, const AxisOptions& ax = {});
AccumulatorRecord accumulate(const AccumulatorRecord& prev, const AccumulatorRecord& slice_n,
                             const AccumulatorRecord& slice_n1, double dt);
AccumulatorRecord accumulate(const AccumulatorRecord& prev, const DerivBundle& bn,
                             const DerivBundle& bn1, double dt, const Grid& g,
                             const AxisOptions& ax = {});

// Printed expansions of the determinants, evaluated as a shadow channel.
struct DetShadowRow {
    std::string name;    // e.g. "detB" or "detB_m"
    double max_abs_diff;  // printed minus direct, sup over nodes r > 0
    double max_abs_direct;
    double rel;           // max_abs_diff / max_abs_direct (0 when both vanish)
};
std::vector<DetShadowRow> det_shadow_report(const DerivBundle& b, const Grid& g);

// Per-snapshot series of a run.
struct FunctionalSeries {
    std::vector<double> t;
    std::vector<FunctionalRecord> instant;
    std::vector<AccumulatorRecord> acc;
    std::vector<Monitors> mon;
    double eps = 0;  // hnorm of the data
};

struct InequalityRow {
    std::string name;
    double t;
    double lhs, rhs;
    bool satisfied;
    bool hard;  // violation of a hard row is an invariant failure
};

std::vector<InequalityRow> inequality_report(const FunctionalSeries& s);

// Rows aggregated to the worst ratio lhs/rhs per inequality.
struct InequalitySummary {
    std::string name;
    double worst_ratio;
    double t_worst;
    bool hard;
    bool all_satisfied;
};
std::vector<InequalitySummary> summarize(const std::vector<InequalityRow>& rows);

}  // namespace mlab
