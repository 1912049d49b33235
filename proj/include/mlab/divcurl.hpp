#pragma once

#include <string>
#include <vector>

#include "mlab/balance_laws.hpp"

namespace mlab {

// Pairing of two laws  f11_t + f12_r = G1,  f21_t - f22_r = G2  on [r_in, R] x [0, T]:
//   lhs = int int f11 f22 + f12 f21 = a1 + a2 + a3 + a4,
//   a1 = [int f21 I]_{t=0} - [int f21 I]_{t=T},  I(r) = int_{r_in}^r f11,
//   a2 = int int f21 int_{r_in}^r G1,  a3 = int int G2 I,
//   a4 = int_0^T f12(t, r_in) int_{r_in}^R f21 dr dt  (0 when r_in = 0).
struct PairingReport {
    std::string name;
    double lhs = 0, a1 = 0, a2 = 0, a3 = 0, a4 = 0;
    double gap = 0;  // lhs - a1 - a2 - a3 - a4
    double bound_rhs = 0;
    double inner_radius = 0;  // snapped to an even node
};

struct PairOptions {
    double inner_radius = 0.0;
    // With r_in = 0 the extrapolated axis value of f12 must stay below
    // axis_tol * max|f12| at every snapshot.
    double axis_tol = 1e-4;
};

// Row 1 from lawA: (D, F, Rm); row 2 from lawB: (D, -F, Rm).
// Uses snapshots with t <= T; the trajectory must carry bundles.
PairingReport pair(const BalanceLaw& lawA, const BalanceLaw& lawB, const Trajectory& tr, double T,
                   const Grid& g, const PairOptions& opts = {});

// The four matrix pairings. A and C need an excised inner radius because
// their row-1 flux does not vanish on the axis once phi_t(t, 0) != 0.
struct PairingSpec {
    std::string name;  // "A".."D"
    LawId row1, row2;
    bool excised;
};
const std::vector<PairingSpec>& matrix_pairings();
PairingReport pair(const PairingSpec& p, const Trajectory& tr, double T, const Grid& g,
                   double inner_radius = 0.5);

struct CrosscheckRow {
    std::string name;  // eta2, xi2, zeta2, gamma2
    double via_det = 0, via_pairing = 0;
    double gap = 0;  // relative: |via_det - via_pairing| / max(|via_det|, tiny)
    double inner_radius = 0;
};

// int int det over the pairing domain, from det_fields, against pair().lhs.
std::vector<CrosscheckRow> eta_xi_zeta_gamma_crosscheck(const Trajectory& tr, double T, const Grid& g,
                                                        double inner_radius = 0.5);

}  // namespace mlab
