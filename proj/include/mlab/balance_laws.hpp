#pragma once

#include <span>
#include <string_view>

#include "mlab/evolution.hpp"

namespace mlab {

enum class LawId { PH1, PH2, PH3, PH5, PH6, PH7 };

// One identity d_t D + d_r F = Rm obtained by multiplying d^k E by m.
// eq_order counts time derivatives of E; PH6 uses d_r E instead (spatial).
struct BalanceLaw {
    LawId id;
    std::string_view name;
    int eq_order;
    bool spatial;
    Parity D_parity, F_parity;
    double (*density)(const Jet&, double r);
    double (*flux)(const Jet&, double r);
    double (*remainder)(const Jet&, double r);
    double (*multiplier)(const Jet&, double r);
};

std::span<const BalanceLaw> all_laws();
const BalanceLaw& law(LawId id);
const BalanceLaw& law(std::string_view name);

// Node-wise law fields; the axis node is filled from parity.
struct LawFields {
    Field D, F, Rm, m;
};
LawFields evaluate(const BalanceLaw& L, const DerivBundle& b, const Grid& g);

// d_t D (centred over neighbouring snapshots) + d_r F - Rm.
Field residual(const BalanceLaw& L, const Trajectory& tr, std::size_t idx, const Grid& g);

// Alternative printed transcriptions kept for comparison.
namespace shadow {
double W1_intermediate(const Jet& j, double r);
double W1_collapsed(const Jet& j, double r);
double T1_second_form(const Jet& j, double r);
double P2_printed(const Jet& j, double r);
}  // namespace shadow

// A smooth field phi(t, r) with exact partial derivatives.
class AnalyticField {
public:
    virtual ~AnalyticField() = default;
    virtual double d(int nt, int nr, double t, double r) const = 0;
    Jet jet(double t, double r) const;
};

// d_t^k E (or d_r E for a spatial law) by forward-mode differentiation of the
// residual formula on exact derivatives.
double eq_derivative(const BalanceLaw& L, const AnalyticField& f, double t, double r);

// [d_t D + d_r F - Rm] - m * d^k E at time t0, with d_t D by a centred
// difference of step dt and d_r F by deriv_r. Vanishes for any smooth field
// up to discretisation error.
Field multiplier_identity_gap(const BalanceLaw& L, const AnalyticField& f, const Grid& g,
                              double t0, double dt);

// Sup and L1 norms restricted to r >= r_min.
double sup_norm_from(std::span<const double> v, const Grid& g, double r_min);
double l1_norm_from(std::span<const double> v, const Grid& g, double r_min);

}  // namespace mlab
