#pragma once

#include <optional>

#include "mlab/grid.hpp"
#include "mlab/jet.hpp"

namespace mlab {

constexpr double kDefaultDeltaMin = 1e-6;

struct FieldState {
    double t = 0.0;
    Field phi;  // even
    Field psi;  // phi_t, even
};

struct DerivBundle {
    Field phi_t, phi_r, phi_tt, phi_tr, phi_rr, phi_ttt, phi_ttr, phi_trr, phi_rrr;
    Field delta;
    // Second-order time difference of phi_tt, only when built from a window.
    std::optional<Field> phi_ttt_fd;

    Jet jet(std::size_t i) const {
        return {phi_t[i], phi_r[i], phi_tt[i], phi_tr[i], phi_rr[i],
                phi_ttt[i], phi_ttr[i], phi_trr[i], phi_rrr[i]};
    }
    std::size_t size() const { return phi_t.size(); }
};

// F solved from the quasilinear form, with its analytic partials.
struct QuasiF {
    Field value;
    Field d_pr, d_pt, d_prr, d_ptr;
};

QuasiF quasilinear_rhs(const FieldState& s, const Grid& g, double delta_min = kDefaultDeltaMin);

DerivBundle bundle(const FieldState& center, const Grid& g, double delta_min = kDefaultDeltaMin);
DerivBundle bundle(const FieldState& prev, const FieldState& center, const FieldState& next,
                   const Grid& g, double delta_min = kDefaultDeltaMin);

// Divergence-form residual E(phi). Equals r (1 + phi_r^2) Delta^{-3/2} (phi_tt - F).
Field eq_residual_div(const DerivBundle& b, const Grid& g);

// Bundle for a field given by samples of every derivative (used by tests and
// by the scaling check): the time derivatives are supplied directly.
DerivBundle bundle_from_jets(std::span<const Jet> jets);

}  // namespace mlab
