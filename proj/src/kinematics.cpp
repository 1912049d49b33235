#include "mlab/kinematics.hpp"

#include <cmath>

#include "mlab/errors.hpp"

namespace mlab {

QuasiF quasilinear_rhs(const FieldState& s, const Grid& g, double delta_min) {
    const std::size_t n = g.size();
    if (s.phi.size() != n || s.psi.size() != n)
        throw ContractViolation("quasilinear_rhs: state does not match grid");
    require_finite(s.phi, "quasilinear_rhs(phi)");
    require_finite(s.psi, "quasilinear_rhs(psi)");

    QuasiF q;
    q.value.resize(n);
    Field delta(n);
    const long bad = kernels::quasilinear(s.phi.data(), s.psi.data(), n, g.h(), delta_min,
                                          q.value.data(), delta.data(), Exec::parallel);
    if (bad >= 0) throw TimelikeViolation(static_cast<std::size_t>(bad), delta[bad]);

    const Field pr = deriv_r(s.phi, 1, Parity::even, g);
    const Field prr = deriv_r(s.phi, 2, Parity::even, g);
    const Field ptr = deriv_r(s.psi, 1, Parity::even, g);
    q.d_pr.resize(n);
    q.d_pt.resize(n);
    q.d_prr.resize(n);
    q.d_ptr.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double pt = s.psi[i];
        if (i == 0) {
            // F(0) = 2 (1 - phi_t^2) phi_rr; the phi_r and phi_tr partials
            // multiply quantities that vanish on the axis.
            q.d_pr[0] = 0.0;
            q.d_ptr[0] = 0.0;
            q.d_pt[0] = -4.0 * pt * prr[0];
            q.d_prr[0] = 2.0 * (1.0 - pt * pt);
            continue;
        }
        const double r = g.r(i);
        const double A = 1.0 + pr[i] * pr[i];
        const double D = delta[i];
        const double num = (1.0 - pt * pt) * prr[i] + 2.0 * pt * pr[i] * ptr[i] + pr[i] / r * D;
        const double dn_dpr = 2.0 * pt * ptr[i] + D / r + 2.0 * pr[i] * pr[i] / r;
        const double dn_dpt = -2.0 * pt * prr[i] + 2.0 * pr[i] * ptr[i] - 2.0 * pt * pr[i] / r;
        q.d_pr[i] = dn_dpr / A - 2.0 * pr[i] * num / (A * A);
        q.d_pt[i] = dn_dpt / A;
        q.d_prr[i] = (1.0 - pt * pt) / A;
        q.d_ptr[i] = 2.0 * pt * pr[i] / A;
    }
    return q;
}

DerivBundle bundle(const FieldState& c, const Grid& g, double delta_min) {
    const QuasiF q = quasilinear_rhs(c, g, delta_min);
    DerivBundle b;
    b.phi_t = c.psi;
    b.phi_r = deriv_r(c.phi, 1, Parity::even, g);
    b.phi_rr = deriv_r(c.phi, 2, Parity::even, g);
    b.phi_rrr = deriv_r(c.phi, 3, Parity::even, g);
    b.phi_tr = deriv_r(c.psi, 1, Parity::even, g);
    b.phi_trr = deriv_r(c.psi, 2, Parity::even, g);
    b.phi_tt = q.value;
    b.phi_ttr = deriv_r(b.phi_tt, 1, Parity::even, g);

    const std::size_t n = g.size();
    b.phi_ttt.resize(n);
    b.delta.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        b.phi_ttt[i] = q.d_pr[i] * b.phi_tr[i] + q.d_pt[i] * b.phi_tt[i] +
                       q.d_prr[i] * b.phi_trr[i] + q.d_ptr[i] * b.phi_ttr[i];
        b.delta[i] = 1.0 + b.phi_r[i] * b.phi_r[i] - b.phi_t[i] * b.phi_t[i];
    }
    return b;
}

DerivBundle bundle(const FieldState& prev, const FieldState& center, const FieldState& next,
                   const Grid& g, double delta_min) {
    const double dt0 = center.t - prev.t;
    const double dt1 = next.t - center.t;
    if (!(dt0 > 0.0) || std::abs(dt1 - dt0) > 1e-12 * std::max(1.0, std::abs(dt0)))
        throw ContractViolation("bundle: window states are not equally spaced in t");
    DerivBundle b = bundle(center, g, delta_min);
    const Field fp = quasilinear_rhs(prev, g, delta_min).value;
    const Field fn = quasilinear_rhs(next, g, delta_min).value;
    Field fd(g.size());
    for (std::size_t i = 0; i < fd.size(); ++i) fd[i] = (fn[i] - fp[i]) / (dt0 + dt1);
    b.phi_ttt_fd = std::move(fd);
    return b;
}

Field eq_residual_div(const DerivBundle& b, const Grid& g) {
    Field e(b.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = eq_residual(b.jet(i), g.r(i));
    return e;
}

DerivBundle bundle_from_jets(std::span<const Jet> jets) {
    const std::size_t n = jets.size();
    DerivBundle b;
    for (Field* f : {&b.phi_t, &b.phi_r, &b.phi_tt, &b.phi_tr, &b.phi_rr, &b.phi_ttt, &b.phi_ttr,
                     &b.phi_trr, &b.phi_rrr, &b.delta})
        f->resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Jet& j = jets[i];
        b.phi_t[i] = j.t;
        b.phi_r[i] = j.r;
        b.phi_tt[i] = j.tt;
        b.phi_tr[i] = j.tr;
        b.phi_rr[i] = j.rr;
        b.phi_ttt[i] = j.ttt;
        b.phi_ttr[i] = j.ttr;
        b.phi_trr[i] = j.trr;
        b.phi_rrr[i] = j.rrr;
        b.delta[i] = delta_of(j);
    }
    return b;
}

}  // namespace mlab
