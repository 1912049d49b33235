#include "mlab/balance_laws.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "mlab/errors.hpp"
#include "mlab/taylor.hpp"

namespace mlab {
namespace {

// Powers of Delta and their derivatives along the jet.
struct Pre {
    double pt, pr, ptt, ptr, prr, pttt, pttr;
    double D, s, is, i32;   // Delta, sqrt, Delta^{-1/2}, Delta^{-3/2}
    double Dt, Dr, Dtt;
    double is_t, is_r;      // (Delta^{-1/2})_t, _r
    double i32_t, i32_r, i32_tt;

    explicit Pre(const Jet& j)
        : pt(j.t), pr(j.r), ptt(j.tt), ptr(j.tr), prr(j.rr), pttt(j.ttt), pttr(j.ttr) {
        D = delta_of(j);
        s = std::sqrt(D);
        is = 1.0 / s;
        i32 = is / D;
        const double i52 = i32 / D;
        Dt = delta_t(j);
        Dr = delta_r(j);
        Dtt = delta_tt(j);
        is_t = -0.5 * i32 * Dt;
        is_r = -0.5 * i32 * Dr;
        i32_t = -1.5 * i52 * Dt;
        i32_r = -1.5 * i52 * Dr;
        i32_tt = 3.75 * (i52 / D) * Dt * Dt - 1.5 * i52 * Dtt;
    }
};

// PH1: multiplier phi_t / r^2 on E.
double ph1_D(const Jet& j, double r) {
    const Pre p(j);
    return 0.5 * (p.pr * p.pr + p.pt * p.pt) * p.is / r;
}
double ph1_F(const Jet& j, double r) {
    const Pre p(j);
    return -p.pt * p.pr * p.is / r;
}
double ph1_Rm(const Jet& j, double r) {
    const Pre p(j);
    const double inv_rs_t = p.is_t / r;
    return -0.5 * p.pt * p.pt * inv_rs_t + 0.5 * p.pr * p.pr * inv_rs_t +
           2.0 * p.pt * p.pr * p.is / (r * r);
}
double ph1_m(const Jet& j, double r) { return j.t / (r * r); }

// PH2: multiplier phi_r / r^2 on E.
double ph2_D(const Jet& j, double r) {
    const Pre p(j);
    return p.pr * p.pt * p.is / r;
}
double ph2_F(const Jet& j, double r) {
    const Pre p(j);
    return -0.5 * (p.pt * p.pt + p.pr * p.pr) * p.is / r;
}
double ph2_Rm(const Jet& j, double r) {
    const Pre p(j);
    const double inv_rs_r = -p.is / (r * r) + p.is_r / r;
    return -0.5 * p.pt * p.pt * inv_rs_r + 0.5 * p.pr * p.pr * inv_rs_r +
           2.0 * p.pr * p.pr * p.is / (r * r);
}
double ph2_m(const Jet& j, double r) { return j.r / (r * r); }

// PH3: multiplier phi_tt on E_t.
double ph3_D(const Jet& j, double r) {
    const Pre p(j);
    return 0.5 * r * (p.ptt * p.ptt * (1.0 + p.pr * p.pr) + p.ptr * p.ptr * (1.0 - p.pt * p.pt)) * p.i32;
}
double ph3_F(const Jet& j, double r) {
    const Pre p(j);
    return -r * (p.ptt * p.ptr * (1.0 - p.pt * p.pt) + p.pr * p.pt * p.ptt * p.ptt) * p.i32;
}
double ph3_Rm(const Jet& j, double r) {
    const Pre p(j);
    const double a_t = r * (2.0 * p.pr * p.ptr * p.i32 + (1.0 + p.pr * p.pr) * p.i32_t);
    const double b_t = r * ((p.ptt * p.pr + p.pt * p.ptr) * p.i32 + p.pt * p.pr * p.i32_t);
    const double c_t = r * (-2.0 * p.pt * p.ptt * p.i32 + (1.0 - p.pt * p.pt) * p.i32_t);
    return -0.5 * p.ptt * p.ptt * a_t + p.ptt * p.ptr * b_t + 0.5 * p.ptr * p.ptr * c_t;
}
double ph3_m(const Jet& j, double) { return j.tt; }

// PH5: multiplier phi_tr + phi_t/(2r) on E_t.
double ph5_D(const Jet& j, double r) {
    const Pre p(j);
    return (r * p.ptt * p.ptr * (1.0 + p.pr * p.pr) - r * p.pt * p.pr * p.ptr * p.ptr) * p.i32 +
           0.5 * (p.pt * p.ptt * (1.0 + p.pr * p.pr) - p.pt * p.pt * p.pr * p.ptr) * p.i32;
}
double ph5_F(const Jet& j, double r) {
    const Pre p(j);
    return -(0.5 * r * (p.ptr * p.ptr * (1.0 - p.pt * p.pt) + p.ptt * p.ptt * (1.0 + p.pr * p.pr)) * p.i32 +
             0.5 * (p.pt * p.ptr * (1.0 - p.pt * p.pt) + p.pt * p.pt * p.pr * p.ptt) * p.i32 +
             0.25 * p.pt * p.pt * p.is / r);
}
double ph5_Rm(const Jet& j, double r) {
    const Pre p(j);
    return r * p.i32_r *
               (-0.5 * p.ptt * p.ptt * (1.0 + p.pr * p.pr) + p.ptr * p.ptt * p.pr * p.pt +
                0.5 * p.ptr * p.ptr * (1.0 - p.pt * p.pt)) +
           r * p.i32 * (p.ptt * p.pr - p.ptr * p.pt) * (p.ptr * p.ptr - p.ptt * p.prr) +
           0.25 * p.pt * p.pt * p.is / (r * r) - p.is_r * p.pt * p.pt / (4.0 * r) +
           p.is_t * p.pt * p.pr / (2.0 * r);
}
double ph5_m(const Jet& j, double r) { return j.tr + j.t / (2.0 * r); }

// PH6: multiplier phi_rr + phi_r/(2r) on E_r.
double ph6_D(const Jet& j, double r) {
    const Pre p(j);
    return (r * p.prr * p.ptr * (1.0 + p.pr * p.pr) - r * p.pt * p.pr * p.prr * p.prr) * p.i32 +
           0.5 * (p.pr * p.ptr * (1.0 + p.pr * p.pr) - p.pt * p.pr * p.pr * p.prr) * p.i32;
}
double ph6_F(const Jet& j, double r) {
    const Pre p(j);
    return -(0.5 * r * (p.prr * p.prr * (1.0 - p.pt * p.pt) + p.ptr * p.ptr * (1.0 + p.pr * p.pr)) * p.i32 +
             0.5 * (p.pr * p.prr * (1.0 - p.pt * p.pt) + p.pt * p.pr * p.pr * p.ptr) * p.i32 +
             0.25 * p.pr * p.pr * p.is / r);
}
double ph6_Rm(const Jet& j, double r) {
    // Printed remainder plus the correction that makes the identity exact.
    const Pre p(j);
    const double pr2 = p.pr * p.pr, pt2 = p.pt * p.pt;
    const double c0 = -pr2 * p.D;
    const double c1 = p.pr * (pr2 * p.prr - pr2 * p.ptt + p.pr * p.pt * p.ptr - p.prr * pt2 + p.prr - p.ptt);
    const double c2 = -2.0 * p.prr *
                      (pr2 * p.ptt - 2.0 * p.pr * p.pt * p.ptr + p.prr * pt2 - p.prr + p.ptt);
    const double g = (c0 + c1 * r + c2 * r * r) * p.i32 / (2.0 * r * r);
    return shadow::P2_printed(j, r) + g;
}
double ph6_m(const Jet& j, double r) { return j.rr + j.r / (2.0 * r); }

// PH7: multiplier phi_ttt on E_tt.
struct Ph7Coeffs {
    double A_t, B_t;
    explicit Ph7Coeffs(const Pre& p) {
        A_t = -2.0 * p.pt * p.ptt * p.i32 + (1.0 - p.pt * p.pt) * p.i32_t;
        B_t = (p.ptr * p.pt + p.pr * p.ptt) * p.i32 + p.pr * p.pt * p.i32_t;
    }
};
double ph7_D(const Jet& j, double r) {
    const Pre p(j);
    const Ph7Coeffs c(p);
    return 0.5 * r * (p.pttt * p.pttt * (1.0 + p.pr * p.pr) + p.pttr * p.pttr * (1.0 - p.pt * p.pt)) * p.i32 +
           r * p.pttr * p.ptr * c.A_t + r * p.pttr * p.ptt * c.B_t;
}
double ph7_F(const Jet& j, double r) {
    const Pre p(j);
    const Ph7Coeffs c(p);
    return -((r * p.pttt * p.pttr * (1.0 - p.pt * p.pt) + r * p.pttt * p.pttt * p.pt * p.pr) * p.i32 +
             r * p.pttt * p.ptr * c.A_t + r * p.pttt * p.ptt * c.B_t);
}
double ph7_Rm(const Jet& j, double r) {
    const Pre p(j);
    const double pt = p.pt, pr = p.pr, ptt = p.ptt, ptr = p.ptr, pttt = p.pttt, pttr = p.pttr;
    return r * p.i32_tt *
               (-pttt * ptt * (1.0 + pr * pr) + pttt * ptr * pt * pr + pttr * ptt * pr * pt +
                pttr * ptr * (1.0 - pt * pt)) +
           r * p.i32_t * 1.5 *
               (-pttt * pttt * (1.0 + pr * pr) + 2.0 * pttt * pttr * pt * pr + pttr * pttr * (1.0 - pt * pt)) +
           r * p.i32_t * 2.0 * (pttt * ptr - pttr * ptt) * (ptr * pt - ptt * pr) +
           r * p.i32 * 2.0 * (pttr * pt - pttt * pr) * (pttt * ptr - pttr * ptt);
}
double ph7_m(const Jet& j, double) { return j.ttt; }

const std::array<BalanceLaw, 6> kLaws{{
    {LawId::PH1, "PH1", 0, false, Parity::odd, Parity::even, ph1_D, ph1_F, ph1_Rm, ph1_m},
    {LawId::PH2, "PH2", 0, false, Parity::even, Parity::odd, ph2_D, ph2_F, ph2_Rm, ph2_m},
    {LawId::PH3, "PH3", 1, false, Parity::odd, Parity::even, ph3_D, ph3_F, ph3_Rm, ph3_m},
    {LawId::PH5, "PH5", 1, false, Parity::even, Parity::odd, ph5_D, ph5_F, ph5_Rm, ph5_m},
    {LawId::PH6, "PH6", 1, true, Parity::even, Parity::odd, ph6_D, ph6_F, ph6_Rm, ph6_m},
    {LawId::PH7, "PH7", 2, false, Parity::odd, Parity::even, ph7_D, ph7_F, ph7_Rm, ph7_m},
}};

}  // namespace

namespace shadow {

double W1_intermediate(const Jet& j, double r) {
    const Pre p(j);
    const double bracket = p.ptr * p.ptr * (1.0 - p.pt * p.pt) + 2.0 * p.ptt * p.ptr * p.pt * p.pr -
                           p.ptt * p.ptt * (1.0 + p.pr * p.pr);
    const double ptpr_t = p.ptt * p.pr + p.pt * p.ptr;
    return r * p.i32_t * 0.5 * bracket +
           r * p.i32 * (-p.pr * p.ptr * p.ptt * p.ptt + p.ptt * p.ptr * ptpr_t - p.ptr * p.ptr * p.pt * p.ptt);
}

double W1_collapsed(const Jet& j, double r) {
    const Pre p(j);
    return r * p.i32_t *
           (p.ptr * p.ptr * (1.0 - p.pt * p.pt) + 2.0 * p.ptt * p.ptr * p.pt * p.pr -
            p.ptt * p.ptt * (1.0 + p.pr * p.pr));
}

double T1_second_form(const Jet& j, double r) {
    const Pre p(j);
    const double pt = p.pt, pr = p.pr, ptt = p.ptt, ptr = p.ptr, pttt = p.pttt, pttr = p.pttr;
    const double k = r * 4.5 * p.i32 / p.D;  // r (9/2) Delta^{-5/2}
    return r * p.i32_tt *
               (-pttt * ptt * (1.0 + pr * pr) + pttt * ptr * pt * pr + pttr * ptt * pr * pt +
                pttr * ptr * (1.0 - pt * pt)) +
           k * (pr * pttr - pt * pttt) *
               (ptr * pttr * (1.0 - pt * pt) - ptt * pttt * (1.0 + pr * pr) + 2.0 * pttt * ptr * pr * pt) +
           k * pt * pttr * (1.0 - pt * pt) * (pttt * ptr - pttr * ptt) +
           k * pr * pttt * (1.0 + pr * pr) * (pttr * ptt - pttt * ptr) +
           2.0 * k * pt * pt * pr * pttt * (pttt * ptr - pttr * ptt) +
           r * p.i32_t * 2.0 * (pttt * ptr - pttr * ptt) * (ptr * pt - ptt * pr) +
           r * p.i32 * 2.0 * (pttr * pt - pttt * pr) * (pttt * ptr - pttr * ptt);
}

double P2_printed(const Jet& j, double r) {
    const Pre p(j);
    return r * p.i32_r *
               (-0.5 * p.ptr * p.ptr * (1.0 + p.pr * p.pr) + p.ptr * p.prr * p.pr * p.pt +
                0.5 * p.prr * p.prr * (1.0 - p.pt * p.pt)) +
           0.75 * p.pr * p.pr * p.is / (r * r) + p.is_r * 3.0 * p.pr * p.pr / (4.0 * r);
}

}  // namespace shadow

std::span<const BalanceLaw> all_laws() { return kLaws; }

const BalanceLaw& law(LawId id) {
    for (const auto& L : kLaws)
        if (L.id == id) return L;
    throw ContractViolation("law: unknown id");
}

const BalanceLaw& law(std::string_view name) {
    for (const auto& L : kLaws)
        if (L.name == name) return L;
    throw ConfigError("unknown balance law '" + std::string(name) + "'");
}

LawFields evaluate(const BalanceLaw& L, const DerivBundle& b, const Grid& g) {
    const std::size_t n = b.size();
    LawFields f{Field(n), Field(n), Field(n), Field(n)};
    for (std::size_t i = 1; i < n; ++i) {
        const Jet j = b.jet(i);
        const double r = g.r(i);
        f.D[i] = L.density(j, r);
        f.F[i] = L.flux(j, r);
        f.Rm[i] = L.remainder(j, r);
        f.m[i] = L.multiplier(j, r);
    }
    fill_axis(f.D, L.D_parity);
    fill_axis(f.F, L.F_parity);
    // d_t D has the parity of D.
    fill_axis(f.Rm, L.D_parity);
    // m times d^k E has the parity of D; E is odd, so E_t is odd and E_r even.
    const bool flip = !L.spatial;
    fill_axis(f.m, flip == (L.D_parity == Parity::even) ? Parity::odd : Parity::even);
    return f;
}

Field residual(const BalanceLaw& L, const Trajectory& tr, std::size_t idx, const Grid& g) {
    if (idx == 0 || idx + 1 >= tr.snapshots.size())
        throw ContractViolation("residual: snapshot index needs both temporal neighbours");
    const auto& prev = tr.snapshots[idx - 1];
    const auto& cur = tr.snapshots[idx];
    const auto& next = tr.snapshots[idx + 1];
    if (!prev.bundle || !cur.bundle || !next.bundle)
        throw ContractViolation("residual: trajectory was recorded without bundles");
    const double dt = next.state.t - prev.state.t;
    const LawFields a = evaluate(L, *prev.bundle, g);
    const LawFields c = evaluate(L, *cur.bundle, g);
    const LawFields z = evaluate(L, *next.bundle, g);
    const Field dF = deriv_r(c.F, 1, L.F_parity, g);
    Field res(g.size());
    for (std::size_t i = 0; i < res.size(); ++i) res[i] = (z.D[i] - a.D[i]) / dt + dF[i] - c.Rm[i];
    return res;
}

Jet AnalyticField::jet(double t, double r) const {
    return {d(1, 0, t, r), d(0, 1, t, r), d(2, 0, t, r), d(1, 1, t, r), d(0, 2, t, r),
            d(3, 0, t, r), d(2, 1, t, r), d(1, 2, t, r), d(0, 3, t, r)};
}

double eq_derivative(const BalanceLaw& L, const AnalyticField& f, double t, double r) {
    if (L.eq_order == 0 && !L.spatial) return eq_residual(f.jet(t, r), r);
    // Seed each argument of E with its derivatives along t (or r).
    auto seed = [&](int nt, int nr) {
        return L.spatial ? Taylor2(f.d(nt, nr, t, r), f.d(nt, nr + 1, t, r), f.d(nt, nr + 2, t, r))
                         : Taylor2(f.d(nt, nr, t, r), f.d(nt + 1, nr, t, r), f.d(nt + 2, nr, t, r));
    };
    const Taylor2 pt = seed(1, 0), pr = seed(0, 1), ptt = seed(2, 0), ptr = seed(1, 1), prr = seed(0, 2);
    const Taylor2 rr = L.spatial ? Taylor2(r, 1.0, 0.0) : Taylor2(r);
    const Taylor2 e = eq_residual(pt, pr, ptt, ptr, prr, rr);
    if (L.spatial || L.eq_order == 1) return e.d;
    return e.dd;
}

Field multiplier_identity_gap(const BalanceLaw& L, const AnalyticField& f, const Grid& g, double t0,
                              double dt) {
    const std::size_t n = g.size();
    Field Dm(n), Dp(n), F(n), gap(n);
    for (std::size_t i = 1; i < n; ++i) {
        const double r = g.r(i);
        Dm[i] = L.density(f.jet(t0 - dt, r), r);
        Dp[i] = L.density(f.jet(t0 + dt, r), r);
        F[i] = L.flux(f.jet(t0, r), r);
    }
    fill_axis(F, L.F_parity);
    const Field dF = deriv_r(F, 1, L.F_parity, g);
    for (std::size_t i = 1; i < n; ++i) {
        const double r = g.r(i);
        const Jet j = f.jet(t0, r);
        gap[i] = (Dp[i] - Dm[i]) / (2.0 * dt) + dF[i] - L.remainder(j, r) -
                 L.multiplier(j, r) * eq_derivative(L, f, t0, r);
    }
    fill_axis(gap, L.D_parity);
    return gap;
}

double sup_norm_from(std::span<const double> v, const Grid& g, double r_min) {
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (g.r(i) >= r_min) m = std::max(m, std::abs(v[i]));
    return m;
}

double l1_norm_from(std::span<const double> v, const Grid& g, double r_min) {
    // Trapezoid over the window; the window edge need not be a Simpson node.
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (g.r(i) >= r_min) s += 0.5 * g.h() * (std::abs(v[i]) + std::abs(v[i + 1]));
    return s;
}

}  // namespace mlab
