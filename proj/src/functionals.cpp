#include "mlab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace mlab {
namespace {

struct Node {
    double r, pt, pr, ptt, ptr, prr, pttt, pttr, ptrr, prrr;
    double D, S, i32, i32_t;
    double q;  // phi_r / r, phi_rr on the axis
    double A_t, B_t;
};

Node node(const DerivBundle& b, const Grid& g, std::size_t i) {
    Node n{};
    n.r = g.r(i);
    n.pt = b.phi_t[i];
    n.pr = b.phi_r[i];
    n.ptt = b.phi_tt[i];
    n.ptr = b.phi_tr[i];
    n.prr = b.phi_rr[i];
    n.pttt = b.phi_ttt[i];
    n.pttr = b.phi_ttr[i];
    n.ptrr = b.phi_trr[i];
    n.prrr = b.phi_rrr[i];
    n.D = 1.0 + n.pr * n.pr - n.pt * n.pt;
    n.S = std::sqrt(n.D);
    n.i32 = 1.0 / (n.S * n.D);
    const double Dt = 2.0 * (n.pr * n.ptr - n.pt * n.ptt);
    n.i32_t = -1.5 * n.i32 / n.D * Dt;
    n.q = i == 0 ? n.prr : n.pr / n.r;
    n.A_t = -2.0 * n.pt * n.ptt * n.i32 + (1.0 - n.pt * n.pt) * n.i32_t;
    n.B_t = (n.ptr * n.pt + n.pr * n.ptt) * n.i32 + n.pr * n.pt * n.i32_t;
    return n;
}

template <class Fn>
Field sample(const DerivBundle& b, const Grid& g, Fn&& fn) {
    Field v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(node(b, g, i));
    return v;
}

double simpson(const Field& v, const Grid& g) { return integrate(v, Weight::one, g); }

// Entries of the four matrices with their powers of r factored out, so that
// every combination below is evaluated without dividing by r.
struct Entries {
    // A: a = aA/r, b = bA/r; c1 = r c1h, c2; d1 = r d1h, d2, d3 = d3h/r.
    double aA, bA, c1h, c2, d1h, d2, d3h;
    // B: a = r aB, b = r bB.
    double aB, bB;
    // C: a = pt pr/(r S), b = bC/r; c = r cc, d = r dd (sums of three terms).
    double bC, cc1, cc2, cc3, dd1, dd2, dd3;
};

Entries entries(const Node& n) {
    Entries e{};
    const double pt = n.pt, pr = n.pr, ptt = n.ptt, ptr = n.ptr, pttt = n.pttt, pttr = n.pttr;
    e.aA = 0.5 * (pt * pt + pr * pr) / n.S;
    e.bA = pt * pr / n.S;
    e.c1h = (ptt * ptr * (1.0 + pr * pr) - pt * pr * ptr * ptr) * n.i32;
    e.c2 = 0.5 * (pt * ptt * (1.0 + pr * pr) - pt * pt * pr * ptr) * n.i32;
    e.d1h = 0.5 * (ptr * ptr * (1.0 - pt * pt) + ptt * ptt * (1.0 + pr * pr)) * n.i32;
    e.d2 = 0.5 * (pt * ptr * (1.0 - pt * pt) + pt * pt * pr * ptt) * n.i32;
    e.d3h = 0.25 * pt * pt / n.S;
    e.aB = 0.5 * (ptt * ptt * (1.0 + pr * pr) + ptr * ptr * (1.0 - pt * pt)) * n.i32;
    e.bB = (ptr * ptt * (1.0 - pt * pt) + pr * pt * ptt * ptt) * n.i32;
    e.bC = e.aA;
    e.cc1 = 0.5 * (pttt * pttt * (1.0 + pr * pr) + pttr * pttr * (1.0 - pt * pt)) * n.i32;
    e.cc2 = pttr * ptr * n.A_t;
    e.cc3 = pttr * ptt * n.B_t;
    e.dd1 = (pttt * pttr * (1.0 - pt * pt) + pttt * pttt * pt * pr) * n.i32;
    e.dd2 = pttt * ptr * n.A_t;
    e.dd3 = pttt * ptt * n.B_t;
    return e;
}

}  // namespace

FunctionalRecord instant(const DerivBundle& b, const Grid& g, const AxisOptions& ax) {
    FunctionalRecord f;
    const double rr = ax.ref_radius;
    f.E1 = integrate_finite_part(sample(b, g, [](const Node& n) { return n.pt * n.pt + n.pr * n.pr; }), 1, rr, g);
    f.E1hat = integrate_finite_part(
        sample(b, g, [](const Node& n) { return 0.5 * (n.pr * n.pr + n.pt * n.pt) / n.S; }), 1, rr, g);
    f.E2 = simpson(sample(b, g, [](const Node& n) {
                       return (n.ptt * n.ptt + n.ptr * n.ptr + n.prr * n.prr) * n.r;
                   }), g);
    f.E2hat = simpson(sample(b, g, [](const Node& n) {
                          return 0.5 * (n.ptr * n.ptr * (1.0 - n.pt * n.pt) + n.ptt * n.ptt * (1.0 + n.pr * n.pr)) *
                                 n.i32 * n.r;
                      }), g);

    // phi_tr/r and phi_rr/r - phi_r/r^2 are regular; both vanish on the axis.
    auto q_part = [](const Node& n) { return n.r > 0.0 ? n.pttt * n.pttt + n.pttr * n.pttr : 0.0; };
    auto s_part = [](const Node& n) {
        return n.r > 0.0 ? n.ptrr * n.ptrr + (n.ptr / n.r) * (n.ptr / n.r) : 0.0;
    };
    auto l_part = [](const Node& n) {
        if (n.r == 0.0) return 0.0;
        const double v = (n.prr - n.q) / n.r;
        return n.prrr * n.prrr + v * v;
    };
    const Field fq = sample(b, g, [&](const Node& n) { return q_part(n) * n.r; });
    const Field fs = sample(b, g, [&](const Node& n) { return s_part(n) * n.r; });
    const Field fl = sample(b, g, [&](const Node& n) { return l_part(n) * n.r; });
    const Field f3 = sample(b, g, [&](const Node& n) { return (q_part(n) + s_part(n) + l_part(n)) * n.r; });
    f.E3q = simpson(fq, g);
    f.E3s = simpson(fs, g);
    f.E3l = simpson(fl, g);
    f.E3 = simpson(f3, g);

    f.E3tilde = simpson(sample(b, g, [](const Node& n) {
                            return 0.5 * n.r *
                                   (n.pttt * n.pttt * (1.0 + n.pr * n.pr) + n.pttr * n.pttr * (1.0 - n.pt * n.pt)) *
                                   n.i32;
                        }), g);
    f.E3hat = simpson(sample(b, g, [](const Node& n) {
                          return 0.5 * n.r *
                                     (n.pttt * n.pttt * (1.0 + n.pr * n.pr) + n.pttr * n.pttr * (1.0 - n.pt * n.pt)) *
                                     n.i32 +
                                 n.r * n.pttr * n.ptr * n.A_t + n.r * n.pttr * n.ptt * n.B_t;
                      }), g);

    f.hnorm2 = simpson(sample(b, g, [](const Node& n) { return n.r * (n.prr * n.prr + n.ptr * n.ptr); }), g) +
               integrate_finite_part(sample(b, g, [](const Node& n) { return n.pr * n.pr + n.pt * n.pt; }), 1,
                                     rr, g);
    f.area = simpson(sample(b, g, [](const Node& n) { return n.r * n.S; }), g);
    return f;
}

DetRecord det_fields(const DerivBundle& b, const Grid& g) {
    const std::size_t N = g.size();
    DetRecord d;
    for (Field* f : {&d.detA_m, &d.detA, &d.detB_m, &d.detB, &d.detC_m, &d.detC, &d.detD_m, &d.detD, &d.detA_r2})
        f->assign(N, 0.0);
    for (std::size_t i = 0; i < N; ++i) {
        const Node n = node(b, g, i);
        const Entries e = entries(n);
        const double r = n.r;
        d.detA_m[i] = e.aA * e.d1h - e.bA * e.c1h;
        d.detA_r2[i] = e.aA * (r * r * e.d1h + r * e.d2 + e.d3h) - e.bA * (r * r * e.c1h + r * e.c2);
        if (i > 0) d.detA[i] = d.detA_r2[i] / (r * r);

        d.detB_m[i] = r * r * (e.aB * e.d1h - e.bB * e.c1h);
        d.detB[i] = r * e.aB * (r * e.d1h + e.d2) + e.aB * e.d3h - r * e.bB * (r * e.c1h + e.c2);

        const double ac = n.pt * n.pr / n.S;  // r * a for matrix C
        const double cc = e.cc1 + e.cc2 + e.cc3, dd = e.dd1 + e.dd2 + e.dd3;
        d.detC_m[i] = ac * e.dd1 - e.bC * e.cc1;
        d.detC[i] = ac * dd - e.bC * cc;

        d.detD_m[i] = r * r * (e.cc1 * e.d1h - e.dd1 * e.c1h);
        d.detD[i] = r * cc * (r * e.d1h + e.d2) + cc * e.d3h - r * dd * (r * e.c1h + e.c2);
    }
    // Finite-part density on the axis: limit of (r^2 detA - g0)/r^2.
    Field reg(N);
    for (std::size_t i = 1; i < N; ++i) reg[i] = (d.detA_r2[i] - d.detA_r2[0]) / (g.r(i) * g.r(i));
    d.detA[0] = axis_from_parity(reg, Parity::even);
    return d;
}

Monitors monitors(const DerivBundle& b, const Grid& g) {
    Monitors m;
    m.sup_delta = *std::max_element(b.delta.begin(), b.delta.end());
    m.min_delta = *std::min_element(b.delta.begin(), b.delta.end());
    m.phi_t_axis = b.phi_t[0];
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double r = g.r(i);
        m.sup_phi_t = std::max(m.sup_phi_t, std::abs(b.phi_t[i]));
        m.sup_phi_r = std::max(m.sup_phi_r, std::abs(b.phi_r[i]));
        m.sup_r_phitt2 = std::max(m.sup_r_phitt2, r * b.phi_tt[i] * b.phi_tt[i]);
        m.sup_r_phitr2 = std::max(m.sup_r_phitr2, r * b.phi_tr[i] * b.phi_tr[i]);
        m.sup_r_phirr2 = std::max(m.sup_r_phirr2, r * b.phi_rr[i] * b.phi_rr[i]);
    }
    auto pw = [&](const Field& f, int p, bool weight_r) {
        Field v(f.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::pow(f[i], p) * (weight_r ? g.r(i) : 1.0);
        return simpson(v, g);
    };
    m.int_r_phitt2 = pw(b.phi_tt, 2, true);
    m.int_r_phitr2 = pw(b.phi_tr, 2, true);
    m.int_r_phirr2 = pw(b.phi_rr, 2, true);
    m.int_r_phitt4 = pw(b.phi_tt, 4, true);
    m.int_r_phitr4 = pw(b.phi_tr, 4, true);
    m.int_r_phirr4 = pw(b.phi_rr, 4, true);
    m.int_r_phitt6 = pw(b.phi_tt, 6, true);
    m.int_r_phitr6 = pw(b.phi_tr, 6, true);
    m.int_r_phirr6 = pw(b.phi_rr, 6, true);
    m.int_r_phittr2 = pw(b.phi_ttr, 2, true);
    m.int_r_phitrr2 = pw(b.phi_trr, 2, true);
    m.int_r_phirrr2 = pw(b.phi_rrr, 2, true);
    m.int_phitt4 = pw(b.phi_tt, 4, false);
    m.int_phitr4 = pw(b.phi_tr, 4, false);
    return m;
}

AccumulatorRecord slice(const DerivBundle& b, const Grid& g, const AxisOptions& ax) {
    AccumulatorRecord s;
    const double rr = ax.ref_radius;
    s.M = integrate_finite_part(sample(b, g, [](const Node& n) { return n.pt * n.pt + n.pr * n.pr; }), 2, rr, g);
    s.M0 = simpson(sample(b, g, [](const Node& n) {
                       return n.ptt * n.ptt * n.pr * n.pr + n.ptr * n.ptr * n.pt * n.pt +
                              n.ptt * n.ptt * n.pt * n.pt + n.ptr * n.ptr * n.pr * n.pr;
                   }), g);
    s.M01 = simpson(sample(b, g, [](const Node& n) { return (n.ptt * n.ptt + n.ptr * n.ptr) * n.pt * n.pt; }), g);
    s.M02 = simpson(sample(b, g, [](const Node& n) { return (n.ptt * n.ptt + n.ptr * n.ptr) * n.pr * n.pr; }), g);
    s.Mh = simpson(sample(b, g, [](const Node& n) {
                       return n.pttt * n.pttt * n.pr * n.pr + n.pttr * n.pttr * n.pt * n.pt +
                              n.pttt * n.pttt * n.pt * n.pt + n.pttr * n.pttr * n.pr * n.pr;
                   }), g);
    s.Mh1 = simpson(sample(b, g, [](const Node& n) { return (n.pttt * n.pttt + n.pttr * n.pttr) * n.pt * n.pt; }), g);
    s.Mh2 = simpson(sample(b, g, [](const Node& n) { return (n.pttt * n.pttt + n.pttr * n.pttr) * n.pr * n.pr; }), g);
    s.M1 = integrate_finite_part(sample(b, g, [](const Node& n) { return 0.25 * n.pt * n.pt / n.S; }), 2, rr, g);
    s.M2 = simpson(sample(b, g, [](const Node& n) { return 0.75 * n.q * n.q / n.S; }), g);

    const DetRecord d = det_fields(b, g);
    s.eta1 = simpson(d.detA_m, g);
    s.eta2 = integrate_finite_part(d.detA_r2, 2, rr, g);
    s.xi1 = simpson(d.detB_m, g);
    s.xi2 = simpson(d.detB, g);
    s.zeta1 = simpson(d.detC_m, g);
    s.zeta2 = simpson(d.detC, g);
    s.gamma1 = simpson(d.detD_m, g);
    s.gamma2 = simpson(d.detD, g);
    return s;
}

AccumulatorRecord accumulate(const AccumulatorRecord& p, const AccumulatorRecord& a,
                             const AccumulatorRecord& b, double dt) {
    auto tr = [dt](double prev, double x, double y) { return prev + 0.5 * dt * (x + y); };
    AccumulatorRecord o;
    o.M = tr(p.M, a.M, b.M);
    o.M0 = tr(p.M0, a.M0, b.M0);
    o.Mh = tr(p.Mh, a.Mh, b.Mh);
    o.M01 = tr(p.M01, a.M01, b.M01);
    o.M02 = tr(p.M02, a.M02, b.M02);
    o.Mh1 = tr(p.Mh1, a.Mh1, b.Mh1);
    o.Mh2 = tr(p.Mh2, a.Mh2, b.Mh2);
    o.M1 = tr(p.M1, a.M1, b.M1);
    o.M2 = tr(p.M2, a.M2, b.M2);
    o.eta1 = tr(p.eta1, a.eta1, b.eta1);
    o.eta2 = tr(p.eta2, a.eta2, b.eta2);
    o.xi1 = tr(p.xi1, a.xi1, b.xi1);
    o.xi2 = tr(p.xi2, a.xi2, b.xi2);
    o.zeta1 = tr(p.zeta1, a.zeta1, b.zeta1);
    o.zeta2 = tr(p.zeta2, a.zeta2, b.zeta2);
    o.gamma1 = tr(p.gamma1, a.gamma1, b.gamma1);
    o.gamma2 = tr(p.gamma2, a.gamma2, b.gamma2);
    return o;
}

AccumulatorRecord accumulate(const AccumulatorRecord& prev, const DerivBundle& bn, const DerivBundle& bn1,
                             double dt, const Grid& g, const AxisOptions& ax) {
    return accumulate(prev, slice(bn, g, ax), slice(bn1, g, ax), dt);
}

std::vector<DetShadowRow> det_shadow_report(const DerivBundle& b, const Grid& g) {
    const DetRecord d = det_fields(b, g);
    std::map<std::string, std::pair<double, double>> acc;  // name -> (max diff, max direct)
    auto add = [&](const std::string& name, double printed, double direct) {
        auto& [diff, mag] = acc[name];
        diff = std::max(diff, std::abs(printed - direct));
        mag = std::max(mag, std::abs(direct));
    };
    for (std::size_t i = 1; i < g.size(); ++i) {
        const Node n = node(b, g, i);
        const double r = n.r, pt = n.pt, pr = n.pr, ptt = n.ptt, ptr = n.ptr, pttt = n.pttt, pttr = n.pttr;
        const double D = n.D, D2 = D * D, D3 = D2 * D;
        const double s2 = pt * pt + pr * pr;

        const double Am = (1.0 / (4.0 * D2)) * std::pow(pt * ptt - pr * ptr, 2) +
                          (1.0 / (4.0 * D2)) * std::pow(pt * ptr - pr * ptt, 2) +
                          (1.0 / (4.0 * D2)) * std::pow(ptt * pr - pt * ptr, 2) * s2 +
                          (1.0 / (2.0 * D2)) * pr * pt * (ptt * pr - ptr * pt) * (ptt * pt - ptr * pr) +
                          (1.0 / (2.0 * D2)) * s2 * (ptt * pr - ptr * pt) * (ptr * pr - ptt * pt) -
                          (1.0 / (2.0 * D2)) * s2 * std::pow(ptt * pr - pt * ptr, 2);
        const double k = pt * ptr * (1.0 - pt * pt) + pt * pt * pr * ptt;
        const double A = Am + s2 * k / (4.0 * r * D2) - pt * pr * k / (2.0 * r * D2) + s2 * pt * pt / (8.0 * D * r * r);
        add("detA_m", Am, d.detA_m[i]);
        add("detA", A, d.detA[i]);

        const double Bm = r * r * std::pow(0.5 * (ptr * ptr * (1.0 - pt * pt) - ptt * ptt * (1.0 + pr * pr)) + pt * pr * ptt * ptr, 2);
        const double B = Bm + (pt * pt * ptt * ptt * (1.0 + pr * pr) + pt * pt * ptr * ptr * (1.0 - pt * pt)) / (8.0 * D2) +
                         r / (4.0 * D3) * pt * pt * pr * ptt *
                             ((1.0 - pt * pt) * ptr * ptr - (1.0 + pr * pr) * ptt * ptt + 2.0 * pt * pr * ptt * ptr) -
                         r / (4.0 * D3) * pt * pt * (pt * pr * ptr * ptt * D / r) -
                         r / D3 * (1.0 - pt * pt) * pt * ptr *
                             (ptt * ptt * (1.0 + pr * pr) - 2.0 * pt * pr * ptt * ptt * ptr * ptr - ptr * ptr * (1.0 - pt * pt));
        add("detB_m", Bm, d.detB_m[i]);
        add("detB", B, d.detB[i]);

        const double a1 = pt * pttt - pr * pttr, a2 = pt * pttr - pr * pttt, a3 = pr * pttt - pt * pttr;
        const double Cm = (1.0 / (4.0 * D2)) * a1 * a1 + (1.0 / (4.0 * D2)) * a2 * a2 + (1.0 / (4.0 * D2)) * s2 * a3 * a3 +
                          (1.0 / (2.0 * D2)) * s2 * (pttt * pr - pt * pttr) * (pttr * pr - pttt * pt) +
                          (1.0 / (2.0 * D2)) * s2 * (pttt * pr - pt * pttr) * (pttt * pt - pttr * pr) +
                          (1.0 / (2.0 * D2)) * pt * pt * (pttr * pt - pttt * pr) * (pttt * pr - pt * pttr) +
                          (1.0 / (2.0 * D2)) * pt * pr * (pttr * pr - pt * pttt) * (pttt * pr - pt * pttr);
        const double C = Cm + pt * pr / D2 * (pttt * ptt * ptt * pr - pttt * ptr * ptt * pt) -
                         s2 / (2.0 * D2) * (pttr * ptt * ptt * pr - pttr * ptr * ptt * pt) +
                         pt * pr / D3 * (pr * ptr - pt * ptt) * (-3.0 * (1.0 - pt * pt) * pttt * ptr - 3.0 * pt * pr * pttt * ptt) -
                         s2 / (2.0 * D3) * (pr * ptr - pt * ptt) * (-3.0 * (1.0 - pt * pt) * pttr * ptr - 3.0 * pt * pr * pttr * ptt);
        add("detC_m", Cm, d.detC_m[i]);
        add("detC", C, d.detC[i]);

        const double Dm = r * r / (4.0 * D3) * (1.0 + pr * pr) * (1.0 - pt * pt) * std::pow(pttt * ptr - ptt * pttr, 2) +
                          r * r / (4.0 * D3) *
                              (pttr * ptr * (1.0 - pt * pt) - pttt * ptt * (1.0 + pr * pr) + 2.0 * pttt * ptr * pt * pr);
        add("detD_m", Dm, d.detD_m[i]);
    }
    std::vector<DetShadowRow> rows;
    for (const char* name : {"detA_m", "detA", "detB_m", "detB", "detC_m", "detC", "detD_m"}) {
        const auto [diff, mag] = acc[name];
        rows.push_back({name, diff, mag, mag > 0.0 ? diff / mag : (diff > 0.0 ? INFINITY : 0.0)});
    }
    return rows;
}

std::vector<InequalityRow> inequality_report(const FunctionalSeries& s) {
    std::vector<InequalityRow> rows;
    if (s.t.empty()) return rows;
    const double eps = s.eps, e2 = eps * eps, e4 = e2 * e2;
    const FunctionalRecord& f0 = s.instant.front();
    double int_tt4 = 0.0, int_tr4 = 0.0;
    bool delta_le4 = true;
    for (std::size_t k = 0; k < s.t.size(); ++k) {
        const double t = s.t[k];
        const FunctionalRecord& f = s.instant[k];
        const AccumulatorRecord& a = s.acc[k];
        const Monitors& m = s.mon[k];
        if (k > 0) {
            const double dt = t - s.t[k - 1];
            int_tt4 += 0.5 * dt * (m.int_phitt4 + s.mon[k - 1].int_phitt4);
            int_tr4 += 0.5 * dt * (m.int_phitr4 + s.mon[k - 1].int_phitr4);
        }
        delta_le4 = delta_le4 && m.sup_delta <= 4.0;
        auto row = [&](const std::string& name, double lhs, double rhs, bool hard) {
            const bool ok = lhs <= rhs * (1.0 + 1e-12) + 1e-300;
            rows.push_back({name, t, lhs, rhs, ok, hard});
        };
        // Pointwise these hold where sqrt(Delta) <= 1; elsewhere only reported.
        row("bt1", f.E1, 2.0 * f.E1hat, m.sup_delta <= 1.0);
        row("bt3", f.E2, 2.0 * f.E1hat + 2.0 * f.E2hat, m.sup_delta <= 1.0);
        // Needs Delta <= 4 and no finite-part renormalisation of M, M1.
        row("bt5", a.M, 8.0 * a.M1 + 8.0 * a.M2, delta_le4 && k == 0);
        row("E3q_le_4E3tilde", f.E3q, 4.0 * f.E3tilde, m.sup_delta <= 1.0 + 1e-3 && m.min_delta >= 0.9);
        rows.push_back({"M0_split", t, std::abs(a.M0 - a.M01 - a.M02), 1e-12 * std::max(std::abs(a.M0), 1e-300),
                        std::abs(a.M0 - a.M01 - a.M02) <= 1e-12 * std::abs(a.M0) + 1e-300, true});

        row("wqes_tt", m.sup_r_phitt2, 2.0 * std::sqrt(f.E2 * f.E3q), false);
        row("wqes_tr", m.sup_r_phitr2, 2.0 * std::sqrt(f.E2 * f.E3s), false);
        row("wqes_rr", m.sup_r_phirr2, 2.0 * std::sqrt(f.E2 * f.E3l), false);
        row("s1_tt", std::pow(m.int_r_phitt4, 0.25), std::pow(m.int_r_phitt2 * m.int_r_phittr2, 0.25), false);
        row("s1_tr", std::pow(m.int_r_phitr4, 0.25), std::pow(m.int_r_phitr2 * m.int_r_phitrr2, 0.25), false);
        row("s1_rr", std::pow(m.int_r_phirr4, 0.25), std::pow(m.int_r_phirr2 * m.int_r_phirrr2, 0.25), false);
        row("s2_tt", std::pow(m.int_r_phitt6, 1.0 / 6.0),
            std::pow(m.int_r_phitt2, 1.0 / 6.0) * std::cbrt(m.int_r_phittr2), false);
        row("s2_tr", std::pow(m.int_r_phitr6, 1.0 / 6.0),
            std::pow(m.int_r_phitr2, 1.0 / 6.0) * std::cbrt(m.int_r_phitrr2), false);
        row("s2_rr", std::pow(m.int_r_phirr6, 1.0 / 6.0),
            std::pow(m.int_r_phirr2, 1.0 / 6.0) * std::cbrt(m.int_r_phirrr2), false);
        row("s41", int_tt4, 2.0 * e2 * f.E3q + 24.0 * a.Mh, false);
        row("s42", int_tr4, 2.0 * e2 * f.E3s + 24.0 * a.Mh, false);
        row("E3_le_16E3_0", f.E3, 16.0 * f0.E3, false);
        row("sme_E1", f.E1, e2, false);
        row("sme_E2", f.E2, e2, false);
        row("sme_M0", a.M0, e2, false);
        row("sme_M", a.M, e2, false);
        row("sme_xi1", a.xi1, e4, false);
        row("sme_xi2", a.xi2, e4, false);
        row("sme_eta1", a.eta1, e4, false);
        row("sme_eta2", a.eta2, e4, false);
    }
    return rows;
}

std::vector<InequalitySummary> summarize(const std::vector<InequalityRow>& rows) {
    std::vector<InequalitySummary> out;
    std::map<std::string, std::size_t> index;
    for (const auto& r : rows) {
        double ratio;
        if (r.rhs != 0.0) ratio = r.lhs / r.rhs;
        else ratio = r.lhs <= 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        auto it = index.find(r.name);
        if (it == index.end()) {
            index[r.name] = out.size();
            out.push_back({r.name, ratio, r.t, r.hard, !r.hard || r.satisfied});
            continue;
        }
        auto& s = out[it->second];
        if (ratio > s.worst_ratio) {
            s.worst_ratio = ratio;
            s.t_worst = r.t;
        }
        s.hard = s.hard || r.hard;
        if (r.hard && !r.satisfied) s.all_satisfied = false;
    }
    return out;
}

}  // namespace mlab
