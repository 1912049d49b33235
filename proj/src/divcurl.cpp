#include "mlab/divcurl.hpp"

#include <algorithm>
#include <cmath>

#include "mlab/errors.hpp"
#include "mlab/functionals.hpp"

namespace mlab {
namespace {

Parity times(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

// Pointwise product; with i0 = 0 the axis node comes from the product parity,
// since one factor may be singular there while the product is regular.
Field product(const Field& a, const Field& b, std::size_t i0, Parity p) {
    Field out(a.size(), 0.0);
    for (std::size_t i = std::max<std::size_t>(i0, 1); i < a.size(); ++i) out[i] = a[i] * b[i];
    if (i0 == 0) fill_axis(out, p);
    return out;
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t k = 1; k < t.size(); ++k) s += 0.5 * (t[k] - t[k - 1]) * (v[k] + v[k - 1]);
    return s;
}

std::size_t snapped_inner(double r_in, const Grid& g) {
    if (r_in < 0.0 || r_in >= g.R()) throw ConfigError("divcurl.inner_radius must lie in [0, R)");
    return r_in == 0.0 ? 0 : g.even_node_near(r_in);
}

std::vector<std::size_t> snapshots_up_to(const Trajectory& tr, double T) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < tr.snapshots.size(); ++k) {
        if (tr.snapshots[k].state.t > T * (1.0 + 1e-12) + 1e-14) break;
        if (!tr.snapshots[k].bundle) throw ContractViolation("pair: trajectory was recorded without bundles");
        idx.push_back(k);
    }
    if (idx.size() < 2) throw ContractViolation("pair: need at least two snapshots in [0, T]");
    return idx;
}

double l1_from(const Field& f, std::size_t i0, const Grid& g) {
    Field a(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) a[i] = std::abs(f[i]);
    return integrate_from(a, i0, g);
}

}  // namespace

PairingReport pair(const BalanceLaw& A, const BalanceLaw& B, const Trajectory& tr, double T, const Grid& g,
                   const PairOptions& opts) {
    const std::size_t i0 = snapped_inner(opts.inner_radius, g);
    const auto idx = snapshots_up_to(tr, T);

    const Parity p11 = A.D_parity, p12 = A.F_parity;
    const Parity p21 = B.D_parity, p22 = B.F_parity;
    const Parity pI = p11 == Parity::even ? Parity::odd : Parity::even;  // running integral of f11

    std::vector<double> t, lhs_t, a2_t, a3_t, a4_t, g1_t, g2_t, f11_l1, f21_l1;
    double edge_first = 0.0, edge_last = 0.0;
    for (std::size_t n = 0; n < idx.size(); ++n) {
        const Snapshot& s = tr.snapshots[idx[n]];
        const LawFields a = evaluate(A, *s.bundle, g);
        LawFields b = evaluate(B, *s.bundle, g);
        for (double& x : b.F) x = -x;

        if (i0 == 0) {
            double mx = 0.0;
            for (double x : a.F) mx = std::max(mx, std::abs(x));
            // Even fluxes: even fit (exact through r^4). Odd fluxes: cubic
            // extrapolation, which is 0 for c1 r + c3 r^3 and large for 1/r.
            const double ext = p12 == Parity::even ? axis_from_parity(a.F, Parity::even)
                                                   : 4.0 * a.F[1] - 6.0 * a.F[2] + 4.0 * a.F[3] - a.F[4];
            if (std::abs(ext) > opts.axis_tol * mx)
                throw InadmissiblePair(std::string(A.name) + " x " + std::string(B.name) +
                                       ": row-1 flux does not vanish on the axis (extrapolated " +
                                       std::to_string(ext) + " at t = " + std::to_string(s.state.t) + ")");
        }

        const Field I = cumulative(a.D, g, i0);
        const Field J = cumulative(a.Rm, g, i0);
        const Field integrand = [&] {
            const Field u = product(a.D, b.F, i0, times(p11, p22));
            const Field v = product(a.F, b.D, i0, times(p12, p21));
            Field w(u.size());
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = u[i] + v[i];
            return w;
        }();
        t.push_back(s.state.t);
        lhs_t.push_back(integrate_from(integrand, i0, g));
        a2_t.push_back(integrate_from(product(b.D, J, i0, times(p21, pI)), i0, g));
        a3_t.push_back(integrate_from(product(b.Rm, I, i0, times(p21, pI)), i0, g));
        const double f21_int = integrate_from(b.D, i0, g);
        a4_t.push_back(i0 == 0 ? 0.0 : a.F[i0] * f21_int);
        g1_t.push_back(l1_from(a.Rm, i0, g));
        g2_t.push_back(l1_from(b.Rm, i0, g));
        f11_l1.push_back(l1_from(a.D, i0, g));
        f21_l1.push_back(l1_from(b.D, i0, g));
        const double edge = integrate_from(product(b.D, I, i0, times(p21, pI)), i0, g);
        if (n == 0) edge_first = edge;
        edge_last = edge;
    }

    PairingReport rep;
    rep.name = std::string(A.name) + "x" + std::string(B.name);
    rep.inner_radius = g.r(i0);
    rep.lhs = trapezoid(t, lhs_t);
    rep.a1 = edge_first - edge_last;
    rep.a2 = trapezoid(t, a2_t);
    rep.a3 = trapezoid(t, a3_t);
    rep.a4 = trapezoid(t, a4_t);
    rep.gap = rep.lhs - rep.a1 - rep.a2 - rep.a3 - rep.a4;
    const double row1 = f11_l1.front() + *std::max_element(f11_l1.begin(), f11_l1.end()) + trapezoid(t, g1_t);
    const double row2 = f21_l1.front() + *std::max_element(f21_l1.begin(), f21_l1.end()) + trapezoid(t, g2_t);
    rep.bound_rhs = row1 * row2;
    return rep;
}

const std::vector<PairingSpec>& matrix_pairings() {
    static const std::vector<PairingSpec> kPairs = {
        {"A", LawId::PH1, LawId::PH5, true},
        {"B", LawId::PH3, LawId::PH5, false},
        {"C", LawId::PH2, LawId::PH7, true},
        {"D", LawId::PH7, LawId::PH5, false},
    };
    return kPairs;
}

PairingReport pair(const PairingSpec& p, const Trajectory& tr, double T, const Grid& g, double inner_radius) {
    PairOptions o;
    o.inner_radius = p.excised ? inner_radius : 0.0;
    PairingReport r = pair(law(p.row1), law(p.row2), tr, T, g, o);
    r.name = p.name;
    return r;
}

std::vector<CrosscheckRow> eta_xi_zeta_gamma_crosscheck(const Trajectory& tr, double T, const Grid& g,
                                                        double inner_radius) {
    const auto idx = snapshots_up_to(tr, T);
    static const char* kNames[] = {"eta2", "xi2", "zeta2", "gamma2"};
    std::vector<CrosscheckRow> rows;
    const auto& pairs = matrix_pairings();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const PairingReport rep = pair(pairs[k], tr, T, g, inner_radius);
        const std::size_t i0 = snapped_inner(pairs[k].excised ? inner_radius : 0.0, g);
        const BalanceLaw& L1 = law(pairs[k].row1);
        const Parity parity = times(L1.D_parity, law(pairs[k].row2).F_parity);
        std::vector<double> t, v;
        for (std::size_t n : idx) {
            const Snapshot& s = tr.snapshots[n];
            const DetRecord d = det_fields(*s.bundle, g);
            Field f = k == 0 ? d.detA : k == 1 ? d.detB : k == 2 ? d.detC : d.detD;
            // Same axis rule as the pairing products, so both paths share one integrand.
            if (i0 == 0) fill_axis(f, parity);
            t.push_back(s.state.t);
            v.push_back(integrate_from(f, i0, g));
        }
        CrosscheckRow row;
        row.name = kNames[k];
        row.via_det = trapezoid(t, v);
        row.via_pairing = rep.lhs;
        const double scale = std::max(std::abs(row.via_det), 1e-300);
        row.gap = std::abs(row.via_det - row.via_pairing) / scale;
        if (row.via_det == 0.0 && row.via_pairing == 0.0) row.gap = 0.0;
        row.inner_radius = g.r(i0);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mlab
