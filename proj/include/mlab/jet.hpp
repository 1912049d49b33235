#pragma once

#include <cmath>

namespace mlab {

// Pointwise derivatives of phi up to third order.
template <class S>
struct JetT {
    S t{}, r{}, tt{}, tr{}, rr{}, ttt{}, ttr{}, trr{}, rrr{};
};
using Jet = JetT<double>;

inline double power(double x, double a) { return std::pow(x, a); }

// E(phi) = (r phi_t / sqrt(Delta))_t - (r phi_r / sqrt(Delta))_r, expanded.
// Templated so truncated Taylor numbers can carry time or space derivatives.
template <class S, class R>
S eq_residual(const S& pt, const S& pr, const S& ptt, const S& ptr, const S& prr, const R& r) {
    const S delta = 1.0 + pr * pr - pt * pt;
    const S is = power(delta, -0.5);
    const S i32 = power(delta, -1.5);
    return r * i32 * (ptt * (1.0 + pr * pr) - 2.0 * pt * pr * ptr - (1.0 - pt * pt) * prr) - pr * is;
}

inline double eq_residual(const Jet& j, double r) {
    return eq_residual(j.t, j.r, j.tt, j.tr, j.rr, r);
}

// Derivative identities of Delta evaluable from a jet.
inline double delta_of(const Jet& j) { return 1.0 + j.r * j.r - j.t * j.t; }
inline double delta_t(const Jet& j) { return 2.0 * (j.r * j.tr - j.t * j.tt); }
inline double delta_r(const Jet& j) { return 2.0 * (j.r * j.rr - j.t * j.tr); }
inline double delta_tt(const Jet& j) {
    return 2.0 * (j.tr * j.tr + j.r * j.ttr - j.tt * j.tt - j.t * j.ttt);
}

}  // namespace mlab
