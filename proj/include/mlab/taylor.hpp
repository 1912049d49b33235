#pragma once

#include <cmath>

namespace mlab {

// Second-order forward-mode number: value and first two derivatives along
// one direction. Enough to differentiate the equation residual twice.
struct Taylor2 {
    double v = 0.0, d = 0.0, dd = 0.0;

    Taylor2() = default;
    Taylor2(double value) : v(value) {}
    Taylor2(double value, double d1, double d2) : v(value), d(d1), dd(d2) {}
};

inline Taylor2 operator+(const Taylor2& a, const Taylor2& b) { return {a.v + b.v, a.d + b.d, a.dd + b.dd}; }
inline Taylor2 operator-(const Taylor2& a, const Taylor2& b) { return {a.v - b.v, a.d - b.d, a.dd - b.dd}; }
inline Taylor2 operator-(const Taylor2& a) { return {-a.v, -a.d, -a.dd}; }
inline Taylor2 operator*(const Taylor2& a, const Taylor2& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd};
}
inline Taylor2 operator+(double a, const Taylor2& b) { return Taylor2(a) + b; }
inline Taylor2 operator-(double a, const Taylor2& b) { return Taylor2(a) - b; }
inline Taylor2 operator*(double a, const Taylor2& b) { return {a * b.v, a * b.d, a * b.dd}; }
inline Taylor2 operator*(const Taylor2& a, double b) { return b * a; }

inline Taylor2 power(const Taylor2& x, double a) {
    const double p = std::pow(x.v, a);
    const double p1 = a * std::pow(x.v, a - 1.0);
    const double p2 = a * (a - 1.0) * std::pow(x.v, a - 2.0);
    return {p, p1 * x.d, p2 * x.d * x.d + p1 * x.dd};
}

}  // namespace mlab
