#include "mlab/initial_data.hpp"

#include <cmath>
#include <limits>

#include "mlab/errors.hpp"

namespace mlab {

Family parse_family(const std::string& name) {
    if (name == "gaussian") return Family::gaussian;
    if (name == "bump") return Family::bump;
    if (name == "bessel_oracle" || name == "bessel") return Family::bessel_oracle;
    if (name == "linear_time") return Family::linear_time;
    throw ConfigError("unknown data family '" + name + "'");
}

const char* to_string(Family f) {
    switch (f) {
        case Family::gaussian: return "gaussian";
        case Family::bump: return "bump";
        case Family::bessel_oracle: return "bessel_oracle";
        case Family::linear_time: return "linear_time";
    }
    return "?";
}

double support_radius(const DataSpec& s) {
    switch (s.family) {
        // exp(-36) is below double round-off relative to the peak.
        case Family::gaussian: return 6.0 * s.width;
        case Family::bump: return s.velocity_amplitude != 0.0 ? 6.0 * s.width : 2.0 * s.width;
        case Family::bessel_oracle:
        case Family::linear_time: return std::numeric_limits<double>::infinity();
    }
    return std::numeric_limits<double>::infinity();
}

InitialData realize(const DataSpec& s, const Grid& g) {
    const std::size_t n = g.size();
    InitialData d{Field(n, 0.0), Field(n, 0.0)};
    if (!(s.width > 0.0)) throw ConfigError("data.width must be positive");
    for (std::size_t i = 0; i < n; ++i) {
        const double r = g.r(i);
        const double x = r / s.width;
        switch (s.family) {
            case Family::gaussian: d.phi0[i] = s.amplitude * std::exp(-x * x); break;
            case Family::bump: {
                // (1 - y^2)^3 on y < 1: C^2 at the edge of its support.
                const double y = r / (2.0 * s.width);
                const double b = y < 1.0 ? 1.0 - y * y : 0.0;
                d.phi0[i] = s.amplitude * b * b * b;
                break;
            }
            case Family::bessel_oracle:
                d.phi0[i] = s.amplitude * std::cyl_bessel_j(0.0, s.wavenumber * r);
                break;
            case Family::linear_time:
                d.phi0[i] = s.amplitude;
                d.phi1[i] = s.drift;
                break;
        }
        if (s.family != Family::linear_time && s.velocity_amplitude != 0.0)
            d.phi1[i] = s.velocity_amplitude * x * x * std::exp(-x * x);
    }
    if (s.family == Family::linear_time && std::abs(s.drift) >= 1.0)
        throw TimelikeViolation(0, 1.0 - s.drift * s.drift);
    return d;
}

double hnorm(std::span<const double> phi0, std::span<const double> phi1, const Grid& g) {
    const Field p0r = deriv_r(phi0, 1, Parity::even, g);
    const Field p0rr = deriv_r(phi0, 2, Parity::even, g);
    const Field p1r = deriv_r(phi1, 1, Parity::even, g);
    Field a(g.size()), b(g.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = p0rr[i] * p0rr[i] + p1r[i] * p1r[i];
        b[i] = p0r[i] * p0r[i] + phi1[i] * phi1[i];
    }
    return std::sqrt(integrate(a, Weight::r, g) + integrate(b, Weight::inv_r, g));
}

}  // namespace mlab
