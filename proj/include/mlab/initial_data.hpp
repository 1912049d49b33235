#pragma once

#include <string>

#include "mlab/grid.hpp"

namespace mlab {

enum class Family { gaussian, bump, bessel_oracle, linear_time };

Family parse_family(const std::string& name);
const char* to_string(Family f);

struct DataSpec {
    Family family = Family::gaussian;
    double amplitude = 0.0;
    double width = 1.0;       // sigma; the bump is supported on r < 2 sigma
    double wavenumber = 1.0;  // bessel_oracle
    double drift = 0.0;       // linear_time: phi = a + b t
    // Optional phi_1 = c (r/sigma)^2 exp(-(r/sigma)^2), zero on the axis.
    double velocity_amplitude = 0.0;
};

struct InitialData {
    Field phi0, phi1;
};

InitialData realize(const DataSpec& spec, const Grid& g);

// Radius beyond which the data are zero to round-off; infinite for the
// exact-solution families.
double support_radius(const DataSpec& spec);

// sqrt of int r phi0_rr^2 + phi0_r^2/r + r phi1_r^2 + phi1^2/r dr.
double hnorm(std::span<const double> phi0, std::span<const double> phi1, const Grid& g);

}  // namespace mlab
