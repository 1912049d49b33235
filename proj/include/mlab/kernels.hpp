#pragma once

// Elementwise hot loops. Each kernel has a serial path and an OpenMP path
// that perform the same arithmetic per node, so results are bit-identical.

#include <cstddef>

namespace mlab {

enum class Parity { even, odd };
enum class Exec { serial, parallel };

namespace kernels {

// n = N + 1 samples on a uniform mesh with spacing h, r[0] = 0.
void d1(const double* f, std::size_t n, double h, Parity p, double* out, Exec ex);
void d2(const double* f, std::size_t n, double h, Parity p, double* out, Exec ex);

// Quasilinear right-hand side phi_tt = F(phi, psi). Writes F and, if
// non-null, Delta. Returns the first node where
// Delta < delta_min or a value is non-finite, or -1.
long quasilinear(const double* phi, const double* psi, std::size_t n, double h,
                 double delta_min, double* F, double* delta, Exec ex);

// y = x + a * k, elementwise.
void axpy(const double* x, double a, const double* k, std::size_t n, double* y, Exec ex);

}  // namespace kernels
}  // namespace mlab
