#pragma once

#include <functional>
#include <vector>

#include "mlab/balance_laws.hpp"

namespace mlab::oracle {

// Sum of terms  A p(r) exp(-beta r^2) cos(omega t + theta)  with p a polynomial
// (coefficients in increasing degree). Not a solution of the equation.
class ManufacturedField : public AnalyticField {
public:
    struct Term {
        double A;
        std::vector<double> poly;
        double beta, omega, theta;
    };
    explicit ManufacturedField(std::vector<Term> terms);

    // nt <= 6, nr <= 6.
    double d(int nt, int nr, double t, double r) const override;

private:
    static constexpr int kMaxOrder = 6;
    std::vector<Term> terms_;
    // dpoly_[k][j]: polynomial q_j with d_r^j (p e^{-beta r^2}) = q_j e^{-beta r^2}.
    std::vector<std::vector<std::vector<double>>> dpoly_;
};

ManufacturedField gaussian_cos();  // 0.1 e^{-r^2} cos t
ManufacturedField r2gauss_sin();   // 0.05 r^2 e^{-r^2} sin 2t

// J0 on [0, 200]: power series below 8, Miller backward recurrence above.
double bessel_j0(double x);
double bessel_j1(double x);

// Composite 4-point Gauss-Legendre on a mesh 8x finer than N cells of [0, R],
// with the weight multiplied in pointwise.
double dense_quadrature(const std::function<double(double)>& f, Weight w, double R, int N);

struct OrderEstimate {
    double order = 0.0;           // mean of the pairwise orders
    bool defined = false;         // false if errors are not strictly decreasing
    bool exact = false;           // every error is zero
    std::vector<double> pairwise;
};
OrderEstimate richardson_order(const std::vector<double>& errors, double ratio = 2.0);

}  // namespace mlab::oracle
