#include "mlab/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "mlab/errors.hpp"

namespace mlab::oracle {

ManufacturedField::ManufacturedField(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (const Term& t : terms_) {
        std::vector<std::vector<double>> q{t.poly};
        for (int j = 1; j <= kMaxOrder; ++j) {
            const auto& p = q.back();
            std::vector<double> nx(p.size() + 1, 0.0);
            for (std::size_t k = 1; k < p.size(); ++k) nx[k - 1] += static_cast<double>(k) * p[k];
            for (std::size_t k = 0; k < p.size(); ++k) nx[k + 1] -= 2.0 * t.beta * p[k];
            q.push_back(std::move(nx));
        }
        dpoly_.push_back(std::move(q));
    }
}

double ManufacturedField::d(int nt, int nr, double t, double r) const {
    if (nt < 0 || nr < 0 || nt > kMaxOrder || nr > kMaxOrder)
        throw ContractViolation("ManufacturedField: derivative order out of range");
    double s = 0.0;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Term& T = terms_[k];
        const auto& q = dpoly_[k][static_cast<std::size_t>(nr)];
        double pv = 0.0;
        for (std::size_t j = q.size(); j-- > 0;) pv = pv * r + q[j];
        const double tt = std::pow(T.omega, nt) * std::cos(T.omega * t + T.theta + nt * std::numbers::pi / 2.0);
        s += T.A * pv * std::exp(-T.beta * r * r) * tt;
    }
    return s;
}

ManufacturedField gaussian_cos() { return ManufacturedField({{0.1, {1.0}, 1.0, 1.0, 0.0}}); }

ManufacturedField r2gauss_sin() {
    return ManufacturedField({{0.05, {0.0, 0.0, 1.0}, 1.0, 2.0, -std::numbers::pi / 2.0}});
}

namespace {

double series(double x, int order) {
    // J_n(x) = sum_k (-1)^k (x/2)^{2k+n} / (k! (k+n)!)
    const double y = 0.25 * x * x;
    double term = order == 0 ? 1.0 : 0.5 * x;
    double s = term;
    for (int k = 1; k < 60; ++k) {
        term *= -y / (static_cast<double>(k) * static_cast<double>(k + order));
        s += term;
        if (std::abs(term) < 1e-18 * std::abs(s)) break;
    }
    return s;
}

std::array<double, 2> miller(double x) {
    int m = static_cast<int>(x + 30.0 + 4.0 * std::sqrt(x));
    m += m % 2;
    // Unnormalised J_{k-1} from J_k, J_{k+1}; normalised by J0 + 2 sum J_{2k} = 1.
    double jp1 = 0.0, j = 1e-300, norm = 0.0;
    for (int k = m; k >= 1; --k) {
        const double jm1 = 2.0 * k / x * j - jp1;
        jp1 = j;
        j = jm1;
        if (k > 1 && (k - 1) % 2 == 0) norm += 2.0 * j;
        if (std::abs(j) > 1e250) {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
        }
    }
    norm += j;
    return {j / norm, jp1 / norm};
}

void check_domain(double x) {
    if (!(x >= 0.0 && x <= 200.0)) throw ContractViolation("bessel: argument outside [0, 200]");
}

}  // namespace

double bessel_j0(double x) {
    check_domain(x);
    return x < 8.0 ? series(x, 0) : miller(x)[0];
}

double bessel_j1(double x) {
    check_domain(x);
    return x < 8.0 ? series(x, 1) : miller(x)[1];
}

double dense_quadrature(const std::function<double(double)>& f, Weight w, double R, int N) {
    if (N < 1 || !(R > 0.0)) throw ContractViolation("dense_quadrature: bad mesh");
    static constexpr double kx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                     0.8611363115940526};
    static constexpr double kw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                     0.3478548451374538};
    const long cells = 8L * N;
    const double h = R / static_cast<double>(cells);
    double s = 0.0;
    for (long c = 0; c < cells; ++c) {
        const double mid = (static_cast<double>(c) + 0.5) * h;
        double cs = 0.0;
        for (int q = 0; q < 4; ++q) {
            const double r = mid + 0.5 * h * kx[q];
            double v = f(r);
            switch (w) {
                case Weight::one: break;
                case Weight::r: v *= r; break;
                case Weight::inv_r: v /= r; break;
                case Weight::inv_r2: v /= r * r; break;
            }
            cs += kw[q] * v;
        }
        s += 0.5 * h * cs;
    }
    return s;
}

OrderEstimate richardson_order(const std::vector<double>& e, double ratio) {
    if (e.size() < 2) throw ContractViolation("richardson_order: need at least two errors");
    OrderEstimate o;
    o.exact = std::all_of(e.begin(), e.end(), [](double x) { return x == 0.0; });
    if (o.exact) return o;
    o.defined = true;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        if (!(e[i + 1] > 0.0 && e[i + 1] < e[i])) o.defined = false;
        const double p = std::log(e[i] / e[i + 1]) / std::log(ratio);
        o.pairwise.push_back(p);
        sum += p;
    }
    o.order = sum / static_cast<double>(o.pairwise.size());
    return o;
}

}  // namespace mlab::oracle
