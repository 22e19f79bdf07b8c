#pragma once

// Reference values computed without the library's solver or contour code.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/airy.hpp>

namespace oracle {

using cplx = std::complex<double>;

// Identity-population companion transform from the quadratic
// c z m^2 + (z + c - 1) m + 1 = 0 for m of the spectral law, then
// m_companion = -(1 - c)/z + c m. Branch: Im m > 0 for Im z > 0.
inline cplx companion_identity(cplx z, double c) {
    const cplx disc = std::sqrt((z - 1.0 - c) * (z - 1.0 - c) - 4.0 * c);
    cplx m = (1.0 - c - z + disc) / (2.0 * c * z);
    const cplx alt = (1.0 - c - z - disc) / (2.0 * c * z);
    if (z.imag() > 0 ? alt.imag() > m.imag() : alt.imag() < m.imag()) m = alt;
    return -(1.0 - c) / z + c * m;
}

// Damped fixed-point iteration for a discrete population, Im z > 0.
inline cplx companion_fixed_point(cplx z, double c, const std::vector<std::pair<double, double>>& atoms) {
    cplx m(0.0, 1.0);
    for (int it = 0; it < 200000; ++it) {
        cplx s = 0.0;
        for (const auto& [t, w] : atoms) s += w * t / (1.0 + t * m);
        const cplx next = -1.0 / (z - c * s);
        if (std::abs(next - m) < 1e-15 * (1.0 + std::abs(m))) return next;
        m = 0.5 * m + 0.5 * next;
    }
    return m;
}

// int g dF for the identity-population law, from its density (plus the
// atom at zero when c > 1).
inline double mp_integral(const std::function<double(double)>& g, double c) {
    const double a = (1.0 - std::sqrt(c)) * (1.0 - std::sqrt(c));
    const double b = (1.0 + std::sqrt(c)) * (1.0 + std::sqrt(c));
    boost::math::quadrature::tanh_sinh<double> q;
    const double bulk = q.integrate(
        [&](double x) {
            const double d = (b - x) * (x - a);
            return d > 0 ? g(x) * std::sqrt(d) / (2.0 * std::numbers::pi * c * x) : 0.0;
        },
        a, b);
    return c > 1.0 ? bulk + (1.0 - 1.0 / c) * g(0.0) : bulk;
}

// Type-1 Tracy-Widom CDF as det(I - K) with K(x, y) = Ai(x + y + s) on
// (0, inf), truncated to (0, 16) and discretized by Gauss-Legendre.
inline double tw1_cdf(double s) {
    constexpr int N = 60;
    using rule = boost::math::quadrature::gauss<double, N>;
    const auto& absc = rule::abscissa();
    const auto& wts = rule::weights();
    std::vector<double> x, w;
    constexpr double L = 16.0;
    for (std::size_t i = 0; i < absc.size(); ++i) {
        for (int sign : {-1, 1}) {
            if (absc[i] == 0.0 && sign < 0) continue;
            x.push_back(L / 2 * (1.0 + sign * absc[i]));
            w.push_back(L / 2 * wts[i]);
        }
    }
    const Eigen::Index n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd A(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            A(i, j) = (i == j ? 1.0 : 0.0) -
                      std::sqrt(w[i] * w[j]) * boost::math::airy_ai(x[i] + x[j] + s);
    return A.determinant();
}

inline double tw1_quantile(double prob) {
    double lo = -8.0, hi = 8.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (tw1_cdf(mid) < prob ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Hand-evaluated identity-population quantities.
inline double log_ratio_center(double c) { return 1.0 - (c - 1.0) / c * std::log(1.0 - c); }
inline double log_ratio_mean(double c, double a, double b) { return -std::log(1.0 - c) / 2 * a + c / 2 * b; }
inline double log_ratio_var(double c, double a) { return (a + 1.0) * (-std::log(1.0 - c) - c); }
inline double quadratic_mean(double c, double a, double b) { return c * (a + b); }
inline double quadratic_var(double c, double a, double b) {
    return (a + 1.0) * (4 * c * c * c + 2 * c * c) + 4 * b * c * c * c;
}
inline double spike_location(double alpha, double c) { return alpha + c * alpha / (alpha - 1.0); }

// Trace moments of the sample covariance: exact finite-n expectations give
// the limits mean(x) = 0, mean(x^2) = c (alpha + beta) int t^2 dH,
// var(x) = (alpha + 1 + beta) c int t^2 dH for a diagonal population.
inline double second_moment(const std::vector<std::pair<double, double>>& atoms) {
    double s = 0.0;
    for (const auto& [t, w] : atoms) s += w * t * t;
    return s;
}

}  // namespace oracle
