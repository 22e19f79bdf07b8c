#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "spikelss/error.hpp"
#include "spikelss/test_function.hpp"

namespace spikelss {

// Bulk mean and covariance for a unit population via the unit-circle
// parametrisation x = |1 + sqrt(c) z|^2. With F(z) = f(1 + c + sqrt(c)(z + 1/z))
// and Laurent coefficients a_j of F on |z| = 1:
//   I1(r) = (1/2) [ (F(1/r) + F(-1/r))/2 - a_0 ]      (r -> 1)
//   I2    = a_2
//   J1(r) = sum_{j>=1} j a_j(f) a_j(g) r^{-j-1}      (r -> 1)
//   J2    = a_1(f) a_1(g)
// Mean = alpha_x I1 + beta_x I2, covariance = (alpha_x + 1) J1 + beta_x J2.
class UnitCircleForms {
public:
    static constexpr std::array<double, 3> kRadiusOffsets{1e-2, 1e-3, 1e-4};

    UnitCircleForms(double c, int nodes = 512) : c_(c), nodes_(nodes) {
        require(c > 0.0 && c < 1.0, ErrorCode::UnsupportedRatio,
                "unit-circle forms need a ratio in (0, 1)");
        require(nodes >= 64, ErrorCode::InvalidArgument, "too few nodes");
    }

    cplx lifted(const TestFunction& f, cplx z) const {
        return f(1.0 + c_ + std::sqrt(c_) * (z + 1.0 / z));
    }

    // a_0 .. a_{nodes/2 - 1}; the lift is symmetric under z -> 1/z.
    std::vector<double> coefficients(const TestFunction& f) const {
        std::vector<cplx> vals(nodes_);
        for (int k = 0; k < nodes_; ++k)
            vals[k] = lifted(f, std::polar(1.0, 2.0 * std::numbers::pi * k / nodes_));
        std::vector<double> a(nodes_ / 2);
        for (int j = 0; j < nodes_ / 2; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < nodes_; ++k)
                s += vals[k] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / nodes_);
            a[j] = (s / static_cast<double>(nodes_)).real();
        }
        return a;
    }

    double i1_at(const TestFunction& f, double r) const {
        const double a0 = coefficients(f)[0];
        const cplx ends = lifted(f, cplx(1.0 / r)) + lifted(f, cplx(-1.0 / r));
        return 0.5 * (0.5 * ends.real() - a0);
    }

    double i2(const TestFunction& f) const { return coefficients(f)[2]; }

    double j1_at(const TestFunction& f, const TestFunction& g, double r) const {
        const auto a = coefficients(f);
        const auto b = coefficients(g);
        double s = 0.0;
        for (std::size_t j = 1; j < a.size(); ++j)
            s += static_cast<double>(j) * a[j] * b[j] * std::pow(r, -static_cast<double>(j) - 1.0);
        return s;
    }

    double j2(const TestFunction& f, const TestFunction& g) const {
        return coefficients(f)[1] * coefficients(g)[1];
    }

    // Richardson table in h = r - 1 (error expansion in powers of h).
    struct Extrapolation {
        double value;
        double previous;  // best estimate one level lower
    };

    template <class Eval>
    static Extrapolation richardson(Eval&& at) {
        constexpr std::size_t n = kRadiusOffsets.size();
        std::array<std::array<double, n>, n> t{};
        for (std::size_t i = 0; i < n; ++i) {
            t[i][0] = at(1.0 + kRadiusOffsets[i]);
            for (std::size_t k = 1; k <= i; ++k) {
                const double hi = kRadiusOffsets[i - k];
                const double lo = kRadiusOffsets[i];
                t[i][k] = (hi * t[i][k - 1] - lo * t[i - 1][k - 1]) / (hi - lo);
            }
        }
        return {t[n - 1][n - 1], t[n - 1][n - 2]};
    }

    Extrapolation i1(const TestFunction& f) const {
        return richardson([&](double r) { return i1_at(f, r); });
    }
    Extrapolation j1(const TestFunction& f, const TestFunction& g) const {
        return richardson([&](double r) { return j1_at(f, g, r); });
    }

    double mean(const TestFunction& f, double alpha, double beta) const {
        return alpha * i1(f).value + beta * i2(f);
    }
    double covariance(const TestFunction& f, const TestFunction& g, double alpha, double beta) const {
        return (alpha + 1.0) * j1(f, g).value + beta * j2(f, g);
    }

private:
    double c_;
    int nodes_;
};

}  // namespace spikelss
