#pragma once

#include <cmath>
#include <vector>

#include "spikelss/core_types.hpp"
#include "spikelss/error.hpp"
#include "spikelss/mp_solver.hpp"
#include "spikelss/test_function.hpp"

namespace spikelss {

// Location of a sample spike: alpha (1 + c sum_i w_i t_i / (alpha - t_i)).
inline double phi(double alpha, double c, const BulkSpec& bulk) {
    double s = 0.0;
    for (const auto& a : bulk.atoms()) {
        require(std::abs(alpha - a.value) > 1e-12 * (1.0 + a.value), ErrorCode::AtomCollision,
                "spike coincides with a bulk atom");
        s += a.weight * a.value / (alpha - a.value);
    }
    return alpha * (1.0 + c * s);
}

// d phi / d alpha
inline double phi_derivative(double alpha, double c, const BulkSpec& bulk) {
    double s = 0.0;
    for (const auto& a : bulk.atoms()) s += a.weight * a.value * a.value / ((alpha - a.value) * (alpha - a.value));
    return 1.0 - c * s;
}

struct SpikeScale {
    double phi;
    double theta;  // phi^2 m'(phi)
    double nu;     // phi^2 m(phi)^2
    double m;      // companion transform at phi
    double dm;     // its derivative
};

// The companion transform is solved at phi on the real branch; its
// derivative comes from the inverse map, m' = 1/psi'(m).
inline SpikeScale spike_scale(double alpha, double c, const BulkSpec& bulk) {
    const double loc = phi(alpha, c, bulk);
    const InverseMap psi(c, bulk);
    const auto sv = stieltjes(cplx(loc, 0.0), psi, cplx(-1.0 / alpha, 0.0));
    const double m = sv.m_underline.real();
    require(std::abs(m + 1.0 / alpha) < 1e-9 * (1.0 + 1.0 / alpha), ErrorCode::NoConvergence,
            "companion transform at the spike location disagrees with -1/alpha");
    const double dm = 1.0 / psi.derivative(m);
    return {loc, loc * loc * dm, loc * loc * m * m, m, dm};
}

enum class S2Mode { Exact, Simplified };

// Variance of the normalized group sum for spike group k:
// (alpha_x + 1) d_k / theta_k + beta_x nu_k U_k / theta_k^2.
inline double s_squared(const SpikeSpec& spikes, std::size_t k, const SpikeScale& scale,
                        const MomentProfile& moments, S2Mode mode = S2Mode::Exact) {
    require(k < spikes.groups().size(), ErrorCode::IndexOutOfRange, "spike group index out of range");
    const double d = static_cast<double>(spikes.groups()[k].multiplicity);
    const double u = spikes.u_sum(k);
    if (mode == S2Mode::Simplified) return (moments.alpha + 1.0) * d + moments.beta * u;
    return (moments.alpha + 1.0) * d / scale.theta +
           moments.beta * scale.nu * u / (scale.theta * scale.theta);
}

// (phi / sqrt n) f'(phi)
inline double varpi(double location, const TestFunction& f, long n) {
    require(n > 0, ErrorCode::InvalidArgument, "sample size must be positive");
    return location / std::sqrt(static_cast<double>(n)) * f.derivative(location);
}

struct SpikeGroupSummary {
    double alpha;
    long multiplicity;
    SpikeScale scale;
    double s2;
};

// Per-group spike quantities under the bulk ratio (p - M)/n.
inline std::vector<SpikeGroupSummary> summarize_spikes(const Dims& dims, const BulkSpec& bulk,
                                                       const SpikeSpec& spikes,
                                                       const MomentProfile& moments,
                                                       S2Mode mode = S2Mode::Exact) {
    std::vector<SpikeGroupSummary> out;
    const double c = dims.bulk_ratio();
    for (std::size_t k = 0; k < spikes.groups().size(); ++k) {
        const auto& g = spikes.groups()[k];
        const auto sc = spike_scale(g.alpha, c, bulk);
        out.push_back({g.alpha, g.multiplicity, sc, s_squared(spikes, k, sc, moments, mode)});
    }
    return out;
}

}  // namespace spikelss
