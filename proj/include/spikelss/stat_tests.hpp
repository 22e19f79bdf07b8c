#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/normal.hpp>

#include "spikelss/core_types.hpp"
#include "spikelss/error.hpp"
#include "spikelss/spike_asymptotics.hpp"
#include "spikelss/tracy_widom.hpp"

namespace spikelss {

enum class TestKind { CLRT, CNTT, RLRT };

inline std::string to_string(TestKind k) {
    switch (k) {
        case TestKind::CLRT: return "CLRT";
        case TestKind::CNTT: return "CNTT";
        case TestKind::RLRT: return "RLRT";
    }
    return "?";
}

inline TestKind parse_test(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (s == "CLRT") return TestKind::CLRT;
    if (s == "CNTT") return TestKind::CNTT;
    if (s == "RLRT") return TestKind::RLRT;
    fail(ErrorCode::InvalidArgument, "unknown test '" + s + "'");
}

inline constexpr TestKind kAllTests[] = {TestKind::CLRT, TestKind::CNTT, TestKind::RLRT};

enum class LawFamily { Gaussian, TracyWidom1 };

struct AsymptoticLaw {
    LawFamily family = LawFamily::Gaussian;
    double center = 0.0;
    double mean_shift = 0.0;
    double scale = 1.0;

    double location() const { return center + mean_shift; }
};

struct Decision {
    double statistic;
    double threshold;
    bool reject;
    double score;  // z-score for Gaussian laws, upper-tail p-value for TW1
};

inline double normal_quantile(double prob) {
    return boost::math::quantile(boost::math::normal_distribution<double>(), prob);
}
inline double normal_cdf(double x) {
    return boost::math::cdf(boost::math::normal_distribution<double>(), x);
}

// Eigenvalues in descending order.
inline Eigen::VectorXd spectrum(const Eigen::MatrixXd& B) {
    require(B.rows() == B.cols(), ErrorCode::ShapeMismatch, "matrix must be square");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B, Eigen::EigenvaluesOnly);
    require(es.info() == Eigen::Success, ErrorCode::NoConvergence, "eigendecomposition failed");
    return es.eigenvalues().reverse();
}

inline double statistic_from_spectrum(TestKind kind, const Eigen::VectorXd& eig) {
    require(eig.size() > 0, ErrorCode::ShapeMismatch, "empty spectrum");
    switch (kind) {
        case TestKind::CLRT: {
            double s = 0.0;
            for (double l : eig) {
                require(l > 1e-300, ErrorCode::SingularMatrix, "CLRT needs a nonsingular matrix");
                s += l - std::log(l) - 1.0;
            }
            return s;
        }
        case TestKind::CNTT: {
            double s = 0.0;
            for (double l : eig) s += (l - 1.0) * (l - 1.0);
            return s;
        }
        case TestKind::RLRT: return eig.maxCoeff();
    }
    return 0.0;
}

inline double statistic(TestKind kind, const Eigen::MatrixXd& B) {
    return statistic_from_spectrum(kind, spectrum(B));
}

namespace detail {
inline double log_ratio_center(double c) { return 1.0 - (c - 1.0) / c * std::log1p(-c); }
inline double log_ratio_var(double c, const MomentProfile& m) {
    return (m.alpha + 1.0) * (-std::log1p(-c) - c);
}
inline double quadratic_var(double c, const MomentProfile& m) {
    return (m.alpha + 1.0) * (4.0 * c * c * c + 2.0 * c * c) + 4.0 * m.beta * c * c * c;
}
inline void require_clrt_ratio(double c) {
    require(c < 1.0, ErrorCode::UnsupportedRatio, "CLRT needs p < n");
}
}  // namespace detail

inline AsymptoticLaw null_params(TestKind kind, const Dims& dims, const MomentProfile& moments) {
    const double c = dims.ratio();
    const double p = static_cast<double>(dims.p());
    switch (kind) {
        case TestKind::CLRT:
            detail::require_clrt_ratio(c);
            return {LawFamily::Gaussian, p * detail::log_ratio_center(c),
                    -0.5 * std::log1p(-c) * moments.alpha + 0.5 * c * moments.beta,
                    std::sqrt(detail::log_ratio_var(c, moments))};
        case TestKind::CNTT:
            return {LawFamily::Gaussian, p * c, c * (moments.alpha + moments.beta),
                    std::sqrt(detail::quadratic_var(c, moments))};
        case TestKind::RLRT: {
            const double rc = std::sqrt(c);
            const double n = static_cast<double>(dims.n());
            return {LawFamily::TracyWidom1, (1.0 + rc) * (1.0 + rc), 0.0,
                    std::pow(n, -2.0 / 3.0) * (1.0 + rc) * std::cbrt(1.0 + 1.0 / rc)};
        }
    }
    return {};
}

// Law of the statistic under a spiked alternative with an identity bulk.
// RLRT: Gaussian law of the top eigenvalue around phi(alpha_1).
inline AsymptoticLaw alt_params(TestKind kind, const Dims& dims, const BulkSpec& bulk,
                                const SpikeSpec& spikes, const MomentProfile& moments,
                                S2Mode mode = S2Mode::Exact) {
    require(bulk.is_identity(), ErrorCode::NonIdentityBulk, "alternative laws need an identity bulk");
    if (spikes.empty()) return null_params(kind, dims.with_spikes(0), moments);
    require(spikes.total_multiplicity() == dims.spikes(), ErrorCode::InvalidArgument,
            "spike multiplicities must sum to dims.M");
    spikes.check_separation(dims, bulk);
    const double c = dims.bulk_ratio();
    const double bulk_p = static_cast<double>(dims.p() - dims.spikes());
    const double M = static_cast<double>(dims.spikes());
    const double n = static_cast<double>(dims.n());
    const auto groups = summarize_spikes(dims, bulk, spikes, moments, mode);
    switch (kind) {
        case TestKind::CLRT: {
            detail::require_clrt_ratio(c);
            double shift = -0.5 * std::log1p(-c) * moments.alpha + 0.5 * c * moments.beta -
                           M * (c + std::log1p(-c));
            double var = detail::log_ratio_var(c, moments);
            for (const auto& g : groups) {
                const double f = g.scale.phi;
                shift += static_cast<double>(g.multiplicity) * (f - std::log(f) - 1.0);
                var += (f - 1.0) * (f - 1.0) / n * g.s2;
            }
            return {LawFamily::Gaussian, bulk_p * detail::log_ratio_center(c), shift, std::sqrt(var)};
        }
        case TestKind::CNTT: {
            double shift = c * (moments.alpha + moments.beta) - M * c * c;
            double var = detail::quadratic_var(c, moments);
            for (const auto& g : groups) {
                const double f = g.scale.phi;
                shift += static_cast<double>(g.multiplicity) * (f - 1.0) * (f - 1.0);
                var += 4.0 * f * f * (f - 1.0) * (f - 1.0) / n * g.s2;
            }
            return {LawFamily::Gaussian, bulk_p * c, shift, std::sqrt(var)};
        }
        case TestKind::RLRT: {
            require(groups.front().multiplicity == 1, ErrorCode::MultiplicityViolation,
                    "RLRT alternative needs a simple top spike");
            const auto& g = groups.front();
            return {LawFamily::Gaussian, g.scale.phi, 0.0, std::sqrt(g.s2) * g.scale.phi / std::sqrt(n)};
        }
    }
    return {};
}

inline double critical_value(LawFamily family, double xi) {
    require(xi > 0.0 && xi <= 0.5, ErrorCode::InvalidArgument, "xi must lie in (0, 0.5]");
    return family == LawFamily::Gaussian ? normal_quantile(1.0 - xi) : tw1_quantile(1.0 - xi);
}

inline Decision decide(double value, const AsymptoticLaw& law, double xi) {
    const double q = critical_value(law.family, xi);
    const double threshold = law.location() + q * law.scale;
    const double z = (value - law.location()) / law.scale;
    double score = z;
    if (law.family == LawFamily::TracyWidom1) {
        const double lo = detail::kTw1GridMin;
        const double hi = detail::kTw1GridMin + detail::kTw1GridStep * (detail::kTw1GridSize - 1);
        score = z <= lo ? 1.0 : z >= hi ? 0.0 : 1.0 - tw1_cdf(z);
    }
    return {value, threshold, value > threshold, score};
}

inline Decision decide(TestKind, double value, const AsymptoticLaw& law, double xi) {
    return decide(value, law, xi);
}

// Standardized detection margin: the argument of Phi in the asymptotic power.
// Uses c = p/n and the null scale; spike factors come from the bulk ratio (p - M)/n.
inline double power_argument(TestKind kind, const Dims& dims, const SpikeSpec& spikes,
                             const MomentProfile& moments, double xi, S2Mode mode = S2Mode::Exact) {
    require(!spikes.empty(), ErrorCode::InvalidArgument, "power needs at least one spike");
    require(spikes.total_multiplicity() == dims.spikes(), ErrorCode::InvalidArgument,
            "spike multiplicities must sum to dims.M");
    const auto bulk = BulkSpec::identity();
    spikes.check_separation(dims, bulk);
    const double c = dims.ratio();
    const double n = static_cast<double>(dims.n());
    const double M = static_cast<double>(dims.spikes());
    const auto groups = summarize_spikes(dims, bulk, spikes, moments, mode);
    const auto null = null_params(kind, dims, moments);
    switch (kind) {
        case TestKind::CLRT: {
            double num = -M * (1.0 + c) - normal_quantile(1.0 - xi) * null.scale;
            double var = detail::log_ratio_var(c, moments);
            for (const auto& g : groups) {
                const double f = g.scale.phi;
                num += static_cast<double>(g.multiplicity) * (f - std::log(f));
                var += (f - 1.0) * (f - 1.0) / n * g.s2;
            }
            return num / std::sqrt(var);
        }
        case TestKind::CNTT: {
            double num = -M * c * c - 2.0 * M * c - normal_quantile(1.0 - xi) * null.scale;
            double var = detail::quadratic_var(c, moments);
            for (const auto& g : groups) {
                const double f = g.scale.phi;
                num += static_cast<double>(g.multiplicity) * (f - 1.0) * (f - 1.0);
                var += 4.0 * f * f * (f - 1.0) * (f - 1.0) / n * g.s2;
            }
            return num / std::sqrt(var);
        }
        case TestKind::RLRT: {
            require(groups.front().multiplicity == 1, ErrorCode::MultiplicityViolation,
                    "RLRT power needs a simple top spike");
            const auto& g = groups.front();
            const double t = tw1_quantile(1.0 - xi);
            return (g.scale.phi - null.center - t * null.scale) /
                   (std::sqrt(g.s2) * g.scale.phi / std::sqrt(n));
        }
    }
    return 0.0;
}

inline double asymptotic_power(TestKind kind, const Dims& dims, const SpikeSpec& spikes,
                               const MomentProfile& moments, double xi, S2Mode mode = S2Mode::Exact) {
    return normal_cdf(power_argument(kind, dims, spikes, moments, xi, mode));
}

// The divergence-rate curves assume real data.
inline double varkappa(TestKind kind, const Dims& dims, const SpikeSpec& spikes,
                       const MomentProfile& moments, double xi, S2Mode mode = S2Mode::Exact) {
    require(moments.alpha == 1.0, ErrorCode::AssumptionViolation, "varkappa assumes real data");
    return power_argument(kind, dims, spikes, moments, xi, mode);
}

// Divergence-rate curves over an alpha1 grid; spikes at alpha1 * multipliers.
struct CurveData {
    std::vector<double> alpha1, clrt, cntt, rlrt;
};

inline CurveData varkappa_curves(long p, long n, const std::vector<double>& multipliers,
                                 const MomentProfile& moments, double xi, double from, double to,
                                 long points, S2Mode mode = S2Mode::Exact) {
    require(points >= 2 && to > from, ErrorCode::InvalidArgument, "bad alpha1 grid");
    const Dims dims(p, n, static_cast<long>(multipliers.size()));
    CurveData out;
    for (long i = 0; i < points; ++i) {
        const double a = from + (to - from) * static_cast<double>(i) / static_cast<double>(points - 1);
        const auto spikes = SpikeSpec::from_multipliers(a, multipliers);
        out.alpha1.push_back(a);
        out.clrt.push_back(varkappa(TestKind::CLRT, dims, spikes, moments, xi, mode));
        out.cntt.push_back(varkappa(TestKind::CNTT, dims, spikes, moments, xi, mode));
        out.rlrt.push_back(varkappa(TestKind::RLRT, dims, spikes, moments, xi, mode));
    }
    return out;
}

}  // namespace spikelss
