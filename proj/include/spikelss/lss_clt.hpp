#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "spikelss/core_types.hpp"
#include "spikelss/error.hpp"
#include "spikelss/mp_solver.hpp"
#include "spikelss/spike_asymptotics.hpp"
#include "spikelss/test_function.hpp"
#include "spikelss/unit_circle.hpp"

namespace spikelss {

namespace detail {
inline const cplx kTwoPiI{0.0, 2.0 * std::numbers::pi};
inline constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;
}  // namespace detail

// Structure of the population factor, for the real / diagonal gate of the
// covariance formula.
struct PopulationShape {
    bool real = true;
    bool diagonal = true;
};

inline void check_covariance_gate(const MomentProfile& moments, const PopulationShape& shape) {
    if (!shape.real && moments.alpha != 0.0)
        fail(ErrorCode::AssumptionViolation,
             "covariance formula needs real data or alpha_x = 0");
    if (!shape.diagonal && moments.beta != 0.0)
        fail(ErrorCode::AssumptionViolation,
             "covariance formula needs a diagonal population or beta_x = 0");
}

// (M / 2 pi i) closed integral of f m'/m dz.
inline double spike_correction(const TestFunction& f, long spikes, double c, const BulkSpec& bulk,
                                Method method = Method::Auto, const ContourOptions& opt = {}) {
    require(spikes >= 0, ErrorCode::InvalidArgument, "spike count must be nonnegative");
    if (spikes == 0) return 0.0;
    const double M = static_cast<double>(spikes);
    if (method == Method::Auto && bulk.is_identity()) {
        if (f.kind() == TestFunction::Kind::LogRatio) {
            require(c < 1.0, ErrorCode::UnsupportedRatio, "f_L needs a ratio below 1");
            return -M * (c + std::log1p(-c));
        }
        if (f.kind() == TestFunction::Kind::Quadratic) return -M * c * c;
    }
    const InverseMap psi(c, bulk);
    check_admissible(f, plan_contour(psi), c);
    const auto contour = build_contour(psi, opt);
    const auto field = evaluate_on(contour, psi);
    cplx s = 0.0;
    for (std::size_t k = 0; k < contour.nodes.size(); ++k)
        s += contour.weights[k] * f(contour.nodes[k]) * field.dm[k] / field.m[k];
    return (M * s / detail::kTwoPiI).real();
}

// Bulk mean shift:
//   -(alpha/2 pi i) closed int f S3 / ((1 - S2)(1 - alpha S2)) dz
//   -(beta /2 pi i) closed int f S3 / (1 - S2) dz
// with S2 = c int m^2 t^2 (1 + t m)^-2 dH and S3 = c int m^3 t^2 (1 + t m)^-3 dH.
inline double mean_mu(const TestFunction& f, double c, const BulkSpec& bulk, const MomentProfile& moments,
                      Method method = Method::Auto, const ContourOptions& opt = {}) {
    if (moments.alpha == 0.0 && moments.beta == 0.0) return 0.0;
    if (method == Method::Auto && bulk.is_identity()) {
        if (f.kind() == TestFunction::Kind::LogRatio) {
            require(c < 1.0, ErrorCode::UnsupportedRatio, "f_L needs a ratio below 1");
            return -0.5 * std::log1p(-c) * moments.alpha + 0.5 * c * moments.beta;
        }
        if (f.kind() == TestFunction::Kind::Quadratic) return c * (moments.alpha + moments.beta);
        if (c < 1.0) return UnitCircleForms(c).mean(f, moments.alpha, moments.beta);
    }
    const InverseMap psi(c, bulk);
    check_admissible(f, plan_contour(psi), c);
    const auto contour = build_contour(psi, opt);
    const auto field = evaluate_on(contour, psi);
    cplx s = 0.0;
    for (std::size_t k = 0; k < contour.nodes.size(); ++k) {
        const cplx m = field.m[k];
        cplx s2 = 0.0;
        cplx s3 = 0.0;
        for (const auto& a : bulk.atoms()) {
            const cplx q = 1.0 / (1.0 + a.value * m);
            const double t2 = a.value * a.value;
            s2 += a.weight * t2 * m * m * q * q;
            s3 += a.weight * t2 * m * m * m * q * q * q;
        }
        s2 *= c;
        s3 *= c;
        const cplx kernel = moments.alpha * s3 / ((1.0 - s2) * (1.0 - moments.alpha * s2)) +
                            moments.beta * s3 / (1.0 - s2);
        s += contour.weights[k] * f(contour.nodes[k]) * kernel;
    }
    return (-s / detail::kTwoPiI).real();
}

// Per-node data for the double-contour kernel of a diagonal population.
struct KernelNodes {
    std::vector<cplx> z, weight, m, dm;
    std::vector<std::vector<cplx>> g, gp;  // m/(1+tm), m'/(1+tm)^2 per nonzero atom
};

inline KernelNodes kernel_nodes(const Contour& contour, const InverseMap& psi,
                                const std::vector<Atom>& atoms) {
    const auto field = evaluate_on(contour, psi);
    KernelNodes kn;
    kn.z = contour.nodes;
    kn.weight = contour.weights;
    kn.m = field.m;
    kn.dm = field.dm;
    kn.g.assign(atoms.size(), std::vector<cplx>(kn.z.size()));
    kn.gp.assign(atoms.size(), std::vector<cplx>(kn.z.size()));
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t k = 0; k < kn.z.size(); ++k) {
            const cplx q = 1.0 / (1.0 + atoms[i].value * kn.m[k]);
            kn.g[i][k] = kn.m[k] * q;
            kn.gp[i][k] = kn.dm[k] * q * q;
        }
    }
    return kn;
}

// Theta0 + alpha Theta1 + beta Theta2 for a diagonal population, in terms of
// A = c sum w t^2 g1 g2 and its partial derivatives.
struct DiagonalKernel {
    double c;
    std::vector<double> coef;  // c * w_i * t_i^2
    MomentProfile moments;

    DiagonalKernel(double ratio, const std::vector<Atom>& atoms, const MomentProfile& mom)
        : c(ratio), moments(mom) {
        for (const auto& a : atoms) coef.push_back(ratio * a.weight * a.value * a.value);
    }

    cplx theta0(cplx z1, cplx z2, cplx m1, cplx m2, cplx d1, cplx d2) const {
        return d1 * d2 / ((m1 - m2) * (m1 - m2)) - 1.0 / ((z1 - z2) * (z1 - z2));
    }

    // Returns {alpha * Theta1, Theta2}.
    std::pair<cplx, cplx> structured(const KernelNodes& a, std::size_t i, const KernelNodes& b,
                                     std::size_t j) const {
        cplx A = 0.0, A1 = 0.0, A2 = 0.0, A12 = 0.0;
        for (std::size_t s = 0; s < coef.size(); ++s) {
            A += coef[s] * a.g[s][i] * b.g[s][j];
            A1 += coef[s] * a.gp[s][i] * b.g[s][j];
            A2 += coef[s] * a.g[s][i] * b.gp[s][j];
            A12 += coef[s] * a.gp[s][i] * b.gp[s][j];
        }
        const double al = moments.alpha;
        const cplx one = 1.0 - al * A;
        const cplx t1 = (al * A12 * one + al * al * A1 * A2) / (one * one);
        return {t1, A12};
    }
};

// Bulk covariance of two linear spectral statistics,
//   -(1/4 pi^2) double integral f(z1) g(z2) (Theta0 + alpha Theta1 + beta Theta2) dz1 dz2.
// Diagonal entries are the bulk variances (positive).
inline double kappa(const TestFunction& f, const TestFunction& g, double c, const BulkSpec& bulk,
                    const MomentProfile& moments, Method method = Method::Auto,
                    const PopulationShape& shape = {}, int nodes = 0, bool swap_contours = false) {
    check_covariance_gate(moments, shape);
    if (method == Method::Auto && bulk.is_identity() && c < 1.0)
        return UnitCircleForms(c).covariance(f, g, moments.alpha, moments.beta);
    const InverseMap psi(c, bulk);
    const auto plan = plan_contour(psi);
    check_admissible(f, plan, c);
    check_admissible(g, plan, c);
    const auto pair = build_contour_pair(psi, nodes);
    std::vector<Atom> atoms;
    for (const auto& a : bulk.atoms())
        if (a.value > 0.0) atoms.push_back(a);
    const auto inner = kernel_nodes(pair.inner, psi, atoms);
    const auto outer = kernel_nodes(pair.outer, psi, atoms);
    const auto& first = swap_contours ? outer : inner;
    const auto& second = swap_contours ? inner : outer;
    const DiagonalKernel kernel(c, atoms, moments);

    std::vector<cplx> fw(first.z.size()), gw(second.z.size());
    for (std::size_t i = 0; i < first.z.size(); ++i) fw[i] = f(first.z[i]) * first.weight[i];
    for (std::size_t j = 0; j < second.z.size(); ++j) gw[j] = g(second.z[j]) * second.weight[j];

    cplx total = 0.0;
    for (std::size_t i = 0; i < first.z.size(); ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < second.z.size(); ++j) {
            cplx v = kernel.theta0(first.z[i], second.z[j], first.m[i], second.m[j], first.dm[i],
                                   second.dm[j]);
            if (moments.alpha != 0.0 || moments.beta != 0.0) {
                const auto [t1, t2] = kernel.structured(first, i, second, j);
                v += t1 + moments.beta * t2;
            }
            row += gw[j] * v;
        }
        total += fw[i] * row;
    }
    return (-total / detail::kFourPiSq).real();
}

// Population factor for the kernel: a diagonal one described by its atoms,
// or a small explicit matrix.
struct DiagonalFactor {
    BulkSpec bulk;
};
struct ExplicitFactor {
    Eigen::MatrixXcd gamma;  // p x p, rank p - M
    long n;
};
using BulkFactor = std::variant<DiagonalFactor, ExplicitFactor>;

struct VarthetaTerms {
    cplx theta0, theta1, theta2;
    cplx total;
};

namespace detail {

// Theta0 on the diagonal: the Schwarzian of m over 6.
inline cplx theta0_diagonal(const StieltjesJet& j) {
    const cplx u = j.d2 / j.d1;
    const cplx v = j.d3 / j.d1;
    return (v - 1.5 * u * u) / 6.0;
}

inline VarthetaTerms vartheta_explicit(cplx z1, cplx z2, const ExplicitFactor& fac, double c,
                                       const MomentProfile& moments) {
    const auto& G = fac.gamma;
    require(G.rows() == G.cols(), ErrorCode::ShapeMismatch, "population factor must be square");
    require(G.rows() <= 64, ErrorCode::TooLarge, "explicit population factor limited to p <= 64");
    const Eigen::MatrixXcd S = G * G.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(S);
    const Eigen::VectorXd lam = es.eigenvalues();
    const double tol = 1e-10 * std::max(1.0, lam.cwiseAbs().maxCoeff());
    std::vector<double> nonzero;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (lam(i) > tol) nonzero.push_back(lam(i));
    require(!nonzero.empty(), ErrorCode::InvalidArgument, "population factor is zero");
    const double expected = static_cast<double>(nonzero.size()) / static_cast<double>(fac.n);
    require(std::abs(expected - c) < 1e-12, ErrorCode::InvalidArgument,
            "ratio disagrees with the rank of the population factor");
    const InverseMap psi(c, BulkSpec::from_diagonal(nonzero));

    const auto jet1 = stieltjes_jet(psi, stieltjes(z1, psi).m_underline);
    const auto jet2 = stieltjes_jet(psi, stieltjes(z2, psi).m_underline);
    const Eigen::MatrixXcd& Q = es.eigenvectors();
    auto resolvent = [&](cplx m, int power) {
        Eigen::VectorXcd d(lam.size());
        for (Eigen::Index i = 0; i < lam.size(); ++i) d(i) = std::pow(1.0 / (1.0 + m * lam(i)), power);
        return Eigen::MatrixXcd(Q * d.asDiagonal() * Q.adjoint());
    };
    // With R = (I + m S)^{-1}: z P = -R, and d(m R)/dz = m' R^2.
    const Eigen::MatrixXcd R1 = resolvent(jet1.m, 1), R2 = resolvent(jet2.m, 1);
    const Eigen::MatrixXcd R1sq = resolvent(jet1.m, 2), R2sq = resolvent(jet2.m, 2);
    const Eigen::MatrixXcd GT = G * G.transpose();
    const Eigen::MatrixXcd Gbar = G.conjugate();
    const double inv_n = 1.0 / static_cast<double>(fac.n);
    auto pair_trace = [&](const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y) {
        return (G.adjoint() * X * GT * Y.transpose() * Gbar).trace() * inv_n;
    };
    const cplx A = jet1.m * jet2.m * pair_trace(R1, R2);
    const cplx A1 = jet1.d1 * jet2.m * pair_trace(R1sq, R2);
    const cplx A2 = jet1.m * jet2.d1 * pair_trace(R1, R2sq);
    const cplx A12 = jet1.d1 * jet2.d1 * pair_trace(R1sq, R2sq);
    const double al = moments.alpha;
    const cplx theta1 = A12 / (1.0 - al * A) + al * A1 * A2 / ((1.0 - al * A) * (1.0 - al * A));

    const Eigen::MatrixXcd D1 = G.adjoint() * R1sq * G;
    const Eigen::MatrixXcd D2 = G.adjoint() * R2sq * G;
    cplx diag_sum = 0.0;
    for (Eigen::Index i = 0; i < G.cols(); ++i) diag_sum += D1(i, i) * D2(i, i);
    const cplx theta2 = jet1.d1 * jet2.d1 * inv_n * diag_sum;

    const cplx theta0 = z1 == z2 ? theta0_diagonal(jet1)
                                 : jet1.d1 * jet2.d1 / ((jet1.m - jet2.m) * (jet1.m - jet2.m)) -
                                       1.0 / ((z1 - z2) * (z1 - z2));
    return {theta0, theta1, theta2, theta0 + al * theta1 + moments.beta * theta2};
}

inline VarthetaTerms vartheta_diagonal(cplx z1, cplx z2, const BulkSpec& bulk, double c,
                                       const MomentProfile& moments) {
    const InverseMap psi(c, bulk);
    const auto jet1 = stieltjes_jet(psi, stieltjes(z1, psi).m_underline);
    const auto jet2 = stieltjes_jet(psi, stieltjes(z2, psi).m_underline);
    cplx A = 0.0, A1 = 0.0, A2 = 0.0, A12 = 0.0;
    for (const auto& a : bulk.atoms()) {
        const double k = c * a.weight * a.value * a.value;
        const cplx q1 = 1.0 / (1.0 + a.value * jet1.m), q2 = 1.0 / (1.0 + a.value * jet2.m);
        A += k * jet1.m * q1 * jet2.m * q2;
        A1 += k * jet1.d1 * q1 * q1 * jet2.m * q2;
        A2 += k * jet1.m * q1 * jet2.d1 * q2 * q2;
        A12 += k * jet1.d1 * q1 * q1 * jet2.d1 * q2 * q2;
    }
    const double al = moments.alpha;
    const cplx theta1 = A12 / (1.0 - al * A) + al * A1 * A2 / ((1.0 - al * A) * (1.0 - al * A));
    const cplx theta0 = z1 == z2 ? theta0_diagonal(jet1)
                                 : jet1.d1 * jet2.d1 / ((jet1.m - jet2.m) * (jet1.m - jet2.m)) -
                                       1.0 / ((z1 - z2) * (z1 - z2));
    return {theta0, theta1, A12, theta0 + al * theta1 + moments.beta * A12};
}

}  // namespace detail

inline VarthetaTerms vartheta_terms(cplx z1, cplx z2, const BulkFactor& factor, double c,
                                    const MomentProfile& moments) {
    if (const auto* d = std::get_if<DiagonalFactor>(&factor))
        return detail::vartheta_diagonal(z1, z2, d->bulk, c, moments);
    return detail::vartheta_explicit(z1, z2, std::get<ExplicitFactor>(factor), c, moments);
}

inline cplx vartheta_sq(cplx z1, cplx z2, const BulkFactor& factor, double c,
                        const MomentProfile& moments) {
    return vartheta_terms(z1, z2, factor, c, moments).total;
}

struct LssLaw {
    double center;
    double mean;
    double sd;
    double spike_var;
    double bulk_var;
};

struct LssClt {
    std::vector<LssLaw> laws;
    Eigen::MatrixXd correlation;
};

struct CltOptions {
    Method method = Method::Auto;
    S2Mode s2_mode = S2Mode::Exact;
    PopulationShape shape{};
};

// Joint Gaussian law of the statistics sum_j f_l(lambda_j). The bulk part
// uses the ratio (p - M)/n and the bulk atoms; the center equals
// p int f dF^{c_n, H_n} + sum_k d_k f(phi_k) + the spike correction.
inline LssClt lss_clt_params(const std::vector<TestFunction>& fs, const Dims& dims, const BulkSpec& bulk,
                             const SpikeSpec& spikes, const MomentProfile& moments,
                             const CltOptions& opt = {}) {
    require(!fs.empty(), ErrorCode::InvalidArgument, "no test functions");
    check_covariance_gate(moments, opt.shape);
    if (!spikes.empty()) spikes.check_separation(dims, bulk);
    require(spikes.total_multiplicity() == dims.spikes(), ErrorCode::InvalidArgument,
            "spike multiplicities must sum to dims.M");
    const double c = dims.bulk_ratio();
    const auto groups = summarize_spikes(dims, bulk, spikes, moments, opt.s2_mode);
    const std::size_t L = fs.size();

    Eigen::MatrixXd spike_cov = Eigen::MatrixXd::Zero(L, L);
    Eigen::MatrixXd bulk_cov = Eigen::MatrixXd::Zero(L, L);
    LssClt out;
    for (std::size_t l = 0; l < L; ++l) {
        const auto& f = fs[l];
        LssLaw law{};
        law.center = static_cast<double>(dims.p() - dims.spikes()) * lsd_integral(f, c, bulk, opt.method) +
                     spike_correction(f, dims.spikes(), c, bulk, opt.method);
        for (const auto& g : groups)
            law.center += static_cast<double>(g.multiplicity) * f(g.scale.phi);
        law.mean = mean_mu(f, c, bulk, moments, opt.method);
        out.laws.push_back(law);
    }
    for (std::size_t s = 0; s < L; ++s) {
        for (std::size_t t = s; t < L; ++t) {
            double sv = 0.0;
            for (const auto& g : groups)
                sv += varpi(g.scale.phi, fs[s], dims.n()) * varpi(g.scale.phi, fs[t], dims.n()) * g.s2;
            spike_cov(s, t) = spike_cov(t, s) = sv;
            bulk_cov(s, t) = bulk_cov(t, s) =
                kappa(fs[s], fs[t], c, bulk, moments, opt.method, opt.shape);
        }
    }
    for (std::size_t l = 0; l < L; ++l) {
        auto& law = out.laws[l];
        law.spike_var = spike_cov(l, l);
        law.bulk_var = bulk_cov(l, l);
        if (!(law.bulk_var > 0.0))
            fail(ErrorCode::NonPositiveVariance,
                 "bulk variance for " + fs[l].name() + " is not positive; contour fault");
        law.sd = std::sqrt(law.spike_var + law.bulk_var);
    }
    out.correlation = Eigen::MatrixXd::Identity(L, L);
    for (std::size_t s = 0; s < L; ++s)
        for (std::size_t t = 0; t < L; ++t)
            if (s != t)
                out.correlation(s, t) =
                    (spike_cov(s, t) + bulk_cov(s, t)) / (out.laws[s].sd * out.laws[t].sd);
    return out;
}

}  // namespace spikelss
