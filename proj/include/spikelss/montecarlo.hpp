#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "spikelss/core_types.hpp"
#include "spikelss/error.hpp"
#include "spikelss/rng.hpp"
#include "spikelss/stat_tests.hpp"

namespace spikelss {

enum class Hypothesis { H0, H1, H2, H3, H4, H5, H6 };

inline std::string to_string(Hypothesis h) { return "H" + std::to_string(static_cast<int>(h)); }

inline Hypothesis parse_hypothesis(const std::string& s) {
    if (s.size() == 2 && (s[0] == 'H' || s[0] == 'h') && s[1] >= '0' && s[1] <= '6')
        return static_cast<Hypothesis>(s[1] - '0');
    fail(ErrorCode::InvalidArgument, "unknown hypothesis '" + s + "'");
}

struct HypothesisSpec {
    Hypothesis kind = Hypothesis::H0;
    double alpha1 = 0.0;

    bool rotated() const { return kind >= Hypothesis::H4; }

    // Spike sizes relative to alpha1.
    std::vector<double> multipliers() const {
        switch (kind) {
            case Hypothesis::H0: return {};
            case Hypothesis::H1:
            case Hypothesis::H4: return {1.0};
            case Hypothesis::H2:
            case Hypothesis::H5: return {1.0, 0.9};
            case Hypothesis::H3:
            case Hypothesis::H6: return {1.0, 0.9, 0.85, 0.8, 0.75};
        }
        return {};
    }

    long spike_count() const { return static_cast<long>(multipliers().size()); }
};

// T = Sigma^{1/2}. Diagonal populations keep only the diagonal.
struct Population {
    Eigen::VectorXd scale;           // diagonal of Lambda^{1/2}
    std::optional<Eigen::MatrixXd> rotation;  // U0 for the rotated hypotheses
    SpikeSpec spikes;

    Eigen::MatrixXd factor() const {
        if (!rotation) return scale.asDiagonal();
        return *rotation * scale.asDiagonal() * rotation->transpose();
    }
    Eigen::MatrixXd covariance() const {
        const Eigen::VectorXd lam = scale.cwiseProduct(scale);
        if (!rotation) return lam.asDiagonal();
        return *rotation * lam.asDiagonal() * rotation->transpose();
    }
};

// Haar orthogonal matrix: Q of a Gaussian matrix with R's diagonal made positive.
inline Eigen::MatrixXd haar_orthogonal(long p, RngStream& stream) {
    Eigen::MatrixXd G(p, p);
    for (Eigen::Index j = 0; j < p; ++j)
        for (Eigen::Index i = 0; i < p; ++i) G(i, j) = stream.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
    Eigen::MatrixXd Q = qr.householderQ();
    const Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < p; ++j)
        if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
    return Q;
}

inline Population build_population(const HypothesisSpec& hyp, long p, RngStream& stream) {
    const auto mult = hyp.multipliers();
    const long M = static_cast<long>(mult.size());
    require(p > M, ErrorCode::InvalidArgument, "dimension must exceed the spike count");
    Population pop;
    pop.scale = Eigen::VectorXd::Ones(p);
    for (long k = 0; k < M; ++k) pop.scale(k) = std::sqrt(hyp.alpha1 * mult[k]);
    if (M == 0) return pop;
    std::vector<SpikeGroup> groups;
    for (double k : mult) groups.push_back({hyp.alpha1 * k, 1});
    if (hyp.rotated()) {
        pop.rotation = haar_orthogonal(p, stream);
        pop.spikes = SpikeSpec(std::move(groups), pop.rotation->leftCols(M));
    } else {
        pop.spikes = SpikeSpec(std::move(groups));
    }
    return pop;
}

inline double draw(DistKind dist, RngStream& stream) {
    switch (dist) {
        case DistKind::Gaussian: return stream.normal();
        case DistKind::GammaShifted:  // Gamma(4, 0.5) - 2
            return 0.5 * (stream.exponential() + stream.exponential() + stream.exponential() +
                          stream.exponential()) -
                   2.0;
        case DistKind::UniformSym: return std::sqrt(3.0) * (2.0 * stream.uniform() - 1.0);
    }
    return 0.0;
}

// p x n matrix of i.i.d. standardized entries, filled column by column.
inline Eigen::MatrixXd gen_data(DistKind dist, long p, long n, RngStream& stream) {
    require(p > 0 && n > 0, ErrorCode::InvalidArgument, "data shape must be positive");
    Eigen::MatrixXd X(p, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < p; ++i) X(i, j) = draw(dist, stream);
    return X;
}

inline Eigen::MatrixXd gram(const Eigen::MatrixXd& Y) {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(Y.rows(), Y.rows());
    B.selfadjointView<Eigen::Lower>().rankUpdate(Y, 1.0 / static_cast<double>(Y.cols()));
    B.triangularView<Eigen::StrictlyUpper>() = B.transpose();
    return B;
}

// (1/n) (T X)(T X)^T
inline Eigen::MatrixXd sample_cov(const Eigen::MatrixXd& T, const Eigen::MatrixXd& X) {
    require(T.cols() == X.rows(), ErrorCode::ShapeMismatch, "factor and data are not conformable");
    return gram(T * X);
}

inline Eigen::MatrixXd sample_cov(const Population& pop, const Eigen::MatrixXd& X) {
    require(pop.scale.size() == X.rows(), ErrorCode::ShapeMismatch,
            "population and data are not conformable");
    if (!pop.rotation) return gram(pop.scale.asDiagonal() * X);
    return sample_cov(pop.factor(), X);
}

// Descending sample eigenvalues for one replication.
inline Eigen::VectorXd sample_spectrum(const Population& pop, DistKind dist, long n, RngStream& stream) {
    const long p = pop.scale.size();
    return spectrum(sample_cov(pop, gen_data(dist, p, n, stream)));
}

enum class U0Resample { Cell, Replication };

struct SimCell {
    DistKind dist;
    HypothesisSpec hyp;
    long p;
    long n;
};

struct SimConfig {
    std::vector<DistKind> dists{DistKind::Gaussian};
    std::vector<Hypothesis> hypotheses{Hypothesis::H0};
    std::vector<std::pair<long, long>> sizes{{100, 300}};
    std::vector<double> xis{0.05};
    std::vector<double> alpha1s{3.0};
    std::vector<TestKind> tests{TestKind::CLRT, TestKind::CNTT, TestKind::RLRT};
    long replications = 2000;
    std::uint64_t seed = 42;
    U0Resample u0_resample = U0Resample::Cell;
    unsigned threads = 0;  // 0: hardware concurrency

    void validate() const {
        require(replications >= 100, ErrorCode::InvalidArgument, "replications must be at least 100");
        require(!dists.empty() && !hypotheses.empty() && !sizes.empty() && !xis.empty() &&
                    !tests.empty(),
                ErrorCode::InvalidArgument, "empty simulation grid");
        for (double xi : xis)
            require(xi > 0.0 && xi <= 0.5, ErrorCode::InvalidArgument, "xi must lie in (0, 0.5]");
        for (const auto& [p, n] : sizes)
            require(p > 0 && n > 0, ErrorCode::InvalidArgument, "sizes must be positive");
    }

    // H0 ignores alpha1 and gets one cell per (dist, size).
    std::vector<SimCell> cells() const {
        std::vector<SimCell> out;
        for (auto d : dists)
            for (auto h : hypotheses)
                for (const auto& [p, n] : sizes) {
                    if (h == Hypothesis::H0) {
                        out.push_back({d, {h, 0.0}, p, n});
                        continue;
                    }
                    for (double a : alpha1s) out.push_back({d, {h, a}, p, n});
                }
        return out;
    }
};

struct SimRow {
    TestKind test;
    DistKind dist;
    Hypothesis hypothesis;
    long p, n;
    double xi;
    double alpha1;
    double rate;
    double standard_error;
    long reps;
    double elapsed_seconds;
};

struct SimReport {
    std::vector<SimRow> rows;
};

namespace detail {

template <class F>
void parallel_for(long count, unsigned threads, F&& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<long>(threads, count));
    if (threads <= 1) {
        for (long i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (long i = t; i < count; i += threads) body(i);
        });
}

}  // namespace detail

// Rejection counts for one cell; every replication owns the stream
// (seed, cell, replication), so results do not depend on scheduling.
inline std::vector<SimRow> run_cell(const SimConfig& cfg, const SimCell& cell, std::uint64_t cell_index) {
    const auto t0 = std::chrono::steady_clock::now();
    const long M = cell.hyp.spike_count();
    const Dims dims(cell.p, cell.n);
    const auto moments = moment_profile(cell.dist);

    // Thresholds against the null laws.
    std::vector<std::vector<double>> threshold(cfg.tests.size());
    for (std::size_t t = 0; t < cfg.tests.size(); ++t) {
        const auto law = null_params(cfg.tests[t], dims, moments);
        for (double xi : cfg.xis) threshold[t].push_back(law.location() + critical_value(law.family, xi) * law.scale);
    }

    RngStream rotation_stream = RngStream(cfg.seed, cell_index, 0).split(1);
    const Population shared = build_population(cell.hyp, cell.p, rotation_stream);
    if (M > 0) shared.spikes.check_separation(Dims(cell.p, cell.n, M), BulkSpec::identity());
    const bool per_rep = cell.hyp.rotated() && cfg.u0_resample == U0Resample::Replication;

    const std::size_t width = cfg.tests.size() * cfg.xis.size();
    std::vector<unsigned char> hits(static_cast<std::size_t>(cfg.replications) * width, 0);
    detail::parallel_for(cfg.replications, cfg.threads, [&](long r) {
        RngStream stream(cfg.seed, cell_index, static_cast<std::uint64_t>(r) + 1);
        Population local;
        const Population* pop = &shared;
        if (per_rep) {
            RngStream rot = stream.split(1);
            local = build_population(cell.hyp, cell.p, rot);
            pop = &local;
        }
        const Eigen::VectorXd eig = sample_spectrum(*pop, cell.dist, cell.n, stream);
        for (std::size_t t = 0; t < cfg.tests.size(); ++t) {
            const double value = statistic_from_spectrum(cfg.tests[t], eig);
            for (std::size_t x = 0; x < cfg.xis.size(); ++x)
                hits[static_cast<std::size_t>(r) * width + t * cfg.xis.size() + x] = value > threshold[t][x];
        }
    });
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::vector<SimRow> rows;
    const double reps = static_cast<double>(cfg.replications);
    for (std::size_t t = 0; t < cfg.tests.size(); ++t)
        for (std::size_t x = 0; x < cfg.xis.size(); ++x) {
            long count = 0;
            for (long r = 0; r < cfg.replications; ++r)
                count += hits[static_cast<std::size_t>(r) * width + t * cfg.xis.size() + x];
            const double rate = static_cast<double>(count) / reps;
            rows.push_back({cfg.tests[t], cell.dist, cell.hyp.kind, cell.p, cell.n, cfg.xis[x],
                            cell.hyp.alpha1, rate, std::sqrt(rate * (1.0 - rate) / reps),
                            cfg.replications, elapsed});
        }
    return rows;
}

inline SimReport run_experiment(const SimConfig& cfg) {
    cfg.validate();
    SimReport report;
    const auto cells = cfg.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto rows = run_cell(cfg, cells[i], i);
        report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    }
    return report;
}

}  // namespace spikelss
