#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spikelss/error.hpp"

namespace spikelss {

// Entry moments: alpha = |E x^2|^2, beta = E|x|^4 - alpha - 2.
struct MomentProfile {
    double alpha = 1.0;
    double beta = 0.0;

    static MomentProfile make(double alpha, double beta) {
        require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= 1.0,
                ErrorCode::InvalidArgument, "moments.alpha_x must lie in [0, 1]");
        require(std::isfinite(beta) && beta >= -2.0, ErrorCode::InvalidArgument,
                "moments.beta_x must be >= -2");
        return MomentProfile{alpha, beta};
    }
    static MomentProfile real_gaussian() { return {1.0, 0.0}; }
};

class Dims {
public:
    Dims(long p, long n, long spikes = 0) : p_(p), n_(n), m_(spikes) {
        require(p > 0, ErrorCode::InvalidArgument, "dims.p must be positive");
        require(n > 0, ErrorCode::InvalidArgument, "dims.n must be positive");
        require(spikes >= 0 && spikes < p, ErrorCode::InvalidArgument,
                "dims.M must satisfy 0 <= M < p");
    }

    long p() const { return p_; }
    long n() const { return n_; }
    long spikes() const { return m_; }
    double ratio() const { return static_cast<double>(p_) / static_cast<double>(n_); }
    // (p - M)/n, the ratio seen by the bulk.
    double bulk_ratio() const {
        return static_cast<double>(p_ - m_) / static_cast<double>(n_);
    }
    Dims with_spikes(long spikes) const { return Dims(p_, n_, spikes); }

private:
    long p_;
    long n_;
    long m_;
};

struct Atom {
    double value;
    double weight;
};

// Discrete population spectral distribution. Atom values are nonnegative: a
// zero atom represents rank deficiency of the population factor.
class BulkSpec {
public:
    static BulkSpec identity() { return BulkSpec({{1.0, 1.0}}); }

    // Normalizes the supplied weights; merges equal values.
    static BulkSpec from_atoms(std::vector<Atom> atoms) {
        require(!atoms.empty(), ErrorCode::InvalidArgument, "bulk needs at least one atom");
        double total = 0.0;
        for (const auto& a : atoms) {
            require(std::isfinite(a.value) && a.value >= 0.0, ErrorCode::InvalidArgument,
                    "bulk atom values must be finite and nonnegative");
            require(std::isfinite(a.weight) && a.weight > 0.0, ErrorCode::InvalidArgument,
                    "bulk atom weights must be positive");
            total += a.weight;
        }
        std::map<double, double> merged;
        for (const auto& a : atoms) merged[a.value] += a.weight / total;
        std::vector<Atom> out;
        for (const auto& [v, w] : merged) out.push_back({v, w});
        return BulkSpec(std::move(out));
    }

    // Weights are exact count ratios.
    static BulkSpec from_diagonal(const std::vector<double>& diag) {
        require(!diag.empty(), ErrorCode::InvalidArgument, "empty diagonal");
        std::map<double, long> counts;
        for (double v : diag) {
            require(std::isfinite(v) && v >= 0.0, ErrorCode::InvalidArgument,
                    "bulk atom values must be finite and nonnegative");
            ++counts[v];
        }
        const auto total = static_cast<double>(diag.size());
        std::vector<Atom> out;
        for (const auto& [v, k] : counts) out.push_back({v, static_cast<double>(k) / total});
        return BulkSpec(std::move(out));
    }

    // Population of size p_total: this bulk on p_total - zeros slots plus zero atoms.
    BulkSpec with_zero_atoms(long zeros, long p_total) const {
        require(zeros >= 0 && zeros < p_total, ErrorCode::InvalidArgument, "bad zero-atom count");
        if (zeros == 0) return *this;
        const double keep = static_cast<double>(p_total - zeros) / static_cast<double>(p_total);
        std::vector<Atom> out;
        out.push_back({0.0, static_cast<double>(zeros) / static_cast<double>(p_total)});
        for (const auto& a : atoms_) {
            if (a.value == 0.0)
                out.front().weight += a.weight * keep;
            else
                out.push_back({a.value, a.weight * keep});
        }
        return BulkSpec(std::move(out));
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    double max_atom() const { return atoms_.back().value; }
    double min_atom() const { return atoms_.front().value; }
    bool is_identity() const { return atoms_.size() == 1 && atoms_[0].value == 1.0; }
    double zero_mass() const { return atoms_.front().value == 0.0 ? atoms_.front().weight : 0.0; }

private:
    explicit BulkSpec(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
        std::sort(atoms_.begin(), atoms_.end(),
                  [](const Atom& a, const Atom& b) { return a.value < b.value; });
        double total = 0.0;
        for (const auto& a : atoms_) total += a.weight;
        require(std::abs(total - 1.0) < 1e-12, ErrorCode::InvalidArgument,
                "bulk weights must sum to 1");
        require(atoms_.back().value > 0.0, ErrorCode::InvalidArgument,
                "bulk needs a positive atom");
    }

    std::vector<Atom> atoms_;
};

struct SpikeGroup {
    double alpha;
    long multiplicity;
};

// Diverging spikes in descending order. Columns of the loading block are
// grouped consecutively: group k owns columns [offset_k, offset_k + d_k).
class SpikeSpec {
public:
    SpikeSpec() = default;

    // Canonical loading block: the first M standard basis vectors.
    explicit SpikeSpec(std::vector<SpikeGroup> groups) : groups_(std::move(groups)) {
        validate_groups();
    }

    SpikeSpec(std::vector<SpikeGroup> groups, Eigen::MatrixXd loadings)
        : groups_(std::move(groups)), loadings_(std::move(loadings)) {
        validate_groups();
        const auto& u = *loadings_;
        require(u.cols() == total_multiplicity(), ErrorCode::ShapeMismatch,
                "loading block must have M columns");
        require(u.rows() >= u.cols(), ErrorCode::ShapeMismatch, "loading block must be p x M");
        const Eigen::MatrixXd gram = u.transpose() * u;
        const double err =
            (gram - Eigen::MatrixXd::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
        require(err < 1e-10, ErrorCode::InvalidArgument, "loading block is not orthonormal");
    }

    // Spikes at alpha_1 * multipliers[k], each of multiplicity one.
    static SpikeSpec from_multipliers(double alpha1, const std::vector<double>& multipliers) {
        std::vector<SpikeGroup> g;
        for (double k : multipliers) g.push_back({alpha1 * k, 1});
        return SpikeSpec(std::move(g));
    }

    const std::vector<SpikeGroup>& groups() const { return groups_; }
    bool empty() const { return groups_.empty(); }
    bool canonical() const { return !loadings_.has_value(); }
    const std::optional<Eigen::MatrixXd>& loadings() const { return loadings_; }

    long total_multiplicity() const {
        long m = 0;
        for (const auto& g : groups_) m += g.multiplicity;
        return m;
    }

    long offset(std::size_t k) const {
        require(k < groups_.size(), ErrorCode::IndexOutOfRange, "spike group index out of range");
        long off = 0;
        for (std::size_t i = 0; i < k; ++i) off += groups_[i].multiplicity;
        return off;
    }

    // sum_{j1,j2 in J_k} U_{j1 j1 j2 j2} = sum_t (sum_{j in J_k} u_tj^2)^2.
    double u_sum(std::size_t k) const {
        require(k < groups_.size(), ErrorCode::IndexOutOfRange, "spike group index out of range");
        if (!loadings_) return static_cast<double>(groups_[k].multiplicity);
        const auto& u = *loadings_;
        const long off = offset(k);
        double total = 0.0;
        for (Eigen::Index t = 0; t < u.rows(); ++t) {
            double row = 0.0;
            for (long j = off; j < off + groups_[k].multiplicity; ++j) row += u(t, j) * u(t, j);
            total += row * row;
        }
        return total;
    }

    // Spikes must clear (1 + sqrt(c_n)) * max bulk atom.
    void check_separation(const Dims& dims, const BulkSpec& bulk) const {
        require(total_multiplicity() == dims.spikes(), ErrorCode::InvalidArgument,
                "spike multiplicities must sum to dims.M");
        const double gate = (1.0 + std::sqrt(dims.ratio())) * bulk.max_atom();
        for (const auto& g : groups_) {
            if (!(g.alpha > gate))
                fail(ErrorCode::GateViolation,
                     "spike " + std::to_string(g.alpha) + " does not exceed separation gate " +
                         std::to_string(gate));
        }
    }

private:
    void validate_groups() const {
        for (std::size_t i = 0; i < groups_.size(); ++i) {
            require(std::isfinite(groups_[i].alpha) && groups_[i].alpha > 0.0,
                    ErrorCode::InvalidArgument, "spike values must be positive");
            require(groups_[i].multiplicity > 0, ErrorCode::InvalidArgument,
                    "spike multiplicities must be positive");
            if (i > 0)
                require(groups_[i].alpha < groups_[i - 1].alpha, ErrorCode::InvalidArgument,
                        "spike groups must be distinct and in descending order");
        }
    }

    std::vector<SpikeGroup> groups_;
    std::optional<Eigen::MatrixXd> loadings_;
};

enum class DistKind { Gaussian, GammaShifted, UniformSym };

inline std::string to_string(DistKind d) {
    switch (d) {
        case DistKind::Gaussian: return "gaussian";
        case DistKind::GammaShifted: return "gamma";
        case DistKind::UniformSym: return "uniform";
    }
    return "unknown";
}

inline DistKind parse_dist(const std::string& s) {
    if (s == "gaussian" || s == "dt1") return DistKind::Gaussian;
    if (s == "gamma" || s == "dt2") return DistKind::GammaShifted;
    if (s == "uniform" || s == "dt3") return DistKind::UniformSym;
    fail(ErrorCode::InvalidArgument, "unknown distribution '" + s + "'");
}

inline MomentProfile moment_profile(DistKind d) {
    switch (d) {
        case DistKind::Gaussian: return {1.0, 0.0};
        // Gamma(4, 0.5) - 2: excess kurtosis 6/4.
        case DistKind::GammaShifted: return {1.0, 1.5};
        // Uniform on [-sqrt 3, sqrt 3]: E x^4 = 9/5.
        case DistKind::UniformSym: return {1.0, -1.2};
    }
    fail(ErrorCode::InvalidArgument, "unknown distribution");
}

}  // namespace spikelss
