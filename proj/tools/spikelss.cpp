#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spikelss/spikelss.hpp"

using namespace spikelss;

namespace {

enum Exit { kOk = 0, kConfig = 2, kNumeric = 3, kIo = 4 };

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::IoError: return kIo;
        case ErrorCode::ParseError:
        case ErrorCode::SchemaError:
        case ErrorCode::GateViolation:
        case ErrorCode::InvalidArgument:
        case ErrorCode::ShapeMismatch:
        case ErrorCode::MultiplicityViolation:
        case ErrorCode::NonIdentityBulk:
        case ErrorCode::AssumptionViolation:
        case ErrorCode::UnsupportedRatio:
        case ErrorCode::OutOfRange:
        case ErrorCode::TooLarge: return kConfig;
        default: return kNumeric;
    }
}

Eigen::MatrixXd read_csv_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot read " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, path + " line " + std::to_string(lineno) + ": not a number");
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            fail(ErrorCode::ParseError, path + " line " + std::to_string(lineno) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(ErrorCode::ParseError, path + ": no data");
    Eigen::MatrixXd m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

void print_law(const std::string& label, const AsymptoticLaw& law) {
    std::printf("%s family=%s center=%.10g mean_shift=%.10g scale=%.10g\n", label.c_str(),
                law.family == LawFamily::Gaussian ? "gaussian" : "tw1", law.center, law.mean_shift,
                law.scale);
}

void cmd_asymptotics(const RunConfig& cfg) {
    const auto moments = cfg.moments();
    const auto bulk = cfg.bulk_spec();
    const auto dims = cfg.dims();
    const auto spikes = cfg.spikes();
    spikes.check_separation(dims, bulk);
    std::printf("p=%ld n=%ld M=%ld c_n=%.10g c_nM=%.10g alpha_x=%g beta_x=%g\n", dims.p(), dims.n(),
                dims.spikes(), dims.ratio(), dims.bulk_ratio(), moments.alpha, moments.beta);
    const auto groups = summarize_spikes(dims, bulk, spikes, moments, cfg.s2_mode);
    for (std::size_t k = 0; k < groups.size(); ++k) {
        const auto& g = groups[k];
        std::printf("spike k=%zu alpha=%.10g d=%ld phi=%.10g theta=%.10g nu=%.10g s2=%.10g\n", k + 1, g.alpha,
                    g.multiplicity, g.scale.phi, g.scale.theta, g.scale.nu, g.s2);
    }
    const Dims null_dims(dims.p(), dims.n());
    for (auto kind : kAllTests) {
        if (kind == TestKind::CLRT && dims.ratio() >= 1.0) continue;
        print_law("null " + to_string(kind), null_params(kind, null_dims, moments));
        if (!bulk.is_identity()) continue;
        if (kind == TestKind::RLRT && groups.front().multiplicity != 1) continue;
        print_law("alt " + to_string(kind), alt_params(kind, dims, bulk, spikes, moments, cfg.s2_mode));
        for (double xi : cfg.xi)
            std::printf("power %s xi=%g value=%.10g varkappa=%.10g\n", to_string(kind).c_str(), xi,
                        asymptotic_power(kind, dims, spikes, moments, xi, cfg.s2_mode),
                        power_argument(kind, dims, spikes, moments, xi, cfg.s2_mode));
    }
    std::vector<TestFunction> fs{TestFunction::quadratic()};
    if (dims.bulk_ratio() < 1.0) fs.insert(fs.begin(), TestFunction::log_ratio());
    CltOptions opt;
    opt.s2_mode = cfg.s2_mode;
    const auto clt = lss_clt_params(fs, dims, bulk, spikes, moments, opt);
    for (std::size_t l = 0; l < fs.size(); ++l) {
        const auto& law = clt.laws[l];
        std::printf("lss %s center=%.10g mean=%.10g sd=%.10g spike_var=%.10g bulk_var=%.10g\n",
                    fs[l].name().c_str(), law.center, law.mean, law.sd, law.spike_var, law.bulk_var);
    }
    if (fs.size() == 2) std::printf("lss correlation=%.10g\n", clt.correlation(0, 1));
}

void cmd_test(const RunConfig& cfg, const std::string& path, bool is_cov, const std::string& which) {
    const Eigen::MatrixXd input = read_csv_matrix(path);
    Eigen::MatrixXd B;
    if (is_cov) {
        require(input.rows() == input.cols(), ErrorCode::ShapeMismatch, "covariance must be square");
        B = 0.5 * (input + input.transpose());
    } else {
        B = gram(input);
    }
    const long p = B.rows();
    const long n = is_cov ? cfg.n : input.cols();
    const Dims dims(p, n);
    const auto eig = spectrum(B);
    std::vector<TestKind> kinds;
    if (which == "all") kinds.assign(std::begin(kAllTests), std::end(kAllTests));
    else kinds.push_back(parse_test(which));
    std::printf("p=%ld n=%ld\n", p, n);
    for (auto kind : kinds) {
        const auto law = null_params(kind, dims, cfg.moments());
        const double value = statistic_from_spectrum(kind, eig);
        for (double xi : cfg.xi) {
            const auto d = decide(value, law, xi);
            std::printf("%s xi=%g statistic=%.10g threshold=%.10g reject=%s %s=%.6g\n", to_string(kind).c_str(),
                        xi, d.statistic, d.threshold, d.reject ? "yes" : "no",
                        law.family == LawFamily::Gaussian ? "z" : "pvalue", d.score);
        }
    }
}

std::vector<std::string> run_sim(RunConfig cfg, bool power, bool quiet) {
    auto sim = cfg.simulation();
    if (!power) {
        sim.hypotheses = {Hypothesis::H0};
    } else {
        std::erase(sim.hypotheses, Hypothesis::H0);
        if (sim.hypotheses.empty()) sim.hypotheses = {Hypothesis::H1};
    }
    const auto report = run_experiment(sim);
    if (!quiet) std::fputs(sim_csv(report).c_str(), stdout);
    return emit_outputs(report, cfg.out_dir, parse_formats(cfg.formats), power ? "power" : "size");
}

std::vector<std::string> run_curves(const RunConfig& cfg, bool quiet) {
    const double xi = cfg.xi.front();
    const auto curves = varkappa_curves(cfg.p, cfg.n, cfg.multipliers, cfg.moments(), xi, cfg.sweep_min,
                                        cfg.sweep_max, cfg.sweep_points, cfg.s2_mode);
    if (!quiet) std::fputs(curves_csv(curves).c_str(), stdout);
    char title[128];
    std::snprintf(title, sizeof title, "p=%ld n=%ld xi=%g M=%zu", cfg.p, cfg.n, xi, cfg.multipliers.size());
    return emit_outputs(curves, cfg.out_dir, parse_formats(cfg.formats), "curves", title);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spiked-covariance LSS tests: asymptotics, simulation and curves"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_dir, formats;
    std::vector<std::string> sets;
    long seed = -1, reps = -1;
    bool quiet = false;
    app.add_option("--config", config_path, "config file");
    app.add_option("--set", sets, "override KEY=VALUE (repeatable)");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", formats, "comma list of csv, svg");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--reps", reps, "replications per cell");
    app.add_flag("--quiet", quiet, "suppress table output");

    auto* asym = app.add_subcommand("asymptotics", "spike scales and asymptotic laws");
    auto* test = app.add_subcommand("test", "run tests on a data or covariance CSV");
    std::string data_path, which = "all";
    bool is_cov = false;
    test->add_option("file", data_path, "CSV matrix, rows are variables")->required();
    test->add_flag("--cov", is_cov, "file holds a covariance matrix (n from dims.n)");
    test->add_option("--test", which, "CLRT, CNTT, RLRT or all");
    auto* size = app.add_subcommand("size", "empirical size under H0");
    auto* power = app.add_subcommand("power", "empirical power under the configured alternatives");
    auto* curves = app.add_subcommand("curves", "detection-margin curves over alpha1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::fprintf(stderr, "error: parse_error: %s\n", e.what());
        return kConfig;
    }

    try {
        std::vector<std::string> overrides = sets;
        if (!out_dir.empty()) overrides.push_back("output.dir=" + out_dir);
        if (!formats.empty()) overrides.push_back("output.formats=" + formats);
        if (seed >= 0) overrides.push_back("simulation.seed=" + std::to_string(seed));
        if (reps >= 0) overrides.push_back("simulation.reps=" + std::to_string(reps));
        const RunConfig cfg =
            config_path.empty() ? parse_config_text("", overrides) : parse_config(config_path, overrides);

        std::vector<std::string> written;
        if (*asym) cmd_asymptotics(cfg);
        else if (*test) cmd_test(cfg, data_path, is_cov, which);
        else if (*size) written = run_sim(cfg, false, quiet);
        else if (*power) written = run_sim(cfg, true, quiet);
        else if (*curves) written = run_curves(cfg, quiet);
        for (const auto& w : written) std::fprintf(stderr, "wrote %s\n", w.c_str());
        return kOk;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s: %s\n", std::string(to_string(e.code())).c_str(), e.what());
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: internal: %s\n", e.what());
        return kNumeric;
    }
}
