#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spikelss/core_types.hpp"
#include "spikelss/error.hpp"
#include "spikelss/montecarlo.hpp"
#include "spikelss/spike_asymptotics.hpp"
#include "spikelss/stat_tests.hpp"

namespace spikelss {

inline bool operator==(const Atom& a, const Atom& b) { return a.value == b.value && a.weight == b.weight; }

// Everything the command line can be configured with. Sections of the file
// map onto the prefixes of the keys below.
struct RunConfig {
    // [dims]
    long p = 100;
    long n = 300;
    // [moments]
    DistKind dist = DistKind::Gaussian;
    std::optional<double> alpha_x;  // default from dist
    std::optional<double> beta_x;
    // [spikes]
    double alpha1 = 5.0;
    std::vector<double> multipliers{1.0};
    S2Mode s2_mode = S2Mode::Exact;
    double sweep_min = 2.2;
    double sweep_max = 50.0;
    long sweep_points = 200;
    // [bulk]
    std::vector<Atom> bulk{{1.0, 1.0}};
    // [simulation]
    long reps = 2000;
    std::uint64_t seed = 42;
    std::vector<double> xi{0.05};
    std::vector<DistKind> dists{DistKind::Gaussian};
    std::vector<Hypothesis> hypotheses{Hypothesis::H0};
    std::vector<std::pair<long, long>> sizes;  // empty: use [dims]
    std::vector<double> alpha1s{3.0};
    std::vector<TestKind> tests{TestKind::CLRT, TestKind::CNTT, TestKind::RLRT};
    U0Resample u0_resample = U0Resample::Cell;
    long threads = 0;
    // [output]
    std::string out_dir = "out";
    std::vector<std::string> formats{"csv", "svg"};

    MomentProfile moments() const {
        const auto base = moment_profile(dist);
        return MomentProfile::make(alpha_x.value_or(base.alpha), beta_x.value_or(base.beta));
    }
    Dims dims() const { return Dims(p, n, static_cast<long>(multipliers.size())); }
    BulkSpec bulk_spec() const { return BulkSpec::from_atoms(bulk); }
    SpikeSpec spikes() const { return SpikeSpec::from_multipliers(alpha1, multipliers); }

    SimConfig simulation() const {
        SimConfig s;
        s.dists = dists;
        s.hypotheses = hypotheses;
        s.sizes = sizes.empty() ? std::vector<std::pair<long, long>>{{p, n}} : sizes;
        s.xis = xi;
        s.alpha1s = alpha1s;
        s.tests = tests;
        s.replications = reps;
        s.seed = seed;
        s.u0_resample = u0_resample;
        s.threads = static_cast<unsigned>(threads);
        return s;
    }

    bool operator==(const RunConfig&) const = default;
};

namespace config_detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

[[noreturn]] inline void bad_value(const std::string& key, const std::string& why) {
    fail(ErrorCode::SchemaError, key + " " + why);
}

inline double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    bad_value(key, "must be a number, got '" + v + "'");
}

inline long to_long(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const long x = std::stol(v, &used);
        if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    bad_value(key, "must be an integer, got '" + v + "'");
}

inline long positive(const std::string& key, const std::string& v) {
    const long x = to_long(key, v);
    if (x <= 0) bad_value(key, "must be positive");
    return x;
}

template <class T, class F>
std::vector<T> list_of(const std::string& key, const std::string& v, F&& conv) {
    std::vector<T> out;
    for (const auto& item : split_list(v)) out.push_back(conv(key, item));
    if (out.empty()) bad_value(key, "must not be empty");
    return out;
}

// Wraps library parse errors so they name the key.
template <class F>
auto named(const std::string& key, const std::string& v, F&& parse) {
    try {
        return parse(v);
    } catch (const Error& e) {
        bad_value(key, "has invalid value '" + v + "'");
    }
}

inline std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& show) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + show(xs[i]);
    return s;
}

using Setter = void (*)(RunConfig&, const std::string& key, const std::string& value);

struct KeyDef {
    Setter set;
    const char* doc;
};

inline const std::map<std::string, KeyDef>& schema() {
    static const std::map<std::string, KeyDef> keys{
        {"dims.p", {[](RunConfig& c, const std::string& k, const std::string& v) { c.p = positive(k, v); },
                    "dimension (default 100)"}},
        {"dims.n", {[](RunConfig& c, const std::string& k, const std::string& v) { c.n = positive(k, v); },
                    "sample size (default 300)"}},
        {"moments.dist",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.dist = named(k, v, [](const std::string& s) { return parse_dist(s); });
          },
          "gaussian | gamma | uniform (default gaussian)"}},
        {"moments.alpha_x",
         {[](RunConfig& c, const std::string& k, const std::string& v) { c.alpha_x = to_double(k, v); },
          "override of alpha_x (default from dist)"}},
        {"moments.beta_x",
         {[](RunConfig& c, const std::string& k, const std::string& v) { c.beta_x = to_double(k, v); },
          "override of beta_x (default from dist)"}},
        {"spikes.alpha1",
         {[](RunConfig& c, const std::string& k, const std::string& v) { c.alpha1 = to_double(k, v); },
          "largest spike (default 5)"}},
        {"spikes.multipliers",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.multipliers = list_of<double>(k, v, to_double);
          },
          "spike sizes relative to alpha1 (default 1)"}},
        {"spikes.s2_mode",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              if (v == "exact") c.s2_mode = S2Mode::Exact;
              else if (v == "simplified") c.s2_mode = S2Mode::Simplified;
              else bad_value(k, "must be exact or simplified");
          },
          "exact | simplified (default exact)"}},
        {"spikes.sweep_min",
         {[](RunConfig& c, const std::string& k, const std::string& v) { c.sweep_min = to_double(k, v); },
          "curves: first alpha1 (default 2.2)"}},
        {"spikes.sweep_max",
         {[](RunConfig& c, const std::string& k, const std::string& v) { c.sweep_max = to_double(k, v); },
          "curves: last alpha1 (default 50)"}},
        {"spikes.sweep_points",
         {[](RunConfig& c, const std::string& k, const std::string& v) { c.sweep_points = positive(k, v); },
          "curves: grid size (default 200)"}},
        {"bulk.atoms",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.bulk = list_of<Atom>(k, v, [](const std::string& key, const std::string& item) {
                  const auto colon = item.find(':');
                  if (colon == std::string::npos) bad_value(key, "entries must be value:weight");
                  return Atom{to_double(key, trim(item.substr(0, colon))),
                              to_double(key, trim(item.substr(colon + 1)))};
              });
          },
          "population atoms value:weight, ... (default 1:1)"}},
        {"simulation.reps",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.reps = to_long(k, v);
              if (c.reps < 100) bad_value(k, "must be at least 100");
          },
          "replications per cell (default 2000)"}},
        {"simulation.seed",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              try {
                  std::size_t used = 0;
                  c.seed = std::stoull(v, &used);
                  if (used == v.size() && v[0] != '-') return;
              } catch (const std::exception&) {
              }
              bad_value(k, "must be an unsigned 64-bit integer");
          },
          "RNG seed (default 42)"}},
        {"simulation.xi",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.xi = list_of<double>(k, v, to_double);
              for (double x : c.xi)
                  if (!(x > 0.0 && x <= 0.5)) bad_value(k, "entries must lie in (0, 0.5]");
          },
          "significance levels (default 0.05)"}},
        {"simulation.dists",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.dists = list_of<DistKind>(k, v, [](const std::string& key, const std::string& s) {
                  return named(key, s, [](const std::string& t) { return parse_dist(t); });
              });
          },
          "data distributions (default gaussian)"}},
        {"simulation.hypotheses",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.hypotheses = list_of<Hypothesis>(k, v, [](const std::string& key, const std::string& s) {
                  return named(key, s, [](const std::string& t) { return parse_hypothesis(t); });
              });
          },
          "H0 .. H6 (default H0)"}},
        {"simulation.sizes",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.sizes = list_of<std::pair<long, long>>(k, v, [](const std::string& key, const std::string& s) {
                  const auto x = s.find('x');
                  if (x == std::string::npos) bad_value(key, "entries must be PxN");
                  return std::pair<long, long>{positive(key, s.substr(0, x)), positive(key, s.substr(x + 1))};
              });
          },
          "PxN pairs (default: dims)"}},
        {"simulation.alpha1",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.alpha1s = list_of<double>(k, v, to_double);
          },
          "alpha1 grid for alternatives (default 3)"}},
        {"simulation.tests",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.tests = list_of<TestKind>(k, v, [](const std::string& key, const std::string& s) {
                  return named(key, s, [](const std::string& t) { return parse_test(t); });
              });
          },
          "subset of CLRT, CNTT, RLRT (default all)"}},
        {"simulation.u0_resample",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              if (v == "cell") c.u0_resample = U0Resample::Cell;
              else if (v == "replication") c.u0_resample = U0Resample::Replication;
              else bad_value(k, "must be cell or replication");
          },
          "rotation redraw for H4-H6 (default cell)"}},
        {"simulation.threads",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.threads = to_long(k, v);
              if (c.threads < 0) bad_value(k, "must be nonnegative");
          },
          "worker threads, 0 = all cores (default 0)"}},
        {"output.dir",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              if (v.empty()) bad_value(k, "must not be empty");
              c.out_dir = v;
          },
          "output directory (default out)"}},
        {"output.formats",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.formats = list_of<std::string>(k, v, [](const std::string& key, const std::string& s) {
                  if (s != "csv" && s != "svg") bad_value(key, "entries must be csv or svg");
                  return s;
              });
          },
          "csv, svg (default both)"}},
    };
    return keys;
}

inline void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
    const auto& keys = schema();
    const auto it = keys.find(key);
    if (it == keys.end()) fail(ErrorCode::SchemaError, "unknown key " + key);
    it->second.set(cfg, key, value);
}

}  // namespace config_detail

// Cross-field checks once every value is in.
inline void validate(const RunConfig& cfg) {
    require(static_cast<long>(cfg.multipliers.size()) < cfg.p, ErrorCode::SchemaError,
            "spikes.multipliers has too many entries for dims.p");
    for (std::size_t i = 0; i < cfg.multipliers.size(); ++i) {
        require(cfg.multipliers[i] > 0.0, ErrorCode::SchemaError, "spikes.multipliers must be positive");
        if (i > 0)
            require(cfg.multipliers[i] < cfg.multipliers[i - 1], ErrorCode::SchemaError,
                    "spikes.multipliers must be strictly decreasing");
    }
    require(cfg.sweep_max > cfg.sweep_min, ErrorCode::SchemaError,
            "spikes.sweep_max must exceed spikes.sweep_min");
    require(cfg.sweep_points >= 2, ErrorCode::SchemaError, "spikes.sweep_points must be at least 2");
    try {
        (void)cfg.moments();
        (void)cfg.bulk_spec();
    } catch (const Error& e) {
        fail(ErrorCode::SchemaError, std::string("invalid moments or bulk: ") + e.what());
    }
    cfg.spikes().check_separation(cfg.dims(), cfg.bulk_spec());
}

// "key = value" lines under "[section]" headers; '#' starts a comment.
// Overrides are "section.key=value" and win over the file.
inline RunConfig parse_config_text(const std::string& text, const std::vector<std::string>& overrides = {}) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = config_detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3)
                fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": malformed section header");
            section = config_detail::trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": key outside a section");
        const auto key = config_detail::trim(line.substr(0, eq));
        if (key.empty()) fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": empty key");
        config_detail::apply(cfg, section + "." + key, config_detail::trim(line.substr(eq + 1)));
    }
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) fail(ErrorCode::ParseError, "override '" + o + "': expected key=value");
        config_detail::apply(cfg, config_detail::trim(o.substr(0, eq)), config_detail::trim(o.substr(eq + 1)));
    }
    validate(cfg);
    return cfg;
}

inline RunConfig parse_config(const std::string& path, const std::vector<std::string>& overrides = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), overrides);
}

// Canonical text form; parses back to an equal RunConfig.
inline std::string to_text(const RunConfig& c) {
    using config_detail::fmt;
    using config_detail::join;
    auto id = [](const std::string& s) { return s; };
    std::ostringstream os;
    os << "[dims]\np = " << c.p << "\nn = " << c.n << "\n\n";
    os << "[moments]\ndist = " << to_string(c.dist) << "\n";
    if (c.alpha_x) os << "alpha_x = " << fmt(*c.alpha_x) << "\n";
    if (c.beta_x) os << "beta_x = " << fmt(*c.beta_x) << "\n";
    os << "\n[spikes]\nalpha1 = " << fmt(c.alpha1) << "\nmultipliers = " << join(c.multipliers, fmt)
       << "\ns2_mode = " << (c.s2_mode == S2Mode::Exact ? "exact" : "simplified")
       << "\nsweep_min = " << fmt(c.sweep_min) << "\nsweep_max = " << fmt(c.sweep_max)
       << "\nsweep_points = " << c.sweep_points << "\n\n";
    os << "[bulk]\natoms = "
       << join(c.bulk, [](const Atom& a) { return fmt(a.value) + ":" + fmt(a.weight); }) << "\n\n";
    os << "[simulation]\nreps = " << c.reps << "\nseed = " << c.seed << "\nxi = " << join(c.xi, fmt)
       << "\ndists = " << join(c.dists, [](DistKind d) { return to_string(d); })
       << "\nhypotheses = " << join(c.hypotheses, [](Hypothesis h) { return to_string(h); });
    if (!c.sizes.empty())
        os << "\nsizes = "
           << join(c.sizes, [](const std::pair<long, long>& s) {
                  return std::to_string(s.first) + "x" + std::to_string(s.second);
              });
    os << "\nalpha1 = " << join(c.alpha1s, fmt)
       << "\ntests = " << join(c.tests, [](TestKind t) { return to_string(t); })
       << "\nu0_resample = " << (c.u0_resample == U0Resample::Cell ? "cell" : "replication")
       << "\nthreads = " << c.threads << "\n\n";
    os << "[output]\ndir = " << c.out_dir << "\nformats = " << join(c.formats, id) << "\n";
    return os.str();
}

}  // namespace spikelss
