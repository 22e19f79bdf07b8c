#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "spikelss/error.hpp"
#include "spikelss/montecarlo.hpp"
#include "spikelss/stat_tests.hpp"

namespace spikelss {

namespace report_detail {

inline std::string num(double x, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

inline void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
    out << body;
    if (!out) fail(ErrorCode::IoError, "write failed for " + path.string());
}

inline void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
}

}  // namespace report_detail

inline constexpr const char* kSimHeader = "test,dist,hypothesis,p,n,xi,alpha1,rate,stderr,reps";
inline constexpr const char* kCurveHeader = "alpha1,kappa_L,kappa_W,kappa_R";

inline std::string sim_csv(const SimReport& report) {
    using report_detail::num;
    std::string s = std::string(kSimHeader) + "\n";
    for (const auto& r : report.rows)
        s += to_string(r.test) + "," + to_string(r.dist) + "," + to_string(r.hypothesis) + "," +
             std::to_string(r.p) + "," + std::to_string(r.n) + "," + num(r.xi) + "," + num(r.alpha1) + "," +
             num(r.rate, "%.4f") + "," + num(r.standard_error, "%.4f") + "," + std::to_string(r.reps) + "\n";
    return s;
}

inline std::string curves_csv(const CurveData& c) {
    using report_detail::num;
    std::string s = std::string(kCurveHeader) + "\n";
    for (std::size_t i = 0; i < c.alpha1.size(); ++i)
        s += num(c.alpha1[i]) + "," + num(c.clrt[i], "%.8g") + "," + num(c.cntt[i], "%.8g") + "," +
             num(c.rlrt[i], "%.8g") + "\n";
    return s;
}

// Line chart with three series, axes, ticks and a legend.
inline std::string curves_svg(const CurveData& c, const std::string& title = "") {
    using report_detail::num;
    constexpr double W = 640, H = 420, left = 60, right = 20, top = 30, bottom = 50;
    const double pw = W - left - right, ph = H - top - bottom;
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!c.alpha1.empty()) {
        x0 = c.alpha1.front();
        x1 = c.alpha1.back();
        y0 = y1 = c.clrt.front();
        for (const auto* v : {&c.clrt, &c.cntt, &c.rlrt})
            for (double y : *v) {
                y0 = std::min(y0, y);
                y1 = std::max(y1, y);
            }
        if (x1 == x0) x1 = x0 + 1;
        if (y1 == y0) y1 = y0 + 1;
    }
    auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    auto sy = [&](double y) { return top + (y1 - y) / (y1 - y0) * ph; };

    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
                    "viewBox=\"0 0 640 420\" font-family=\"sans-serif\" font-size=\"11\">\n";
    s += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
    if (!title.empty())
        s += "<text x=\"320\" y=\"18\" text-anchor=\"middle\" font-size=\"13\">" + title + "</text>\n";
    s += "<g stroke=\"black\" stroke-width=\"1\">\n";
    s += "<line x1=\"" + num(left) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(left + pw) + "\" y2=\"" +
         num(top + ph) + "\"/>\n";
    s += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) + "\" y2=\"" +
         num(top + ph) + "\"/>\n</g>\n";
    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double xv = x0 + (x1 - x0) * i / ticks, yv = y0 + (y1 - y0) * i / ticks;
        s += "<text x=\"" + num(sx(xv), "%.2f") + "\" y=\"" + num(top + ph + 16, "%.2f") +
             "\" text-anchor=\"middle\">" + num(xv, "%.3g") + "</text>\n";
        s += "<text x=\"" + num(left - 6, "%.2f") + "\" y=\"" + num(sy(yv) + 4, "%.2f") +
             "\" text-anchor=\"end\">" + num(yv, "%.3g") + "</text>\n";
    }
    s += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(H - 10) + "\" text-anchor=\"middle\">alpha1</text>\n";

    struct Series {
        const std::vector<double>* ys;
        const char* label;
        const char* color;
    };
    const Series series[] = {{&c.clrt, "kappa_L", "#1f77b4"}, {&c.cntt, "kappa_W", "#d62728"},
                             {&c.rlrt, "kappa_R", "#2ca02c"}};
    for (const auto& se : series) {
        s += "<polyline fill=\"none\" stroke=\"" + std::string(se.color) + "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < c.alpha1.size(); ++i)
            s += (i ? " " : "") + num(sx(c.alpha1[i]), "%.2f") + "," + num(sy((*se.ys)[i]), "%.2f");
        s += "\"/>\n";
    }
    for (int i = 0; i < 3; ++i) {
        const double ly = top + 12 + 16 * i;
        s += "<line x1=\"" + num(left + pw - 90) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(left + pw - 70) +
             "\" y2=\"" + num(ly) + "\" stroke=\"" + series[i].color + "\" stroke-width=\"2\"/>\n";
        s += "<text x=\"" + num(left + pw - 64) + "\" y=\"" + num(ly + 4) + "\">" + series[i].label + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

inline std::set<std::string> parse_formats(const std::vector<std::string>& formats) {
    std::set<std::string> out;
    for (const auto& f : formats) {
        require(f == "csv" || f == "svg", ErrorCode::InvalidArgument, "unknown output format " + f);
        out.insert(f);
    }
    return out;
}

// Simulation tables have no chart; svg is ignored for them.
inline std::vector<std::string> emit_outputs(const SimReport& report, const std::filesystem::path& dir,
                                             const std::set<std::string>& formats,
                                             const std::string& stem = "report") {
    std::vector<std::string> written;
    if (!formats.count("csv")) return written;
    report_detail::ensure_dir(dir);
    const auto path = dir / (stem + ".csv");
    report_detail::write_file(path, sim_csv(report));
    written.push_back(path.string());
    return written;
}

inline std::vector<std::string> emit_outputs(const CurveData& curves, const std::filesystem::path& dir,
                                             const std::set<std::string>& formats,
                                             const std::string& stem = "curves", const std::string& title = "") {
    std::vector<std::string> written;
    report_detail::ensure_dir(dir);
    if (formats.count("csv")) {
        const auto path = dir / (stem + ".csv");
        report_detail::write_file(path, curves_csv(curves));
        written.push_back(path.string());
    }
    if (formats.count("svg")) {
        const auto path = dir / (stem + ".svg");
        report_detail::write_file(path, curves_svg(curves, title));
        written.push_back(path.string());
    }
    return written;
}

}  // namespace spikelss
