#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "spikelss/core_types.hpp"
#include "spikelss/error.hpp"
#include "spikelss/test_function.hpp"

namespace spikelss {

// Inverse map of the companion Stieltjes transform:
//   psi(m) = -1/m + c * sum_i w_i t_i / (1 + t_i m),
// so that z = psi(m(z)). Also carries the derivatives used by the solver,
// the support search and the spike maps.
class InverseMap {
public:
    InverseMap(double c, const BulkSpec& bulk) : c_(c), atoms_(bulk.atoms()) {
        require(std::isfinite(c) && c > 0.0, ErrorCode::InvalidArgument, "ratio must be positive");
    }

    double ratio() const { return c_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    // Ratio seen by the nonzero atoms.
    double effective_ratio() const {
        double w = 0.0;
        for (const auto& a : atoms_)
            if (a.value > 0.0) w += a.weight;
        return c_ * w;
    }

    template <class T>
    T value(T m) const {
        T s = T(0);
        for (const auto& a : atoms_) s += a.weight * a.value / (1.0 + a.value * m);
        return -1.0 / m + c_ * s;
    }

    // d^k psi / dm^k for k = 1, 2, 3.
    template <class T>
    T derivative(T m, int order = 1) const {
        T s = T(0);
        const double sign = (order % 2 == 1) ? -1.0 : 1.0;
        double fact = 1.0;
        for (int k = 2; k <= order; ++k) fact *= k;
        for (const auto& a : atoms_) {
            T inv = 1.0 / (1.0 + a.value * m);
            T term = a.weight * std::pow(a.value, order + 1);
            for (int k = 0; k <= order; ++k) term *= inv;
            s += term;
        }
        T pole = T(1);
        for (int k = 0; k <= order; ++k) pole *= m;
        // d^k/dm^k (-1/m) = (-1)^{k+1} k! / m^{k+1}
        const double pole_sign = (order % 2 == 1) ? 1.0 : -1.0;
        return pole_sign * fact / pole + sign * fact * c_ * s;
    }

private:
    double c_;
    std::vector<Atom> atoms_;
};

struct StieltjesValue {
    cplx z;
    cplx m_underline;
    double residual;
};

struct SolverOptions {
    double tolerance = 1e-13;
    int max_newton = 80;
    int fixed_point_budget = 500;
};

namespace detail {

inline double solver_residual(const InverseMap& psi, cplx z, cplx m) {
    return std::abs(z - psi.value(m));
}

// A small residual still leaves an error of res/|psi'(m)|, which is large
// near the support edges; two plain Newton steps remove it.
inline cplx polish(const InverseMap& psi, cplx z, cplx m, bool upper) {
    for (int k = 0; k < 2; ++k) {
        const cplx d = psi.derivative(m);
        if (d == cplx(0.0)) break;
        const cplx trial = m - (psi.value(m) - z) / d;
        if (!std::isfinite(trial.real()) || !std::isfinite(trial.imag()) || (upper && !(trial.imag() > 0.0)) ||
            solver_residual(psi, z, trial) > 2.0 * solver_residual(psi, z, m))
            break;
        m = trial;
    }
    return m;
}

// Damped Newton from a start value; keeps Im m on the side of Im z.
inline std::optional<cplx> newton(const InverseMap& psi, cplx z, cplx m, const SolverOptions& opt) {
    const bool upper = z.imag() > 0.0;
    double res = solver_residual(psi, z, m);
    for (int it = 0; it < opt.max_newton; ++it) {
        const double scale = 1.0 + std::abs(z);
        if (res < opt.tolerance * scale) return polish(psi, z, m, upper);
        const cplx d = psi.derivative(m);
        if (d == cplx(0.0)) return std::nullopt;
        const cplx step = (psi.value(m) - z) / d;
        double lambda = 1.0;
        bool accepted = false;
        for (int half = 0; half < 40; ++half) {
            const cplx trial = m - lambda * step;
            const bool branch_ok = !upper || trial.imag() > 0.0;
            if (branch_ok && std::isfinite(trial.real()) && std::isfinite(trial.imag())) {
                const double r = solver_residual(psi, z, trial);
                if (r < res || r < opt.tolerance * scale) {
                    m = trial;
                    res = r;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if (!accepted) return res < 10.0 * opt.tolerance * scale ? std::optional<cplx>(m) : std::nullopt;
    }
    return res < 10.0 * opt.tolerance * (1.0 + std::abs(z)) ? std::optional<cplx>(m) : std::nullopt;
}

// m <- -1 / (z - c * sum w t / (1 + t m)) with Aitken extrapolation every third step.
inline std::optional<cplx> fixed_point(const InverseMap& psi, cplx z, cplx m, const SolverOptions& opt) {
    auto map = [&](cplx x) {
        cplx s = 0.0;
        for (const auto& a : psi.atoms()) s += a.weight * a.value / (1.0 + a.value * x);
        return -1.0 / (z - psi.ratio() * s);
    };
    for (int it = 0; it < opt.fixed_point_budget; ++it) {
        const cplx m1 = map(m);
        const cplx m2 = map(m1);
        const cplx denom = m2 - 2.0 * m1 + m;
        cplx next = m2;
        if (std::abs(denom) > 1e-300) {
            const cplx acc = m - (m1 - m) * (m1 - m) / denom;
            if (z.imag() <= 0.0 || acc.imag() > 0.0) next = acc;
        }
        if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) return std::nullopt;
        m = next;
        if (solver_residual(psi, z, m) < 1e-9 * (1.0 + std::abs(z))) return m;
    }
    return std::nullopt;
}

// Continuation in the imaginary part from a point far above the axis.
inline cplx continuation(const InverseMap& psi, cplx z, const SolverOptions& opt) {
    double scale = 1.0 + std::abs(z.real());
    for (const auto& a : psi.atoms()) scale = std::max(scale, a.value * (1.0 + psi.ratio()));
    const double top = std::max(10.0 * scale, z.imag());
    const double floor = z.imag() > 0.0 ? z.imag() : 1e-12 * scale;
    cplx m = -1.0 / cplx(z.real(), top);
    if (auto fp = fixed_point(psi, cplx(z.real(), top), m, opt)) m = *fp;
    double y = top;
    while (true) {
        const cplx zz(z.real(), y);
        auto next = newton(psi, zz, m, opt);
        if (!next) next = fixed_point(psi, zz, m, opt);
        if (!next) fail(ErrorCode::NoConvergence, "Stieltjes continuation stalled");
        m = *next;
        if (y <= floor) break;
        y = std::max(floor, y * 0.5);
    }
    return m;
}

}  // namespace detail

// Companion Stieltjes transform at z. For complex z the root with
// Im(m) Im(z) > 0; for real z outside the support the real root with
// psi'(m) > 0, reached by continuation from above the axis.
inline StieltjesValue stieltjes(cplx z, const InverseMap& psi, std::optional<cplx> warm = std::nullopt,
                                const SolverOptions& opt = {}) {
    if (z.imag() < 0.0) {
        std::optional<cplx> w;
        if (warm) w = std::conj(*warm);
        auto v = stieltjes(std::conj(z), psi, w, opt);
        return {z, std::conj(v.m_underline), v.residual};
    }
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), ErrorCode::InvalidArgument,
            "non-finite argument");
    require(std::abs(z) > 0.0, ErrorCode::ZeroArgument, "Stieltjes transform at z = 0");

    if (z.imag() > 0.0) {
        std::optional<cplx> m;
        if (warm && warm->imag() > 0.0) m = detail::newton(psi, z, *warm, opt);
        if (!m) m = detail::continuation(psi, z, opt);
        require(m->imag() > 0.0, ErrorCode::NoConvergence, "Stieltjes solver left the upper half plane");
        return {z, *m, detail::solver_residual(psi, z, *m)};
    }

    // Real axis.
    const double x = z.real();
    auto real_newton = [&](double start) -> std::optional<double> {
        double m = start;
        for (int it = 0; it < opt.max_newton; ++it) {
            const double g = psi.value(m) - x;
            if (std::abs(g) < opt.tolerance * (1.0 + std::abs(x))) return m;
            const double d = psi.derivative(m);
            if (!(d > 0.0)) return std::nullopt;
            m -= g / d;
            if (!std::isfinite(m)) return std::nullopt;
        }
        return std::nullopt;
    };
    std::optional<double> root;
    if (warm && std::abs(warm->imag()) == 0.0) root = real_newton(warm->real());
    if (!root) {
        const cplx near = detail::continuation(psi, cplx(x, 1e-9 * (1.0 + std::abs(x))), opt);
        if (std::abs(near.imag()) > 1e-5 * std::abs(near))
            fail(ErrorCode::OnSupport, "real argument lies on the spectral support");
        root = real_newton(near.real());
    }
    if (!root || !(psi.derivative(*root) > 0.0))
        fail(ErrorCode::OnSupport, "real argument lies on the spectral support");
    return {z, cplx(*root, 0.0), std::abs(psi.value(*root) - x)};
}

inline StieltjesValue stieltjes(cplx z, double c, const BulkSpec& bulk) {
    return stieltjes(z, InverseMap(c, bulk));
}

// m'(z) = 1/psi'(m), m'' = -psi'' m'^3, m''' = -psi''' m'^4 + 3 psi''^2 m'^5.
struct StieltjesJet {
    cplx m, d1, d2, d3;
};

inline StieltjesJet stieltjes_jet(const InverseMap& psi, cplx m) {
    const cplx p1 = psi.derivative(m, 1);
    const cplx p2 = psi.derivative(m, 2);
    const cplx p3 = psi.derivative(m, 3);
    const cplx d1 = 1.0 / p1;
    const cplx d2 = -p2 * d1 * d1 * d1;
    const cplx d3 = -p3 * std::pow(d1, 4) + 3.0 * p2 * p2 * std::pow(d1, 5);
    return {m, d1, d2, d3};
}

// Closed form for a unit population: root of z m^2 + (z + 1 - c) m + 1 = 0.
inline cplx stieltjes_identity(cplx z, double c) {
    require(c > 0.0, ErrorCode::InvalidArgument, "ratio must be positive");
    require(std::abs(z) > 0.0, ErrorCode::ZeroArgument, "Stieltjes transform at z = 0");
    const cplx disc = std::sqrt((z - 1.0 - c) * (z - 1.0 - c) - 4.0 * c);
    const cplx r1 = (-(z + 1.0 - c) + disc) / (2.0 * z);
    const cplx r2 = (-(z + 1.0 - c) - disc) / (2.0 * z);
    if (z.imag() > 0.0) return r1.imag() > r2.imag() ? r1 : r2;
    if (z.imag() < 0.0) return r1.imag() < r2.imag() ? r1 : r2;
    auto increasing = [c](cplx m) {
        return (1.0 / (m * m) - c / ((1.0 + m) * (1.0 + m))).real() > 0.0 &&
               std::abs(m.imag()) < 1e-14 * (1.0 + std::abs(m));
    };
    if (increasing(r1) && !increasing(r2)) return r1;
    if (increasing(r2) && !increasing(r1)) return r2;
    return r1.imag() >= r2.imag() ? r1 : r2;
}

struct Interval {
    double left;
    double right;
};

// Continuous part of the LSD support, from the sign pattern of psi' on the
// real gaps between the poles {0, -1/t}.
inline std::vector<Interval> support(const InverseMap& psi) {
    std::vector<double> poles{0.0};
    for (const auto& a : psi.atoms())
        if (a.value > 0.0) poles.push_back(-1.0 / a.value);
    std::sort(poles.begin(), poles.end());
    poles.erase(std::unique(poles.begin(), poles.end()), poles.end());

    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr int samples = 4000;
    std::vector<Interval> images;  // open intervals of the support complement

    auto d1 = [&](double m) { return psi.derivative(m); };
    auto refine = [&](double a, double b) {
        double fa = d1(a);
        for (int it = 0; it < 200 && std::abs(b - a) > 1e-15 * (1.0 + std::abs(a)); ++it) {
            const double mid = 0.5 * (a + b);
            const double fm = d1(mid);
            if ((fm > 0.0) == (fa > 0.0)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        return 0.5 * (a + b);
    };

    for (std::size_t g = 0; g <= poles.size(); ++g) {
        const double lo = g == 0 ? -inf : poles[g - 1];
        const double hi = g == poles.size() ? inf : poles[g];
        // Map s in (0, 1) onto the gap, clustering near the ends.
        auto at = [&](double s) {
            if (std::isinf(lo) && std::isinf(hi)) return std::tan(std::numbers::pi * (s - 0.5));
            if (std::isinf(lo)) return hi - (1.0 - s) / s;
            if (std::isinf(hi)) return lo + s / (1.0 - s);
            const double u = 0.5 - 0.5 * std::cos(std::numbers::pi * s);
            return lo + (hi - lo) * u;
        };
        std::vector<double> ms;
        for (int k = 1; k < samples; ++k) ms.push_back(at(static_cast<double>(k) / samples));
        std::sort(ms.begin(), ms.end());
        // psi is monotone on each run where psi' > 0; collect the runs.
        double run_start = std::nan("");
        bool in_run = false;
        auto edge_value = [&](double m, bool left_end) {
            if (std::isinf(m)) return 0.0;
            if (m == 0.0) return left_end ? -inf : inf;
            for (double p : poles)
                if (m == p) return left_end ? -inf : inf;
            return psi.value(m);
        };
        for (std::size_t k = 0; k < ms.size(); ++k) {
            const bool pos = d1(ms[k]) > 0.0;
            if (pos && !in_run) {
                run_start = k == 0 ? lo : refine(ms[k - 1], ms[k]);
                in_run = true;
            }
            if (!pos && in_run) {
                const double run_end = refine(ms[k - 1], ms[k]);
                images.push_back({edge_value(run_start, true), edge_value(run_end, false)});
                in_run = false;
            }
        }
        if (in_run) images.push_back({edge_value(run_start, true), edge_value(hi, false)});
    }

    std::sort(images.begin(), images.end(),
              [](const Interval& a, const Interval& b) { return a.left < b.left; });
    std::vector<Interval> out;
    double reach = -inf;
    for (const auto& iv : images) {
        if (iv.left > reach && std::isfinite(reach)) {
            const double left = std::max(reach, 0.0);
            if (iv.left - left > 1e-12 && iv.left > 0.0) out.push_back({left, iv.left});
        }
        reach = std::max(reach, iv.right);
    }
    return out;
}

inline std::vector<Interval> support(double c, const BulkSpec& bulk) {
    return support(InverseMap(c, bulk));
}

// Closed counterclockwise contour with trapezoid weights: an ellipse confocal
// with the support hull, z(theta) = center + h (rho e^{i theta} + e^{-i theta}/rho) / 2.
struct Contour {
    std::vector<cplx> nodes;
    std::vector<cplx> weights;  // includes dz, so sum_k w_k g(z_k) ~ integral of g dz
    double center = 0.0;
    double half_focal = 0.0;
    double rho = 1.0;

    double left_tip() const { return center - half_focal * 0.5 * (rho + 1.0 / rho); }
    double right_tip() const { return center + half_focal * 0.5 * (rho + 1.0 / rho); }

    template <class F>
    cplx integrate(F&& g) const {
        cplx s = 0.0;
        for (std::size_t k = 0; k < nodes.size(); ++k) s += weights[k] * g(nodes[k]);
        return s;
    }
};

inline Contour ellipse_contour(double left, double right, double rho, int nodes) {
    require(nodes >= 64 && nodes % 2 == 0, ErrorCode::InvalidArgument,
            "contour needs an even node count >= 64");
    require(right > left && rho > 1.0, ErrorCode::DegenerateSupport, "degenerate contour");
    Contour c;
    c.center = 0.5 * (left + right);
    c.half_focal = 0.5 * (right - left);
    c.rho = rho;
    c.nodes.resize(nodes);
    c.weights.resize(nodes);
    const double dtheta = 2.0 * std::numbers::pi / nodes;
    for (int k = 0; k < nodes; ++k) {
        const cplx e = std::polar(1.0, k * dtheta);
        c.nodes[k] = c.center + 0.5 * c.half_focal * (rho * e + 1.0 / (rho * e));
        c.weights[k] = 0.5 * c.half_focal * cplx(0.0, 1.0) * (rho * e - 1.0 / (rho * e)) * dtheta;
    }
    return c;
}

// Geometry shared by single and paired contours for one (c, H).
struct ContourPlan {
    double left = 0.0;   // hull of everything the contour must enclose
    double right = 0.0;
    double max_level = std::numeric_limits<double>::infinity();  // log rho where the origin sits
    bool encloses_origin = false;

    double level_for_margin(double margin) const {
        const double h = 0.5 * (right - left);
        const double q = 1.0 + margin / h;
        return std::log(q + std::sqrt(q * q - 1.0));
    }
};

// The origin is enclosed when the nonzero atoms see a ratio >= 1 (point mass
// of F at 0); otherwise it is kept outside, as is any mass created by zero atoms.
inline ContourPlan plan_contour(const InverseMap& psi) {
    const auto sup = support(psi);
    require(!sup.empty(), ErrorCode::DegenerateSupport, "empty spectral support");
    ContourPlan plan;
    plan.left = sup.front().left;
    plan.right = sup.back().right;
    if (psi.effective_ratio() >= 1.0) {
        plan.encloses_origin = true;
        plan.left = std::min(plan.left, 0.0);
    } else {
        const double x = (plan.left + plan.right) / (plan.right - plan.left);
        plan.max_level = std::log(x + std::sqrt(x * x - 1.0));
    }
    return plan;
}

struct ContourOptions {
    int nodes = 1024;
    double margin = 0.0;  // distance from the hull to the contour tips; 0 picks 0.5 * spread
};

// Single contour: tips at the requested margin, pulled in to half the
// admissible level when the origin must stay outside.
inline Contour build_contour(const InverseMap& psi, const ContourOptions& opt = {}) {
    require(opt.margin >= 0.0, ErrorCode::InvalidArgument, "contour margin must be positive");
    const auto plan = plan_contour(psi);
    const double margin = opt.margin > 0.0 ? opt.margin : 0.5 * (plan.right - plan.left);
    double level = plan.level_for_margin(margin);
    if (std::isfinite(plan.max_level)) level = std::min(level, 0.5 * plan.max_level);
    return ellipse_contour(plan.left, plan.right, std::exp(level), opt.nodes);
}

inline Contour build_contour(double c, const BulkSpec& bulk, double margin, int nodes) {
    return build_contour(InverseMap(c, bulk), ContourOptions{nodes, margin});
}

// Two nested non-intersecting contours for double integrals.
struct ContourPair {
    Contour inner;
    Contour outer;
};

inline ContourPair build_contour_pair(const InverseMap& psi, int nodes = 0, double margin = 0.0) {
    const auto plan = plan_contour(psi);
    double inner = 0.0;
    double outer = 0.0;
    if (std::isfinite(plan.max_level)) {
        inner = plan.max_level / 3.0;
        outer = 2.0 * plan.max_level / 3.0;
        if (margin > 0.0) {
            inner = std::min(inner, plan.level_for_margin(margin));
            outer = 0.5 * (inner + plan.max_level);
        }
    } else {
        inner = plan.level_for_margin(margin > 0.0 ? margin : 0.5 * (plan.right - plan.left));
        outer = 1.6 * inner;
    }
    if (nodes == 0) {
        const double rate = std::min({inner, outer - inner,
                                      std::isfinite(plan.max_level) ? plan.max_level - outer : inner});
        nodes = static_cast<int>(std::ceil(38.0 / rate));
        nodes = std::clamp(nodes + nodes % 2, 256, 4096);
    }
    return {ellipse_contour(plan.left, plan.right, std::exp(inner), nodes),
            ellipse_contour(plan.left, plan.right, std::exp(outer), nodes)};
}

// m, m' at every contour node, warm-started around the curve.
struct ContourField {
    const Contour* contour = nullptr;
    std::vector<cplx> m;
    std::vector<cplx> dm;
};

inline ContourField evaluate_on(const Contour& contour, const InverseMap& psi) {
    ContourField f;
    f.contour = &contour;
    const std::size_t n = contour.nodes.size();
    f.m.resize(n);
    f.dm.resize(n);
    std::optional<cplx> warm;
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = stieltjes(contour.nodes[k], psi, warm);
        warm = v.m_underline;
        f.m[k] = v.m_underline;
        f.dm[k] = 1.0 / psi.derivative(v.m_underline);
    }
    return f;
}

enum class Method { Auto, Contour };

inline void check_admissible(const TestFunction& f, const ContourPlan& plan, double c) {
    if (!f.needs_positive_axis()) return;
    require(!plan.encloses_origin && c < 1.0, ErrorCode::UnsupportedRatio,
            f.name() + " needs a ratio below 1");
}

// Integral of f against F^{c,H}: -(1/2 pi i) closed integral of f(z) m(z) dz with
// m = (m_underline + (1 - c)/z)/c.
inline double lsd_integral(const TestFunction& f, double c, const BulkSpec& bulk,
                           Method method = Method::Auto, const ContourOptions& opt = {}) {
    if (method == Method::Auto && bulk.is_identity()) {
        if (f.kind() == TestFunction::Kind::Quadratic) return c;
        if (f.kind() == TestFunction::Kind::LogRatio) {
            require(c < 1.0, ErrorCode::UnsupportedRatio, "f_L needs a ratio below 1");
            return 1.0 - (c - 1.0) / c * std::log1p(-c);
        }
    }
    const InverseMap psi(c, bulk);
    const auto plan = plan_contour(psi);
    check_admissible(f, plan, c);
    const auto contour = build_contour(psi, opt);
    require(!f.needs_positive_axis() || contour.left_tip() > 0.0, ErrorCode::BranchCut,
            "contour touches the negative half-axis");
    const auto field = evaluate_on(contour, psi);
    cplx s = 0.0;
    for (std::size_t k = 0; k < contour.nodes.size(); ++k) {
        const cplx z = contour.nodes[k];
        const cplx m = (field.m[k] + (1.0 - c) / z) / c;
        s += contour.weights[k] * f(z) * m;
    }
    return (-s / cplx(0.0, 2.0 * std::numbers::pi)).real();
}

}  // namespace spikelss
