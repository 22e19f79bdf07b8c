#pragma once

#include <math.h>  // boost 1.74 pchip calls unqualified isnan

#include <cmath>
#include <vector>

#include <boost/math/interpolators/pchip.hpp>

#include "spikelss/detail/tw1_table.hpp"
#include "spikelss/error.hpp"

namespace spikelss {

namespace detail {

// Monotone interpolants over the embedded table. The quantile side works in
// log-probability: log F on the lower half, log(1 - F) on the upper half.
struct Tw1Interpolants {
    boost::math::interpolators::pchip<std::vector<double>> cdf;
    boost::math::interpolators::pchip<std::vector<double>> lower;  // log F -> s
    boost::math::interpolators::pchip<std::vector<double>> upper;  // -log(1 - F) -> s
    double lower_min, lower_max, upper_min, upper_max;

    static Tw1Interpolants build() {
        std::vector<double> s, F;
        std::vector<double> lo_x, lo_y, up_x, up_y;
        for (int i = 0; i < kTw1GridSize; ++i) {
            const double x = kTw1GridMin + kTw1GridStep * i;
            s.push_back(x);
            F.push_back(kTw1Table[i][0]);
            if (kTw1Table[i][0] <= 0.6) {
                lo_x.push_back(std::log(kTw1Table[i][0]));
                lo_y.push_back(x);
            }
            if (kTw1Table[i][1] <= 0.6) {
                up_x.push_back(-std::log(kTw1Table[i][1]));
                up_y.push_back(x);
            }
        }
        const double lmin = lo_x.front(), lmax = lo_x.back();
        const double umin = up_x.front(), umax = up_x.back();
        return {boost::math::interpolators::pchip<std::vector<double>>(std::move(s), std::move(F)),
                boost::math::interpolators::pchip<std::vector<double>>(std::move(lo_x), std::move(lo_y)),
                boost::math::interpolators::pchip<std::vector<double>>(std::move(up_x), std::move(up_y)),
                lmin, lmax, umin, umax};
    }
};

inline const Tw1Interpolants& tw1_interpolants() {
    static const Tw1Interpolants table = Tw1Interpolants::build();
    return table;
}

}  // namespace detail

inline constexpr double kTw1MinProb = 0.005;
inline constexpr double kTw1MaxProb = 0.9999;

inline double tw1_cdf(double s) {
    const double lo = detail::kTw1GridMin;
    const double hi = detail::kTw1GridMin + detail::kTw1GridStep * (detail::kTw1GridSize - 1);
    require(s >= lo && s <= hi, ErrorCode::OutOfRange, "argument outside the TW1 table");
    return detail::tw1_interpolants().cdf(s);
}

// Upper end included so the 1e-4 level is usable.
inline double tw1_quantile(double prob) {
    require(prob > kTw1MinProb && prob <= kTw1MaxProb, ErrorCode::OutOfRange,
            "TW1 quantile probability outside (0.005, 0.9999]");
    const auto& t = detail::tw1_interpolants();
    if (prob <= 0.5) {
        const double x = std::log(prob);
        require(x >= t.lower_min && x <= t.lower_max, ErrorCode::OutOfRange, "outside TW1 table");
        return t.lower(x);
    }
    const double x = -std::log1p(-prob);
    require(x >= t.upper_min && x <= t.upper_max, ErrorCode::OutOfRange, "outside TW1 table");
    return t.upper(x);
}

}  // namespace spikelss
