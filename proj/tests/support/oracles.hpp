#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace testsupport {

/**
 * Brute-force sup-b search over a dense b-grid against sampled |u_eps|.
 *
 * Independent numerical route for valuations: for each candidate b, decides
 * "|u_eps| = O(eps^b) as eps -> 0" by checking that |u_eps| eps^{-b} does not
 * grow across the deepest sampled window (split-max comparison with a 5%
 * slack), and returns the largest passing b. Resolution 1e-3.
 *
 * Returns +infinity when every deep sample underflows (negligible input).
 */
inline double brute_force_valuation(const std::function<double(double)>& abs_u,
                                    int deepest_k = 40, double b_lo = -10.0, double b_hi = 20.0,
                                    double step = 1e-3) {
    std::vector<std::pair<double, double>> kept; // (log eps, log |u|)
    for (int j = 0; j <= deepest_k; ++j) {
        const double eps = std::ldexp(1.0, -j);
        const double a = abs_u(eps);
        if (a > 1e-280) kept.emplace_back(-j * std::log(2.0), std::log(a));
    }
    if (kept.empty()) return std::numeric_limits<double>::infinity();

    const std::size_t window = (2 * kept.size() + 2) / 3;
    const std::size_t start = kept.size() - window;
    const std::size_t mid = start + window / 2;
    const double slack = std::log(1.05);

    double best = -std::numeric_limits<double>::infinity();
    for (double b = b_lo; b <= b_hi + 1e-12; b += step) {
        double shallow_max = -std::numeric_limits<double>::infinity();
        double deep_max = -std::numeric_limits<double>::infinity();
        for (std::size_t i = start; i < kept.size(); ++i) {
            const double log_m = kept[i].second - b * kept[i].first;
            (i < mid ? shallow_max : deep_max) = std::max(i < mid ? shallow_max : deep_max, log_m);
        }
        if (deep_max <= shallow_max + slack) best = b;
    }
    return best;
}

/// Least-squares slope of y against x; the regression oracle for estimators.
inline double regression_slope(const std::vector<std::pair<double, double>>& xy) {
    double sx = 0, sy = 0;
    for (auto& [x, y] : xy) {
        sx += x;
        sy += y;
    }
    const double n = static_cast<double>(xy.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (auto& [x, y] : xy) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    return sxy / sxx;
}

} // namespace testsupport
