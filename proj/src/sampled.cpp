#include "sharptop/sampled.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "sharptop/errors.hpp"

namespace sharptop {

SampleGrid::SampleGrid(int lo, int hi) : k_min(lo), k_max(hi) {
    if (!(k_min < k_max)) throw InvariantError("sample grid needs k_min < k_max");
    if (k_min < 0) throw InvariantError("sample grid points must lie in (0, 1]");
    if (k_max > 1060) throw InvariantError("sample grid deeper than double precision");
}

double SampleGrid::eps(int i) const noexcept {
    return std::ldexp(1.0, -(k_min + i));
}

SampledNet::SampledNet(SampleGrid grid, std::vector<std::complex<double>> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(grid_.size()))
        throw InvariantError("sampled net needs one value per grid point");
    for (const auto& v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NonFiniteError("sampled net construction");
}

SampledNet operator*(const SampledNet& a, const SampledNet& b) {
    if (!(a.grid_ == b.grid_)) throw InvariantError("sampled product requires matching grids");
    std::vector<std::complex<double>> out(a.values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.values_[i] * b.values_[i];
    return SampledNet(a.grid_, std::move(out));
}

SampledNet sample(const std::function<std::complex<double>(double)>& fn, const SampleGrid& grid) {
    std::vector<std::complex<double>> values(static_cast<std::size_t>(grid.size()));
    for (int i = 0; i < grid.size(); ++i) {
        std::complex<double> v = fn(grid.eps(i));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NonFiniteError("sampling at eps = 2^-" + std::to_string(grid.k(i)));
        values[static_cast<std::size_t>(i)] = v;
    }
    return SampledNet(grid, std::move(values));
}

SampledNet sample(const SymbolicNet& net, const SampleGrid& grid) {
    return sample([&](double eps) { return net.eval(eps); }, grid);
}

SampledNet sample(const PiecewiseNet& net, const SampleGrid& grid) {
    return sample([&](double eps) { return net.eval(eps); }, grid);
}

SampledNet sample(const GenScalar& net, const SampleGrid& grid) {
    return sample([&](double eps) { return net.eval(eps); }, grid);
}

ValEstimate fit_valuation(const std::vector<std::pair<double, double>>& eps_mag) {
    ValEstimate out;
    std::vector<std::pair<double, double>> pts; // (log eps, log |v|)
    for (const auto& [eps, mag] : eps_mag)
        if (mag >= kNegligibilityFloor) pts.emplace_back(std::log(eps), std::log(mag));

    if (pts.empty()) {
        out.infinite = true;
        return out;
    }
    if (pts.size() == 1) {
        // One usable point: report its pointwise order with no confidence.
        out.estimate = pts[0].second / pts[0].first;
        out.half_width = std::numeric_limits<double>::infinity();
        return out;
    }

    double sx = 0, sy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    const double n = static_cast<double>(pts.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    const double slope = sxy / sxx;
    double ss_res = 0;
    for (const auto& [x, y] : pts) {
        const double r = y - (my + slope * (x - mx));
        ss_res += r * r;
    }
    const double dof = n - 2.0;
    const double se = dof > 0 ? std::sqrt(ss_res / dof / sxx) : 0.0;
    out.estimate = slope;
    out.half_width = 2.0 * se;
    return out;
}

ValEstimate estimate_val(const SampledNet& net) {
    const SampleGrid& grid = net.grid();
    if (grid.size() < 6) throw InvariantError("valuation estimate needs at least 6 grid points");

    const int n = grid.size();
    const int window = (2 * n + 2) / 3; // ceil(2n/3)
    const int start = n - window;

    bool all_below = true;
    for (int i = start; i < n; ++i)
        if (std::abs(net.value(i)) >= kNegligibilityFloor) all_below = false;

    ValEstimate out;
    out.window_k_lo = grid.k(start);
    out.window_k_hi = grid.k(n - 1);
    if (all_below) {
        out.infinite = true;
        return out;
    }

    std::vector<std::pair<double, double>> pts;
    int usable = 0;
    for (int i = start; i < n; ++i) {
        double mag = std::abs(net.value(i));
        pts.emplace_back(grid.eps(i), mag);
        if (mag >= kNegligibilityFloor) ++usable;
    }
    // Extend the window shallower when underflowed points leave too few samples.
    for (int i = start - 1; i >= 0 && usable < 3; --i) {
        double mag = std::abs(net.value(i));
        if (mag >= kNegligibilityFloor) {
            pts.emplace_back(grid.eps(i), mag);
            ++usable;
            out.window_k_lo = grid.k(i);
        }
    }

    ValEstimate fit = fit_valuation(pts);
    fit.window_k_lo = out.window_k_lo;
    fit.window_k_hi = out.window_k_hi;
    return fit;
}

Classification classify(const SampledNet& net, int q_max) {
    ValEstimate v = estimate_val(net);
    if (v.infinite) return {NetClass::Negligible, q_max, v};
    if (v.estimate - v.half_width > static_cast<double>(q_max)) return {NetClass::Negligible, q_max, v};
    if (v.half_width / 2.0 > kUndecidedThreshold) return {NetClass::Undecided, 0, v};
    // the 1e-9 guard keeps exact powers from rounding up an extra order
    const double n_real = std::max(0.0, -v.estimate + v.half_width);
    return {NetClass::Moderate, static_cast<int>(std::ceil(n_real - 1e-9)), v};
}

void write_csv(std::ostream& out, const SampledNet& net) {
    out << "k,eps,value_re,value_im,magnitude\n";
    char buf[256];
    for (int i = 0; i < net.grid().size(); ++i) {
        const auto v = net.value(i);
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", net.grid().k(i),
                      net.grid().eps(i), v.real(), v.imag(), std::abs(v));
        out << buf;
    }
}

} // namespace sharptop
