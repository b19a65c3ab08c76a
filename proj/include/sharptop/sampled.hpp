#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "sharptop/gen_scalar.hpp"

namespace sharptop {

/// Negligibility floor: magnitudes below this count as zero for flagging.
inline constexpr double kNegligibilityFloor = 1e-300;

/// Residual standard error of the slope above which classify() reports Undecided.
inline constexpr double kUndecidedThreshold = 0.25;

/// Geometric grid eps_k = 2^{-k}, k in [k_min, k_max]; all points in (0, 1].
struct SampleGrid {
    int k_min;
    int k_max;

    SampleGrid(int lo, int hi);

    int size() const noexcept { return k_max - k_min + 1; }
    int k(int i) const noexcept { return k_min + i; }
    double eps(int i) const noexcept;

    friend bool operator==(const SampleGrid&, const SampleGrid&) noexcept = default;
};

/// Numeric samples of a net on a geometric eps-grid. Values are always finite.
class SampledNet {
public:
    SampledNet(SampleGrid grid, std::vector<std::complex<double>> values);

    const SampleGrid& grid() const noexcept { return grid_; }
    const std::vector<std::complex<double>>& values() const noexcept { return values_; }
    std::complex<double> value(int i) const { return values_[static_cast<std::size_t>(i)]; }

    /// Pointwise product; grids must match.
    friend SampledNet operator*(const SampledNet& a, const SampledNet& b);

private:
    SampleGrid grid_;
    std::vector<std::complex<double>> values_;
};

SampledNet sample(const SymbolicNet& net, const SampleGrid& grid);
SampledNet sample(const PiecewiseNet& net, const SampleGrid& grid);
SampledNet sample(const GenScalar& net, const SampleGrid& grid);
/// Samples a scalar closure of eps; throws NonFiniteError on NaN or infinity.
SampledNet sample(const std::function<std::complex<double>(double)>& fn, const SampleGrid& grid);

/**
 * Estimated valuation of a sampled net.
 *
 * `estimate` is the least-squares slope of log|value| against log eps over
 * the tail window (the deepest 2/3 of the grid); `half_width` is twice the
 * residual standard error of that slope. The infinite flag is set exactly
 * when every tail magnitude lies below the negligibility floor.
 */
struct ValEstimate {
    bool infinite = false;
    double estimate = 0.0;
    double half_width = 0.0;
    int window_k_lo = 0;
    int window_k_hi = 0;

    double value_or(double if_infinite) const noexcept { return infinite ? if_infinite : estimate; }
};

/// Log-log slope fit over explicit (eps, magnitude) points; used by estimate_val
/// and by functional nets sampled on pruned grids.
ValEstimate fit_valuation(const std::vector<std::pair<double, double>>& eps_mag);

/// Requires a grid of at least 6 points.
ValEstimate estimate_val(const SampledNet& net);

enum class NetClass { Moderate, Negligible, Undecided };

struct Classification {
    NetClass kind;
    int order; // N for Moderate, q_max for Negligible, unused for Undecided
    ValEstimate val;
};

Classification classify(const SampledNet& net, int q_max);

/// CSV rows (k, eps, value_re, value_im, magnitude), 17 significant digits.
void write_csv(std::ostream& out, const SampledNet& net);

} // namespace sharptop
