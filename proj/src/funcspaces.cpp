#include "sharptop/funcspaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sharptop/errors.hpp"

namespace sharptop {

CompactBox::CompactBox(std::vector<std::pair<Rational, Rational>> iv) : intervals(std::move(iv)) {
    if (intervals.empty()) throw InvariantError("compact box needs at least one axis");
    for (const auto& [a, b] : intervals)
        if (b < a) throw InvariantError("compact box interval has a > b");
}

bool CompactBox::contains(const CompactBox& other) const {
    if (dim() != other.dim()) return false;
    for (std::size_t i = 0; i < intervals.size(); ++i)
        if (other.intervals[i].first < intervals[i].first ||
            intervals[i].second < other.intervals[i].second)
            return false;
    return true;
}

bool CompactBox::contains_point(std::span<const double> x) const {
    if (x.size() != dim()) return false;
    for (std::size_t i = 0; i < intervals.size(); ++i)
        if (x[i] < intervals[i].first.to_double() || x[i] > intervals[i].second.to_double())
            return false;
    return true;
}

std::vector<std::vector<double>> box_grid(const CompactBox& box, int pts_per_axis) {
    if (pts_per_axis < 2) throw InvariantError("box grid needs at least 2 points per axis");
    const std::size_t n = box.dim();
    std::vector<std::vector<double>> axes(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = box.intervals[i].first.to_double();
        double b = box.intervals[i].second.to_double();
        axes[i].resize(static_cast<std::size_t>(pts_per_axis));
        for (int p = 0; p < pts_per_axis; ++p)
            axes[i][static_cast<std::size_t>(p)] = a + (b - a) * p / (pts_per_axis - 1);
    }
    std::vector<std::vector<double>> points;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = axes[i][idx[i]];
        points.push_back(std::move(x));
        std::size_t axis = 0;
        while (axis < n && ++idx[axis] == axes[axis].size()) {
            idx[axis] = 0;
            ++axis;
        }
        if (axis == n) break;
    }
    return points;
}

std::vector<std::vector<int>> multi_indices(int n, int order) {
    std::vector<std::vector<int>> out;
    std::vector<int> alpha(static_cast<std::size_t>(std::max(n, 1)), 0);
    // n = 0 (pure eps nets) still gets the empty derivative alpha = 0.
    if (n <= 0) return {std::vector<int>{}};

    std::function<void(int, int)> rec = [&](int axis, int budget) {
        if (axis == n) {
            out.push_back(alpha);
            return;
        }
        for (int a = 0; a <= budget; ++a) {
            alpha[static_cast<std::size_t>(axis)] = a;
            rec(axis + 1, budget - a);
        }
        alpha[static_cast<std::size_t>(axis)] = 0;
    };
    rec(0, order);
    return out;
}

DerivTable::DerivTable(const ExprNet& net, int dims, int order) {
    for (const auto& alpha : multi_indices(dims, order)) {
        ExprNet d = net;
        for (std::size_t axis = 0; axis < alpha.size(); ++axis)
            for (int r = 0; r < alpha[axis]; ++r) d = d.differentiate(static_cast<int>(axis));
        entries_.emplace_back(alpha, std::move(d));
    }
}

namespace {

double grid_sup(const DerivTable& derivs, const std::vector<std::vector<double>>& points, double eps,
                const std::function<double(std::span<const double>)>& weight) {
    double sup = 0.0;
    for (const auto& x : points) {
        const double w = weight ? weight(x) : 1.0;
        for (const auto& [alpha, d] : derivs.entries()) {
            double v = std::abs(d.eval(x, eps)) * w;
            if (std::isnan(v)) throw NonFiniteError("grid sup evaluation");
            sup = std::max(sup, v);
        }
    }
    if (!std::isfinite(sup)) throw NonFiniteError("grid sup evaluation");
    return sup;
}

} // namespace

SampledNet seminorm_pKj(const ExprNet& net, const CompactBox& K, int j, int pts_per_axis,
                        const SampleGrid& grid) {
    if (j < 0) throw InvariantError("derivative order must be nonnegative");
    const int dims = std::max(net.dim(), static_cast<int>(K.dim()));
    if (static_cast<int>(K.dim()) < net.dim())
        throw DimMismatchError(static_cast<std::size_t>(net.dim()), K.dim());
    DerivTable derivs(net, dims, j);
    auto points = box_grid(K, pts_per_axis);
    std::vector<std::complex<double>> values(static_cast<std::size_t>(grid.size()));
    for (int i = 0; i < grid.size(); ++i)
        values[static_cast<std::size_t>(i)] = grid_sup(derivs, points, grid.eps(i), nullptr);
    return SampledNet(grid, std::move(values));
}

namespace {

enum class ShellCheck {
    Decay,  // weighted value must vanish at the shell (Schwartz class)
    Plateau // weighted value must stop growing at the shell (tempered class)
};

WeightedSupCurve weighted_sup(const ExprNet& net, int deriv_order, double weight_power,
                              const Rational& radius, int pts_per_axis, const SampleGrid& grid,
                              ShellCheck check) {
    const int dims = std::max(net.dim(), 1);
    std::vector<std::pair<Rational, Rational>> iv(static_cast<std::size_t>(dims),
                                                  {-radius, radius});
    CompactBox domain(std::move(iv));
    DerivTable derivs(net, dims, deriv_order);
    auto points = box_grid(domain, pts_per_axis);

    const double r = radius.to_double();
    const double step = 2.0 * r / (pts_per_axis - 1);
    auto weight = [weight_power](std::span<const double> x) {
        double norm2 = 0.0;
        for (double xi : x) norm2 += xi * xi;
        return std::pow(1.0 + std::sqrt(norm2), weight_power);
    };
    auto radius_of = [](std::span<const double> x) {
        double m = 0.0;
        for (double xi : x) m = std::max(m, std::abs(xi));
        return m;
    };

    std::vector<std::vector<double>> interior, shell, mid;
    for (auto& x : points) {
        const double rx = radius_of(x);
        if (rx > r - step / 2) shell.push_back(x);
        else interior.push_back(x);
        if (std::abs(rx - r / 2) <= step) mid.push_back(x);
    }

    std::vector<std::complex<double>> values(static_cast<std::size_t>(grid.size()));
    double worst_ratio = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
        const double eps = grid.eps(i);
        double inner = grid_sup(derivs, interior, eps, weight);
        double edge = grid_sup(derivs, shell, eps, weight);
        values[static_cast<std::size_t>(i)] = std::max(inner, edge);
        double reference = check == ShellCheck::Decay ? inner : grid_sup(derivs, mid, eps, weight);
        if (reference > 0.0) worst_ratio = std::max(worst_ratio, edge / reference);
        else if (edge > 0.0) worst_ratio = std::numeric_limits<double>::infinity();
    }
    const double threshold = check == ShellCheck::Decay ? 1e-12 : 1.5;
    return {SampledNet(grid, std::move(values)), worst_ratio > threshold, worst_ratio};
}

} // namespace

WeightedSupCurve schwartz_seminorm(const ExprNet& net, int k, const Rational& radius,
                                   int pts_per_axis, const SampleGrid& grid) {
    if (k < 0) throw InvariantError("Schwartz seminorm index must be nonnegative");
    return weighted_sup(net, k, static_cast<double>(k), radius, pts_per_axis, grid,
                        ShellCheck::Decay);
}

WeightedSupCurve gtau_seminorm(const ExprNet& net, int m, int N, const Rational& radius,
                               int pts_per_axis, const SampleGrid& grid) {
    if (m < 0 || N < 0) throw InvariantError("tempered seminorm indices must be nonnegative");
    return weighted_sup(net, m, -static_cast<double>(N), radius, pts_per_axis, grid,
                        ShellCheck::Plateau);
}

ExprSeminorm make_pKj_seminorm(CompactBox K, int j, int pts_per_axis, SampleGrid grid) {
    std::string label = "p_{K," + std::to_string(j) + "}";
    return {label, [K = std::move(K), j, pts_per_axis, grid](const ExprNet& net) {
                return seminorm_pKj(net, K, j, pts_per_axis, grid);
            }};
}

ExprSeminorm make_schwartz_seminorm(int k, Rational radius, int pts_per_axis, SampleGrid grid) {
    std::string label = "p_S," + std::to_string(k);
    return {label, [k, radius = std::move(radius), pts_per_axis, grid](const ExprNet& net) {
                return schwartz_seminorm(net, k, radius, pts_per_axis, grid).values;
            }};
}

GinfResult ginf_val(const ExprNet& net, const std::vector<ExprSeminorm>& seminorms, int cap) {
    if (cap < 1 || static_cast<std::size_t>(cap) > seminorms.size())
        throw InvariantError("regularity cap must address listed seminorms");
    GinfResult result;
    ValEstimate running;
    running.infinite = true;
    double prev_inf = std::numeric_limits<double>::infinity();
    double last_inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cap; ++i) {
        ValEstimate v = estimate_val(seminorms[static_cast<std::size_t>(i)].apply(net));
        result.per_seminorm.push_back(v);
        if (!v.infinite && (running.infinite || v.estimate < running.estimate)) running = v;
        prev_inf = last_inf;
        last_inf = running.infinite ? std::numeric_limits<double>::infinity() : running.estimate;
    }
    result.inf_val = running;
    const bool stabilized =
        (std::isinf(prev_inf) && std::isinf(last_inf)) || std::abs(last_inf - prev_inf) <= 0.25;
    result.verdict = stabilized ? GinfVerdict::RegularUpToCap : GinfVerdict::DivergingOrders;
    return result;
}

namespace {

// Points just outside the box: face centers and corners of the 10%-inflated box.
std::vector<std::vector<double>> shell_points(const CompactBox& box) {
    const std::size_t n = box.dim();
    std::vector<double> lo(n), hi(n), mid(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = box.intervals[i].first.to_double();
        double b = box.intervals[i].second.to_double();
        double pad = 0.1 * std::max(1.0, (b - a) / 2.0);
        lo[i] = a - pad;
        hi[i] = b + pad;
        mid[i] = (a + b) / 2.0;
    }
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < n; ++i) {
        auto face_lo = mid, face_hi = mid;
        face_lo[i] = lo[i];
        face_hi[i] = hi[i];
        pts.push_back(face_lo);
        pts.push_back(face_hi);
    }
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<double> corner(n);
        for (std::size_t i = 0; i < n; ++i) corner[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        pts.push_back(std::move(corner));
    }
    return pts;
}

} // namespace

SupportedNet make_supported(ExprNet net, CompactBox support, const SampleGrid& grid) {
    if (static_cast<int>(support.dim()) < net.dim())
        throw DimMismatchError(static_cast<std::size_t>(net.dim()), support.dim());
    auto pts = shell_points(support);
    const int probes[] = {0, grid.size() / 2, grid.size() - 1};
    for (const auto& x : pts) {
        for (int i : probes) {
            double v = std::abs(net.eval(x, grid.eps(i)));
            if (std::isnan(v)) throw NonFiniteError("support shell check");
            if (v >= kNegligibilityFloor)
                throw InvariantError("declared support misses mass on the test shell");
        }
    }
    return {std::move(net), std::move(support)};
}

GcVerdict gc_converges(const std::vector<SupportedNet>& seq, const std::vector<CompactBox>& probe_boxes,
                       int j_max, int pts_per_axis, const SampleGrid& grid) {
    GcVerdict verdict{false, std::nullopt, std::nullopt, {}};
    if (seq.empty()) throw InvariantError("convergence test needs a nonempty sequence");

    for (const auto& member : seq) {
        if (!member.support.has_value()) {
            verdict.reason = GcReason::Support;
            return verdict;
        }
    }
    const CompactBox* common = nullptr;
    for (const auto& probe : probe_boxes) {
        bool all_in = std::all_of(seq.begin(), seq.end(), [&](const SupportedNet& m) {
            return probe.contains(*m.support);
        });
        if (all_in) {
            common = &probe;
            break;
        }
    }
    if (common == nullptr) {
        verdict.reason = GcReason::Support;
        return verdict;
    }
    verdict.common_box = *common;

    // val_{K,j} computed through the common enclosing box.
    for (const auto& member : seq) {
        double vmin = std::numeric_limits<double>::infinity();
        for (int j = 0; j <= j_max; ++j) {
            ValEstimate v = estimate_val(seminorm_pKj(member.net, *common, j, pts_per_axis, grid));
            if (!v.infinite) vmin = std::min(vmin, v.estimate);
        }
        verdict.member_valuations.push_back(vmin);
    }

    bool all_negligible = std::all_of(verdict.member_valuations.begin(), verdict.member_valuations.end(),
                                      [](double v) { return std::isinf(v); });
    if (all_negligible) {
        verdict.converges = true;
        return verdict;
    }

    // Growth test on the valuation sequence: replace negligible members by a
    // large finite stand-in and require a clearly positive trend.
    double finite_max = 0.0;
    for (double v : verdict.member_valuations)
        if (!std::isinf(v)) finite_max = std::max(finite_max, v);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t m = 0; m < verdict.member_valuations.size(); ++m) {
        double v = verdict.member_valuations[m];
        pts.emplace_back(static_cast<double>(m), std::isinf(v) ? finite_max + 10.0 : v);
    }
    double sx = 0, sy = 0;
    for (auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    double mx = sx / static_cast<double>(pts.size()), my = sy / static_cast<double>(pts.size());
    double sxx = 0, sxy = 0;
    for (auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    double slope = sxx > 0 ? sxy / sxx : 0.0;
    if (slope >= 0.5 && pts.back().second >= pts.front().second + 0.5) {
        verdict.converges = true;
    } else {
        verdict.reason = GcReason::Seminorm;
    }
    return verdict;
}

GenPoint::GenPoint(std::vector<SymbolicNet> coords, CompactBox witness, const SampleGrid& grid)
    : coords_(std::move(coords)), witness_(std::move(witness)) {
    if (coords_.empty()) throw InvariantError("generalized point needs coordinates");
    if (coords_.size() != witness_.dim())
        throw DimMismatchError(coords_.size(), witness_.dim());
    for (const auto& c : coords_)
        for (const auto& t : c.terms())
            if (!t.coeff.im.is_zero())
                throw InvariantError("generalized point coordinates must be real");

    // Compactness witness: samples on the deeper half of the grid stay in the box.
    compact_flag_ = true;
    std::vector<double> x(coords_.size());
    for (int i = grid.size() / 2; i < grid.size(); ++i) {
        for (std::size_t c = 0; c < coords_.size(); ++c)
            x[c] = coords_[c].eval(grid.eps(i)).real();
        if (!witness_.contains_point(x)) {
            compact_flag_ = false;
            break;
        }
    }
}

SampledNet point_value(const ExprNet& net, const GenPoint& pt, const SampleGrid& grid) {
    if (!pt.compact_flag())
        throw InvariantError("point value needs a compactly supported generalized point");
    if (static_cast<int>(pt.coords().size()) < net.dim())
        throw DimMismatchError(static_cast<std::size_t>(net.dim()), pt.coords().size());
    std::vector<double> x(pt.coords().size());
    return sample(
        [&](double eps) {
            for (std::size_t c = 0; c < pt.coords().size(); ++c)
                x[c] = pt.coords()[c].eval(eps).real();
            return std::complex<double>(net.eval(x, eps), 0.0);
        },
        grid);
}

} // namespace sharptop
