#pragma once

#include <optional>

#include "sharptop/expr.hpp"
#include "sharptop/sampled.hpp"

namespace sharptop {

/// Axis-aligned compact box with exact rational endpoints.
struct CompactBox {
    std::vector<std::pair<Rational, Rational>> intervals;

    explicit CompactBox(std::vector<std::pair<Rational, Rational>> iv);
    static CompactBox interval(Rational a, Rational b) { return CompactBox({{std::move(a), std::move(b)}}); }

    std::size_t dim() const noexcept { return intervals.size(); }
    bool contains(const CompactBox& other) const;
    bool contains_point(std::span<const double> x) const;

    friend bool operator==(const CompactBox&, const CompactBox&) noexcept = default;
};

/// Uniform grid over the box, pts per axis (pts >= 2), endpoints included.
std::vector<std::vector<double>> box_grid(const CompactBox& box, int pts_per_axis);

/// All multi-indices alpha in N^n with |alpha| <= order.
std::vector<std::vector<int>> multi_indices(int n, int order);

/**
 * Table of the symbolic partial derivatives d^alpha u for |alpha| <= order.
 * Derivatives are exact so eps^{-j} factors appear exactly.
 */
class DerivTable {
public:
    DerivTable(const ExprNet& net, int dims, int order);
    const std::vector<std::pair<std::vector<int>, ExprNet>>& entries() const noexcept { return entries_; }

private:
    std::vector<std::pair<std::vector<int>, ExprNet>> entries_;
};

/**
 * p_{K,j} curve: for each eps_k the grid sup over x in K, |alpha| <= j of
 * |d^alpha u_eps(x)|. Feeding estimate_val gives the p_{K,j}-valuation.
 * The grid sup is a certified lower bound for the true sup.
 */
SampledNet seminorm_pKj(const ExprNet& net, const CompactBox& K, int j, int pts_per_axis,
                        const SampleGrid& grid);

/// Weighted sup curve with its domain-truncation diagnostic.
struct WeightedSupCurve {
    SampledNet values;
    bool truncation_warning; // shell value exceeded 1e-12 x interior max at some eps
    double shell_ratio;      // worst shell/interior ratio observed
};

/// Schwartz seminorm: sup over the truncated grid of (1+|x|)^k max_{|alpha|<=k} |d^alpha u|.
WeightedSupCurve schwartz_seminorm(const ExprNet& net, int k, const Rational& radius,
                                   int pts_per_axis, const SampleGrid& grid);

/// Tempered seminorm: sup of (1+|x|)^{-N} max_{|alpha|<=m} |d^alpha u|.
WeightedSupCurve gtau_seminorm(const ExprNet& net, int m, int N, const Rational& radius,
                               int pts_per_axis, const SampleGrid& grid);

/// A named seminorm evaluator on expression nets, used for regularity scans.
struct ExprSeminorm {
    std::string label;
    std::function<SampledNet(const ExprNet&)> apply;
};

ExprSeminorm make_pKj_seminorm(CompactBox K, int j, int pts_per_axis, SampleGrid grid);
ExprSeminorm make_schwartz_seminorm(int k, Rational radius, int pts_per_axis, SampleGrid grid);

enum class GinfVerdict { RegularUpToCap, DivergingOrders };

struct GinfResult {
    ValEstimate inf_val; // running infimum over the first `cap` seminorm valuations
    GinfVerdict verdict;
    std::vector<ValEstimate> per_seminorm;
};

/**
 * Regularity scan: estimates val_{p_i} for the first `cap` seminorms and
 * reports whether the infimum has stabilized (last two within 0.25) or keeps
 * dropping (candidate non-regular element).
 */
GinfResult ginf_val(const ExprNet& net, const std::vector<ExprSeminorm>& seminorms, int cap);

/// Expression net with a declared compact support (or none).
struct SupportedNet {
    ExprNet net;
    std::optional<CompactBox> support;
};

/**
 * Declares support after verifying it: samples |net| on a shell just outside
 * the box at several eps and requires every value below the negligibility
 * floor. Throws InvariantError when the declaration fails the check.
 */
SupportedNet make_supported(ExprNet net, CompactBox support, const SampleGrid& grid);

/// Unbounded declaration (no support check).
inline SupportedNet make_unsupported(ExprNet net) { return {std::move(net), std::nullopt}; }

enum class GcReason { Support, Seminorm };

struct GcVerdict {
    bool converges;
    std::optional<CompactBox> common_box; // witness box from the exhaustion
    std::optional<GcReason> reason;       // set when not convergent
    std::vector<double> member_valuations; // min over j of estimated val, +inf for negligible members
};

/**
 * Strict-limit convergence test for a sequence in G_c: the members must share
 * a common compact support drawn from `probe_boxes` and their seminorm
 * valuations must grow without bound along the sequence.
 */
GcVerdict gc_converges(const std::vector<SupportedNet>& seq, const std::vector<CompactBox>& probe_boxes,
                       int j_max, int pts_per_axis, const SampleGrid& grid);

/// Compactly supported generalized point: one real symbolic net per axis.
class GenPoint {
public:
    GenPoint(std::vector<SymbolicNet> coords, CompactBox witness, const SampleGrid& grid);

    const std::vector<SymbolicNet>& coords() const noexcept { return coords_; }
    bool compact_flag() const noexcept { return compact_flag_; }
    const CompactBox& witness() const noexcept { return witness_; }

private:
    std::vector<SymbolicNet> coords_;
    CompactBox witness_;
    bool compact_flag_;
};

/// Generalized point value u(x~) = [(u_eps(x_eps))_eps], sampled on the grid.
SampledNet point_value(const ExprNet& net, const GenPoint& pt, const SampleGrid& grid);

} // namespace sharptop
