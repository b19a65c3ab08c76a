#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sharptop/gen_scalar.hpp"

namespace sharptop {

/// An element of the free module C~^n; scalars are 1-vectors.
using GenVec = std::vector<GenScalar>;

/**
 * Ultra-pseudo-seminorm P = e^{-val} specified through its valuation.
 *
 * Every seminorm built here comes from a valuation with exact rational
 * values, which keeps the seminorm laws testable without tolerances:
 * P(u+v) <= max(P(u), P(v)) and P(lambda u) = |lambda|_e P(u) for monomial
 * lambda are comparisons of rationals.
 */
class UltraSeminorm {
public:
    UltraSeminorm(std::string label, std::function<ExtRat(const GenVec&)> val)
        : label_(std::move(label)), val_(std::move(val)) {}

    const std::string& label() const noexcept { return label_; }

    ExtRat val(const GenVec& u) const { return val_(u); }
    double eval(const GenVec& u) const {
        ExtRat v = val_(u);
        return v.is_infinite() ? 0.0 : std::exp(-v.value().to_double());
    }

    /// |eps^shift * u_i|_e on the i-th coordinate.
    static UltraSeminorm abs_e_coord(std::size_t i, Rational shift = Rational(0));

    /// max_i |eps^{s_i} u_i|_e; the canonical ultra-pseudo-norm of C~^n.
    /// Empty `shifts` means all-zero weights.
    static UltraSeminorm max_ultranorm(std::size_t n, std::vector<Rational> shifts = {});

    bool is_max_form() const noexcept { return max_shifts_.has_value(); }
    const std::vector<Rational>& max_shifts() const { return *max_shifts_; }
    std::size_t max_dim() const { return max_dim_; }

private:
    std::string label_;
    std::function<ExtRat(const GenVec&)> val_;
    std::optional<std::vector<Rational>> max_shifts_;
    std::size_t max_dim_ = 0;
};

/// Ordered, nonempty family; index n weights the metric term 2^{-n}.
struct SeminormFamily {
    std::vector<UltraSeminorm> members;

    explicit SeminormFamily(std::vector<UltraSeminorm> m) : members(std::move(m)) {
        if (members.empty()) throw InvariantError("seminorm family must be nonempty");
    }
};

/// One scaled ball [(eps^shift)] { u : P(u) <= eta }.
struct BallSpec {
    UltraSeminorm seminorm;
    double eta;
    Rational shift;
};

/// Finite intersection of scaled seminorm balls; absolutely convex and absorbent.
struct ConvexSetSpec {
    std::vector<BallSpec> balls;

    explicit ConvexSetSpec(std::vector<BallSpec> b) : balls(std::move(b)) {
        if (balls.empty()) throw InvariantError("convex set spec must be nonempty");
        for (const auto& ball : balls)
            if (!(ball.eta > 0)) throw InvariantError("ball radius must be positive");
    }
};

/**
 * Gauge valuation val_A(u) = sup{ b : u in [(eps^b)] A }.
 * For one ball: -shift + log eta + val_P(u); intersections take the min.
 */
ExtReal gauge_val(const ConvexSetSpec& A, const GenVec& u);

/// P_A(u) = e^{-val_A(u)}.
double gauge_eval(const ConvexSetSpec& A, const GenVec& u);

/// Direct membership u in [(eps^b)] A, checked in the log domain so the
/// gauge chain inclusions are exact at double precision.
bool gauge_member_scaled(const ConvexSetSpec& A, const GenVec& u, double b);

/// d(u, v) = sum_n 2^{-n} min(P_n(u - v), 1); translation invariant.
double sharp_metric(const SeminormFamily& family, const GenVec& u, const GenVec& v);

struct BoundReport {
    bool bounded = true;
    std::vector<double> constants;         // C_n per seminorm (max over the probe set)
    std::optional<int> witness_index;      // generator index m for the unbounded case
    std::optional<std::string> witness_label;
    double witness_value = 0.0;
};

/// Per-seminorm bounds over a finite probe set (empty set: all C_n = 0).
BoundReport is_bounded(const std::vector<GenVec>& probes, const SeminormFamily& family);

/// Scans u_m = generator(m) for m = 0..scan_max and flags growth without bound.
BoundReport is_bounded_generated(const std::function<GenVec(int)>& generator, int scan_max,
                                 const SeminormFamily& family);

struct ContinuityReport {
    double C = 0.0;                 // max over probes of Q(Tu) / max_{i in I0} P_i(u)
    std::vector<std::size_t> violations; // probes with zero denominator and nonzero numerator
};

/**
 * Empirical constant for Q(Tu) <= C max_{i in I0} P_i(u) over a probe set,
 * computed in the valuation domain: C = exp(max over probes of
 * min_{i in I0} val_i(u) - val_Q(Tu)).
 */
ContinuityReport continuity_estimate(const std::function<GenVec(const GenVec&)>& T,
                                     const UltraSeminorm& Q, const SeminormFamily& family,
                                     const std::vector<std::size_t>& I0,
                                     const std::vector<GenVec>& probes);

/**
 * Quotient ultra-pseudo-seminorm for the coordinate submodule spanned by the
 * masked axes: Qdot([u]) = Q(u with masked coordinates zeroed), which attains
 * inf over the coset for max-type Q. Throws UnsupportedQError otherwise.
 */
ExtRat quotient_seminorm_val(const UltraSeminorm& Q, const std::vector<bool>& mask, const GenVec& u);
double quotient_seminorm(const UltraSeminorm& Q, const std::vector<bool>& mask, const GenVec& u);

} // namespace sharptop
