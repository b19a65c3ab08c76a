#pragma once

#include <complex>
#include <vector>

#include "sharptop/symbolic_net.hpp"

namespace sharptop {

/**
 * Net defined piecewise on dyadic intervals partitioning (0, 1].
 *
 * breakpoints b_0 = 1 > b_1 > ... > b_K > 0 (all dyadic); pieces[k] lives on
 * (b_{k+1}, b_k] and the tail on (0, b_K]. depth() == K == pieces().size().
 * A depth-0 net is a plain symbolic net seen on all of (0, 1].
 *
 * The reported valuation is the exact sup-O valuation of the piecewise
 * function: a piece supported away from 0 keeps sup |u_eps| eps^{-b} finite
 * for every b (its endpoints are positive), so it imposes no asymptotic
 * constraint and the minimum over pieces of the effective order reduces to
 * the tail's leading exponent.
 */
class PiecewiseNet {
public:
    PiecewiseNet() : breakpoints_{Rational(1)} {}
    explicit PiecewiseNet(SymbolicNet tail) : breakpoints_{Rational(1)}, tail_(std::move(tail)) {}
    PiecewiseNet(std::vector<Rational> breakpoints, std::vector<SymbolicNet> pieces, SymbolicNet tail);

    int depth() const noexcept { return static_cast<int>(pieces_.size()); }
    const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
    const std::vector<SymbolicNet>& pieces() const noexcept { return pieces_; }
    const SymbolicNet& tail() const noexcept { return tail_; }

    /// The symbolic piece active at eps (0 < eps <= 1).
    const SymbolicNet& piece_at(const Rational& eps) const;

    std::complex<double> eval(double eps) const;

    ExtRat valuation() const { return tail_.valuation(); }
    double abs_e() const { return tail_.abs_e(); }

    bool is_zero() const;

    friend PiecewiseNet operator+(const PiecewiseNet& a, const PiecewiseNet& b);
    friend PiecewiseNet operator-(const PiecewiseNet& a);
    friend PiecewiseNet operator-(const PiecewiseNet& a, const PiecewiseNet& b) { return a + (-b); }
    friend PiecewiseNet operator*(const PiecewiseNet& a, const PiecewiseNet& b);

    friend bool operator==(const PiecewiseNet& a, const PiecewiseNet& b) noexcept = default;

private:
    std::vector<Rational> breakpoints_;
    std::vector<SymbolicNet> pieces_;
    SymbolicNet tail_;
};

/**
 * Constructive limit of a Cauchy sequence satisfying val(seq[k+1]-seq[k]) > k.
 *
 * Patches the differences on dyadic intervals eps_k = min(2^{-k}, t_k) where
 * t_k is a dyadic below which an exact coefficient comparison certifies
 * |seq[k+1]-seq[k]|(eps) <= eps^k. The result u satisfies
 * val(seq[k] - u) >= k - 1 for 1 <= k <= depth.
 *
 * Throws GapViolationError(k) when the valuation gap condition fails.
 */
PiecewiseNet cauchy_patch_limit(const std::vector<SymbolicNet>& seq, int depth);

} // namespace sharptop
