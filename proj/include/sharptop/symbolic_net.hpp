#pragma once

#include <complex>
#include <vector>

#include "sharptop/extvals.hpp"
#include "sharptop/rational.hpp"

namespace sharptop {

/// One term c * eps^a of a monomial sum; normalized nets never store c = 0.
struct Monomial {
    QComplex coeff;
    Rational exponent;

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept = default;
};

/**
 * Finite monomial sum sum_i c_i eps^{a_i} representing a moderate net.
 *
 * Kept normalized: exponents strictly ascending, no zero coefficients,
 * the empty sum is the zero net. Within this class negligible nets are
 * exactly the zero net, so equality of generalized numbers is decidable.
 */
class SymbolicNet {
public:
    SymbolicNet() = default;
    explicit SymbolicNet(std::vector<Monomial> terms);

    static SymbolicNet zero() { return {}; }
    static SymbolicNet constant(QComplex c);
    static SymbolicNet monomial(QComplex c, Rational exponent);
    /// eps^k as a convenience for tests and the CLI.
    static SymbolicNet eps_power(Rational exponent) { return monomial(QComplex(Rational(1)), std::move(exponent)); }

    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// The leading (smallest-exponent) term; nullptr for the zero net.
    const Monomial* leading() const noexcept { return terms_.empty() ? nullptr : &terms_.front(); }

    /// Smallest exponent present, +inf for the zero net.
    ExtRat valuation() const;

    /// e^{-val}; exactly 0 for the zero net.
    double abs_e() const;

    std::complex<double> eval(double eps) const;

    /// Sum over terms of |re| + |im|: a rational bound with |u_eps| <= l1_bound * eps^{val}.
    Rational coeff_l1_sum() const;

    SymbolicNet scaled(const QComplex& c) const;
    /// Multiplication by eps^a.
    SymbolicNet shifted(const Rational& a) const;

    friend SymbolicNet operator+(const SymbolicNet& a, const SymbolicNet& b);
    friend SymbolicNet operator-(const SymbolicNet& a, const SymbolicNet& b);
    friend SymbolicNet operator-(const SymbolicNet& a);
    friend SymbolicNet operator*(const SymbolicNet& a, const SymbolicNet& b);

    friend bool operator==(const SymbolicNet& a, const SymbolicNet& b) noexcept = default;

private:
    friend SymbolicNet normalize(std::vector<Monomial> terms);

    std::vector<Monomial> terms_;
};

/// Canonical form of an arbitrary term list: merge exponents, drop zeros, sort.
SymbolicNet normalize(std::vector<Monomial> terms);

/**
 * Truncated multiplicative inverse: returns w with val(u*w - 1) > order.
 * Requires a nonzero leading coefficient; throws ZeroLeadingError on zero input.
 */
SymbolicNet invert_truncated(const SymbolicNet& u, const Rational& order);

/// Ultrametric distance |u - v|_e on normalized representatives.
double sharp_dist(const SymbolicNet& u, const SymbolicNet& v);

} // namespace sharptop
