#pragma once

#include <variant>

#include "sharptop/piecewise_net.hpp"
#include "sharptop/symbolic_net.hpp"

namespace sharptop {

/**
 * An element of the ring of complex generalized numbers, represented exactly
 * as a finite monomial sum or piecewise on dyadic intervals.
 *
 * Immutable value type; all operations are pure.
 */
class GenScalar {
public:
    GenScalar() : rep_(SymbolicNet{}) {}
    GenScalar(SymbolicNet net) : rep_(std::move(net)) {}   // NOLINT: implicit by design
    GenScalar(PiecewiseNet net) : rep_(std::move(net)) {}  // NOLINT: implicit by design

    static GenScalar eps_power(Rational a) { return GenScalar(SymbolicNet::eps_power(std::move(a))); }
    static GenScalar constant(QComplex c) { return GenScalar(SymbolicNet::constant(std::move(c))); }

    bool is_symbolic() const noexcept { return std::holds_alternative<SymbolicNet>(rep_); }
    const SymbolicNet& symbolic() const { return std::get<SymbolicNet>(rep_); }
    const PiecewiseNet& piecewise() const { return std::get<PiecewiseNet>(rep_); }

    /// Piecewise view regardless of representation (symbolic lifts to depth 0).
    PiecewiseNet as_piecewise() const {
        return is_symbolic() ? PiecewiseNet(symbolic()) : piecewise();
    }

    bool is_zero() const {
        return is_symbolic() ? symbolic().is_zero() : piecewise().is_zero();
    }

    ExtRat valuation() const {
        return is_symbolic() ? symbolic().valuation() : piecewise().valuation();
    }

    double abs_e() const { return is_symbolic() ? symbolic().abs_e() : piecewise().abs_e(); }

    std::complex<double> eval(double eps) const {
        return is_symbolic() ? symbolic().eval(eps) : piecewise().eval(eps);
    }

    friend GenScalar operator+(const GenScalar& a, const GenScalar& b) {
        if (a.is_symbolic() && b.is_symbolic()) return GenScalar(a.symbolic() + b.symbolic());
        return GenScalar(a.as_piecewise() + b.as_piecewise());
    }
    friend GenScalar operator-(const GenScalar& a) {
        if (a.is_symbolic()) return GenScalar(-a.symbolic());
        return GenScalar(-a.piecewise());
    }
    friend GenScalar operator-(const GenScalar& a, const GenScalar& b) { return a + (-b); }
    friend GenScalar operator*(const GenScalar& a, const GenScalar& b) {
        if (a.is_symbolic() && b.is_symbolic()) return GenScalar(a.symbolic() * b.symbolic());
        return GenScalar(a.as_piecewise() * b.as_piecewise());
    }

    friend bool operator==(const GenScalar& a, const GenScalar& b) {
        if (a.is_symbolic() && b.is_symbolic()) return a.symbolic() == b.symbolic();
        return a.as_piecewise() == b.as_piecewise();
    }

private:
    std::variant<SymbolicNet, PiecewiseNet> rep_;
};

inline double sharp_dist(const GenScalar& u, const GenScalar& v) { return (u - v).abs_e(); }

} // namespace sharptop
