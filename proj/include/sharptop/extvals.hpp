#pragma once

#include <limits>

#include "sharptop/rational.hpp"

namespace sharptop {

/**
 * Exact valuation value: a rational or the +infinity marker.
 *
 * The marker is a distinct state, never a floating sentinel; arithmetic on
 * infinities is absorbing for the operations a valuation supports.
 */
class ExtRat {
public:
    ExtRat() : inf_(true) {}
    ExtRat(Rational v) : inf_(false), value_(std::move(v)) {} // NOLINT: implicit by design
    static ExtRat infinity() { return ExtRat(); }

    bool is_infinite() const noexcept { return inf_; }
    const Rational& value() const {
        if (inf_) throw InvariantError("reading the value of an infinite valuation");
        return value_;
    }

    double to_double() const noexcept {
        return inf_ ? std::numeric_limits<double>::infinity() : value_.to_double();
    }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRat(a.value_ + b.value_);
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) noexcept {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.value_ == b.value_;
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) noexcept {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) noexcept { return !(b < a); }
    friend bool operator>(const ExtRat& a, const ExtRat& b) noexcept { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) noexcept { return !(a < b); }

    friend ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }
    friend ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

    std::string str() const { return inf_ ? "inf" : value_.str(); }

private:
    bool inf_;
    Rational value_;
};

/// Double-precision valuation value, used by estimators and gauges.
struct ExtReal {
    bool infinite = true;
    double value = 0.0;

    ExtReal() = default;
    ExtReal(double v) : infinite(false), value(v) {} // NOLINT: implicit by design
    static ExtReal inf() { return ExtReal(); }
    static ExtReal from(const ExtRat& r) {
        return r.is_infinite() ? inf() : ExtReal(r.value().to_double());
    }

    double to_double() const noexcept {
        return infinite ? std::numeric_limits<double>::infinity() : value;
    }
};

} // namespace sharptop
