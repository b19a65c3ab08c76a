#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

#include "sharptop/errors.hpp"

namespace sharptop {

/**
 * Exact rational number over 64-bit integers.
 *
 * Always stored reduced with a positive denominator. Intermediate products
 * run through 128-bit arithmetic; a result that cannot be reduced back into
 * 64 bits raises std::overflow_error instead of wrapping silently.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_dyadic() const noexcept;

    Rational operator-() const { return Rational(-num_, den_, already_reduced_tag{}); }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

    Rational pow(int e) const;
    std::int64_t floor() const noexcept;
    std::int64_t ceil() const noexcept;

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Renders "p" for integers, "p/q" otherwise.
    std::string str() const;

    /// Accepts "p" or "p/q" with optional leading '-'. Throws ParseError.
    static Rational parse(std::string_view text);

    /// 2^{-k} for k >= 0, 2^{|k|} for k < 0.
    static Rational dyadic(int k);

private:
    struct already_reduced_tag {};
    Rational(std::int64_t n, std::int64_t d, already_reduced_tag) : num_(n), den_(d) {}

    void reduce();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Complex number with exact rational real and imaginary parts.
struct QComplex {
    Rational re;
    Rational im;

    QComplex() = default;
    QComplex(Rational r) : re(std::move(r)) {} // NOLINT: implicit by design
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
    QComplex conj() const { return {re, -im}; }

    /// |re| + |im|; a rational upper bound for the modulus.
    Rational l1() const { return re.abs() + im.abs(); }

    /// Exact reciprocal; throws InvariantError on zero.
    QComplex reciprocal() const;

    double abs() const noexcept;

    friend QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const QComplex& a, const QComplex& b) noexcept = default;
};

} // namespace sharptop
