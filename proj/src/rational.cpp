#include "sharptop/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sharptop {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* op) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(std::string("rational overflow in ") + op);
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw InvariantError("rational denominator is zero");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    num_ /= g;
    den_ /= g;
}

bool Rational::is_dyadic() const noexcept {
    std::int64_t d = den_;
    while ((d & 1) == 0) d >>= 1;
    return d == 1;
}

Rational operator+(const Rational& a, const Rational& b) {
    i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    i128 d = i128(a.den_) * b.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n, "add"), narrow(d, "add"), Rational::already_reduced_tag{});
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    i128 n = i128(a.num_) * b.num_;
    i128 d = i128(a.den_) * b.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n, "mul"), narrow(d, "mul"), Rational::already_reduced_tag{});
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InvariantError("rational division by zero");
    i128 n = i128(a.num_) * b.den_;
    i128 d = i128(a.den_) * b.num_;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n, "div"), narrow(d, "div"), Rational::already_reduced_tag{});
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(int e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw InvariantError("zero raised to a negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(den_, num_) : *this;
    int n = e < 0 ? -e : e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return acc;
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> std::int64_t {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", pos);
        i128 v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > i128(std::numeric_limits<std::int64_t>::max()))
                throw ParseError("integer literal too large", pos);
            ++pos;
        }
        return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
    };

    skip_ws();
    std::int64_t n = read_int();
    skip_ws();
    std::int64_t d = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        std::size_t den_pos = pos;
        d = read_int();
        if (d == 0) throw ParseError("zero denominator", den_pos);
        skip_ws();
    }
    if (pos != text.size()) throw ParseError("trailing characters in rational literal", pos);
    return Rational(n, d);
}

Rational Rational::dyadic(int k) {
    if (k >= 0) {
        if (k > 62) throw std::overflow_error("dyadic exponent too deep for 64-bit storage");
        return Rational(1, std::int64_t(1) << k);
    }
    if (k < -62) throw std::overflow_error("dyadic exponent too large for 64-bit storage");
    return Rational(std::int64_t(1) << (-k), 1);
}

QComplex QComplex::reciprocal() const {
    if (is_zero()) throw InvariantError("reciprocal of complex zero");
    Rational n2 = re * re + im * im;
    return {re / n2, -(im / n2)};
}

double QComplex::abs() const noexcept {
    return std::hypot(re.to_double(), im.to_double());
}

} // namespace sharptop
