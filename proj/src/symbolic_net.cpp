#include "sharptop/symbolic_net.hpp"

#include <algorithm>
#include <cmath>

#include "sharptop/errors.hpp"

namespace sharptop {

SymbolicNet::SymbolicNet(std::vector<Monomial> terms) {
    *this = normalize(std::move(terms));
}

SymbolicNet normalize(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) {
        return a.exponent < b.exponent;
    });
    std::vector<Monomial> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().exponent == t.exponent) {
            merged.back().coeff = merged.back().coeff + t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Monomial& t) { return t.coeff.is_zero(); });
    SymbolicNet out;
    out.terms_ = std::move(merged);
    return out;
}

SymbolicNet SymbolicNet::constant(QComplex c) {
    return monomial(std::move(c), Rational(0));
}

SymbolicNet SymbolicNet::monomial(QComplex c, Rational exponent) {
    SymbolicNet net;
    if (!c.is_zero()) net.terms_.push_back({std::move(c), std::move(exponent)});
    return net;
}

ExtRat SymbolicNet::valuation() const {
    if (terms_.empty()) return ExtRat::infinity();
    return ExtRat(terms_.front().exponent);
}

double SymbolicNet::abs_e() const {
    if (terms_.empty()) return 0.0;
    return std::exp(-terms_.front().exponent.to_double());
}

std::complex<double> SymbolicNet::eval(double eps) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& t : terms_) {
        double p = std::pow(eps, t.exponent.to_double());
        acc += std::complex<double>(t.coeff.re.to_double(), t.coeff.im.to_double()) * p;
    }
    return acc;
}

Rational SymbolicNet::coeff_l1_sum() const {
    Rational s(0);
    for (const auto& t : terms_) s += t.coeff.l1();
    return s;
}

SymbolicNet SymbolicNet::scaled(const QComplex& c) const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.coeff * c, t.exponent});
    return normalize(std::move(out));
}

SymbolicNet SymbolicNet::shifted(const Rational& a) const {
    SymbolicNet out(*this);
    for (auto& t : out.terms_) t.exponent += a;
    return out;
}

SymbolicNet operator+(const SymbolicNet& a, const SymbolicNet& b) {
    std::vector<Monomial> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return normalize(std::move(all));
}

SymbolicNet operator-(const SymbolicNet& a) {
    SymbolicNet out(a);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

SymbolicNet operator-(const SymbolicNet& a, const SymbolicNet& b) { return a + (-b); }

SymbolicNet operator*(const SymbolicNet& a, const SymbolicNet& b) {
    std::vector<Monomial> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            prod.push_back({ta.coeff * tb.coeff, ta.exponent + tb.exponent});
    return normalize(std::move(prod));
}

SymbolicNet invert_truncated(const SymbolicNet& u, const Rational& order) {
    const Monomial* lead = u.leading();
    if (lead == nullptr) throw ZeroLeadingError();

    // u = c eps^a (1 + r) with val(r) > 0; invert the unit part by a geometric sum.
    SymbolicNet unit_inv = SymbolicNet::monomial(lead->coeff.reciprocal(), -lead->exponent);
    SymbolicNet r = (u * unit_inv) - SymbolicNet::constant(QComplex(Rational(1)));
    if (r.is_zero()) return unit_inv;

    Rational gap = r.valuation().value(); // > 0 by normalization
    std::int64_t steps = (order / gap).floor() + 1;

    SymbolicNet geom = SymbolicNet::constant(QComplex(Rational(1)));
    SymbolicNet pow = SymbolicNet::constant(QComplex(Rational(1)));
    for (std::int64_t j = 1; j <= steps; ++j) {
        pow = pow * (-r);
        geom = geom + pow;
    }

    SymbolicNet w = unit_inv * geom;

    // Terms beyond -a + order cannot affect val(u*w - 1) > order; keep w small.
    Rational cutoff = order - lead->exponent;
    std::vector<Monomial> kept;
    for (const auto& t : w.terms())
        if (t.exponent <= cutoff) kept.push_back(t);
    return normalize(std::move(kept));
}

double sharp_dist(const SymbolicNet& u, const SymbolicNet& v) {
    return (u - v).abs_e();
}

} // namespace sharptop
