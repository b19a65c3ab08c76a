#include "sharptop/seminorms.hpp"

#include <cmath>
#include <limits>

namespace sharptop {

UltraSeminorm UltraSeminorm::abs_e_coord(std::size_t i, Rational shift) {
    std::string label = "abs_e[" + std::to_string(i) + "]";
    if (!shift.is_zero()) label += "<<" + shift.str();
    return UltraSeminorm(label, [i, shift](const GenVec& u) -> ExtRat {
        if (i >= u.size()) throw DimMismatchError(i + 1, u.size());
        ExtRat v = u[i].valuation();
        if (v.is_infinite()) return v;
        return ExtRat(v.value() + shift);
    });
}

UltraSeminorm UltraSeminorm::max_ultranorm(std::size_t n, std::vector<Rational> shifts) {
    if (shifts.empty()) shifts.assign(n, Rational(0));
    if (shifts.size() != n) throw InvariantError("one weight shift per coordinate");
    auto shifts_copy = shifts;
    UltraSeminorm out("max_ultranorm", [n, shifts = std::move(shifts)](const GenVec& u) -> ExtRat {
        if (u.size() != n) throw DimMismatchError(n, u.size());
        ExtRat best = ExtRat::infinity(); // max of P <-> min of val
        for (std::size_t i = 0; i < n; ++i) {
            ExtRat v = u[i].valuation();
            if (!v.is_infinite()) v = ExtRat(v.value() + shifts[i]);
            best = min(best, v);
        }
        return best;
    });
    out.max_shifts_ = std::move(shifts_copy);
    out.max_dim_ = n;
    return out;
}

ExtReal gauge_val(const ConvexSetSpec& A, const GenVec& u) {
    ExtReal best = ExtReal::inf();
    for (const auto& ball : A.balls) {
        ExtRat v = ball.seminorm.val(u);
        if (v.is_infinite()) continue; // u lies in every scaling of this ball
        double component = -ball.shift.to_double() + std::log(ball.eta) + v.value().to_double();
        if (best.infinite || component < best.value) best = ExtReal(component);
    }
    return best;
}

double gauge_eval(const ConvexSetSpec& A, const GenVec& u) {
    ExtReal v = gauge_val(A, u);
    return v.infinite ? 0.0 : std::exp(-v.value);
}

bool gauge_member_scaled(const ConvexSetSpec& A, const GenVec& u, double b) {
    // u in [(eps^b)] A  <=>  for every ball: b + shift - val_P(u) <= log eta.
    for (const auto& ball : A.balls) {
        ExtRat v = ball.seminorm.val(u);
        if (v.is_infinite()) continue;
        if (!(b + ball.shift.to_double() - v.value().to_double() <= std::log(ball.eta))) return false;
    }
    return true;
}

double sharp_metric(const SeminormFamily& family, const GenVec& u, const GenVec& v) {
    if (u.size() != v.size()) throw DimMismatchError(u.size(), v.size());
    GenVec diff(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - v[i];
    double d = 0.0;
    double weight = 1.0;
    for (const auto& p : family.members) {
        d += weight * std::min(p.eval(diff), 1.0);
        weight *= 0.5;
    }
    return d;
}

BoundReport is_bounded(const std::vector<GenVec>& probes, const SeminormFamily& family) {
    BoundReport report;
    report.constants.assign(family.members.size(), 0.0);
    for (const auto& u : probes)
        for (std::size_t n = 0; n < family.members.size(); ++n)
            report.constants[n] = std::max(report.constants[n], family.members[n].eval(u));
    return report;
}

BoundReport is_bounded_generated(const std::function<GenVec(int)>& generator, int scan_max,
                                 const SeminormFamily& family) {
    std::vector<GenVec> scanned;
    scanned.reserve(static_cast<std::size_t>(scan_max) + 1);
    for (int m = 0; m <= scan_max; ++m) scanned.push_back(generator(m));

    BoundReport report = is_bounded(scanned, family);
    for (std::size_t n = 0; n < family.members.size(); ++n) {
        const auto& p = family.members[n];
        double last = p.eval(scanned.back());
        double mid = p.eval(scanned[scanned.size() / 2]);
        // Growth proxy: the scan end sets the running maximum and doubled
        // since mid-scan.
        if (last >= report.constants[n] && last > 2.0 * mid && last > 0.0) {
            report.bounded = false;
            report.witness_index = scan_max;
            report.witness_label = p.label();
            report.witness_value = last;
            return report;
        }
    }
    return report;
}

ContinuityReport continuity_estimate(const std::function<GenVec(const GenVec&)>& T,
                                     const UltraSeminorm& Q, const SeminormFamily& family,
                                     const std::vector<std::size_t>& I0,
                                     const std::vector<GenVec>& probes) {
    if (I0.empty()) throw InvariantError("continuity estimate needs a nonempty index set");
    ContinuityReport report;
    bool any = false;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const GenVec& u = probes[p];
        ExtRat denom_val = ExtRat::infinity(); // val of max_{i in I0} P_i(u)
        for (std::size_t i : I0) denom_val = min(denom_val, family.members.at(i).val(u));
        ExtRat num_val = Q.val(T(u));
        if (num_val.is_infinite()) continue; // Q(Tu) = 0 never constrains C
        if (denom_val.is_infinite()) {
            report.violations.push_back(p);
            continue;
        }
        Rational log_ratio = denom_val.value() - num_val.value();
        best = std::max(best, log_ratio.to_double());
        any = true;
    }
    report.C = any ? std::exp(best) : 0.0;
    return report;
}

ExtRat quotient_seminorm_val(const UltraSeminorm& Q, const std::vector<bool>& mask, const GenVec& u) {
    if (!Q.is_max_form()) throw UnsupportedQError();
    if (mask.size() != Q.max_dim() || u.size() != Q.max_dim())
        throw DimMismatchError(Q.max_dim(), mask.size() == Q.max_dim() ? u.size() : mask.size());
    const auto& shifts = Q.max_shifts();
    ExtRat best = ExtRat::infinity();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (mask[i]) continue; // coset representative zeroes the masked axes
        ExtRat v = u[i].valuation();
        if (!v.is_infinite()) v = ExtRat(v.value() + shifts[i]);
        best = min(best, v);
    }
    return best;
}

double quotient_seminorm(const UltraSeminorm& Q, const std::vector<bool>& mask, const GenVec& u) {
    ExtRat v = quotient_seminorm_val(Q, mask, u);
    return v.is_infinite() ? 0.0 : std::exp(-v.value().to_double());
}

} // namespace sharptop
