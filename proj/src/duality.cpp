#include "sharptop/duality.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sharptop {

GenScalar pair(const GenVec& u, const GenVec& v) {
    if (u.size() != v.size()) throw DimMismatchError(u.size(), v.size());
    GenScalar acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * v[i];
    return acc;
}

ExtRat weak_val(const GenVec& v, const GenVec& u) { return pair(u, v).valuation(); }

double weak_seminorm(const GenVec& v, const GenVec& u) { return pair(u, v).abs_e(); }

bool polar_contains(const std::vector<GenVec>& A, const GenVec& v) {
    // |b(u,v)|_e <= 1  <=>  val(b(u,v)) >= 0, exact in rationals.
    for (const auto& u : A)
        if (weak_val(v, u) < ExtRat(Rational(0))) return false;
    return true;
}

double polar_gauge(const std::vector<GenVec>& A, const GenVec& v) {
    if (A.empty()) throw InvariantError("polar gauge needs a nonempty set");
    double sup = 0.0;
    for (const auto& u : A) sup = std::max(sup, weak_seminorm(v, u));
    return sup;
}

ExtRat vec_norm_val(const GenVec& u, NormKind) {
    ExtRat best = ExtRat::infinity();
    for (const auto& c : u) best = min(best, c.valuation());
    return best;
}

double vec_norm_at(const GenVec& u, NormKind kind, double eps) {
    if (kind == NormKind::Euclidean) {
        double s = 0.0;
        for (const auto& c : u) s += std::norm(c.eval(eps));
        return std::sqrt(s);
    }
    double m = 0.0;
    for (const auto& c : u) m = std::max(m, std::abs(c.eval(eps)));
    return m;
}

Functional Functional::pairing_vector(GenVec w) {
    if (w.empty()) throw InvariantError("pairing vector must have positive dimension");
    std::size_t n = w.size();
    return Functional("pairing_vector", n, std::move(w));
}

Functional Functional::blackbox(std::string id, std::size_t dim,
                                std::function<GenScalar(const GenVec&)> action) {
    return Functional(std::move(id), dim, Blackbox{std::move(action)});
}

GenScalar Functional::operator()(const GenVec& u) const {
    if (u.size() != dim_) throw DimMismatchError(dim_, u.size());
    if (is_pairing()) return pair(u, vector());
    return std::get<Blackbox>(rep_).action(u);
}

Functional Functional::scaled(const SymbolicNet& lambda) const {
    if (is_pairing()) {
        GenVec w = vector();
        for (auto& c : w) c = c * GenScalar(lambda);
        return pairing_vector(std::move(w));
    }
    auto inner = std::get<Blackbox>(rep_).action;
    GenScalar scale{lambda};
    return blackbox(id_ + "*monomial", dim_,
                    [inner, scale](const GenVec& u) { return scale * inner(u); });
}

DualNormResult dual_norm(const Functional& T, NormKind kind, const std::vector<GenVec>& probes) {
    DualNormResult result;
    for (const auto& probe : probes) {
        if (probe.size() != T.dim()) throw DimMismatchError(T.dim(), probe.size());
        ExtRat nv = vec_norm_val(probe, kind);
        if (nv.is_infinite()) continue; // cannot normalize the zero vector
        // Normalize to ||u||_{G_E} = 1 by the monomial rescaling eps^{-val}.
        GenScalar scale{SymbolicNet::eps_power(-nv.value())};
        GenVec u(probe.size());
        for (std::size_t i = 0; i < probe.size(); ++i) u[i] = probe[i] * scale;
        result.estimate = std::max(result.estimate, T(u).abs_e());
    }
    if (T.is_pairing()) {
        result.closed_val = vec_norm_val(T.vector(), kind);
        result.closed_form = result.closed_val.is_infinite()
                                 ? 0.0
                                 : std::exp(-result.closed_val.value().to_double());
    }
    return result;
}

HahnBanachWitness::HahnBanachWitness(GenVec base, NormKind kind)
    : base_(std::move(base)), kind_(kind) {
    if (base_.empty()) throw InvariantError("witness needs a nonzero-dimensional vector");
    ExtRat nv = vec_norm_val(base_, kind_);
    zero_ = nv.is_infinite();
    norm_val_ = zero_ ? 0.0 : nv.value().to_double();
}

HahnBanachWitness::Evaluation HahnBanachWitness::evaluate(const GenVec& h,
                                                          const SampleGrid& grid) const {
    if (h.size() != base_.size()) throw DimMismatchError(base_.size(), h.size());
    Evaluation out;
    for (int i = 0; i < grid.size(); ++i) {
        const double eps = grid.eps(i);
        if (zero_) {
            out.ks.push_back(grid.k(i));
            out.eps.push_back(eps);
            out.values.emplace_back(0.0, 0.0);
            continue;
        }
        std::vector<std::complex<double>> ue(base_.size());
        for (std::size_t c = 0; c < base_.size(); ++c) ue[c] = base_[c].eval(eps);
        double norm;
        if (kind_ == NormKind::Euclidean) {
            double s = 0.0;
            for (const auto& v : ue) s += std::norm(v);
            norm = std::sqrt(s);
        } else {
            norm = 0.0;
            for (const auto& v : ue) norm = std::max(norm, std::abs(v));
        }
        // Skip isolated near-zeros of ||u_eps|| relative to the leading scale.
        if (norm < 1e-12 * std::pow(eps, norm_val_)) {
            ++out.skipped;
            continue;
        }
        std::complex<double> value(0.0, 0.0);
        if (kind_ == NormKind::Euclidean) {
            for (std::size_t c = 0; c < base_.size(); ++c)
                value += h[c].eval(eps) * std::conj(ue[c]) / norm;
        } else {
            std::size_t best = 0;
            for (std::size_t c = 1; c < base_.size(); ++c)
                if (std::abs(ue[c]) > std::abs(ue[best])) best = c;
            std::complex<double> phase = std::conj(ue[best]) / std::abs(ue[best]);
            value = phase * h[best].eval(eps);
        }
        out.ks.push_back(grid.k(i));
        out.eps.push_back(eps);
        out.values.push_back(value);
    }
    return out;
}

ValEstimate HahnBanachWitness::action_valuation(const GenVec& h, const SampleGrid& grid) const {
    Evaluation ev = evaluate(h, grid);
    if (ev.values.empty()) {
        ValEstimate v;
        v.infinite = true;
        return v;
    }
    // Tail window convention: deepest 2/3 of the kept points.
    const std::size_t n = ev.values.size();
    const std::size_t window = (2 * n + 2) / 3;
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = n - window; i < n; ++i)
        pts.emplace_back(ev.eps[i], std::abs(ev.values[i]));
    return fit_valuation(pts);
}

namespace {

SymbolicNet random_monomial(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> expo(-3, 3);
    QComplex c{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (c.is_zero()) c = QComplex(Rational(1));
    return SymbolicNet::monomial(c, Rational(expo(rng), 2));
}

GenVec random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> terms(0, 2);
    GenVec u(n);
    for (auto& c : u) {
        SymbolicNet net;
        int t = terms(rng);
        for (int j = 0; j <= t; ++j) net = net + random_monomial(rng);
        c = net;
    }
    return u;
}

} // namespace

RecoverResult recover_representor(const Functional& T, std::size_t n, std::uint64_t seed,
                                  int probe_count) {
    if (T.dim() != n) throw DimMismatchError(T.dim(), n);
    std::mt19937_64 rng(seed);

    // Linearity probes: exact additivity and monomial homogeneity.
    for (int p = 0; p < probe_count; ++p) {
        GenVec a = random_vec(rng, n);
        GenVec b = random_vec(rng, n);
        GenVec sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = a[i] + b[i];
        if (!(T(sum) == T(a) + T(b))) throw NonLinearError("additivity probe failed");
        SymbolicNet lambda = random_monomial(rng);
        GenScalar scale{lambda};
        GenVec scaled(n);
        for (std::size_t i = 0; i < n; ++i) scaled[i] = a[i] * scale;
        if (!(T(scaled) == scale * T(a))) throw NonLinearError("homogeneity probe failed");
    }

    GenVec y(n);
    for (std::size_t i = 0; i < n; ++i) {
        GenVec e(n);
        e[i] = GenScalar::constant(QComplex(Rational(1)));
        y[i] = T(e);
    }

    double residual = 0.0;
    for (int p = 0; p < probe_count; ++p) {
        GenVec u = random_vec(rng, n);
        residual = std::max(residual, (T(u) - pair(u, y)).abs_e());
    }
    return {std::move(y), residual};
}

UniformBoundResult uniform_bound(const std::vector<Functional>& family, NormKind kind,
                                 const std::vector<GenVec>& probes, bool ordered_scan) {
    if (family.empty()) throw InvariantError("uniform bound needs a nonempty family");
    UniformBoundResult result;

    for (std::size_t p = 0; ordered_scan && p < probes.size(); ++p) {
        std::vector<double> values;
        values.reserve(family.size());
        for (const auto& T : family) values.push_back(T(probes[p]).abs_e());
        if (family.size() >= 2) {
            double last = values.back();
            double mid = values[values.size() / 2];
            bool growing = last >= *std::max_element(values.begin(), values.end()) &&
                           last > 2.0 * mid && last > 0.0;
            if (growing) {
                result.bounded = false;
                result.witness_probe = p;
                result.values_at_witness = std::move(values);
                return result;
            }
        }
    }

    for (const auto& T : family) {
        DualNormResult dn = dual_norm(T, kind, probes);
        result.C = std::max(result.C, dn.closed_form.value_or(dn.estimate));
    }
    return result;
}

} // namespace sharptop
