#pragma once

#include <cstdint>
#include <variant>

#include "sharptop/sampled.hpp"
#include "sharptop/seminorms.hpp"

namespace sharptop {

/// C~-bilinear dot product b(u, v) = sum_i u_i v_i (no conjugation).
GenScalar pair(const GenVec& u, const GenVec& v);

/// Weak seminorm P_v(u) = |b(u, v)|_e and its exact valuation.
ExtRat weak_val(const GenVec& v, const GenVec& u);
double weak_seminorm(const GenVec& v, const GenVec& u);

/// Polar membership: v in A° iff |b(u, v)|_e <= 1 for every u in A,
/// decided exactly in the valuation domain.
bool polar_contains(const std::vector<GenVec>& A, const GenVec& v);

/// P_{A°}(v) = sup_{u in A} |b(u, v)|_e; A must be nonempty.
double polar_gauge(const std::vector<GenVec>& A, const GenVec& v);

enum class NormKind { Euclidean, Max };

/**
 * Exact valuation of the scalar net eps -> ||u_eps||_E.
 *
 * For the Euclidean and Max norms of C^n (and for their duals l2 and l1) the
 * coordinate moduli contribute nonnegative leading terms that cannot cancel,
 * so the valuation is min_i val(u_i) independently of the norm kind.
 */
ExtRat vec_norm_val(const GenVec& u, NormKind kind);

/// ||u_eps||_E at a concrete eps.
double vec_norm_at(const GenVec& u, NormKind kind, double eps);

/// A continuous C~-linear functional: a pairing vector or an opaque action.
class Functional {
public:
    static Functional pairing_vector(GenVec w);
    static Functional blackbox(std::string id, std::size_t dim,
                               std::function<GenScalar(const GenVec&)> action);

    GenScalar operator()(const GenVec& u) const;

    bool is_pairing() const noexcept { return std::holds_alternative<GenVec>(rep_); }
    const GenVec& vector() const { return std::get<GenVec>(rep_); }
    std::size_t dim() const noexcept { return dim_; }
    const std::string& id() const noexcept { return id_; }

    /// Monomial rescaling: (lambda T)(u) = lambda * T(u).
    Functional scaled(const SymbolicNet& lambda) const;

private:
    struct Blackbox {
        std::function<GenScalar(const GenVec&)> action;
    };
    Functional(std::string id, std::size_t dim, std::variant<GenVec, Blackbox> rep)
        : id_(std::move(id)), dim_(dim), rep_(std::move(rep)) {}

    std::string id_;
    std::size_t dim_;
    std::variant<GenVec, Blackbox> rep_;
};

struct DualNormResult {
    double estimate = 0.0;             // max over normalized probes of |Tu|_e
    std::optional<double> closed_form; // e^{-val(||w||_{E'})} for pairing vectors
    ExtRat closed_val = ExtRat::infinity();
};

/**
 * Dual ultra-pseudo-norm ||T|| = sup_{||u||_{G_E} = 1} |Tu|_e.
 *
 * Probes are normalized by the exact monomial rescaling eps^{-val(||u||_E)};
 * zero probes are skipped. For pairing vectors the closed form
 * e^{-val(||w||_{E'})} is attached and always dominates the probe estimate.
 */
DualNormResult dual_norm(const Functional& T, NormKind kind, const std::vector<GenVec>& probes);

/**
 * Hahn-Banach witness for u: a norm-one functional with v(u) = ||u||_E,
 * realized per-eps (Euclidean: w_eps = conj(u_eps)/||u_eps||_2; Max: the
 * conjugate-phase coordinate functional at the maximizing coordinate).
 *
 * Grid points within 1e-12 of a zero of ||u_eps|| (relative to the leading
 * scale eps^{val}) are skipped and counted; the valuation only depends on
 * the behavior as eps -> 0.
 */
class HahnBanachWitness {
public:
    struct Evaluation {
        std::vector<int> ks;
        std::vector<double> eps;
        std::vector<std::complex<double>> values;
        int skipped = 0;
    };

    HahnBanachWitness(GenVec base, NormKind kind);

    bool zero_functional() const noexcept { return zero_; }
    NormKind kind() const noexcept { return kind_; }
    const GenVec& base() const noexcept { return base_; }

    Evaluation evaluate(const GenVec& h, const SampleGrid& grid) const;

    /// Valuation estimate of the net eps -> v(h)(eps) over the tail window.
    ValEstimate action_valuation(const GenVec& h, const SampleGrid& grid) const;

private:
    GenVec base_;
    NormKind kind_;
    bool zero_;
    double norm_val_; // val(||u_eps||_E) as double, scale for the skip rule
};

inline HahnBanachWitness hahn_banach_witness(const GenVec& u, NormKind kind) {
    return HahnBanachWitness(u, kind);
}

struct RecoverResult {
    GenVec representor;
    double max_residual; // max over probes of |T(u) - b(u, y)|_e
};

/**
 * Representing vector: y_i = T(e_i), verified C~-linear on seeded random
 * probes (exact additivity and monomial homogeneity). Throws NonLinearError
 * when a probe fails.
 */
RecoverResult recover_representor(const Functional& T, std::size_t n, std::uint64_t seed,
                                  int probe_count = 24);

struct UniformBoundResult {
    bool bounded = true;
    double C = 0.0;
    std::optional<std::size_t> witness_probe;
    std::vector<double> values_at_witness; // |T_i(u)|_e across the family at the witness
};

/**
 * Banach-Steinhaus style check: verifies sup_i |T_i(u)|_e bounded on each
 * probe, then returns C = max_i ||T_i||.
 *
 * With `ordered_scan` set, the family is read as the prefix T_0..T_M of a
 * generated sequence and growth across the scan flags PointwiseUnbounded
 * with the witness probe. A plain finite family is always pointwise bounded.
 */
UniformBoundResult uniform_bound(const std::vector<Functional>& family, NormKind kind,
                                 const std::vector<GenVec>& probes, bool ordered_scan = true);

} // namespace sharptop
