#include "sharptop/piecewise_net.hpp"

#include <algorithm>

#include "sharptop/errors.hpp"

namespace sharptop {

namespace {

// Merge adjacent equal pieces and fold the deepest piece into the tail when
// they coincide, so equal nets compare equal structurally.
void canonicalize(std::vector<Rational>& bps, std::vector<SymbolicNet>& pieces, SymbolicNet& tail) {
    while (!pieces.empty() && pieces.back() == tail) {
        pieces.pop_back();
        bps.pop_back();
    }
    for (std::size_t i = pieces.size(); i-- > 1;) {
        if (pieces[i] == pieces[i - 1]) {
            pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i));
            bps.erase(bps.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
}

} // namespace

PiecewiseNet::PiecewiseNet(std::vector<Rational> breakpoints, std::vector<SymbolicNet> pieces,
                           SymbolicNet tail)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)), tail_(std::move(tail)) {
    if (breakpoints_.empty() || !(breakpoints_.front() == Rational(1)))
        throw InvariantError("piecewise breakpoints must start at 1");
    if (pieces_.size() + 1 != breakpoints_.size())
        throw InvariantError("piecewise needs one piece per breakpoint interval");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (breakpoints_[i].sign() <= 0)
            throw InvariantError("piecewise breakpoints must be positive");
        if (!breakpoints_[i].is_dyadic())
            throw InvariantError("piecewise breakpoints must be dyadic");
        if (i > 0 && !(breakpoints_[i] < breakpoints_[i - 1]))
            throw InvariantError("piecewise breakpoints must decrease strictly");
    }
    canonicalize(breakpoints_, pieces_, tail_);
}

const SymbolicNet& PiecewiseNet::piece_at(const Rational& eps) const {
    if (eps.sign() <= 0 || Rational(1) < eps)
        throw InvariantError("piecewise evaluation point outside (0, 1]");
    if (eps <= breakpoints_.back()) return tail_;
    // b_{i+1} < eps <= b_i selects piece i.
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (breakpoints_[i + 1] < eps) return pieces_[i];
    return tail_;
}

std::complex<double> PiecewiseNet::eval(double eps) const {
    if (eps <= breakpoints_.back().to_double()) return tail_.eval(eps);
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (breakpoints_[i + 1].to_double() < eps) return pieces_[i].eval(eps);
    return tail_.eval(eps);
}

bool PiecewiseNet::is_zero() const {
    if (!tail_.is_zero()) return false;
    return std::all_of(pieces_.begin(), pieces_.end(), [](const SymbolicNet& p) { return p.is_zero(); });
}

namespace {

template <class Op>
PiecewiseNet combine(const PiecewiseNet& a, const PiecewiseNet& b, Op op) {
    std::vector<Rational> merged = a.breakpoints();
    merged.insert(merged.end(), b.breakpoints().begin(), b.breakpoints().end());
    std::sort(merged.begin(), merged.end(), [](const Rational& x, const Rational& y) { return y < x; });
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    std::vector<SymbolicNet> pieces;
    pieces.reserve(merged.size() - 1);
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        // merged[i] lies inside (merged[i+1], merged[i]] and both operands are
        // constant there because the merged list refines both breakpoint sets.
        pieces.push_back(op(a.piece_at(merged[i]), b.piece_at(merged[i])));
    }
    SymbolicNet tail = op(a.tail(), b.tail());
    return PiecewiseNet(std::move(merged), std::move(pieces), std::move(tail));
}

} // namespace

PiecewiseNet operator+(const PiecewiseNet& a, const PiecewiseNet& b) {
    return combine(a, b, [](const SymbolicNet& x, const SymbolicNet& y) { return x + y; });
}

PiecewiseNet operator*(const PiecewiseNet& a, const PiecewiseNet& b) {
    return combine(a, b, [](const SymbolicNet& x, const SymbolicNet& y) { return x * y; });
}

PiecewiseNet operator-(const PiecewiseNet& a) {
    std::vector<SymbolicNet> pieces;
    pieces.reserve(a.pieces().size());
    for (const auto& p : a.pieces()) pieces.push_back(-p);
    return PiecewiseNet(a.breakpoints(), std::move(pieces), -a.tail());
}

namespace {

// Smallest j such that |d(eps)| <= eps^k is certified for all eps <= 2^{-j},
// via the coefficient bound |d(eps)| <= sum_i (|re_i|+|im_i|) eps^{a_i} and
// the integer estimate (2^{-j})^{a_i - k} <= 2^{-floor(j (a_i - k))}.
int certify_threshold(const SymbolicNet& d, int k) {
    if (d.is_zero()) return 0;
    for (int j = 0; j <= 62; ++j) {
        Rational bound(0);
        for (const auto& t : d.terms()) {
            Rational g = t.exponent - Rational(k); // > 0 by the gap condition
            std::int64_t shift = (Rational(j) * g).floor();
            if (shift > 62) shift = 62;
            if (shift < 0) shift = 0;
            bound += t.coeff.l1() * Rational(1, std::int64_t(1) << shift);
            if (Rational(1) < bound) break;
        }
        if (bound <= Rational(1)) return j;
    }
    throw std::overflow_error("patch threshold deeper than 2^-62");
}

} // namespace

PiecewiseNet cauchy_patch_limit(const std::vector<SymbolicNet>& seq, int depth) {
    if (depth < 1) throw InvariantError("patch depth must be at least 1");
    if (seq.size() < static_cast<std::size_t>(depth) + 1)
        throw InvariantError("sequence shorter than requested patch depth");

    std::vector<SymbolicNet> diffs;
    diffs.reserve(static_cast<std::size_t>(depth));
    for (int k = 0; k < depth; ++k) {
        SymbolicNet d = seq[static_cast<std::size_t>(k) + 1] - seq[static_cast<std::size_t>(k)];
        if (!(ExtRat(Rational(k)) < d.valuation())) throw GapViolationError(k);
        diffs.push_back(std::move(d));
    }

    // eps_k = min(2^{-k}, certified dyadic threshold), kept decreasing.
    std::vector<Rational> eps;
    eps.reserve(diffs.size());
    for (int k = 0; k < depth; ++k) {
        int j = std::max(k, certify_threshold(diffs[static_cast<std::size_t>(k)], k));
        Rational e = Rational::dyadic(j);
        if (!eps.empty() && eps.back() < e) e = eps.back();
        eps.push_back(e);
    }

    std::vector<Rational> bps{Rational(1)};
    std::vector<SymbolicNet> pieces;
    Rational shallow(1);
    for (int k = 0; k < depth; ++k) {
        if (eps[static_cast<std::size_t>(k)] < shallow) {
            // seq[k] is active on (eps_k, shallow].
            pieces.push_back(seq[static_cast<std::size_t>(k)]);
            bps.push_back(eps[static_cast<std::size_t>(k)]);
            shallow = eps[static_cast<std::size_t>(k)];
        }
    }
    return PiecewiseNet(std::move(bps), std::move(pieces), seq[static_cast<std::size_t>(depth)]);
}

} // namespace sharptop
