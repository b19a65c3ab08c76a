#pragma once

#include <random>

#include "sharptop/gen_scalar.hpp"
#include "sharptop/seminorms.hpp"

namespace testsupport {

using namespace sharptop;

inline QComplex random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    QComplex c{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (c.is_zero()) c = QComplex(Rational(1));
    return c;
}

/// Half-integer exponents in [-3, 3], 1..max_terms terms.
inline SymbolicNet random_net(std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> expo(-6, 6);
    SymbolicNet net;
    const int t = terms(rng);
    for (int j = 0; j < t; ++j)
        net = net + SymbolicNet::monomial(random_coeff(rng), Rational(expo(rng), 2));
    return net;
}

inline SymbolicNet random_nonzero_net(std::mt19937_64& rng, int max_terms = 4) {
    for (;;) {
        SymbolicNet net = random_net(rng, max_terms);
        if (!net.is_zero()) return net;
    }
}

inline SymbolicNet random_monomial(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> expo(-6, 6);
    return SymbolicNet::monomial(random_coeff(rng), Rational(expo(rng), 2));
}

inline GenVec random_gen_vec(std::mt19937_64& rng, std::size_t n, int max_terms = 3) {
    GenVec u(n);
    for (auto& c : u) c = random_net(rng, max_terms);
    return u;
}

inline GenVec random_nonzero_gen_vec(std::mt19937_64& rng, std::size_t n, int max_terms = 3) {
    for (;;) {
        GenVec u = random_gen_vec(rng, n, max_terms);
        bool zero = true;
        for (const auto& c : u) zero = zero && c.is_zero();
        if (!zero) return u;
    }
}

} // namespace testsupport
