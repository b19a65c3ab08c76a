#include <doctest.h>

#include <random>

#include "sharptop/symbolic_net.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sharptop;
using testsupport::brute_force_valuation;
using testsupport::random_monomial;
using testsupport::random_net;
using testsupport::random_nonzero_net;

namespace {
const QComplex kOne{Rational(1)};
SymbolicNet eps_pow(int n, int d = 1) { return SymbolicNet::eps_power(Rational(n, d)); }
} // namespace

TEST_CASE("normalize merges, cancels and drops zeros") {
    SymbolicNet merged = normalize({{kOne, Rational(1)}, {QComplex{Rational(2)}, Rational(1)}});
    CHECK(merged == SymbolicNet::monomial(QComplex{Rational(3)}, Rational(1)));

    SymbolicNet cancelled = normalize({{kOne, Rational(2)}, {QComplex{Rational(-1)}, Rational(2)}});
    CHECK(cancelled.is_zero());

    SymbolicNet dropped = normalize({{QComplex{Rational(3)}, Rational(0)}, {QComplex{}, Rational(1)}});
    CHECK(dropped == SymbolicNet::constant(QComplex{Rational(3)}));
}

TEST_CASE("valuation of monomial sums") {
    CHECK(SymbolicNet::zero().valuation().is_infinite());
    CHECK(SymbolicNet::monomial(QComplex{Rational(5)}, Rational(3, 2)).valuation() ==
          ExtRat(Rational(3, 2)));
    CHECK((eps_pow(1) + eps_pow(3)).valuation() == ExtRat(Rational(1)));
}

TEST_CASE("abs_e") {
    CHECK(SymbolicNet::zero().abs_e() == 0.0);
    CHECK(eps_pow(2).abs_e() == std::exp(-2.0));
    CHECK(SymbolicNet::constant(QComplex{Rational(7)}).abs_e() == 1.0);
}

TEST_CASE("ring operations and valuation laws on the examples") {
    CHECK(eps_pow(1) * eps_pow(2) == eps_pow(3));
    CHECK((eps_pow(1) * eps_pow(2)).valuation() == ExtRat(Rational(3)));

    SymbolicNet one = SymbolicNet::constant(kOne);
    CHECK((one + eps_pow(1)) - one == eps_pow(1));
    CHECK((one + eps_pow(1)) * (one - eps_pow(1)) == one - eps_pow(2));
}

TEST_CASE("truncated inverses") {
    SymbolicNet one = SymbolicNet::constant(kOne);

    CHECK(invert_truncated(eps_pow(1), Rational(4)) == eps_pow(-1));

    SymbolicNet u = one + eps_pow(1);
    SymbolicNet w = invert_truncated(u, Rational(2));
    CHECK(w == one - eps_pow(1) + eps_pow(2));
    // multiply-back oracle
    CHECK((u * w - one).valuation() == ExtRat(Rational(3)));
    CHECK(ExtRat(Rational(2)) < (u * w - one).valuation());

    CHECK_THROWS_AS(invert_truncated(SymbolicNet::zero(), Rational(1)), ZeroLeadingError);
}

TEST_CASE("truncated inverses on random nets satisfy the order contract") {
    // integer exponents and unit denominators keep the geometric-series
    // coefficients inside 64 bits at the default order 8
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(-2, 2);
    std::uniform_int_distribution<int> nterms(1, 3);
    for (int i = 0; i < 50; ++i) {
        SymbolicNet u;
        for (int t = nterms(rng); t > 0; --t)
            u = u + SymbolicNet::monomial(QComplex{Rational(coeff(rng)), Rational(coeff(rng))},
                                          Rational(expo(rng)));
        if (u.is_zero()) continue;
        Rational order(8);
        SymbolicNet w = invert_truncated(u, order);
        SymbolicNet residue = u * w - SymbolicNet::constant(kOne);
        CHECK(ExtRat(order) < residue.valuation());
    }
}

TEST_CASE("sharp distance is an ultrametric") {
    SymbolicNet one = SymbolicNet::constant(kOne);
    CHECK(sharp_dist(eps_pow(1), eps_pow(1)) == 0.0);
    CHECK(sharp_dist(eps_pow(1), eps_pow(2)) == std::exp(-1.0));
    CHECK(sharp_dist(eps_pow(1), one) <=
          std::max(sharp_dist(eps_pow(1), eps_pow(2)), sharp_dist(eps_pow(2), one)));
}

TEST_CASE("valuation laws hold exactly on random nets") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        SymbolicNet u = random_net(rng);
        SymbolicNet v = random_net(rng);

        ExtRat vu = u.valuation(), vv = v.valuation();
        CHECK(min(vu, vv) <= (u + v).valuation());
        if (!(vu == vv)) CHECK((u + v).valuation() == min(vu, vv));

        CHECK((u * v).valuation() == vu + vv);

        CHECK((u.abs_e() == 0.0) == u.is_zero());

        // homogeneity: equality for monomial lambda, inequality in general
        SymbolicNet lambda = random_monomial(rng);
        CHECK((lambda * u).valuation() == lambda.valuation() + vu);
        CHECK((lambda * u).abs_e() <= lambda.abs_e() * u.abs_e() * (1 + 1e-12));

        // translation invariance of the distance, exact
        SymbolicNet w = random_net(rng);
        CHECK(sharp_dist(u, v) == sharp_dist(u + w, v + w));

        // ultrametric triangle, exact in the valuation domain
        CHECK(min((u - w).valuation(), (w - v).valuation()) <= (u - v).valuation());
    }
}

TEST_CASE("symbolic valuation agrees with the brute-force b-grid oracle") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 12; ++i) {
        SymbolicNet u = random_nonzero_net(rng);
        double oracle = brute_force_valuation([&](double eps) { return std::abs(u.eval(eps)); });
        CHECK(std::abs(oracle - u.valuation().value().to_double()) < 0.02);
    }
    double zero_oracle = brute_force_valuation([](double) { return 0.0; });
    CHECK(std::isinf(zero_oracle));
}
