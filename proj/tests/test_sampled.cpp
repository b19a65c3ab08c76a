#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sharptop/sampled.hpp"
#include "support/oracles.hpp"

using namespace sharptop;

namespace {
SymbolicNet eps_pow(Rational a) { return SymbolicNet::eps_power(std::move(a)); }
} // namespace

TEST_CASE("sampling evaluates pointwise") {
    SampleGrid grid(1, 10);
    SampledNet s = sample(eps_pow(Rational(2)), grid);
    for (int i = 0; i < grid.size(); ++i)
        CHECK(s.value(i).real() == doctest::Approx(std::ldexp(1.0, -2 * grid.k(i))));

    SampledNet z = sample(SymbolicNet::zero(), grid);
    for (int i = 0; i < grid.size(); ++i) CHECK(std::abs(z.value(i)) == 0.0);

    SampledNet decay = sample([](double eps) { return std::complex<double>(std::exp(-1.0 / eps)); },
                              SampleGrid(1, 20));
    // strictly positive and decaying until the doubles underflow
    for (int i = 0; i + 1 < decay.grid().size() && decay.grid().k(i + 1) <= 8; ++i) {
        CHECK(std::abs(decay.value(i)) > 0.0);
        CHECK(std::abs(decay.value(i + 1)) < std::abs(decay.value(i)));
    }
}

TEST_CASE("non-finite samples are rejected") {
    SampleGrid grid(1, 8);
    CHECK_THROWS_AS(sample([](double eps) { return std::complex<double>(1.0 / (eps - 0.25)); }, grid),
                    NonFiniteError);
    CHECK_THROWS_AS(SampledNet(grid, std::vector<std::complex<double>>(
                                         8, std::complex<double>(std::nan("")))),
                    NonFiniteError);
    CHECK_THROWS_AS(SampleGrid(5, 5), InvariantError);
    CHECK_THROWS_AS(SampleGrid(-1, 5), InvariantError);
}

TEST_CASE("estimator recovers exact powers to 1e-9") {
    SampleGrid grid(4, 20);
    for (int a = -5; a <= 5; ++a) {
        ValEstimate v = estimate_val(sample(eps_pow(Rational(a)), grid));
        REQUIRE_FALSE(v.infinite);
        CHECK(std::abs(v.estimate - a) < 1e-9);
        CHECK(v.half_width < 1e-9);
    }
    for (Rational a : {Rational(3, 2), Rational(-3, 2)}) {
        ValEstimate v = estimate_val(sample(eps_pow(a), grid));
        REQUIRE_FALSE(v.infinite);
        CHECK(std::abs(v.estimate - a.to_double()) < 1e-9);
        CHECK(v.half_width < 1e-9);
    }
}

TEST_CASE("estimator window and flags") {
    SampleGrid grid(4, 20);

    SampledNet rapid = sample([](double eps) { return std::complex<double>(std::exp(-1.0 / eps)); }, grid);
    ValEstimate v = estimate_val(rapid);
    // either every tail magnitude underflows, or the slope is enormous
    if (!v.infinite) CHECK(v.estimate > 20.0);

    ValEstimate z = estimate_val(sample(SymbolicNet::zero(), grid));
    CHECK(z.infinite);

    CHECK_THROWS_AS(estimate_val(sample(eps_pow(Rational(1)), SampleGrid(1, 5))), InvariantError);
}

TEST_CASE("classification of the worked examples") {
    SampleGrid grid(4, 20);

    Classification m = classify(sample(eps_pow(Rational(-3)), grid), 10);
    CHECK(m.kind == NetClass::Moderate);
    CHECK(m.order == 3);

    Classification n = classify(sample([](double eps) { return std::complex<double>(std::exp(-1.0 / eps)); },
                                       grid),
                                10);
    CHECK(n.kind == NetClass::Negligible);
    CHECK(n.order == 10);

    // alternating magnitudes 1 and 2^{-k^2}: residuals blow past the threshold
    std::vector<std::complex<double>> osc;
    for (int k = grid.k_min; k <= grid.k_max; ++k)
        osc.emplace_back(k % 2 == 0 ? 1.0 : std::ldexp(1.0, -k * k / 8), 0.0);
    Classification u = classify(SampledNet(grid, std::move(osc)), 10);
    CHECK(u.kind == NetClass::Undecided);
}

TEST_CASE("negligible classification is monotone in q") {
    SampleGrid grid(4, 20);
    SampledNet s = sample(eps_pow(Rational(14)), grid);
    Classification c10 = classify(s, 10);
    REQUIRE(c10.kind == NetClass::Negligible);
    for (int q = 9; q >= 0; --q) {
        Classification cq = classify(s, q);
        CHECK(cq.kind == NetClass::Negligible);
        CHECK(cq.order == q);
    }
}

TEST_CASE("product estimates add within combined half widths") {
    SampleGrid grid(4, 24);
    SymbolicNet a = eps_pow(Rational(1)) + eps_pow(Rational(5, 2));
    SymbolicNet b = eps_pow(Rational(-2)) + eps_pow(Rational(0));
    SampledNet sa = sample(a, grid), sb = sample(b, grid);
    ValEstimate va = estimate_val(sa), vb = estimate_val(sb), vab = estimate_val(sa * sb);
    REQUIRE_FALSE(vab.infinite);
    CHECK(std::abs(vab.estimate - (va.estimate + vb.estimate)) <=
          va.half_width + vb.half_width + 1e-6);
}

TEST_CASE("csv emission uses the documented columns") {
    SampleGrid grid(1, 7);
    std::ostringstream out;
    write_csv(out, sample(eps_pow(Rational(1)), grid));
    std::string text = out.str();
    CHECK(text.substr(0, 36) == "k,eps,value_re,value_im,magnitude\n1,");
    CHECK(text.find("0.5,0.5,0,0.5") != std::string::npos);
}
