#include <doctest.h>

#include <random>

#include "sharptop/json_io.hpp"
#include "support/generators.hpp"

using namespace sharptop;
using testsupport::random_net;

TEST_CASE("symbolic nets round-trip through JSON exactly") {
    Json j = parse_json(R"({"terms":[{"re":"1","im":"0","exp":"2"}]})");
    SymbolicNet net = symbolic_from_json(j);
    CHECK(net == SymbolicNet::eps_power(Rational(2)));

    std::mt19937_64 rng(61);
    for (int i = 0; i < 100; ++i) {
        SymbolicNet u = random_net(rng);
        CHECK(symbolic_from_json(to_json(u)) == u);
    }
}

TEST_CASE("piecewise nets round-trip through JSON exactly") {
    PiecewiseNet net({Rational(1), Rational(1, 2), Rational(1, 8)},
                     {SymbolicNet::eps_power(Rational(0)), SymbolicNet::eps_power(Rational(1))},
                     SymbolicNet::eps_power(Rational(2)));
    CHECK(piecewise_from_json(to_json(net)) == net);

    GenScalar as_scalar = gen_scalar_from_json(to_json(net));
    CHECK_FALSE(as_scalar.is_symbolic());
    CHECK(as_scalar.piecewise() == net);
}

TEST_CASE("malformed input raises ParseError") {
    CHECK_THROWS_AS(parse_json("{"), ParseError);
    CHECK_THROWS_AS(symbolic_from_json(parse_json(R"({"terms":[{"re":"1","im":"0","exp":"1/0"}]})")),
                    ParseError);
    CHECK_THROWS_AS(symbolic_from_json(parse_json(R"({"wrong":[]})")), ParseError);
    CHECK_THROWS_AS(symbolic_from_json(parse_json(R"({"terms":[{"re":1,"im":"0","exp":"1"}]})")),
                    ParseError);
    CHECK_THROWS_AS(piecewise_from_json(parse_json(
                        R"({"breakpoints":["1","1/3"],"pieces":[{"terms":[]}],"tail":{"terms":[]}})")),
                    InvariantError); // 1/3 is not dyadic
}

TEST_CASE("vectors and functionals round-trip") {
    std::mt19937_64 rng(67);
    GenVec u = testsupport::random_gen_vec(rng, 3);
    GenVec back = gen_vec_from_json(to_json(u));
    REQUIRE(back.size() == u.size());
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(back[i] == u[i]);

    Functional f = Functional::pairing_vector(u);
    Functional g = functional_from_json(to_json(f));
    CHECK(g.is_pairing());
    CHECK(pair(u, g.vector()) == pair(u, f.vector()));

    Functional bb = functional_from_json(
        parse_json(R"({"kind":"blackbox","id":"quadratic_self_pairing","dim":2})"));
    GenVec w{GenScalar(SymbolicNet::eps_power(Rational(1))), GenScalar{}};
    CHECK(bb(w) == pair(w, w));
    CHECK_THROWS_AS(functional_from_json(parse_json(R"({"kind":"blackbox","id":"nope","dim":2})")),
                    ParseError);
}

TEST_CASE("families, convex specs and boxes parse") {
    SeminormFamily fam = family_from_json(parse_json(
        R"({"seminorms":[{"kind":"abs_e","coord":0},{"kind":"abs_e","coord":0,"shift":"1"}]})"));
    CHECK(fam.members.size() == 2);
    GenVec u{GenScalar(SymbolicNet::eps_power(Rational(1)))};
    CHECK(fam.members[0].eval(u) == std::exp(-1.0));
    CHECK(fam.members[1].eval(u) == std::exp(-2.0));

    ConvexSetSpec spec = convex_spec_from_json(parse_json(
        R"({"balls":[{"seminorm":{"kind":"abs_e","coord":0},"eta":1.0,"shift":"0"}]})"));
    CHECK(spec.balls.size() == 1);

    CompactBox box = box_from_json(parse_json(R"({"intervals":[["-1","1"],["0","2"]]})"));
    CHECK(box.dim() == 2);
    CHECK(box_from_json(to_json(box)) == box);

    SeminormFamily max_fam = family_from_json(parse_json(
        R"({"seminorms":[{"kind":"max","dim":2,"shifts":["0","1"]}]})"));
    CHECK(max_fam.members[0].is_max_form());
}

TEST_CASE("report dumps are deterministic") {
    Json a = to_json(SymbolicNet::eps_power(Rational(3, 2)));
    Json b = to_json(SymbolicNet::eps_power(Rational(3, 2)));
    CHECK(dump_report(a) == dump_report(b));

    ValEstimate v;
    v.infinite = false;
    v.estimate = 1.5000000000000002;
    v.half_width = 1e-12;
    std::string dumped = dump_report(to_json(v));
    CHECK(dumped.find("1.5000000000000002") != std::string::npos);
}
