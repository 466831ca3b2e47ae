#include <doctest.h>

#include "qweyl/error.hpp"
#include "qweyl/presentation.hpp"
#include "support/testutil.hpp"

using namespace qweyl;

namespace {

const char* kTwoSpec =
    "# sample presentation\n"
    "indeterminates: q1 q2 g\n"
    "n: 2\n"
    "q: q1, q2\n"
    "gamma: 1, g ; 1/g, 1\n";

}  // namespace

TEST_SUITE("presentation") {

TEST_CASE("validate accepts the symbolic presentation") {
    ParsedSpec s = parse_spec(kTwoSpec);
    CHECK(s.violations.empty());
    CHECK(s.params.n == 2);
    CHECK(s.params.q_at(1).to_string() == "q1");
    CHECK(s.params.gamma_at(2, 1).eq(scalar_parse("1/g", s.params.ctx)));
}

TEST_CASE("validate reports broken skew symmetry") {
    ParsedSpec s = parse_spec(
        "indeterminates: q1 q2 g\nn: 2\nq: q1, q2\ngamma: 1, g ; g, 1\n");
    REQUIRE(s.violations.size() == 1);
    CHECK(s.violations[0] == "gamma[1][2]*gamma[2][1] != 1");
}

TEST_CASE("validate reports roots of unity") {
    ParsedSpec s = parse_spec(
        "indeterminates: q2\nn: 2\nq: -1, q2\ngamma: 1, 1 ; 1, 1\n");
    REQUIRE(s.violations.size() == 1);
    CHECK(s.violations[0] == "q[1] is a root of unity");
}

TEST_CASE("validate reports zero entries and bad diagonal") {
    ParsedSpec s = parse_spec(
        "indeterminates: q1 q2\nn: 2\nq: q1, 0\ngamma: 2, 1 ; 1, 1\n");
    CHECK(s.violations.size() == 2);
    CHECK(s.violations[0] == "q[2] is zero");
    CHECK(s.violations[1] == "gamma[1][1] != 1");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_spec("indeterminates: g\nn: 2\nq: g, g\ngamma: 1, g\n"),
                    ParseError);  // gamma row count
    CHECK_THROWS_AS(parse_spec("indeterminates:\nn: 1\nq: zz\ngamma: 1\n"),
                    ParseError);  // undeclared indeterminate
    CHECK_THROWS_AS(parse_spec("foo: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("n: 1\nq: 2\ngamma: 1\n"), ParseError);  // missing key
    CHECK_THROWS_AS(parse_spec("indeterminates: x1\nn: 1\nq: 2\ngamma: 1\n"),
                    ParseError);  // reserved name
    try {
        parse_spec("indeterminates: g\nn: 2\nq: g\ngamma: 1, g ; 1/g, 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("spec round trip") {
    ParsedSpec s = parse_spec(kTwoSpec);
    ParsedSpec again = parse_spec(s.params.to_spec_text());
    CHECK(again.params.same_presentation(s.params));
}

TEST_CASE("leading restrictions of a valid presentation validate") {
    ParamsPtr p = qweyl::testing::symbolic_params(3);
    REQUIRE(validate(*p).empty());
    for (int m = 1; m <= 3; ++m) CHECK(validate(p->restrict_to(m)).empty());
}

TEST_CASE("genericity rank") {
    ParsedSpec s = parse_spec(kTwoSpec);
    GenericityResult g = genericity_rank(s.params);
    CHECK(g.decidable);
    CHECK(g.rank == 3);
    CHECK(g.max_rank == 3);
    CHECK(g.generic);

    ParsedSpec dup = parse_spec("indeterminates: t\nn: 2\nq: t, t\ngamma: 1, t ; 1/t, 1\n");
    GenericityResult gd = genericity_rank(dup.params);
    CHECK(gd.decidable);
    CHECK(gd.rank == 1);
    CHECK_FALSE(gd.generic);

    ParsedSpec nd = parse_spec(
        "indeterminates: q1 g\nn: 2\nq: q1 - 1, q1\ngamma: 1, g ; 1/g, 1\n");
    GenericityResult gn = genericity_rank(nd.params);
    CHECK_FALSE(gn.decidable);
    CHECK(gn.detail == "q[1] is not a monomial with coefficient 1");
}

}  // TEST_SUITE
