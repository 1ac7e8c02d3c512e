#include "doctest.h"

#include <string>

#include "borelreg/harness.hpp"
#include "borelreg/io.hpp"

#include "support/oracles.hpp"

using namespace borelreg;
using oracle::ideal;
using oracle::mono;

namespace {

ParseError capture(const std::string& text) {
    try {
        parse_ideal(text);
    } catch (const ParseError& e) {
        return e;
    }
    throw std::logic_error("expected a parse error");
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parsing the two-line format") {
    CHECK(parse_ideal("ring n=2\nI = x1^2, x2^2") == ideal(2, {{2, 0}, {0, 2}}));
    CHECK(parse_ideal("ring n=3\nI = x1*x2, x1*x2") == ideal(3, {{1, 1, 0}}));
    CHECK(parse_ideal("ring n=2\nI = 1") == unit_ideal(RingContext(2)));
    CHECK(parse_ideal("ring n=2\nI =") == zero_ideal(RingContext(2)));
    CHECK(parse_ideal("ring n=1\nI = x1^7") == ideal(1, {{7}}));
}

TEST_CASE("whitespace, blank lines and carriage returns are free") {
    CHECK(parse_ideal("  ring  n = 2 \n  I  =  x1 ^ 2 * x2 ,  x2  ") ==
          ideal(2, {{2, 1}, {0, 1}}));
    CHECK(parse_ideal("\n\nring n=2\n\nI = x1\n\n") == ideal(2, {{1, 0}}));
    CHECK(parse_ideal("ring n=2\r\nI = x1\r\n") == ideal(2, {{1, 0}}));
}

TEST_CASE("repeated factors multiply and the result is minimalized") {
    CHECK(parse_ideal("ring n=2\nI = x1*x1") == ideal(2, {{2, 0}}));
    CHECK(parse_ideal("ring n=2\nI = x1^2*x1") == ideal(2, {{3, 0}}));
    CHECK(parse_ideal("ring n=2\nI = x1, x1*x2, 1") == unit_ideal(RingContext(2)));
}

TEST_CASE("parse errors carry 1-based line and column") {
    const ParseError range = capture("ring n=2\nI = x3");
    CHECK(range.line == 2);
    CHECK(std::string(range.what()).find("out of range") != std::string::npos);
    CHECK(std::string(range.what()).find("line 2") != std::string::npos);

    const ParseError exp = capture("ring n=2\nI = x1^0");
    CHECK(exp.line == 2);
    CHECK(exp.column == 8);
    CHECK(std::string(exp.what()).find("exponent must be positive") != std::string::npos);

    CHECK(capture("").line == 1);
    CHECK(capture("ring n=2").line == 2);          // missing ideal line
    CHECK(capture("I = x1").line == 1);            // missing header
    CHECK(capture("ring n=0\nI = x1").line == 1);  // ring size out of range
    CHECK(capture("ring n=2\nI = x1 x2").line == 2);
    CHECK(capture("ring n=2\nI = x1,").line == 2);
    CHECK(capture("ring n=2\nI = x0").line == 2);
    CHECK(capture("ring n=2\nI = x1^").line == 2);
    CHECK(capture("ring n=2\nI = 12").line == 2);
    CHECK(capture("ring n=2\nI = x1\njunk").line == 3);
}

TEST_CASE("formatting monomials and ideals") {
    CHECK(format_monomial(mono({2, 1})) == "x1^2*x2");
    CHECK(format_monomial(mono({0, 0})) == "1");
    CHECK(format_monomial(mono({0, 0, 3})) == "x3^3");
    CHECK(format_ideal(ideal(2, {{2, 0}, {0, 2}})) == "(x1^2, x2^2)");
    CHECK(format_ideal(zero_ideal(RingContext(2))) == "(0)");
    CHECK(format_ideal(unit_ideal(RingContext(2))) == "(1)");
}

TEST_CASE("serialization round-trips every ideal in range") {
    CHECK(serialize_ideal(ideal(2, {{2, 0}, {0, 2}})) == "ring n=2\nI = x1^2, x2^2\n");
    const auto round = [](const MonomialIdeal& I) {
        CHECK(parse_ideal(serialize_ideal(I)) == I);
    };
    round(zero_ideal(RingContext(2)));
    round(unit_ideal(RingContext(3)));
    enumerate_ideals(RingContext(2), 3, 4, round);
    enumerate_ideals(RingContext(3), 2, 3, round);
    Rng rng(23);
    for (int i = 0; i < 40; ++i)
        round(random_antichain(RingContext(4), 3, 5, rng));
}

}  // TEST_SUITE
