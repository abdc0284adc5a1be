#include <catch2/catch_amalgamated.hpp>

#include "../include/gammacf/expression.hpp"

using gammacf::expression;
using gammacf::rational;
using gammacf::rational_function;

static rational ev(const std::string& src,
                   std::map<std::string, rational> env = {}) {
    return expression::parse(src).eval(env);
}

TEST_CASE("literals and precedence") {
    CHECK(ev("13/75") == rational(13, 75));
    CHECK(ev("2+3*4") == rational(14));
    CHECK(ev("(2+3)*4") == rational(20));
    CHECK(ev("1-2-3") == rational(-4));
    CHECK(ev("12/8") == rational(3, 2));
    CHECK(ev("2^10") == rational(1024));
    CHECK(ev("2^-2") == rational(1, 4));
    CHECK(ev("-2^2") == rational(-4));  // '^' binds tighter than unary minus
    CHECK(ev("(1-2)^3") == rational(-1));
}

TEST_CASE("parameters") {
    std::map<std::string, rational> env{{"x", rational(3)},
                                        {"alpha", rational(1, 3)},
                                        {"beta", rational(1, 5)}};
    CHECK(ev("x^2-1", env) == rational(8));
    CHECK(ev("(2*m-2+alpha+beta)*(2*m-1-alpha)*(2*m-1-beta)/(4*(2*m-1))",
             {{"m", rational(1)}, {"alpha", rational(1, 3)}, {"beta", rational(1, 5)}}) ==
          rational(8, 15) * rational(2, 3) * rational(4, 5) / rational(4));
    CHECK_THROWS_AS(ev("x+gamma0", env), gammacf::unbound_parameter);
}

TEST_CASE("parse failures") {
    CHECK_THROWS_AS(expression::parse("2+"), gammacf::config_error);
    CHECK_THROWS_AS(expression::parse("(1"), gammacf::config_error);
    CHECK_THROWS_AS(expression::parse("1 2"), gammacf::config_error);
    CHECK_THROWS_AS(expression::parse("x^y"), gammacf::config_error);
    CHECK_THROWS_AS(expression::parse("1.5"), gammacf::config_error);
}

TEST_CASE("source round trip") {
    const std::string src = " (x^2 - (1-alpha-beta)^2) / 2 ";
    expression e = expression::parse(src);
    CHECK(e.to_string() == src);
    auto names = e.parameters();
    REQUIRE(names.size() == 3);
    CHECK(names[0] == "x");
    CHECK(names[1] == "alpha");
    CHECK(names[2] == "beta");
}

TEST_CASE("symbolic evaluation") {
    using rf = rational_function;
    std::map<std::string, rf> env{{"x", rf::x()},
                                  {"alpha", rf(rational(1, 3))},
                                  {"beta", rf(rational(1, 5))}};
    rf v = expression::parse("(x^2-1)/(x+alpha)").eval(env);
    CHECK(v.eval(rational(2)) == rational(3) / rational(7, 3));
    rf w = expression::parse("x^2 - beta^2").eval(env);
    CHECK(w == rf::x() * rf::x() - rf(rational(1, 25)));
}

TEST_CASE("deep nesting stays exact") {
    // ((...(1/3 + 1)^2 ... )) exercising shared subtree reuse is not needed;
    // a single large power is enough to catch naive double math.
    CHECK(ev("(1/3)^40") == rational(1).pow(1) / rational(3).pow(40));
}
