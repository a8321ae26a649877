#include <random>

#include "doctest.h"
#include "hsconst/error.hpp"
#include "hsconst/session.hpp"
#include "test_support.hpp"

using namespace hsc;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_ideal_file(text);
    } catch (const SessionError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parses the three example sessions") {
    Session b = parse_ideal_file("field Q\nvars x1 x2 x3\ngen x1^2+x2*x3^2\ngen x2^2\n");
    CHECK(b.field == Field::rationals());
    CHECK(b.vars == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(!b.split);
    REQUIRE(b.gens.size() == 2);
    CHECK(b.gens[0].to_string() == "x2*x3^2 + x1^2");

    Session c = parse_ideal_file("field Frac 2 ; t\nvars X Y\ngen X^2+t*Y^2\n");
    CHECK(c.field == Field::function_field(2, {"t"}));
    CHECK(c.gens[0].to_string() == "X^2 + t*Y^2");

    Session a = parse_ideal_file(
        "# comment line\n\nfield Q\nvars u1 u2 y1   # trailing comment\nsplit u: u1 u2 ; y: y1\n"
        "gen y1^2 - 2*u1^2*y1 + u1^4 - u2^5\n");
    REQUIRE(a.split);
    CHECK(a.split->u == std::vector<std::string>{"u1", "u2"});
    CHECK(a.split->y == std::vector<std::string>{"y1"});
}

TEST_CASE("other field declarations") {
    CHECK(parse_ideal_file("field Fp 7\nvars x\ngen x").field == Field::prime(7));
    CHECK(parse_ideal_file("field Frac Q ; s, t\nvars x\ngen s*x").field == Field::function_field(0, {"s", "t"}));
    CHECK(parse_ideal_file("field Fp 3\r\nvars x y\r\ngen x*y\r\n").gens.size() == 1);
}

TEST_CASE("golden error messages") {
    CHECK(error_of("field Q\nvars x x\ngen x") == "line 2, column 8: duplicate variable 'x'");
    CHECK(error_of("field Q\nvars x y\ngen x + z") == "line 3, column 9: unknown identifier 'z'");
    CHECK(error_of("field Q\nvars x y\n") == "line 3, column 1: empty generator list");
    CHECK(error_of("field Q\nvars x y\ngen x*(y") == "line 3, column 9: expected ')'");
    CHECK(error_of("field Q\nvars x\ngen x - x") == "line 3, column 5: zero generator");
    CHECK(error_of("field Q\nvars x\ngen") == "line 3, column 4: expected an expression");
    CHECK(error_of("vars x\n") == "line 1, column 1: field must be declared before vars");
    CHECK(error_of("field Q\nfield Q\n") == "line 2, column 1: duplicate field declaration");
    CHECK(error_of("field Fp 4\n") == "line 1, column 10: characteristic 4 is not a prime");
    CHECK(error_of("field Fp x\n") == "line 1, column 10: expected a prime, got 'x'");
    CHECK(error_of("field R\n") == "line 1, column 7: unknown field 'R'");
    CHECK(error_of("field Frac 2 t\n") == "line 1, column 14: expected ';'");
    CHECK(error_of("field Frac 2 ;\n") == "line 1, column 15: expected at least one parameter");
    CHECK(error_of("field Frac 2 ; t\nvars t x\n") == "line 2, column 6: variable 't' clashes with a field parameter");
    CHECK(error_of("field Q\nvars x y\nvars z\n") == "line 3, column 1: duplicate vars declaration");
    CHECK(error_of("field Q\nvars 1x\n") == "line 2, column 6: invalid variable name '1x'");
    CHECK(error_of("field Q\nvars\n") == "line 2, column 5: expected at least one variable");
    CHECK(error_of("field Q\nvars x y\nsplit u: x ; y: q\n") == "line 3, column 17: unknown variable 'q'");
    CHECK(error_of("field Q\nvars x y\nsplit u: x\n") == "line 3, column 1: split needs 'u:' and 'y:' parts");
    CHECK(error_of("field Q\nvars x y z\nsplit u: x ; y: y\n") == "line 3, column 1: split must partition the variables");
    CHECK(error_of("field Q\nvars x y\nsplit u: x ; y: x y\n") == "line 3, column 17: variable 'x' listed twice in split");
    CHECK(error_of("field Q\nvars x y\nsplit x\n") == "line 3, column 7: expected 'u:'");
    CHECK(error_of("field Q\ngen x\n") == "line 2, column 1: vars must be declared before gen");
    CHECK(error_of("field Q\nsplit u: ; y: x\n") == "line 2, column 1: vars must be declared before split");
    CHECK(error_of("field Q\nvars x\nideal x\n") == "line 3, column 1: unknown directive 'ideal'");
    CHECK(error_of("") == "line 1, column 1: missing field declaration");
    CHECK(error_of("field Q\n") == "line 2, column 1: missing vars declaration");
    CHECK(error_of("field Q\nvars x\ngen x/y") == "line 3, column 7: unknown identifier 'y'");
    CHECK(error_of("field\n") == "line 1, column 6: expected Q, Fp or Frac");
    CHECK(error_of("field Fp\n") == "line 1, column 9: expected a prime");
    CHECK(error_of("field Q x\n") == "line 1, column 9: unexpected 'x'");
    CHECK(error_of("field Fp 3 3\n") == "line 1, column 12: unexpected '3'");
    CHECK(error_of("field Fp Q\n") == "line 1, column 10: expected a prime, got 'Q'");
    CHECK(error_of("field Frac\n") == "line 1, column 11: expected Q or a prime");
    CHECK(error_of("field Frac 2 ; 1t\n") == "line 1, column 16: invalid parameter name '1t'");
    CHECK(error_of("field Frac 2 ; t t\n") == "line 1, column 18: duplicate parameter 't'");
    CHECK(error_of("field Q\nvars x y\nsplit u: x ; y: y\nsplit u: x ; y: y\n") ==
          "line 4, column 1: duplicate split declaration");
    CHECK(error_of("field Q\nvars x y\nsplit u: x y ; y:\n") == "line 3, column 1: split needs at least one y-variable");
}

TEST_CASE("golden expression errors") {
    auto gen_error = [](const std::string& expr) { return error_of("field Q\nvars x y\ngen " + expr + "\n"); };
    CHECK(gen_error("2x") == "line 3, column 6: unexpected character 'x'");
    CHECK(gen_error("x^y") == "line 3, column 7: exponent must be a nonnegative integer literal");
    CHECK(gen_error("x^99999999") == "line 3, column 15: exponent too large");
    CHECK(gen_error("x +") == "line 3, column 8: unexpected end of input");
    CHECK(gen_error("x/(y+1)") == "line 3, column 7: division by an expression in the variables");
    CHECK(gen_error("x/(1-1)") == "line 3, column 7: division by zero");
}

TEST_CASE("printing and parsing round trip") {
    const char* samples[] = {
        "field Q\nvars x1 x2 x3\ngen x1^2+x2*x3^2\ngen x2^2\n",
        "field Frac 2 ; t\nvars X Y\ngen X^2+t*Y^2\n",
        "field Q\nvars u1 u2 y1\nsplit u: u1 u2 ; y: y1\ngen y1^2 - 2*u1^2*y1 + u1^4 - u2^5\n",
        "field Frac Q ; s t\nvars x y\nsplit u: ; y: x y\ngen (s+1)/(2*t)*x^2 - 3/4*y\n",
        "field Fp 5\nvars a b\ngen 7*a^3*b - b\n",
    };
    for (const char* text : samples) {
        Session s = parse_ideal_file(text);
        std::string printed = print_session(s);
        Session again = parse_ideal_file(printed);
        CHECK(again == s);
        CHECK(print_session(again) == printed);
    }
}

TEST_CASE("random sessions round trip") {
    std::mt19937 rng(11);
    std::vector<Field> fields = {Field::rationals(), Field::prime(3), Field::function_field(2, {"t"}),
                                 Field::function_field(0, {"t", "w"})};
    for (int trial = 0; trial < 60; ++trial) {
        Field f = fields[trial % fields.size()];
        Session s;
        s.field = f;
        s.vars = {"x", "y", "z"};
        s.ring = make_ring(f, s.vars);
        if (trial % 3 == 0) s.split = Split{{"z"}, {"x", "y"}};
        for (int k = 0; k < 1 + trial % 3; ++k) {
            Polynomial g = hsc::testing::random_polynomial(s.ring, rng, 4);
            if (!g.is_zero()) s.gens.push_back(g);
        }
        if (s.gens.empty()) continue;
        CHECK(parse_ideal_file(print_session(s)) == s);
    }
}
