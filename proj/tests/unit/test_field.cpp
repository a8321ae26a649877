#include "doctest.h"
#include "hsconst/error.hpp"
#include "hsconst/field.hpp"
#include "test_support.hpp"

using namespace hsc;

TEST_CASE("normalize reduces fractions") {
    Field q = Field::rationals();
    CHECK(FieldElement::rational(q, mpq_class(2, 4)).to_string() == "1/2");

    Field f2t = Field::function_field(2, {"t"});
    ParamPoly t = ParamPoly::variable(1, 2, 0);
    FieldElement x = FieldElement::normalize(f2t, t * t + t, t);
    CHECK(x == f2t.parameter("t") + f2t.one());
    CHECK(x.to_string() == "t + 1");

    CHECK_THROWS_AS(FieldElement::normalize(f2t, t, ParamPoly(1, 2)), ArithmeticError);
    CHECK_THROWS_AS(f2t.parameter("w"), InputError);
}

TEST_CASE("canonical form over Q(t,w)") {
    Field k = Field::function_field(0, {"t", "w"});
    FieldElement t = k.parameter("t"), w = k.parameter("w");
    FieldElement a = (t * t - w * w) / (t - w);
    CHECK(a == t + w);
    CHECK(a.denominator().is_one());
    FieldElement b = (k.from_int(2) * t) / (k.from_int(-4) * w);
    CHECK(b.to_string() == "-t/(2*w)");
    CHECK(b.denominator().leading_coefficient() > 0);
}

TEST_CASE("mixed fields are rejected") {
    Field a = Field::prime(3), b = Field::prime(5);
    CHECK_THROWS_AS(a.one() + b.one(), ArithmeticError);
}

TEST_CASE("qth_power_root examples") {
    Field f2t = Field::function_field(2, {"t"});
    FieldElement t = f2t.parameter("t");
    auto r = qth_power_root(t * t, 2);
    REQUIRE(r);
    CHECK(*r == t);
    CHECK_FALSE(qth_power_root(t, 2));
    Field f5 = Field::prime(5);
    CHECK(*qth_power_root(f5.from_int(2), 5) == f5.from_int(2));
    CHECK_THROWS_AS(qth_power_root(Field::rationals().one(), 2), InputError);
    CHECK_THROWS_AS(qth_power_root(t, 3), InputError);
}

TEST_CASE("adjoin_parameter_roots examples") {
    Field f2t = Field::function_field(2, {"t"});
    ParameterRootExtension ext(f2t, 1);
    CHECK(ext.extended().parameter_names() == std::vector<std::string>{"t'"});
    FieldElement tp = ext.extended().parameter("t'");
    CHECK(ext.embed(f2t.parameter("t")) == tp * tp);

    ParameterRootExtension id(Field::rationals(), 0);
    CHECK(id.extended() == Field::rationals());
    CHECK(id.embed(Field::rationals().from_int(7)) == Field::rationals().from_int(7));

    Field f3tw = Field::function_field(3, {"t", "w"});
    ParameterRootExtension e3(f3tw, 1);
    CHECK(e3.extended().parameter_names() == std::vector<std::string>{"t'", "w'"});
    CHECK(e3.embed(f3tw.parameter("w")) == e3.extended().parameter("w'").pow(3));
    CHECK(e3.basis_exponents().size() == 9);
    CHECK_THROWS_AS(ParameterRootExtension(Field::rationals(), 1), InputError);
}

TEST_CASE("binomials via Lucas") {
    CHECK(binomial(Field::rationals(), 5, 2) == Field::rationals().from_int(10));
    CHECK(binomial(Field::prime(2), 2, 1).is_zero());
    CHECK(binomial(Field::prime(2), 2, 2).is_one());
    CHECK(binomial(Field::prime(3), 10, 4) == Field::prime(3).from_int(210));
}

TEST_CASE("randomized field axioms and Frobenius properties") {
    std::mt19937 rng(11);
    std::vector<Field> fields = {Field::rationals(), Field::prime(3), Field::function_field(2, {"t"}),
                                 Field::function_field(3, {"t", "w"}), Field::function_field(0, {"t"})};
    for (Field f : fields) {
        CAPTURE(f.to_string());
        for (int i = 0; i < 40; ++i) {
            FieldElement a = testing::random_element(f, rng), b = testing::random_element(f, rng),
                         c = testing::random_element(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == f.zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
            std::uint64_t p = f.characteristic();
            if (p) {
                CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
                CHECK(a.frobenius() == a.pow(p));
                for (std::uint64_t q : {p, p * p}) {
                    auto r = qth_power_root(a.pow(q), q);
                    REQUIRE(r);
                    CHECK(*r == a);
                }
            }
        }
    }
}

TEST_CASE("k-hull expansion round trip") {
    std::mt19937 rng(5);
    for (Field base : {Field::function_field(2, {"t"}), Field::function_field(3, {"t", "w"})}) {
        for (std::uint32_t e : {1u, 2u}) {
            if (base.parameter_count() == 2 && e == 2) continue;
            ParameterRootExtension ext(base, e);
            for (int i = 0; i < 10; ++i) {
                FieldElement x = testing::random_element(ext.extended(), rng);
                auto coords = ext.expand(x);
                CHECK(coords.size() == ext.basis_exponents().size());
                CHECK(ext.assemble(coords) == x);
            }
        }
    }
}
