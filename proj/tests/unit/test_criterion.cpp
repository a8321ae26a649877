#include <algorithm>

#include "doctest.h"
#include "hsconst/criterion.hpp"
#include "hsconst/error.hpp"
#include "hsconst/parser.hpp"
#include "suite.hpp"

using namespace hsc;

namespace {

std::vector<Polynomial> ideal(const RingPtr& r, std::vector<std::string> gens) { return parse_polynomials(gens, r); }

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> xs) { return xs; }

bool has_note(const CriterionReport& rep, const std::string& needle) {
    return std::any_of(rep.notes.begin(), rep.notes.end(),
                       [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

// x^N lies in a monomial ideal iff some generator divides it.
bool monomial_ideal_contains(const std::vector<Monomial>& gens, const Monomial& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > m[i]) return false;
        return true;
    });
}

}  // namespace

TEST_CASE("three-valued conjunction") {
    CHECK(verdict_and(Verdict::True, Verdict::True) == Verdict::True);
    CHECK(verdict_and(Verdict::True, Verdict::Inconclusive) == Verdict::Inconclusive);
    CHECK(verdict_and(Verdict::Inconclusive, Verdict::False) == Verdict::False);
    CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
}

TEST_CASE("radical of squares of the coordinates") {
    auto r = make_ring(Field::rationals(), {"x", "y"});
    auto cert = radical_equal_linear(ideal(r, {"x^2", "y^2"}), ideal(r, {"x", "y"}));
    CHECK(cert.verdict == Verdict::True);
    REQUIRE(cert.exponents.size() == 2);
    CHECK(cert.exponents[0] == std::optional<std::uint32_t>(2));
    CHECK(cert.exponents[1] == std::optional<std::uint32_t>(2));
}

TEST_CASE("radical of a normal crossing is not the maximal ideal") {
    for (auto f : {Field::rationals(), Field::prime(3)}) {
        auto r = make_ring(f, {"x", "y"});
        auto cert = radical_equal_linear(ideal(r, {"x*y"}), ideal(r, {"x", "y"}));
        CHECK(cert.verdict == Verdict::False);
        CHECK(cert.counterexample.has_value());
        CHECK(!cert.exponents.at(0).has_value());
        for (std::uint32_t N = 1; N <= cert.nmax; ++N)
            CHECK(!monomial_ideal_contains({{1, 1}}, {N, 0}));
    }
}

TEST_CASE("linear ideals are their own radical") {
    auto r = make_ring(Field::prime(5), {"x", "y", "z"});
    auto J = ideal(r, {"x + y", "z"});
    auto cert = radical_equal_linear(J, J);
    CHECK(cert.verdict == Verdict::True);
    CHECK(cert.exponents == std::vector<std::optional<std::uint32_t>>{1, 1});
}

TEST_CASE("radical test distinguishes false from inconclusive") {
    auto q = make_ring(Field::rationals(), {"x", "y"});
    auto cert = radical_equal_linear(ideal(q, {"x^2 + y^2"}), ideal(q, {"x", "y"}));
    CHECK(cert.verdict == Verdict::Inconclusive);
    CHECK(!cert.counterexample);

    auto f3 = make_ring(Field::prime(3), {"x", "y"});
    auto split = radical_equal_linear(ideal(f3, {"x^2 + y^2"}), ideal(f3, {"x", "y"}));
    CHECK(split.verdict == Verdict::False);
    REQUIRE(split.counterexample);
    CHECK(split.counterexample->find("GF(9)") != std::string::npos);

    auto outside = radical_equal_linear(ideal(f3, {"x^2 + y^2"}), ideal(f3, {"x"}));
    CHECK(outside.verdict == Verdict::False);
    CHECK(outside.outside.size() == 1);
    CHECK_THROWS_AS(radical_equal_linear(ideal(f3, {"x^2"}), ideal(f3, {"x^2"})), InputError);
    CHECK_THROWS_AS(radical_equal_linear(ideal(f3, {"x^2"}), ideal(f3, {"x", "2*x"})), InputError);
}

TEST_CASE("cone criterion examples") {
    auto q = make_ring(Field::rationals(), {"x", "y", "z"});
    auto squares = cone_constancy_criterion(ideal(q, {"x^2", "y^2"}));
    CHECK(squares.predicted == Verdict::True);
    CHECK(squares.radical.verdict == Verdict::True);
    CHECK(squares.ridge_verdict == Verdict::True);
    CHECK(squares.directrix->dim() == 2);
    CHECK(squares.polyhedron->empty);
    CHECK(squares.normal_flatness->flat);
    CHECK(squares.disagreements.empty());

    auto ft = make_ring(Field::function_field(2, {"t"}), {"X", "Y"});
    auto exc = cone_constancy_criterion(ideal(ft, {"X^2 + t*Y^2"}));
    CHECK(exc.predicted == Verdict::False);
    CHECK(exc.ridge_verdict == Verdict::False);
    CHECK(exc.ridge_witness == "t admits no square root");
    CHECK(exc.summary.find("HS non-constant") != std::string::npos);

    auto nc = cone_constancy_criterion(ideal(make_ring(Field::prime(3), {"x", "y"}), {"x*y"}));
    CHECK(nc.radical.verdict == Verdict::False);
    CHECK(nc.ridge_verdict == Verdict::True);
    CHECK(nc.predicted == Verdict::False);
}

TEST_CASE("normal flatness along a declared stratum") {
    auto q = make_ring(Field::rationals(), {"x1", "x2", "x3"});
    auto exb = normal_flatness_check(ideal(q, {"x1^2 + x2*x3^2", "x2^2"}), {"x1", "x2"}, 6);
    CHECK(!exb.flat);
    CHECK(exb.origin.values == v({1, 3, 4, 4, 4, 4, 4}));
    CHECK(exb.generic.values == v({1, 1, 1, 1, 0, 0, 0}));
    CHECK(exb.first_difference == std::optional<std::size_t>(1));

    auto r = make_ring(Field::rationals(), {"x", "y", "z"});
    auto sq = normal_flatness_check(ideal(r, {"x^2", "y^2"}), {"x", "y"}, 6);
    CHECK(sq.flat);
    CHECK(sq.origin.values == v({1, 3, 4, 4, 4, 4, 4}));
    CHECK(sq.generic.values == v({1, 2, 1, 0, 0, 0, 0}));

    auto r2 = make_ring(Field::prime(3), {"x", "y"});
    CHECK(normal_flatness_check(ideal(r2, {"y^2"}), {"y"}, 6).flat);
    CHECK_THROWS_AS(normal_flatness_check(ideal(r2, {"y^2 + x"}), {"y"}, 6), InputError);
}

TEST_CASE("stratum scan examples") {
    auto f3 = make_ring(Field::prime(3), {"x", "y"});
    auto nc = stratum_scan(ideal(f3, {"x*y"}), 1, 0, 8);
    CHECK(nc.stratum == std::vector<std::string>{"origin"});
    CHECK(nc.points.size() == 2);
    CHECK(!nc.constant);
    CHECK(nc.ridge_coincides == std::optional<bool>(true));

    auto f2 = make_ring(Field::prime(2), {"x", "y"});
    auto fat = stratum_scan(ideal(f2, {"(x + y)^4"}), 2, 0, 8);
    CHECK(fat.constant);
    CHECK(fat.stratum == std::vector<std::string>{"origin", "GF(2):(1, 1)"});

    auto lin = stratum_scan(ideal(make_ring(Field::prime(2), {"x", "y", "z"}), {"x"}), 2, 0, 6);
    CHECK(lin.constant);
    CHECK(lin.stratum.size() == lin.points.size() + 1);
    CHECK(lin.points.size() == 4);

    auto q = make_ring(Field::rationals(), {"x", "y"});
    CHECK_THROWS_WITH_AS(stratum_scan(ideal(q, {"x*y"})), "enumeration unsupported over Q", InputError);
    auto ft = make_ring(Field::function_field(2, {"t"}), {"x", "y"});
    CHECK_THROWS_AS(stratum_scan(ideal(ft, {"x*y"})), InputError);
}

TEST_CASE("affine scan along a smooth curve through the origin") {
    auto r = make_ring(Field::prime(3), {"x", "y"});
    auto s = stratum_scan(ideal(r, {"y - x^2"}), 2, 0, 5);
    CHECK(s.constant);
    CHECK(!s.ridge_coincides);
    CHECK_THROWS_AS(stratum_scan(ideal(r, {"y - 1"}), 1, 0, 5), InputError);
}

TEST_CASE("theorem report on the fat line with an embedded tangent") {
    auto q = make_ring(Field::rationals(), {"x1", "x2", "x3"});
    ReportOptions opt;
    opt.u = std::vector<std::string>{"x3"};
    opt.y = std::vector<std::string>{"x1", "x2"};
    auto rep = theorem_report(ideal(q, {"x1^2 + x2*x3^2", "x2^2"}), opt);
    CHECK(rep.summary == "reduction regular, not normally flat, HS non-constant");
    CHECK(rep.radical.verdict == Verdict::True);
    CHECK(rep.predicted == Verdict::False);
    REQUIRE(rep.polyhedron);
    CHECK(rep.polyhedron->system.prepared);
    CHECK(!rep.polyhedron->empty);
    REQUIRE(rep.polyhedron->system.polyhedron.vertices().size() == 1);
    CHECK(point_to_string(rep.polyhedron->system.polyhedron.vertices()[0]) == "(2)");
    CHECK(rep.disagreements.empty());
}

TEST_CASE("theorem report on cones") {
    auto q = make_ring(Field::rationals(), {"x", "y", "z"});
    auto sq = theorem_report(ideal(q, {"x^2", "y^2"}));
    CHECK(sq.predicted == Verdict::True);
    CHECK(sq.polyhedron->empty);
    CHECK(sq.polyhedron->u == std::vector<std::string>{"z"});
    CHECK(has_note(sq, "scan skipped"));

    auto ft = make_ring(Field::function_field(2, {"t"}), {"X", "Y"});
    auto exc = theorem_report(ideal(ft, {"X^2 + t*Y^2"}));
    CHECK(exc.predicted == Verdict::False);
    CHECK(!exc.scan);
    CHECK(has_note(exc, "enumeration unsupported over F2(t)"));
    CHECK(has_note(exc, "derivative-ideal probe"));
    CHECK(has_note(exc, "HS [1, 1, 1"));
    CHECK(has_note(exc, "[1, 2, 2"));

    auto f2 = make_ring(Field::prime(2), {"x", "y", "z"});
    auto quad = theorem_report(ideal(f2, {"x^2 + y*z"}));
    REQUIRE(quad.scan);
    CHECK(!quad.scan->constant);
    CHECK(quad.predicted == Verdict::False);
    CHECK(quad.disagreements.empty());

    CHECK_THROWS_AS(theorem_report(ideal(q, {"x^2 + y"})), InputError);
}

TEST_CASE("criterion agrees with the scan on the cone suite") {
    for (const auto& s : hsc::testing::cone_suite()) {
        INFO(hsc::testing::suite_label(s));
        ReportOptions opt;
        opt.max_extension = 2;
        opt.truncation = 6;
        auto rep = theorem_report(hsc::testing::suite_generators(s), opt);
        CHECK(rep.predicted == (s.constant ? Verdict::True : Verdict::False));
        REQUIRE(rep.scan);
        CHECK(rep.scan->constant == s.constant);
        CHECK(rep.disagreements.empty());
    }
}
