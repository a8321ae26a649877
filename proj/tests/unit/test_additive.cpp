#include "doctest.h"
#include "hsconst/additive.hpp"
#include "hsconst/error.hpp"
#include "hsconst/parser.hpp"
#include "test_support.hpp"

using namespace hsc;

namespace {

AdditivePolynomial additive(const RingPtr& r, const char* s) {
    std::vector<std::size_t> vars(r->size());
    for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
    auto a = as_additive(parse_polynomial(s, r), vars);
    REQUIRE(a);
    return *a;
}

void check_reduction_certificate(const Polynomial& f, const TriangularAdditiveBasis& b, const RingPtr& r) {
    TriangularReduction red = triangular_reduce(f, b);
    std::vector<std::size_t> ids(b.nvars);
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    auto sig = b.polynomials(r, ids);
    Polynomial sum = red.remainder;
    for (std::size_t i = 0; i < sig.size(); ++i) sum += red.cofactors[i] * sig[i];
    CHECK(sum == f);
}

}  // namespace

TEST_CASE("additive_echelon examples") {
    RingPtr r = make_ring(Field::function_field(2, {"t"}), {"S", "T"});
    auto b = additive_echelon(r->field(), 2, {additive(r, "S^2 + t*T^2"), additive(r, "S^2")});
    REQUIRE(b.size() == 2);
    CHECK(b.polynomials(r, {0, 1}) == std::vector<Polynomial>{parse_polynomial("S^2", r), parse_polynomial("T^2", r)});
    CHECK(b.degrees() == std::vector<std::uint64_t>{2, 2});

    RingPtr q = make_ring(Field::rationals(), {"x", "y"});
    auto c = additive_echelon(q->field(), 2, {additive(q, "x + y"), additive(q, "y")});
    CHECK(c.polynomials(q, {0, 1}) == std::vector<Polynomial>{parse_polynomial("x", q), parse_polynomial("y", q)});

    RingPtr f2 = make_ring(Field::prime(2), {"T1", "T2"});
    auto d = additive_echelon(f2->field(), 2, {additive(f2, "T1^4 + T2^4")});
    CHECK(d.polynomials(f2, {0, 1}) == std::vector<Polynomial>{parse_polynomial("T1^4 + T2^4", f2)});
    CHECK(d.degrees() == std::vector<std::uint64_t>{4});
    CHECK(d.permutation == std::vector<std::size_t>{0, 1});

    CHECK_THROWS_AS(additive_echelon(f2->field(), 2, {AdditivePolynomial{3, {f2->field().one(), f2->field().one()}}}),
                    InputError);
}

TEST_CASE("triangular_reduce examples") {
    RingPtr r = make_ring(Field::function_field(2, {"t"}), {"S", "T"});
    auto b = additive_echelon(r->field(), 2, {additive(r, "S^2 + t*T^2")});
    CHECK(triangular_reduce(parse_polynomial("S^4", r), b).remainder == parse_polynomial("t^2*T^4", r));
    CHECK(triangular_reduce(parse_polynomial("S^2 + t*T^2", r), b).remainder.is_zero());
    auto s2 = additive_echelon(r->field(), 2, {additive(r, "S^2")});
    CHECK(triangular_reduce(parse_polynomial("T", r), s2).remainder == parse_polynomial("T", r));
    check_reduction_certificate(parse_polynomial("S^4 + S^3*T + t*S^2", r), b, r);
}

TEST_CASE("cross-degree elimination keeps triangular shape") {
    RingPtr r = make_ring(Field::function_field(2, {"t"}), {"A", "B", "C"});
    auto b = additive_echelon(r->field(), 3,
                              {additive(r, "A^2 + t*B^2"), additive(r, "A^4 + B^4 + C^4"), additive(r, "B + C")});
    REQUIRE(b.size() == 3);
    CHECK(b.degrees() == std::vector<std::uint64_t>{1, 2, 4});
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(b.sigmas[i].coeffs[b.leaders[i]].is_one());
        for (std::size_t k = 0; k < i; ++k) CHECK(b.sigmas[i].coeffs[b.leaders[k]].is_zero());
    }
}

TEST_CASE("randomized echelon reproduces its inputs") {
    std::mt19937 rng(77);
    for (Field f : {Field::prime(2), Field::prime(3), Field::function_field(2, {"t"}), Field::function_field(3, {"t"})}) {
        CAPTURE(f.to_string());
        std::uint64_t p = f.characteristic();
        RingPtr r = make_ring(f, {"a", "b", "c", "d"});
        std::uniform_int_distribution<int> level(0, 2), count(1, 4);
        for (int i = 0; i < 20; ++i) {
            std::vector<AdditivePolynomial> in;
            int k = count(rng);
            for (int j = 0; j < k; ++j) {
                AdditivePolynomial a{1, {}};
                for (int l = level(rng); l > 0; --l) a.q *= p;
                for (int v = 0; v < 4; ++v) a.coeffs.push_back(testing::random_element(f, rng, 1));
                in.push_back(a);
            }
            auto b = additive_echelon(f, 4, in);
            for (std::size_t s = 1; s < b.size(); ++s) CHECK(b.sigmas[s - 1].q <= b.sigmas[s].q);
            for (const auto& a : in) {
                Polynomial poly = a.to_polynomial(r);
                CHECK(triangular_reduce(poly, b).remainder.is_zero());
                check_reduction_certificate(poly, b, r);
            }
            Polynomial g = testing::random_polynomial(r, rng, 6);
            check_reduction_certificate(g, b, r);
        }
    }
}
