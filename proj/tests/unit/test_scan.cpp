#include <random>

#include "doctest.h"
#include "hsconst/error.hpp"
#include "hsconst/parser.hpp"
#include "hsconst/scan.hpp"
#include "hsconst/univariate.hpp"
#include "test_support.hpp"

using namespace hsc;

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

int mobius(std::uint32_t n) {
    int mu = 1;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

// Closed points of degree j on P^(n-1) over F_p, by Moebius inversion of the
// point counts (q^n - 1)/(q - 1).
std::uint64_t closed_points_of_degree(std::uint64_t p, std::size_t n, std::uint32_t j) {
    std::int64_t exact = 0;
    for (std::uint32_t d = 1; d <= j; ++d) {
        if (j % d) continue;
        std::uint64_t q = ipow(p, d);
        std::uint64_t count = (ipow(q, static_cast<std::uint32_t>(n)) - 1) / (q - 1);
        exact += mobius(j / d) * static_cast<std::int64_t>(count);
    }
    return static_cast<std::uint64_t>(exact) / j;
}

std::vector<GFPoint> cone_points(const GaloisField& F, const std::vector<Polynomial>& gens) {
    std::vector<GFPoint> out;
    for (auto& x : projective_orbit_representatives(F, gens.front().nvars())) {
        bool on = true;
        for (const auto& g : gens) on = on && evaluate(F, g, x) == 0;
        if (on) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("finite field tables satisfy the field axioms") {
    for (auto [p, j] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 1}, {3, 3}}) {
        GaloisField F(p, j);
        CHECK(F.order() == ipow(p, j));
        UPoly m;
        for (auto c : F.modulus()) m.push_back(Field::prime(p).from_int(static_cast<long>(c)));
        CHECK(udegree(m) == static_cast<int>(j));
        if (j > 1) CHECK(is_irreducible(m) == std::optional<bool>(true));
        for (GaloisField::Elem a = 0; a < F.order(); ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, F.order()) == a);
            for (GaloisField::Elem b = 0; b < F.order(); ++b) {
                CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
                CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
                for (GaloisField::Elem c = 0; c < F.order(); c += 3)
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
}

TEST_CASE("field description and element printing") {
    GaloisField F(2, 2);
    CHECK(F.describe() == "GF(4) = F_2[a]/(a^2 + a + 1)");
    CHECK(F.to_string(3) == "a + 1");
    CHECK(F.to_string(0) == "0");
    CHECK(GaloisField(7, 1).describe() == "GF(7)");
    CHECK_THROWS_AS(GaloisField(4, 1), InputError);
    CHECK_THROWS_AS(GaloisField(2, 17), InputError);
}

TEST_CASE("orbit representatives count the closed points of each degree") {
    for (auto [p, n, j] : std::vector<std::tuple<std::uint64_t, std::size_t, std::uint32_t>>{
             {2, 2, 1}, {2, 2, 2}, {2, 3, 2}, {2, 3, 3}, {3, 2, 2}, {3, 3, 2}, {5, 2, 3}, {2, 4, 2}}) {
        GaloisField F(p, j);
        auto reps = projective_orbit_representatives(F, n);
        CHECK(reps.size() == closed_points_of_degree(p, n, j));
        for (const auto& x : reps) CHECK(definition_degree(F, x) == j);
    }
}

TEST_CASE("closed point ideals vanish on the whole orbit") {
    GaloisField F(3, 2);
    auto ring = make_ring(Field::prime(3), {"x", "y", "z"});
    for (const auto& x : projective_orbit_representatives(F, 3)) {
        auto M = closed_point_ideal(F, x, ring);
        CHECK(M.size() == 3);
        GFPoint conj = x;
        for (int s = 0; s < 2; ++s) {
            for (const auto& g : M) CHECK(evaluate(F, g, conj) == 0);
            for (auto& v : conj) v = F.frobenius(v);
        }
    }
}

TEST_CASE("slice engine agrees with the exact local engine at closed points") {
    struct Case {
        std::uint64_t p;
        std::vector<std::string> gens;
    };
    std::vector<Case> cases = {
        {2, {"x^2 + y*z"}},
        {2, {"x^3 + y^2*z", "x*y*z"}},
        {3, {"x^3 + y^2*z"}},
        {3, {"x^2*y - z^3"}},
        {2, {"x^2*z + y^3 + y*z^2"}},
        {5, {"x*y", "y*z"}},
    };
    for (const auto& c : cases) {
        auto ring = make_ring(Field::prime(c.p), {"x", "y", "z"});
        auto gens = parse_polynomials(c.gens, ring);
        for (std::uint32_t j = 1; j <= 2; ++j) {
            GaloisField F(c.p, j);
            for (const auto& x : cone_points(F, gens)) {
                auto fast = hs_at_cone_point(gens, F, x, 5);
                auto exact = hs_local_truncated(gens, closed_point_ideal(F, x, ring), 5);
                INFO(c.gens.front() << " at " << point_string(F, x));
                CHECK(fast.values == exact.values);
            }
        }
    }
}

TEST_CASE("normal crossing has a single top stratum point") {
    auto ring = make_ring(Field::prime(3), {"x", "y"});
    auto gens = parse_polynomials({"x*y"}, ring);
    auto origin = hs_cone_origin(gens, 6);
    CHECK(origin.values == std::vector<std::int64_t>{1, 2, 2, 2, 2, 2, 2});
    for (std::uint32_t j = 1; j <= 3; ++j) {
        GaloisField F(3, j);
        for (const auto& x : cone_points(F, gens)) {
            auto h = hs_at_cone_point(gens, F, x, 6);
            CHECK(h.values == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1});
        }
    }
}

TEST_CASE("a fat line is equimultiple along itself") {
    auto ring = make_ring(Field::prime(2), {"x", "y"});
    auto gens = parse_polynomials({"(x + y)^4"}, ring);
    auto origin = hs_cone_origin(gens, 7);
    GaloisField F(2, 1);
    auto pts = cone_points(F, gens);
    REQUIRE(pts.size() == 1);
    CHECK(point_string(F, pts.front()) == "(1, 1)");
    CHECK(hs_at_cone_point(gens, F, pts.front(), 7).values == origin.values);
}

TEST_CASE("points off the cone and the zero point are rejected") {
    auto ring = make_ring(Field::prime(2), {"x", "y"});
    auto gens = parse_polynomials({"x*y"}, ring);
    GaloisField F(2, 1);
    CHECK_THROWS_AS(hs_at_cone_point(gens, F, {1, 1}, 4), InputError);
    CHECK_THROWS_AS(hs_at_cone_point(gens, F, {0, 0}, 4), InputError);
    auto qring = make_ring(Field::rationals(), {"x", "y"});
    CHECK_THROWS_AS(evaluate(F, parse_polynomial("x", qring), {1, 0}), InputError);
}

TEST_CASE("random cones: slice engine matches the exact engine") {
    std::mt19937 rng(7);
    auto ring = make_ring(Field::prime(2), {"x", "y", "z"});
    GaloisField F(2, 2);
    int compared = 0;
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> gens;
        std::uint32_t d = 2 + trial % 2;
        Polynomial f(ring);
        for (const auto& m : monomials_of_degree(3, d))
            if (rng() % 3 == 0) f.add_term(m, ring->field().one());
        if (f.is_zero()) continue;
        gens.push_back(f);
        for (const auto& x : cone_points(F, gens)) {
            CHECK(hs_at_cone_point(gens, F, x, 5).values ==
                  hs_local_truncated(gens, closed_point_ideal(F, x, ring), 5).values);
            ++compared;
        }
    }
    CHECK(compared > 0);
}
