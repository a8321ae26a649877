#include <set>

#include "doctest.h"
#include "hsconst/cone.hpp"
#include "hsconst/error.hpp"
#include "hsconst/parser.hpp"
#include "test_support.hpp"

using namespace hsc;

namespace {

std::vector<Polynomial> ideal(const RingPtr& r, std::vector<std::string> gens) { return parse_polynomials(gens, r); }

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

SubspaceBasis span_of(const RingPtr& r, std::vector<std::string> forms) {
    Matrix rows;
    std::vector<std::size_t> vars(r->size());
    for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
    for (const auto& f : ideal(r, forms)) {
        auto a = as_additive(f, vars);
        REQUIRE(a.has_value());
        rows.push_back(a->coeffs);
    }
    return echelon(r->field(), r->size(), rows);
}

// All subspaces of F_p^n, by echelon-deduplicating every list of at most n
// vectors.
std::vector<SubspaceBasis> all_subspaces(Field f, std::size_t n) {
    std::uint64_t p = f.characteristic();
    std::vector<Vector> vectors;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        Vector v;
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(f.from_int(static_cast<long>(c % p)));
            c /= p;
        }
        vectors.push_back(v);
    }
    std::vector<SubspaceBasis> out;
    auto seen = [&](const SubspaceBasis& s) {
        for (const auto& o : out)
            if (o == s) return true;
        return false;
    };
    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        Matrix rows;
        for (auto i : idx) rows.push_back(vectors[i]);
        SubspaceBasis s = echelon(f, n, rows);
        if (!seen(s)) out.push_back(s);
        if (idx.size() == n) return;
        for (std::size_t i = start; i < vectors.size(); ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool contains_space(const SubspaceBasis& big, const SubspaceBasis& small) {
    for (const auto& row : small.rows())
        if (!big.contains(row)) return false;
    return true;
}

// F(X + a) lies in I for every generator, tested degree by degree.
bool translation_preserves(const std::vector<Polynomial>& gens, const std::vector<FieldElement>& a) {
    RingPtr r = gens.front().ring();
    std::uint32_t D = 0;
    for (const auto& g : gens) D = std::max(D, g.degree());
    GradedIdeal gi(r, gens, D);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < r->size(); ++i)
        images.push_back(Polynomial::variable(r, i) + Polynomial::constant(r, a[i]));
    for (const auto& g : gens) {
        Polynomial moved = substitute(g, images);
        for (std::uint32_t d = 0; d <= D; ++d)
            if (!gi.contains(moved.homogeneous_part(d))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("translation ring names") {
    RingPtr r = make_ring(Field::rationals(), {"x", "y", "T_x"});
    CHECK(translation_ring(r)->variables() == std::vector<std::string>{"T_T_x", "T_y", "T_T_T_x"});
}

TEST_CASE("stabilizer generators") {
    RingPtr r = make_ring(Field::rationals(), {"x", "y"});
    StabilizerData s = stabilizer_generators(ideal(r, {"x*y"}));
    CHECK(s.t_ring->variables() == std::vector<std::string>{"T_x", "T_y"});
    auto sp = strings(s.generators);
    std::sort(sp.begin(), sp.end());
    CHECK(sp == std::vector<std::string>{"T_x", "T_x*T_y", "T_y"});

    RingPtr rt = make_ring(Field::function_field(2, {"t"}), {"X", "Y"});
    StabilizerData st = stabilizer_generators(ideal(rt, {"X^2 + t*Y^2"}));
    CHECK(strings(st.generators) == std::vector<std::string>{"T_X^2 + t*T_Y^2"});
}

TEST_CASE("stabilizer vanishing matches translation by points") {
    for (std::uint64_t p : {2u, 3u}) {
        Field f = Field::prime(p);
        RingPtr r = make_ring(f, {"x", "y", "z"});
        std::vector<std::vector<std::string>> cases = {
            {"x^2", "y^2"}, {"(x+y)^2"}, {"x^3 + y^3"}, {"x*y", "z^2"}, {"(x+y+z)^3", "x^2*y - y^3"}, {"x^4 + y^2*z^2"}};
        for (const auto& c : cases) {
            auto gens = ideal(r, c);
            StabilizerData s = stabilizer_generators(gens);
            std::uint64_t total = p * p * p;
            for (std::uint64_t code = 0; code < total; ++code) {
                std::vector<FieldElement> a;
                std::uint64_t k = code;
                for (int i = 0; i < 3; ++i) {
                    a.push_back(f.from_int(static_cast<long>(k % p)));
                    k /= p;
                }
                std::vector<Polynomial> pt;
                for (const auto& x : a) pt.push_back(Polynomial::constant(s.t_ring, x));
                bool vanishes = true;
                for (const auto& g : s.generators) vanishes = vanishes && substitute(g, pt).is_zero();
                CHECK(vanishes == translation_preserves(gens, a));
            }
        }
    }
}

TEST_CASE("ridge examples") {
    RingPtr rt = make_ring(Field::function_field(2, {"t"}), {"X", "Y"});
    RidgeResult a = ridge(ideal(rt, {"X^2 + t*Y^2"}));
    CHECK(strings(a.sigmas) == std::vector<std::string>{"T_X^2 + t*T_Y^2"});
    CHECK(a.basis.degrees() == std::vector<std::uint64_t>{2});

    RingPtr rq = make_ring(Field::rationals(), {"x", "y", "z"});
    RidgeResult b = ridge(ideal(rq, {"x^2", "y^2"}));
    CHECK(strings(b.sigmas) == std::vector<std::string>{"T_x", "T_y"});

    RingPtr r2 = make_ring(Field::prime(2), {"x", "y"});
    RidgeResult c = ridge(ideal(r2, {"(x+y)^4"}));
    CHECK(strings(c.sigmas) == std::vector<std::string>{"T_x^4 + T_y^4"});
    CHECK(c.basis.degrees() == std::vector<std::uint64_t>{4});

    RingPtr r3 = make_ring(Field::prime(3), {"x", "y", "z"});
    RidgeResult d = ridge(ideal(r3, {"x^3 + y^3", "z^2"}));
    CHECK(strings(d.sigmas) == std::vector<std::string>{"T_z", "T_x^3 + T_y^3"});
    CHECK_FALSE(d.escalated);

    RidgeResult empty = ridge({Polynomial(rq)});
    CHECK(empty.basis.size() == 0);
}

TEST_CASE("translation stability check") {
    RingPtr rt = make_ring(Field::function_field(2, {"t"}), {"X", "Y"});
    Field k = rt->field();
    auto gens = ideal(rt, {"X^2 + t*Y^2"});
    auto good = additive_echelon(k, 2, {AdditivePolynomial{2, {k.one(), k.parameter("t")}}});
    auto bad = additive_echelon(k, 2, {AdditivePolynomial{2, {k.one(), k.zero()}}});
    CHECK(verify_translation_stability(gens, good));
    CHECK_FALSE(verify_translation_stability(gens, bad));
}

TEST_CASE("ridge reduced to linear forms") {
    RingPtr rt = make_ring(Field::function_field(2, {"t"}), {"X", "Y"});
    LinearReduction a = ridge_reduced_as_linear(ridge(ideal(rt, {"X^2 + t*Y^2"})).basis);
    CHECK_FALSE(a.forms.has_value());
    CHECK(a.witness == "t admits no square root");

    RingPtr r2 = make_ring(Field::prime(2), {"x", "y"});
    LinearReduction b = ridge_reduced_as_linear(ridge(ideal(r2, {"(x+y)^4"})).basis);
    REQUIRE(b.forms.has_value());
    REQUIRE(b.forms->size() == 1);
    CHECK(b.forms->front().to_polynomial(r2).to_string() == "x + y");

    RingPtr r3 = make_ring(Field::prime(3), {"x", "y", "z"});
    LinearReduction c = ridge_reduced_as_linear(ridge(ideal(r3, {"x^3 + y^3", "z^2"})).basis);
    REQUIRE(c.forms.has_value());
    CHECK(linear_span(r3, *c.forms) == span_of(r3, {"z", "x + y"}));
    REQUIRE(c.taus.size() == 2);
    CHECK(c.taus[0].q == 3);
}

TEST_CASE("directrix examples") {
    RingPtr rt = make_ring(Field::function_field(2, {"t"}), {"X", "Y"});
    DirectrixResult a = directrix(ideal(rt, {"X^2 + t*Y^2"}));
    CHECK(a.dim() == 2);
    CHECK(strings(a.forms) == std::vector<std::string>{"X", "Y"});
    CHECK(a.level == 1);

    RingPtr rq = make_ring(Field::rationals(), {"x", "y", "z"});
    DirectrixResult b = directrix(ideal(rq, {"x^2", "y^2"}));
    CHECK(strings(b.forms) == std::vector<std::string>{"x", "y"});
    CHECK(b.level == 0);

    RingPtr r2 = make_ring(Field::prime(2), {"x", "y", "z"});
    CHECK(strings(directrix(ideal(r2, {"(x+y)^4"})).forms) == std::vector<std::string>{"x + y"});

    RingPtr rt3 = make_ring(Field::function_field(3, {"t"}), {"X", "Y", "Z"});
    DirectrixResult c = directrix(ideal(rt3, {"X^3 + t*Y^3 + t^2*Z^3"}));
    CHECK(c.dim() == 3);
    DirectrixResult d = directrix(ideal(rt3, {"X^3 + t^3*Y^3"}));
    CHECK(strings(d.forms) == std::vector<std::string>{"X + t*Y"});
}

TEST_CASE("directrix lies inside the ridge") {
    std::vector<std::pair<Field, std::vector<std::string>>> cases = {
        {Field::function_field(2, {"t"}), {"X^2 + t*Y^2"}},
        {Field::function_field(2, {"t"}), {"X^4 + t*Y^4", "Z^2"}},
        {Field::function_field(3, {"t"}), {"X^3 + t*Y^3"}},
        {Field::prime(2), {"(X+Y)^4", "Z^2"}},
        {Field::rationals(), {"X*Y", "Z^3"}},
    };
    for (const auto& [f, gens_text] : cases) {
        RingPtr r = make_ring(f, {"X", "Y", "Z"});
        auto gens = ideal(r, gens_text);
        RidgeResult rid = ridge(gens);
        DirectrixResult dir = directrix(gens);
        std::vector<AdditivePolynomial> lin;
        for (const auto& row : dir.space.rows()) lin.push_back(AdditivePolynomial{1, row});
        auto dir_basis = additive_echelon(f, 3, lin);
        for (const auto& s : rid.sigmas) CHECK(triangular_reduce(s, dir_basis).remainder.is_zero());
        CHECK(dir.dim() >= rid.basis.size());
    }
}

TEST_CASE("perfect fields: directrix equals the reduced ridge") {
    std::mt19937 rng(11);
    for (std::uint64_t p : {2u, 3u, 5u}) {
        Field f = Field::prime(p);
        RingPtr r = make_ring(f, {"x", "y", "z"});
        for (int trial = 0; trial < 6; ++trial) {
            std::uint32_t q = (trial % 2 == 0) ? static_cast<std::uint32_t>(p) : 2;
            Polynomial g(r);
            for (const auto& m : monomials_of_degree(2, q)) {
                Monomial mm = {m[0], m[1], 0};
                g.add_term(mm, testing::random_element(f, rng));
            }
            if (g.is_zero()) continue;
            Polynomial z = Polynomial::variable(r, 2).pow(2);
            std::vector<Polynomial> gens = {g, z};
            LinearReduction lin = ridge_reduced_as_linear(ridge(gens).basis);
            REQUIRE(lin.forms.has_value());
            CHECK(linear_span(r, *lin.forms) == directrix(gens).space);
        }
    }
}

TEST_CASE("directrix is the smallest valid linear space") {
    for (std::uint64_t p : {2u, 3u}) {
        Field f = Field::prime(p);
        RingPtr r = make_ring(f, {"x", "y", "z"});
        std::vector<std::vector<std::string>> cases = {
            {"x^2", "y^2"}, {"(x+y)^2"}, {"x^2 + y^2 + z^2"}, {"x*y"}, {"(x+z)^3", "y^3 - y*(x+z)^2"}, {"(x+y)^3"}};
        auto subspaces = all_subspaces(f, 3);
        for (const auto& c : cases) {
            auto gens = ideal(r, c);
            DirectrixResult dir = directrix(gens);
            for (const auto& v : subspaces) CHECK(is_valid_linear_space(gens, v) == contains_space(v, dir.space));
        }
    }
}

TEST_CASE("directrix follows linear coordinate changes") {
    std::mt19937 rng(5);
    for (std::uint64_t p : {0u, 2u, 3u}) {
        Field f = p == 0 ? Field::rationals() : Field::prime(p);
        RingPtr r = make_ring(f, {"x", "y", "z"});
        for (int trial = 0; trial < 4; ++trial) {
            Matrix m;
            while (true) {
                m.clear();
                for (int i = 0; i < 3; ++i) {
                    Vector row;
                    for (int j = 0; j < 3; ++j) row.push_back(testing::random_element(f, rng));
                    m.push_back(row);
                }
                if (rank(f, 3, m) == 3) break;
            }
            std::vector<Polynomial> images;
            for (int i = 0; i < 3; ++i) images.push_back(AdditivePolynomial{1, m[i]}.to_polynomial(r));
            std::vector<Polynomial> gens = {substitute(parse_polynomial("x^2 + x*y", r), images),
                                            substitute(parse_polynomial("y^3", r), images)};
            DirectrixResult dir = directrix(gens);
            CHECK(dir.space == echelon(f, 3, {m[0], m[1]}));
        }
    }
}

TEST_CASE("stratum derivative ideal") {
    RingPtr r = make_ring(Field::rationals(), {"x", "y"});
    CHECK(strings(hs_stratum_derivative_ideal(ideal(r, {"x*y"}))) == std::vector<std::string>{"x*y", "y", "x"});
    RingPtr r2 = make_ring(Field::prime(2), {"x", "y"});
    CHECK(strings(hs_stratum_derivative_ideal(ideal(r2, {"x^2 + y^2"}))) == std::vector<std::string>{"x^2 + y^2"});
}

TEST_CASE("non-homogeneous input is rejected") {
    RingPtr r = make_ring(Field::rationals(), {"x", "y"});
    CHECK_THROWS_AS(ridge(ideal(r, {"x^2 + y"})), InputError);
    CHECK_THROWS_AS(directrix(ideal(r, {"x^2 + y"})), InputError);
}
