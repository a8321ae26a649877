#include "doctest.h"
#include "hsconst/error.hpp"
#include "hsconst/linalg.hpp"
#include "test_support.hpp"

using namespace hsc;

namespace {

Vector vec(Field f, std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.push_back(f.from_int(x));
    return v;
}

Matrix random_matrix(Field f, std::mt19937& rng, std::size_t rows, std::size_t cols, int sparsity) {
    Matrix m(rows, zero_vector(f, cols));
    std::uniform_int_distribution<int> keep(0, sparsity);
    for (auto& r : m)
        for (auto& x : r)
            if (keep(rng) == 0) x = testing::random_element(f, rng, 2);
    return m;
}

// Independent containment test: append v and compare ranks.
bool in_span(Field f, std::size_t n, const Matrix& rows, const Vector& v) {
    Matrix m = rows;
    m.push_back(v);
    return rank(f, n, m) == rank(f, n, rows);
}

}  // namespace

TEST_CASE("echelon examples") {
    Field q = Field::rationals();
    SubspaceBasis e = echelon(q, 2, {vec(q, {1, 1}), vec(q, {0, 1})});
    CHECK(e.dim() == 2);
    CHECK(e.rows() == Matrix{vec(q, {1, 0}), vec(q, {0, 1})});
    SubspaceBasis h = echelon(q, 2, {vec(q, {2, 4})});
    CHECK(h.rows() == Matrix{vec(q, {1, 2})});
    CHECK(echelon(q, 3, {}).dim() == 0);
    CHECK_THROWS_AS(echelon(q, 2, {vec(q, {1, 2, 3})}), InputError);
}

TEST_CASE("subspace operations examples") {
    Field q = Field::rationals();
    SubspaceBasis a = echelon(q, 2, {vec(q, {1, 0})});
    SubspaceBasis b = echelon(q, 2, {vec(q, {0, 1})});
    CHECK(subspace_intersection(a, b).dim() == 0);
    CHECK(subspace_sum(a, b).dim() == 2);
    CHECK(subspace_intersection(a, a) == a);
    CHECK(quotient_dimension(subspace_sum(a, b), a) == 1);
    CHECK(a.contains(vec(q, {3, 0})));
    CHECK_FALSE(a.contains(vec(q, {3, 1})));
    CHECK_THROWS_AS(subspace_sum(a, echelon(q, 3, {})), InputError);
}

TEST_CASE("fraction-free and Gauss-Jordan agree") {
    std::mt19937 rng(17);
    for (Field f : {Field::function_field(3, {"t"}), Field::function_field(2, {"t", "w"}),
                    Field::function_field(0, {"t"})}) {
        CAPTURE(f.to_string());
        for (int i = 0; i < 15; ++i) {
            Matrix m = random_matrix(f, rng, 4, 5, 1);
            if (i % 3 == 0) m.push_back(m[0]);
            CHECK(echelon_fraction_free(f, 5, m) == echelon_gauss_jordan(f, 5, m));
        }
    }
}

TEST_CASE("randomized subspace identities") {
    std::mt19937 rng(5);
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::function_field(3, {"t"})}) {
        CAPTURE(f.to_string());
        for (int i = 0; i < 20; ++i) {
            std::uniform_int_distribution<std::size_t> rows(0, 5);
            Matrix ma = random_matrix(f, rng, rows(rng), 6, 2);
            Matrix mb = random_matrix(f, rng, rows(rng), 6, 2);
            SubspaceBasis a = echelon(f, 6, ma), b = echelon(f, 6, mb);
            SubspaceBasis s = subspace_sum(a, b), x = subspace_intersection(a, b);
            CHECK(x.dim() == a.dim() + b.dim() - s.dim());
            for (const auto& v : x.rows()) {
                CHECK(in_span(f, 6, ma, v));
                CHECK(in_span(f, 6, mb, v));
            }
            CHECK(echelon(f, 6, a.rows()) == a);
            Matrix k = kernel(f, 6, ma);
            CHECK(rank(f, 6, ma) + k.size() == 6);
            for (const auto& kv : k) {
                for (const auto& r : ma) {
                    FieldElement dot = f.zero();
                    for (std::size_t j = 0; j < 6; ++j) dot += r[j] * kv[j];
                    CHECK(dot.is_zero());
                }
            }
        }
    }
}

TEST_CASE("incremental builder reports growth") {
    Field f = Field::prime(5);
    EchelonBuilder b(f, 3);
    CHECK(b.add(vec(f, {1, 2, 3})));
    CHECK_FALSE(b.add(vec(f, {2, 4, 6})));
    CHECK(b.add(vec(f, {0, 1, 1})));
    CHECK(b.rank() == 2);
    CHECK(b.pivot_columns() == std::vector<std::size_t>{0, 1});
    CHECK(is_zero_vector(b.reduce(vec(f, {1, 3, 4}))));
}
