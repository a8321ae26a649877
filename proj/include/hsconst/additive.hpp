/*
   Copyright 2026 The hsconst Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HSCONST_ADDITIVE_HPP
#define HSCONST_ADDITIVE_HPP

#include <optional>
#include <vector>

#include "hsconst/polynomial.hpp"

namespace hsc {

/// sum_j c_j X_j^q with q a power of the characteristic (q = 1 in
/// characteristic zero).
struct AdditivePolynomial {
    std::uint64_t q = 1;
    std::vector<FieldElement> coeffs;

    Field field() const { return coeffs.empty() ? Field::rationals() : coeffs.front().field(); }
    std::size_t nvars() const { return coeffs.size(); }
    bool is_zero() const;
    /// Index of the first nonzero coefficient in the given variable order.
    std::optional<std::size_t> leading_variable(const std::vector<std::size_t>& order) const;

    /// sigma^(p^a): coefficients raised by Frobenius, degree multiplied.
    AdditivePolynomial raised(std::uint64_t factor) const;
    AdditivePolynomial scaled(const FieldElement& c) const;

    /// As a polynomial in the ring, variable j mapped to ring index vars[j].
    Polynomial to_polynomial(const RingPtr& ring, const std::vector<std::size_t>& vars) const;
    Polynomial to_polynomial(const RingPtr& ring) const;

    friend bool operator==(const AdditivePolynomial& a, const AdditivePolynomial& b) = default;
};

/// Reads f back as an additive polynomial in the ring variables `vars`;
/// nullopt when f has a monomial that is not a pure q-th power of one of
/// them or mixes degrees.
std::optional<AdditivePolynomial> as_additive(const Polynomial& f, const std::vector<std::size_t>& vars);

/// (sigma_1, ..., sigma_e) with sigma_i = X_{l_i}^{q_i} + sum_j c_ij X_j^{q_i},
/// q_1 <= ... <= q_e, each sigma_i free of the leaders l_k with k < i and of
/// the leaders of equal degree.
struct TriangularAdditiveBasis {
    Field field;
    std::size_t nvars = 0;
    std::vector<AdditivePolynomial> sigmas;
    std::vector<std::size_t> leaders;
    /// Leaders in basis order followed by the remaining variables ascending.
    std::vector<std::size_t> permutation;

    std::size_t size() const { return sigmas.size(); }
    std::vector<std::uint64_t> degrees() const;
    std::vector<Polynomial> polynomials(const RingPtr& ring, const std::vector<std::size_t>& vars) const;
};

TriangularAdditiveBasis additive_echelon(Field f, std::size_t nvars, const std::vector<AdditivePolynomial>& input);

struct TriangularReduction {
    Polynomial remainder;
    /// f = remainder + sum_i cofactors[i] * sigma_i.
    std::vector<Polynomial> cofactors;
};

/// Normal form modulo the basis, the basis living on ring indices `vars`.
TriangularReduction triangular_reduce(const Polynomial& f, const TriangularAdditiveBasis& basis,
                                      const std::vector<std::size_t>& vars);
TriangularReduction triangular_reduce(const Polynomial& f, const TriangularAdditiveBasis& basis);

}  // namespace hsc

#endif  // HSCONST_ADDITIVE_HPP
