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

#ifndef HSCONST_UNIVARIATE_HPP
#define HSCONST_UNIVARIATE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hsconst/polynomial.hpp"

namespace hsc {

/// Dense univariate polynomial, index = degree, no trailing zeros.
using UPoly = std::vector<FieldElement>;

void utrim(UPoly& a);
int udegree(const UPoly& a);  // -1 for zero
UPoly uadd(const UPoly& a, const UPoly& b);
UPoly usub(const UPoly& a, const UPoly& b);
UPoly umul(const UPoly& a, const UPoly& b);
/// Quotient and remainder; throws ArithmeticError for b = 0.
std::pair<UPoly, UPoly> udivmod(const UPoly& a, const UPoly& b);
UPoly umonic(const UPoly& a);
/// Monic gcd; zero when both are zero.
UPoly ugcd(UPoly a, UPoly b);
UPoly upowmod(const UPoly& base, std::uint64_t e, const UPoly& mod);

/// Reads f as a polynomial in ring variable `var`; throws InputError when
/// another variable occurs.
UPoly to_upoly(const Polynomial& f, std::size_t var);
Polynomial from_upoly(const UPoly& a, const RingPtr& ring, std::size_t var);

/// Irreducibility over the coefficient field when it can be decided:
/// degree one, prime fields, polynomials with prime-field or rational
/// coefficients inside a function field, binomials X^q - c with q a power
/// of the characteristic, and degree at most three over the rationals.
/// nullopt when undecided.
std::optional<bool> is_irreducible(const UPoly& a);

/// All distinct roots in the coefficient field, ascending, when they can be
/// found: degree one, p-power binomials, prime fields up to 2^16, rational
/// roots over Q, and base-field coefficients inside a function field.
/// nullopt for the zero polynomial or when undecided.
std::optional<std::vector<FieldElement>> roots_in_field(const UPoly& a);

}  // namespace hsc

#endif  // HSCONST_UNIVARIATE_HPP
