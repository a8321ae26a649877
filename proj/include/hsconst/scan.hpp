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

#ifndef HSCONST_SCAN_HPP
#define HSCONST_SCAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hsconst/graded.hpp"
#include "hsconst/polynomial.hpp"

namespace hsc {

/// F_q = F_p[a]/(m(a)) with q = p^j <= 2^16. Elements are encoded as
/// integers sum c_i p^i for c_0 + c_1 a + ... ; m is the first monic
/// irreducible polynomial of degree j in that encoding order.
class GaloisField {
public:
    using Elem = std::uint32_t;

    GaloisField(std::uint64_t p, std::uint32_t j);

    std::uint64_t characteristic() const { return p_; }
    std::uint32_t degree() const { return j_; }
    std::uint32_t order() const { return q_; }
    /// Coefficients of m, constant term first, leading 1 included.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem frobenius(Elem a) const { return pow(a, p_); }
    Elem from_residue(std::uint64_t r) const { return static_cast<Elem>(r % p_); }
    /// Coordinates of x over F_p, constant term first.
    std::vector<std::uint32_t> digits(Elem x) const;
    /// Smallest d with x^(p^d) == x.
    std::uint32_t definition_degree(Elem x) const;
    std::string to_string(Elem x) const;
    std::string describe() const;

private:
    std::uint64_t p_;
    std::uint32_t j_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint16_t> add_table_;
};

using GFPoint = std::vector<GaloisField::Elem>;

std::string point_string(const GaloisField& F, const GFPoint& x);

/// Smallest d such that every coordinate lies in F_(p^d).
std::uint32_t definition_degree(const GaloisField& F, const GFPoint& x);

/// Representatives of the points of P^(n-1) defined exactly over F (not
/// over a proper subfield), one per Frobenius orbit, normalized with first
/// nonzero coordinate 1 and lexicographically minimal in their orbit.
/// Coordinates are restricted to encodings below `box` when box > 0.
std::vector<GFPoint> projective_orbit_representatives(const GaloisField& F, std::size_t n, std::uint32_t box = 0);

/// f(x) for f with prime-field coefficients.
GaloisField::Elem evaluate(const GaloisField& F, const Polynomial& f, const GFPoint& x);

/// Generators (m(X_a), X_i - h_i(X_a)) over F_p of the closed point below x,
/// anchored at the first coordinate that generates F_p(x).
std::vector<Polynomial> closed_point_ideal(const GaloisField& F, const GFPoint& x, const RingPtr& ring);

/// Local HS at the closed point below a nonzero F-point of the cone
/// V(gens) over F_p, computed geometrically over F: H_C = (H_slice)^(1) for
/// the affine slice through the normalized point.
HSFunction hs_at_cone_point(const std::vector<Polynomial>& gens, const GaloisField& F, const GFPoint& x,
                            std::uint32_t D);

}  // namespace hsc

#endif  // HSCONST_SCAN_HPP
