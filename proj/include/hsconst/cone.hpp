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

#ifndef HSCONST_CONE_HPP
#define HSCONST_CONE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hsconst/additive.hpp"
#include "hsconst/graded.hpp"
#include "hsconst/linalg.hpp"

namespace hsc {

/// Ring of translation variables T_x, T_y, ... matching the variables of
/// `ring` position by position.
RingPtr translation_ring(const RingPtr& ring);

struct StabilizerData {
    RingPtr t_ring;
    /// Homogeneous T-polynomials c_(beta,j) whose ideal cuts out the
    /// translations leaving the cone stable.
    std::vector<Polynomial> generators;
};

StabilizerData stabilizer_generators(const std::vector<Polynomial>& gens);

struct RidgeResult {
    RingPtr t_ring;
    TriangularAdditiveBasis basis;
    std::vector<Polynomial> sigmas;  // basis as polynomials in t_ring
    std::vector<Polynomial> stabilizer;
    bool escalated = false;
};

RidgeResult ridge(const std::vector<Polynomial>& gens);

/// True iff F(X+T) vanishes once X-coefficients are reduced modulo I and
/// T-monomials modulo the basis.
bool verify_translation_stability(const std::vector<Polynomial>& gens, const TriangularAdditiveBasis& basis);

struct LinearReduction {
    /// Linear forms Z_i + root(r_i) when every coefficient has the needed root.
    std::optional<std::vector<AdditivePolynomial>> forms;
    /// The equal-degree forms tau_i = Z_i^(q_e) + r_i.
    std::vector<AdditivePolynomial> taus;
    std::vector<std::size_t> leaders;
    /// Explanation when `forms` is empty, e.g. "t admits no square root".
    std::string witness;
};

LinearReduction ridge_reduced_as_linear(const TriangularAdditiveBasis& basis);

struct DirectrixResult {
    RingPtr ring;
    SubspaceBasis space;  // RREF coefficient vectors of the linear forms
    std::vector<Polynomial> forms;
    /// Perfection level used for the k-hull (0 over perfect fields).
    std::uint32_t level = 0;
    std::size_t dim() const { return space.dim(); }
};

DirectrixResult directrix(const std::vector<Polynomial>& gens);

/// The generators rewritten in coordinates where the linear space becomes
/// coordinate-linear: X_(p_i) -> X_(p_i) - sum_j c_ij X_j for the RREF rows
/// X_(p_i) + sum_j c_ij X_j. Afterwards the forms are the pivot variables.
struct AdaptedCoordinates {
    std::vector<Polynomial> gens;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> others;
};

AdaptedCoordinates adapt_coordinates(const std::vector<Polynomial>& gens, const SubspaceBasis& space);

/// Whether I is generated by polynomials in the given linear forms, checked
/// degreewise up to the largest generator degree.
bool is_valid_linear_space(const std::vector<Polynomial>& gens, const SubspaceBasis& space);

/// A minimal homogeneous generating system of I intersected with the
/// polynomials in the pivot variables, in the adapted coordinates. It
/// generates I exactly when the space is valid.
std::vector<Polynomial> linear_space_generators(const std::vector<Polynomial>& gens, const SubspaceBasis& space);

/// {D_A F_i : |A| < deg F_i}, zeros and repeats dropped.
std::vector<Polynomial> hs_stratum_derivative_ideal(const std::vector<Polynomial>& gens);

SubspaceBasis linear_span(const RingPtr& ring, const std::vector<AdditivePolynomial>& forms);
std::vector<Polynomial> linear_polynomials(const RingPtr& ring, const SubspaceBasis& space);

}  // namespace hsc

#endif  // HSCONST_CONE_HPP
