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

#ifndef HSCONST_GRADED_HPP
#define HSCONST_GRADED_HPP

#include <map>
#include <string>
#include <vector>

#include "hsconst/linalg.hpp"
#include "hsconst/polynomial.hpp"

namespace hsc {

/// Values H(0..D) of a (possibly iterated) Hilbert-Samuel function.
struct HSFunction {
    std::vector<std::int64_t> values;
    std::uint32_t truncation = 0;
    std::uint32_t shift = 0;
    std::string tag;

    /// Compares values and shift; the tag is informational.
    bool same_values(const HSFunction& o) const { return values == o.values && shift == o.shift; }
    /// Pointwise a <= b on the common range.
    bool below_or_equal(const HSFunction& o) const;
    std::string to_string() const;
};

/// H^(t): t-fold partial sums; shift increases by t.
HSFunction hs_iterate(const HSFunction& h, std::uint32_t t);

/// 2 * (max generator degree) + 2.
std::uint32_t default_truncation(const std::vector<Polynomial>& gens);

/// Degree pieces I_d of a homogeneous ideal, d <= D, as subspaces of the
/// degree-d monomials listed in descending graded lex order.
class GradedIdeal {
public:
    GradedIdeal(RingPtr ring, std::vector<Polynomial> gens, std::uint32_t D);

    const RingPtr& ring() const { return ring_; }
    Field field() const { return ring_->field(); }
    const std::vector<Polynomial>& generators() const { return gens_; }
    std::uint32_t truncation() const { return D_; }

    const std::vector<Monomial>& monomials(std::uint32_t d) const { return monos_.at(d); }
    std::size_t column(const Monomial& m) const;
    const SubspaceBasis& piece(std::uint32_t d) const { return pieces_.at(d); }
    /// dim S_1 * I_(d-1).
    std::size_t lower_dimension(std::uint32_t d) const { return lower_.at(d); }

    Vector coordinates(const Polynomial& f, std::uint32_t d) const;
    Polynomial from_coordinates(const Vector& v, std::uint32_t d) const;
    /// Every homogeneous component reduced against the echelon basis of
    /// I_d, leaving only monomials outside the pivot set. Throws when f
    /// has degree above the truncation.
    Polynomial reduce(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::uint32_t D_;
    std::vector<std::vector<Monomial>> monos_;
    std::vector<std::map<Monomial, std::size_t>> index_;
    std::vector<SubspaceBasis> pieces_;
    std::vector<std::size_t> lower_;
};

/// Throws InputError unless every generator is homogeneous (zero allowed).
void require_homogeneous(const std::vector<Polynomial>& gens);

std::vector<std::size_t> graded_component_dims(const std::vector<Polynomial>& gens, std::uint32_t D);
HSFunction hs_cone_origin(const std::vector<Polynomial>& gens, std::uint32_t D);
/// Multiset of degrees of a minimal homogeneous generating system, up to D.
std::vector<std::uint32_t> nu_star_graded(const std::vector<Polynomial>& gens, std::uint32_t D);
bool graded_membership(const Polynomial& f, const std::vector<Polynomial>& gens);

/// A maximal ideal (m(X_a), X_i - h_i(X_a)) after elimination of the
/// linear generators. `anchor` is empty for rational points, in which case
/// every h_i is a constant.
struct ShapePosition {
    std::optional<std::size_t> anchor;
    std::vector<FieldElement> minimal_polynomial;  // monic m, empty for rational points
    std::vector<Polynomial> offsets;               // h_i, one per variable
    std::size_t residue_degree() const;
};

/// Brings generators of a maximal ideal into shape position and certifies
/// maximality. Throws InputError when the ideal is not maximal or when
/// maximality cannot be decided.
ShapePosition shape_position(const RingPtr& ring, const std::vector<Polynomial>& M);

/// dim_kappa (M^n + I)/(M^(n+1) + I) for n <= D, by linear algebra in
/// k[X]/M^(D+1).
HSFunction hs_local_truncated(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& M,
                              std::uint32_t D);
HSFunction hs_local_truncated(const std::vector<Polynomial>& gens, const ShapePosition& point, std::uint32_t D);
/// Local HS at the origin (all variables).
HSFunction hs_at_origin(const std::vector<Polynomial>& gens, std::uint32_t D);

/// HS at the generic point of V(y): the remaining variables become field
/// parameters. Throws InputError when a generator is not in (y).
HSFunction hs_generic_point(const std::vector<Polynomial>& gens, const std::vector<std::string>& stratum,
                            std::uint32_t D);

}  // namespace hsc

#endif  // HSCONST_GRADED_HPP
