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

#ifndef HSCONST_LINALG_HPP
#define HSCONST_LINALG_HPP

#include <map>
#include <vector>

#include "hsconst/field.hpp"

namespace hsc {

using Vector = std::vector<FieldElement>;
using Matrix = std::vector<Vector>;

Vector zero_vector(Field f, std::size_t n);
bool is_zero_vector(const Vector& v);

/// Row space in reduced row echelon form: pivots strictly increasing, pivot
/// entries 1, pivot columns zero in every other row.
class SubspaceBasis {
public:
    SubspaceBasis(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

    Field field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const Matrix& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its projection along the pivot columns; zero iff v is in the span.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b);

private:
    friend class EchelonBuilder;
    friend SubspaceBasis echelon_fraction_free(Field, std::size_t, const Matrix&);
    Field field_;
    std::size_t ambient_;
    Matrix rows_;
    std::vector<std::size_t> pivots_;
};

/// Incremental row echelon: rows are inserted one at a time and reduced
/// against the pivots found so far.
class EchelonBuilder {
public:
    EchelonBuilder(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

    /// Returns true when the row enlarged the span.
    bool add(Vector row);
    std::size_t rank() const { return rows_.size(); }
    /// Pivot columns found so far, ascending.
    std::vector<std::size_t> pivot_columns() const;
    /// Reduces v by the current (non-reduced) echelon rows.
    Vector reduce(Vector v) const;
    SubspaceBasis finish() const;

private:
    Field field_;
    std::size_t ambient_;
    std::map<std::size_t, Vector> rows_;  // pivot column -> row with 1 at pivot
};

/// Canonical reduced echelon basis of the row span. Function-field input
/// goes through fraction-free elimination; throws InputError on ragged rows.
SubspaceBasis echelon(Field f, std::size_t ambient, const Matrix& rows);
/// Plain Gauss-Jordan, any field.
SubspaceBasis echelon_gauss_jordan(Field f, std::size_t ambient, const Matrix& rows);
/// Bareiss forward elimination over the parameter polynomial ring with one
/// division pass at the end. Requires a field with parameters.
SubspaceBasis echelon_fraction_free(Field f, std::size_t ambient, const Matrix& rows);

std::size_t rank(Field f, std::size_t ambient, const Matrix& rows);

/// Basis of {x : M x = 0} for M with `cols` columns.
Matrix kernel(Field f, std::size_t cols, const Matrix& rows);

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
/// Intersection through the kernel of the stacked system.
SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b);
/// dim(a / (a ∩ b)).
std::size_t quotient_dimension(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace hsc

#endif  // HSCONST_LINALG_HPP
