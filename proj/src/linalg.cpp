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

#include "hsconst/linalg.hpp"

#include <algorithm>

#include "hsconst/error.hpp"

namespace hsc {

namespace {

void check_shape(std::size_t ambient, const Matrix& rows) {
    for (const auto& r : rows)
        if (r.size() != ambient) throw InputError("ragged matrix: row length does not match ambient dimension");
}

// row -= factor * other, touching only columns from `start`.
void axpy(Vector& row, const FieldElement& factor, const Vector& other, std::size_t start) {
    for (std::size_t j = start; j < row.size(); ++j)
        if (!other[j].is_zero()) row[j] -= factor * other[j];
}

}  // namespace

Vector zero_vector(Field f, std::size_t n) { return Vector(n, f.zero()); }

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Vector SubspaceBasis::reduce(Vector v) const {
    if (v.size() != ambient_) throw InputError("vector length does not match ambient dimension");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        FieldElement c = v[pivots_[i]];
        if (!c.is_zero()) axpy(v, c, rows_[i], 0);
    }
    return v;
}

bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

bool EchelonBuilder::add(Vector row) {
    row = reduce(std::move(row));
    auto it = std::find_if(row.begin(), row.end(), [](const FieldElement& x) { return !x.is_zero(); });
    if (it == row.end()) return false;
    std::size_t c = static_cast<std::size_t>(it - row.begin());
    FieldElement inv = row[c].inverse();
    for (std::size_t j = c; j < row.size(); ++j)
        if (!row[j].is_zero()) row[j] *= inv;
    rows_.emplace(c, std::move(row));
    return true;
}

Vector EchelonBuilder::reduce(Vector v) const {
    if (v.size() != ambient_) throw InputError("vector length does not match ambient dimension");
    for (const auto& [c, r] : rows_) {
        if (v[c].is_zero()) continue;
        FieldElement f = v[c];
        axpy(v, f, r, c);
    }
    return v;
}

std::vector<std::size_t> EchelonBuilder::pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& [c, r] : rows_) out.push_back(c);
    return out;
}

SubspaceBasis EchelonBuilder::finish() const {
    SubspaceBasis out(field_, ambient_);
    for (const auto& [c, r] : rows_) {
        out.pivots_.push_back(c);
        out.rows_.push_back(r);
    }
    // Back substitution, bottom-up.
    for (std::size_t i = out.rows_.size(); i-- > 0;) {
        std::size_t c = out.pivots_[i];
        for (std::size_t k = 0; k < i; ++k) {
            FieldElement f = out.rows_[k][c];
            if (!f.is_zero()) axpy(out.rows_[k], f, out.rows_[i], c);
        }
    }
    return out;
}

SubspaceBasis echelon_gauss_jordan(Field f, std::size_t ambient, const Matrix& rows) {
    check_shape(ambient, rows);
    EchelonBuilder b(f, ambient);
    for (const auto& r : rows) b.add(r);
    return b.finish();
}

SubspaceBasis echelon_fraction_free(Field f, std::size_t ambient, const Matrix& rows) {
    check_shape(ambient, rows);
    if (!f.has_parameters()) throw InputError("fraction-free elimination needs a function field");
    std::size_t s = f.parameter_count();
    std::uint64_t p = f.characteristic();
    using PRow = std::vector<ParamPoly>;
    std::vector<PRow> m;
    for (const auto& r : rows) {
        // Clear denominators with their lcm.
        ParamPoly l = ParamPoly::constant(s, p, 1);
        for (const auto& x : r) {
            if (x.is_zero()) continue;
            ParamPoly d = x.denominator();
            l = ParamPoly::exact_div(l * d, ParamPoly::gcd(l, d));
        }
        PRow pr;
        bool nonzero = false;
        for (const auto& x : r) {
            if (x.is_zero()) {
                pr.emplace_back(s, p);
                continue;
            }
            nonzero = true;
            pr.push_back(x.numerator() * ParamPoly::exact_div(l, x.denominator()));
        }
        if (nonzero) m.push_back(std::move(pr));
    }
    ParamPoly prev = ParamPoly::constant(s, p, 1);
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < ambient && r < m.size(); ++c) {
        std::size_t i = r;
        while (i < m.size() && m[i][c].is_zero()) ++i;
        if (i == m.size()) continue;
        std::swap(m[r], m[i]);
        const ParamPoly piv = m[r][c];
        for (std::size_t k = r + 1; k < m.size(); ++k) {
            const ParamPoly lead = m[k][c];
            for (std::size_t j = c + 1; j < ambient; ++j) {
                ParamPoly v = piv * m[k][j];
                if (!lead.is_zero()) v = v - lead * m[r][j];
                m[k][j] = ParamPoly::exact_div(v, prev);
            }
            m[k][c] = ParamPoly(s, p);
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    SubspaceBasis out(f, ambient);
    ParamPoly one = ParamPoly::constant(s, p, 1);
    for (std::size_t i = 0; i < r; ++i) {
        Vector v;
        v.reserve(ambient);
        for (std::size_t j = 0; j < ambient; ++j)
            v.push_back(m[i][j].is_zero() ? f.zero() : FieldElement::normalize(f, m[i][j], one));
        FieldElement inv = v[pivots[i]].inverse();
        for (auto& x : v)
            if (!x.is_zero()) x *= inv;
        out.rows_.push_back(std::move(v));
        out.pivots_.push_back(pivots[i]);
    }
    for (std::size_t i = r; i-- > 0;) {
        std::size_t c = out.pivots_[i];
        for (std::size_t k = 0; k < i; ++k) {
            FieldElement fac = out.rows_[k][c];
            if (!fac.is_zero()) axpy(out.rows_[k], fac, out.rows_[i], c);
        }
    }
    return out;
}

SubspaceBasis echelon(Field f, std::size_t ambient, const Matrix& rows) {
    if (f.has_parameters()) return echelon_fraction_free(f, ambient, rows);
    return echelon_gauss_jordan(f, ambient, rows);
}

std::size_t rank(Field f, std::size_t ambient, const Matrix& rows) {
    check_shape(ambient, rows);
    EchelonBuilder b(f, ambient);
    for (const auto& r : rows) b.add(r);
    return b.rank();
}

Matrix kernel(Field f, std::size_t cols, const Matrix& rows) {
    SubspaceBasis e = echelon_gauss_jordan(f, cols, rows);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots()) is_pivot[c] = true;
    Matrix out;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        Vector v = zero_vector(f, cols);
        v[freec] = f.one();
        for (std::size_t i = 0; i < e.dim(); ++i) v[e.pivots()[i]] = -e.rows()[i][freec];
        out.push_back(std::move(v));
    }
    return out;
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) throw InputError("ambient dimension mismatch");
    Matrix all = a.rows();
    all.insert(all.end(), b.rows().begin(), b.rows().end());
    return echelon(a.field(), a.ambient(), all);
}

SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) throw InputError("ambient dimension mismatch");
    Field f = a.field();
    std::size_t ra = a.dim(), rb = b.dim(), n = a.ambient();
    // Columns are the stacked basis rows; kernel vectors (x, y) satisfy
    // x·A + y·B = 0, so x·A lies in both spaces.
    Matrix sys(n, zero_vector(f, ra + rb));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < ra; ++i) sys[j][i] = a.rows()[i][j];
        for (std::size_t i = 0; i < rb; ++i) sys[j][ra + i] = b.rows()[i][j];
    }
    Matrix out;
    for (const auto& k : kernel(f, ra + rb, sys)) {
        Vector v = zero_vector(f, n);
        for (std::size_t i = 0; i < ra; ++i)
            if (!k[i].is_zero()) axpy(v, -k[i], a.rows()[i], 0);
        out.push_back(std::move(v));
    }
    return echelon(f, n, out);
}

std::size_t quotient_dimension(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.dim() - subspace_intersection(a, b).dim();
}

}  // namespace hsc
