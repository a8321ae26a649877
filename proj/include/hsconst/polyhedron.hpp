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

#ifndef HSCONST_POLYHEDRON_HPP
#define HSCONST_POLYHEDRON_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hsconst/polynomial.hpp"

namespace hsc {

using QPoint = std::vector<mpq_class>;

std::string point_to_string(const QPoint& p);

/// Exact feasibility of {x >= 0 : A x = b} for b >= 0, by the two-phase
/// simplex method with Bland's rule.
bool lp_feasible(const std::vector<std::vector<mpq_class>>& A, const std::vector<mpq_class>& b);

/// conv(points) + R^e_{>=0}, with the vertices cached in lexicographic order.
class OrthantPolyhedron {
public:
    OrthantPolyhedron() = default;
    OrthantPolyhedron(std::size_t dim, std::vector<QPoint> points);

    std::size_t dimension() const { return dim_; }
    const std::vector<QPoint>& points() const { return points_; }
    const std::vector<QPoint>& vertices() const { return vertices_; }
    bool empty() const { return vertices_.empty(); }
    bool contains(const QPoint& x) const;
    bool is_vertex(const QPoint& x) const;
    /// Every vertex of `other` lies in this polyhedron.
    bool contains(const OrthantPolyhedron& other) const;

private:
    std::size_t dim_ = 0;
    std::vector<QPoint> points_;
    std::vector<QPoint> vertices_;
};

struct DeltaFace {
    /// Minimal coordinate sum; empty means infinity.
    std::optional<mpq_class> delta;
    std::vector<QPoint> first_face;
};

DeltaFace delta_and_first_face(const OrthantPolyhedron& poly);

/// A choice of parameters u and y-variables splitting the ring variables.
struct Coordinates {
    std::vector<std::size_t> u;
    std::vector<std::size_t> y;
};

/// Looks the names up in the ring and checks that they partition the
/// variables.
Coordinates make_coordinates(const RingPtr& ring, const std::vector<std::string>& u,
                             const std::vector<std::string>& y);

OrthantPolyhedron projected_polyhedron(const std::vector<Polynomial>& f, const Coordinates& c);
/// Same with prescribed orders nu_i, as needed after a blow-up where the
/// strict transform is read against the orders before it. Terms with
/// |B| >= nu_i are ignored.
OrthantPolyhedron projected_polyhedron(const std::vector<Polynomial>& f, const Coordinates& c,
                                       const std::vector<std::uint32_t>& orders);

/// The terms of order nu in y plus the terms whose point A/(nu - |B|) is v.
Polynomial vertex_initial_form(const Polynomial& f, const QPoint& v, const Coordinates& c);

/// lambda with ini_v(f_i) = F_i(Y - lambda U^v) for every generator, F_i the
/// leading form in Y, so that y -> y + lambda u^v dissolves the vertex.
/// Empty when v is not integral or no lambda exists.
/// Throws InputError when the coefficient equations cannot be decided.
std::optional<std::vector<FieldElement>> solve_vertex(const std::vector<Polynomial>& f, const Coordinates& c,
                                                      const QPoint& v);

struct DissolutionStep {
    QPoint vertex;
    std::vector<FieldElement> lambda;
    /// Human-readable substitutions such as "y -> y + u1^2".
    std::vector<std::string> substitutions;
};

struct PreparedSystem {
    std::vector<Polynomial> generators;
    Coordinates coords;
    OrthantPolyhedron polyhedron;
    bool prepared = false;
    std::vector<DissolutionStep> log;
    /// Generator reductions applied between dissolutions.
    std::vector<std::string> normalizations;
    std::size_t steps = 0;
};

constexpr std::size_t default_prepare_steps = 64;

PreparedSystem prepare(const std::vector<Polynomial>& f, const Coordinates& c,
                       std::size_t max_steps = default_prepare_steps);

/// (a_1 + ... + a_d - 1, a_2, ..., a_d).
QPoint blowup_point_map(const QPoint& a);

struct BlowupReport {
    std::vector<Polynomial> generators;
    std::string chart;
    OrthantPolyhedron polyhedron;
    OrthantPolyhedron mapped;  // the old vertices under the affine rule
    std::optional<mpq_class> delta_before;
    /// Smallest first coordinate of the recomputed and the mapped polyhedron;
    /// the recomputed one uses the orders before the blow-up.
    std::optional<mpq_class> min_first;
    std::optional<mpq_class> mapped_min_first;
    bool law_holds = false;
    bool permissible = false;
    /// Per generator: whether the exceptional power u^nu divided exactly.
    std::vector<bool> exact_division;
    bool prepared_input = false;
};

/// Chart "u" (first parameter) or "y<j>" (the j-th y-variable, 1-based).
BlowupReport blowup_chart_transform(const PreparedSystem& sys, const std::string& chart);

}  // namespace hsc

#endif  // HSCONST_POLYHEDRON_HPP
