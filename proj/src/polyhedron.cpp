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

#include "hsconst/polyhedron.hpp"

#include <algorithm>
#include <map>

#include "hsconst/error.hpp"
#include "hsconst/univariate.hpp"

namespace hsc {

namespace {

std::uint32_t order_of(const Polynomial& f) {
    if (f.is_zero()) throw InputError("zero generator");
    return *f.order();
}

std::uint32_t y_degree(const Monomial& m, const Coordinates& c) {
    std::uint32_t d = 0;
    for (auto j : c.y) d += m[j];
    return d;
}

QPoint u_part(const Monomial& m, const Coordinates& c) {
    QPoint a;
    for (auto j : c.u) a.emplace_back(m[j]);
    return a;
}

QPoint scaled_point(QPoint a, const mpq_class& s) {
    for (auto& x : a) x /= s;
    return a;
}

QPoint canonical(QPoint p) {
    for (auto& x : p) x.canonicalize();
    return p;
}

bool integral(const QPoint& v) {
    return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x.get_den() == 1; });
}

Monomial u_monomial(const QPoint& v, const Coordinates& c, std::size_t nvars) {
    Monomial m(nvars, 0);
    for (std::size_t i = 0; i < c.u.size(); ++i) m[c.u[i]] = static_cast<std::uint32_t>(v[i].get_num().get_ui());
    return m;
}

// Sum of the terms of f of order nu lying purely in y.
Polynomial y_leading_form(const Polynomial& f, const Coordinates& c) {
    std::uint32_t nu = order_of(f);
    Polynomial out(f.ring());
    for (const auto& [m, coef] : f.terms())
        if (total_degree(m) == nu && y_degree(m, c) == nu) out.add_term(m, coef);
    return out;
}

// The ring variables followed by one unknown per y-variable.
RingPtr unknown_ring(const RingPtr& ring, std::size_t r) {
    std::vector<std::string> names = ring->variables();
    for (std::size_t j = 0; j < r; ++j) names.push_back("__lambda" + std::to_string(j + 1));
    return make_ring(ring->field(), names);
}

class VertexEquations {
public:
    explicit VertexEquations(RingPtr ring) : ring_(std::move(ring)) {}

    std::optional<std::vector<FieldElement>> solve(std::vector<Polynomial> eqs) {
        std::size_t n = ring_->size();
        return search(std::move(eqs), std::vector<std::optional<Polynomial>>(n));
    }

private:
    std::optional<std::vector<FieldElement>> search(std::vector<Polynomial> eqs,
                                                    std::vector<std::optional<Polynomial>> bound) {
        std::size_t n = ring_->size();
        while (true) {
            std::vector<Polynomial> live;
            for (auto& e : eqs) {
                if (e.is_zero()) continue;
                if (e.is_constant()) return std::nullopt;
                if (std::find(live.begin(), live.end(), e) == live.end()) live.push_back(std::move(e));
            }
            eqs = std::move(live);
            if (eqs.empty()) return back_substitute(bound);

            auto linear = std::find_if(eqs.begin(), eqs.end(), [](const Polynomial& e) { return e.degree() == 1; });
            if (linear != eqs.end()) {
                std::size_t j = 0;
                while (linear->degree_in(j) == 0) ++j;
                Monomial mj(n, 0);
                mj[j] = 1;
                FieldElement c = linear->coefficient(mj);
                Polynomial rest = *linear - Polynomial::monomial(ring_, mj, c);
                Polynomial value = (-rest).scaled(c.inverse());
                assign(eqs, bound, j, value);
                continue;
            }

            for (const auto& e : eqs) {
                std::optional<std::size_t> var;
                bool univariate = true;
                for (std::size_t j = 0; j < n && univariate; ++j) {
                    if (e.degree_in(j) == 0) continue;
                    if (var) univariate = false;
                    var = j;
                }
                if (!univariate || !var) continue;
                auto roots = roots_in_field(to_upoly(e, *var));
                if (!roots) throw InputError("cannot decide the vertex equation " + e.to_string());
                for (const auto& r : *roots) {
                    auto eqs2 = eqs;
                    auto bound2 = bound;
                    assign(eqs2, bound2, *var, Polynomial::constant(ring_, r));
                    if (auto sol = search(std::move(eqs2), std::move(bound2))) return sol;
                }
                return std::nullopt;
            }
            throw InputError("cannot decide the vertex equations");
        }
    }

    void assign(std::vector<Polynomial>& eqs, std::vector<std::optional<Polynomial>>& bound, std::size_t j,
                const Polynomial& value) {
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < ring_->size(); ++i)
            images.push_back(i == j ? value : Polynomial::variable(ring_, i));
        for (auto& e : eqs) e = substitute(e, images);
        for (auto& b : bound)
            if (b) b = substitute(*b, images);
        bound[j] = value;
    }

    std::vector<FieldElement> back_substitute(const std::vector<std::optional<Polynomial>>& bound) const {
        // Bindings are kept fully substituted, so only free variables remain
        // inside them; those are set to zero.
        std::size_t n = ring_->size();
        std::vector<Polynomial> zeros(n, Polynomial(ring_));
        std::vector<FieldElement> out;
        for (std::size_t j = 0; j < n; ++j) {
            if (!bound[j]) {
                out.push_back(ring_->field().zero());
                continue;
            }
            out.push_back(substitute(*bound[j], zeros).coefficient(Monomial(n, 0)));
        }
        return out;
    }

    RingPtr ring_;
};

Polynomial translate_y(const Polynomial& f, const Coordinates& c, const std::vector<Polynomial>& shifts) {
    const RingPtr& ring = shifts.front().ring();
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < f.nvars(); ++i) images.push_back(Polynomial::variable(ring, i));
    for (std::size_t j = 0; j < c.y.size(); ++j) images[c.y[j]] += shifts[j];
    return substitute(f, images);
}

std::optional<mpq_class> min_first_coordinate(const OrthantPolyhedron& p) {
    if (p.empty() || p.dimension() == 0) return std::nullopt;
    mpq_class best = p.vertices().front()[0];
    for (const auto& v : p.vertices()) best = std::min(best, v[0]);
    return best;
}

// Replaces f_i by f_i - c*M*f_k when the y-leading form of f_i is a
// monomial multiple of that of an earlier generator.
bool normalize_once(std::vector<Polynomial>& gens, const Coordinates& c, std::vector<std::string>& log) {
    for (std::size_t i = 1; i < gens.size(); ++i) {
        Polynomial Fi = y_leading_form(gens[i], c);
        if (Fi.is_zero()) continue;
        for (std::size_t k = 0; k < i; ++k) {
            Polynomial Fk = y_leading_form(gens[k], c);
            if (Fk.is_zero()) continue;
            const Monomial& li = Fi.leading_monomial();
            const Monomial& lk = Fk.leading_monomial();
            Monomial q(li.size(), 0);
            bool divides = true;
            for (std::size_t j = 0; j < li.size() && divides; ++j) {
                divides = li[j] >= lk[j];
                if (divides) q[j] = li[j] - lk[j];
            }
            if (!divides) continue;
            FieldElement coef = Fi.coefficient(li) / Fk.coefficient(lk);
            Polynomial multiple = Polynomial::monomial(Fi.ring(), q, coef);
            if (!(Fi == multiple * Fk)) continue;
            log.push_back("f" + std::to_string(i + 1) + " -= (" + multiple.to_string() + ")*f" + std::to_string(k + 1));
            gens[i] -= multiple * gens[k];
            if (gens[i].is_zero()) {
                log.push_back("f" + std::to_string(i + 1) + " dropped");
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
            }
            return true;
        }
    }
    return false;
}

void normalize(std::vector<Polynomial>& gens, const Coordinates& c, std::vector<std::string>& log) {
    for (int guard = 0; guard < 256 && normalize_once(gens, c, log); ++guard) {
    }
}

}  // namespace

std::string point_to_string(const QPoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += p[i].get_str();
    }
    return s + ")";
}

bool lp_feasible(const std::vector<std::vector<mpq_class>>& A, const std::vector<mpq_class>& b) {
    std::size_t m = A.size();
    if (m == 0) return true;
    std::size_t n = A.front().size();
    std::size_t width = n + m;
    std::vector<std::vector<mpq_class>> T(m, std::vector<mpq_class>(width, 0));
    std::vector<mpq_class> rhs = b;
    std::vector<std::size_t> basis(m);
    std::vector<mpq_class> cost(width, 0);
    mpq_class z = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) throw InputError("lp_feasible expects a nonnegative right-hand side");
        for (std::size_t j = 0; j < n; ++j) {
            T[i][j] = A[i][j];
            cost[j] -= A[i][j];
        }
        T[i][n + i] = 1;
        basis[i] = n + i;
        z -= b[i];
    }
    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < width; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            mpq_class ratio = rhs[i] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;
        mpq_class piv = T[leave][enter];
        for (auto& x : T[leave]) x /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            mpq_class f = T[i][enter];
            for (std::size_t j = 0; j < width; ++j) T[i][j] -= f * T[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        mpq_class f = cost[enter];
        for (std::size_t j = 0; j < width; ++j) cost[j] -= f * T[leave][j];
        z -= f * rhs[leave];
        basis[leave] = enter;
    }
    return z == 0;
}

namespace {

// x in conv(pts) + orthant.
bool in_hull(const std::vector<QPoint>& pts, const QPoint& x) {
    if (pts.empty()) return false;
    for (const auto& xi : x)
        if (xi < 0) return false;
    std::size_t e = x.size();
    std::size_t k = pts.size();
    std::vector<std::vector<mpq_class>> A(e + 1, std::vector<mpq_class>(k + e, 0));
    std::vector<mpq_class> b(e + 1, 0);
    for (std::size_t j = 0; j < e; ++j) {
        for (std::size_t i = 0; i < k; ++i) A[j][i] = pts[i][j];
        A[j][k + j] = 1;
        b[j] = x[j];
    }
    for (std::size_t i = 0; i < k; ++i) A[e][i] = 1;
    b[e] = 1;
    return lp_feasible(A, b);
}

}  // namespace

OrthantPolyhedron::OrthantPolyhedron(std::size_t dim, std::vector<QPoint> points) : dim_(dim) {
    for (auto& p : points) {
        if (p.size() != dim) throw InputError("point of wrong dimension");
        for (auto& x : p) x.canonicalize();
        for (const auto& x : p)
            if (x < 0) throw InputError("polyhedron points must be nonnegative");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    points_ = points;
    std::vector<QPoint> candidates;
    for (const auto& p : points_) {
        bool dominated = std::any_of(points_.begin(), points_.end(), [&](const QPoint& q) {
            if (q == p) return false;
            for (std::size_t j = 0; j < dim; ++j)
                if (q[j] > p[j]) return false;
            return true;
        });
        if (!dominated) candidates.push_back(p);
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::vector<QPoint> others;
        for (std::size_t j = 0; j < candidates.size(); ++j)
            if (j != i) others.push_back(candidates[j]);
        if (!in_hull(others, candidates[i])) vertices_.push_back(candidates[i]);
    }
}

bool OrthantPolyhedron::contains(const QPoint& x) const {
    if (x.size() != dim_) throw InputError("point of wrong dimension");
    return in_hull(vertices_, canonical(x));
}

bool OrthantPolyhedron::is_vertex(const QPoint& x) const {
    return std::find(vertices_.begin(), vertices_.end(), canonical(x)) != vertices_.end();
}

bool OrthantPolyhedron::contains(const OrthantPolyhedron& other) const {
    return std::all_of(other.vertices().begin(), other.vertices().end(),
                       [&](const QPoint& v) { return contains(v); });
}

DeltaFace delta_and_first_face(const OrthantPolyhedron& poly) {
    DeltaFace out;
    for (const auto& v : poly.vertices()) {
        mpq_class s = 0;
        for (const auto& x : v) s += x;
        if (!out.delta || s < *out.delta) {
            out.delta = s;
            out.first_face.clear();
        }
        if (s == *out.delta) out.first_face.push_back(v);
    }
    return out;
}

Coordinates make_coordinates(const RingPtr& ring, const std::vector<std::string>& u,
                             const std::vector<std::string>& y) {
    Coordinates c;
    std::vector<int> seen(ring->size(), 0);
    for (const auto& name : u) {
        c.u.push_back(ring->require_index(name));
        ++seen[c.u.back()];
    }
    for (const auto& name : y) {
        c.y.push_back(ring->require_index(name));
        ++seen[c.y.back()];
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] > 1) throw InputError("variable '" + ring->variables()[i] + "' appears twice among u and y");
        if (seen[i] == 0) throw InputError("variable '" + ring->variables()[i] + "' is neither in u nor in y");
    }
    return c;
}

OrthantPolyhedron projected_polyhedron(const std::vector<Polynomial>& f, const Coordinates& c) {
    std::vector<std::uint32_t> orders;
    for (const auto& g : f) orders.push_back(order_of(g));
    return projected_polyhedron(f, c, orders);
}

OrthantPolyhedron projected_polyhedron(const std::vector<Polynomial>& f, const Coordinates& c,
                                       const std::vector<std::uint32_t>& orders) {
    if (orders.size() != f.size()) throw InputError("one order per generator expected");
    std::vector<QPoint> pts;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Polynomial& g = f[i];
        if (g.is_zero()) throw InputError("zero generator");
        std::uint32_t nu = orders[i];
        for (const auto& [m, coef] : g.terms()) {
            std::uint32_t b = y_degree(m, c);
            if (b < nu) pts.push_back(scaled_point(u_part(m, c), mpq_class(nu - b)));
        }
    }
    return OrthantPolyhedron(c.u.size(), std::move(pts));
}

Polynomial vertex_initial_form(const Polynomial& f, const QPoint& v, const Coordinates& c) {
    if (v.size() != c.u.size()) throw InputError("vertex of wrong dimension");
    std::uint32_t nu = order_of(f);
    Polynomial out(f.ring());
    for (const auto& [m, coef] : f.terms()) {
        std::uint32_t b = y_degree(m, c);
        bool leading = b == nu && total_degree(m) == nu;
        bool on_vertex = b < nu && scaled_point(u_part(m, c), mpq_class(nu - b)) == v;
        if (leading || on_vertex) out.add_term(m, coef);
    }
    return out;
}

std::optional<std::vector<FieldElement>> solve_vertex(const std::vector<Polynomial>& f, const Coordinates& c,
                                                      const QPoint& v) {
    if (f.empty()) throw InputError("empty generator list");
    if (!projected_polyhedron(f, c).is_vertex(v)) throw InputError("v is not a vertex: " + point_to_string(v));
    if (!integral(v)) return std::nullopt;
    const RingPtr& ring = f.front().ring();
    std::size_t n = ring->size();
    std::size_t r = c.y.size();
    RingPtr big = unknown_ring(ring, r);
    RingPtr unknowns = make_ring(ring->field(), std::vector<std::string>(big->variables().begin() + static_cast<std::ptrdiff_t>(n),
                                                                          big->variables().end()));

    Monomial uv = u_monomial(v, c, n + r);
    std::vector<Polynomial> shifts;
    for (std::size_t j = 0; j < r; ++j) {
        Monomial m = uv;
        m[n + j] = 1;
        shifts.push_back(Polynomial::monomial(big, m, ring->field().one()));
    }

    std::vector<Polynomial> eqs;
    for (const auto& g : f) {
        Polynomial F = rename_into(y_leading_form(g, c), big);
        Polynomial diff = translate_y(F, c, shifts) - rename_into(vertex_initial_form(g, v, c), big);
        std::map<Monomial, Polynomial> grouped;
        for (const auto& [m, coef] : diff.terms()) {
            Monomial outer(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n));
            Monomial inner(m.begin() + static_cast<std::ptrdiff_t>(n), m.end());
            auto it = grouped.find(outer);
            if (it == grouped.end()) it = grouped.emplace(outer, Polynomial(unknowns)).first;
            it->second.add_term(inner, coef);
        }
        for (auto& [m, e] : grouped) eqs.push_back(std::move(e));
    }
    auto shift = VertexEquations(unknowns).solve(std::move(eqs));
    if (!shift) return std::nullopt;
    for (auto& x : *shift) x = -x;
    return shift;
}

PreparedSystem prepare(const std::vector<Polynomial>& f, const Coordinates& c, std::size_t max_steps) {
    if (f.empty()) throw InputError("empty generator list");
    PreparedSystem sys;
    sys.generators = f;
    sys.coords = c;
    for (const auto& g : f) order_of(g);
    normalize(sys.generators, c, sys.normalizations);
    const RingPtr& ring = f.front().ring();
    while (true) {
        sys.polyhedron = projected_polyhedron(sys.generators, c);
        std::optional<DissolutionStep> step;
        for (const auto& v : sys.polyhedron.vertices()) {
            if (auto lambda = solve_vertex(sys.generators, c, v)) {
                step = DissolutionStep{v, *lambda, {}};
                break;
            }
        }
        if (!step) {
            sys.prepared = true;
            break;
        }
        if (sys.steps == max_steps) break;
        Polynomial um = Polynomial::monomial(ring, u_monomial(step->vertex, c, ring->size()), ring->field().one());
        std::vector<Polynomial> shifts;
        for (std::size_t j = 0; j < c.y.size(); ++j) {
            shifts.push_back(um.scaled(step->lambda[j]));
            if (!step->lambda[j].is_zero()) {
                Polynomial yj = Polynomial::variable(ring, c.y[j]);
                step->substitutions.push_back(ring->variables()[c.y[j]] + " -> " + (yj + shifts.back()).to_string());
            }
        }
        for (auto& g : sys.generators) g = translate_y(g, c, shifts);
        sys.log.push_back(std::move(*step));
        ++sys.steps;
        normalize(sys.generators, c, sys.normalizations);
    }
    return sys;
}

QPoint blowup_point_map(const QPoint& a) {
    if (a.empty()) return a;
    QPoint out = a;
    mpq_class s = -1;
    for (const auto& x : a) s += x;
    out[0] = s;
    return out;
}

BlowupReport blowup_chart_transform(const PreparedSystem& sys, const std::string& chart) {
    const auto& c = sys.coords;
    if (sys.generators.empty()) throw InputError("empty generator list");
    const RingPtr& ring = sys.generators.front().ring();
    std::size_t pivot = 0;
    bool u_chart = chart == "u" || chart == "u1";
    if (u_chart) {
        if (c.u.empty()) throw InputError("the u-chart needs at least one parameter");
        pivot = c.u.front();
    } else if (chart.size() > 1 && chart[0] == 'y') {
        std::size_t j = 0;
        try {
            j = std::stoul(chart.substr(1));
        } catch (const std::exception&) {
            throw InputError("unknown chart '" + chart + "'");
        }
        if (j == 0 || j > c.y.size()) throw InputError("unknown chart '" + chart + "'");
        pivot = c.y[j - 1];
    } else {
        throw InputError("unknown chart '" + chart + "'");
    }

    BlowupReport out;
    out.chart = chart;
    out.prepared_input = sys.prepared;
    Polynomial e = Polynomial::variable(ring, pivot);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        Polynomial xi = Polynomial::variable(ring, i);
        images.push_back(i == pivot ? xi : e * xi);
    }
    std::vector<std::uint32_t> orders;
    for (const auto& g : sys.generators) {
        std::uint32_t nu = order_of(g);
        orders.push_back(nu);
        Polynomial h = substitute(g, images);
        std::uint32_t low = nu;
        for (const auto& [m, coef] : h.terms()) low = std::min(low, m[pivot]);
        out.exact_division.push_back(low == nu);
        Polynomial strict(ring);
        for (const auto& [m, coef] : h.terms()) {
            Monomial m2 = m;
            m2[pivot] -= low;
            strict.add_term(m2, coef);
        }
        out.generators.push_back(std::move(strict));
    }

    OrthantPolyhedron before = projected_polyhedron(sys.generators, c);
    out.delta_before = delta_and_first_face(before).delta;
    out.polyhedron = projected_polyhedron(out.generators, c, orders);
    out.min_first = min_first_coordinate(out.polyhedron);
    if (u_chart) {
        std::vector<QPoint> mapped;
        for (const auto& v : before.vertices()) mapped.push_back(blowup_point_map(v));
        out.mapped = OrthantPolyhedron(c.u.size(), mapped);
        out.mapped_min_first = min_first_coordinate(out.mapped);
        if (!out.delta_before) {
            out.law_holds = !out.min_first && !out.mapped_min_first;
        } else {
            mpq_class expected = *out.delta_before - 1;
            out.law_holds = out.min_first && *out.min_first == expected && out.mapped_min_first &&
                            *out.mapped_min_first == expected;
        }
        out.permissible = !out.delta_before || *out.delta_before - 1 >= 1;
    }
    return out;
}

}  // namespace hsc
