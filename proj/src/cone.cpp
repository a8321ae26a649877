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

#include "hsconst/cone.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hsconst/error.hpp"

namespace hsc {

namespace {

RingPtr ring_of(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw InputError("empty generator list");
    return gens.front().ring();
}

std::uint32_t max_degree(const std::vector<Polynomial>& gens) {
    std::uint32_t d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
}

std::vector<std::size_t> iota(std::size_t n, std::size_t start = 0) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), start);
    return v;
}

std::string root_name(std::uint64_t q) {
    if (q == 2) return "square";
    if (q == 3) return "cube";
    return std::to_string(q) + "th";
}

// Moves a polynomial of `ring` into the first variables of `big`.
Polynomial widen(const Polynomial& f, const RingPtr& big) {
    Polynomial out(big);
    for (const auto& [m, c] : f.terms()) {
        Monomial w(big->size(), 0);
        std::copy(m.begin(), m.end(), w.begin());
        out.add_term(w, c);
    }
    return out;
}

}  // namespace

RingPtr translation_ring(const RingPtr& ring) {
    std::vector<std::string> names;
    const auto& vars = ring->variables();
    for (const auto& v : vars) {
        std::string name = "T_" + v;
        auto taken = [&](const std::string& s) {
            return std::find(vars.begin(), vars.end(), s) != vars.end() || ring->field().parameter_index(s) ||
                   std::find(names.begin(), names.end(), s) != names.end();
        };
        while (taken(name)) name = "T_" + name;
        names.push_back(name);
    }
    return make_ring(ring->field(), names);
}

StabilizerData stabilizer_generators(const std::vector<Polynomial>& gens) {
    require_homogeneous(gens);
    RingPtr ring = ring_of(gens);
    std::size_t n = ring->size();
    StabilizerData out{translation_ring(ring), {}};
    GradedIdeal gi(ring, gens, max_degree(gens));
    std::map<std::pair<std::size_t, Monomial>, Polynomial> coeffs;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const Polynomial& F = gens[j];
        if (F.is_zero()) continue;
        std::uint32_t deg = F.degree();
        for (std::uint32_t k = 1; k <= deg; ++k) {
            for (const auto& A : monomials_of_degree(n, k)) {
                Polynomial der = hasse_derivative(F, A);
                if (der.is_zero()) continue;
                Polynomial rest = gi.reduce(der);
                for (const auto& [beta, c] : rest.terms()) {
                    auto key = std::make_pair(j, beta);
                    auto it = coeffs.find(key);
                    if (it == coeffs.end()) it = coeffs.emplace(key, Polynomial(out.t_ring)).first;
                    it->second.add_term(A, c);
                }
            }
        }
    }
    for (auto& [key, poly] : coeffs)
        if (!poly.is_zero()) out.generators.push_back(std::move(poly));
    return out;
}

bool verify_translation_stability(const std::vector<Polynomial>& gens, const TriangularAdditiveBasis& basis) {
    require_homogeneous(gens);
    RingPtr ring = ring_of(gens);
    std::size_t n = ring->size();
    if (basis.nvars != n) throw InputError("basis does not match the number of variables");
    RingPtr t = translation_ring(ring);
    std::vector<std::string> names = ring->variables();
    names.insert(names.end(), t->variables().begin(), t->variables().end());
    RingPtr big = make_ring(ring->field(), names);
    GradedIdeal gi(ring, gens, max_degree(gens));
    for (const auto& F : gens) {
        if (F.is_zero()) continue;
        Polynomial acc(big);
        for (std::uint32_t k = 0; k <= F.degree(); ++k) {
            for (const auto& A : monomials_of_degree(n, k)) {
                Polynomial der = hasse_derivative(F, A);
                if (der.is_zero()) continue;
                Monomial shift(2 * n, 0);
                std::copy(A.begin(), A.end(), shift.begin() + static_cast<std::ptrdiff_t>(n));
                acc += widen(gi.reduce(der), big).times_monomial(shift);
            }
        }
        if (!triangular_reduce(acc, basis, iota(n, n)).remainder.is_zero()) return false;
    }
    return true;
}

RidgeResult ridge(const std::vector<Polynomial>& gens) {
    RingPtr ring = ring_of(gens);
    Field k = ring->field();
    std::uint64_t p = k.characteristic();
    std::size_t n = ring->size();
    StabilizerData stab = stabilizer_generators(gens);
    RidgeResult out{stab.t_ring, TriangularAdditiveBasis{k, n, {}, {}, iota(n)}, {}, stab.generators, false};
    if (stab.generators.empty()) return out;

    std::uint32_t maxdeg = max_degree(gens);
    std::vector<std::uint64_t> qs = {1};
    if (p != 0)
        while (qs.back() * p <= maxdeg) qs.push_back(qs.back() * p);

    for (int attempt = 0; attempt < 2; ++attempt) {
        auto qmax = static_cast<std::uint32_t>(qs.back());
        GradedIdeal si(stab.t_ring, stab.generators, qmax);
        std::vector<AdditivePolynomial> additive;
        for (std::uint64_t q : qs) {
            auto d = static_cast<std::uint32_t>(q);
            const SubspaceBasis& piece = si.piece(d);
            std::vector<std::size_t> cols;
            Matrix coord_rows;
            for (std::size_t i = 0; i < n; ++i) {
                Monomial m(n, 0);
                m[i] = d;
                cols.push_back(si.column(m));
                Vector e = zero_vector(k, piece.ambient());
                e[cols.back()] = k.one();
                coord_rows.push_back(std::move(e));
            }
            SubspaceBasis pure = echelon(k, piece.ambient(), coord_rows);
            SubspaceBasis pure_part = subspace_intersection(piece, pure);
            for (const auto& row : pure_part.rows()) {
                AdditivePolynomial a{q, {}};
                for (auto c : cols) a.coeffs.push_back(row[c]);
                additive.push_back(std::move(a));
            }
        }
        out.basis = additive_echelon(k, n, additive);
        std::optional<Polynomial> failing;
        for (const auto& g : stab.generators) {
            if (!triangular_reduce(g, out.basis).remainder.is_zero()) {
                failing = g;
                break;
            }
        }
        if (!failing) {
            out.sigmas = out.basis.polynomials(out.t_ring, iota(n));
            if (!verify_translation_stability(gens, out.basis))
                throw InternalError("ridge basis fails the translation-stability check");
            return out;
        }
        if (attempt == 1 || p == 0)
            throw InternalError("ridge verification failed: stabilizer generator '" + failing->to_string() +
                                "' does not reduce to zero");
        qs.push_back(qs.back() * p);
        out.escalated = true;
    }
    throw InternalError("unreachable");
}

LinearReduction ridge_reduced_as_linear(const TriangularAdditiveBasis& basis) {
    LinearReduction out;
    out.leaders = basis.leaders;
    std::size_t e = basis.size();
    if (e == 0) {
        out.forms.emplace();
        return out;
    }
    std::uint64_t qe = basis.sigmas.back().q;
    for (const auto& s : basis.sigmas) out.taus.push_back(s.raised(qe / s.q));
    for (std::size_t i = e; i-- > 0;) {
        for (std::size_t k = i + 1; k < e; ++k) {
            FieldElement c = out.taus[i].coeffs[basis.leaders[k]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < basis.nvars; ++j)
                if (!out.taus[k].coeffs[j].is_zero()) out.taus[i].coeffs[j] -= c * out.taus[k].coeffs[j];
        }
    }
    std::vector<AdditivePolynomial> forms;
    for (const auto& tau : out.taus) {
        AdditivePolynomial ell{1, tau.coeffs};
        for (auto& c : ell.coeffs) {
            if (c.is_zero() || c.is_one()) continue;
            auto r = qth_power_root(c, qe);
            if (!r) {
                out.witness = c.to_string() + " admits no " + root_name(qe) + " root";
                return out;
            }
            c = *r;
        }
        forms.push_back(std::move(ell));
    }
    out.forms = std::move(forms);
    return out;
}

SubspaceBasis linear_span(const RingPtr& ring, const std::vector<AdditivePolynomial>& forms) {
    Matrix rows;
    for (const auto& f : forms) {
        if (f.q != 1) throw InputError("linear_span needs linear forms");
        rows.push_back(f.coeffs);
    }
    return echelon(ring->field(), ring->size(), rows);
}

std::vector<Polynomial> linear_polynomials(const RingPtr& ring, const SubspaceBasis& space) {
    std::vector<Polynomial> out;
    for (const auto& row : space.rows()) out.push_back(AdditivePolynomial{1, row}.to_polynomial(ring));
    return out;
}

AdaptedCoordinates adapt_coordinates(const std::vector<Polynomial>& gens, const SubspaceBasis& space) {
    RingPtr ring = ring_of(gens);
    std::size_t n = ring->size();
    AdaptedCoordinates out;
    out.pivots = space.pivots();
    for (std::size_t j = 0; j < n; ++j)
        if (std::find(out.pivots.begin(), out.pivots.end(), j) == out.pivots.end()) out.others.push_back(j);
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < n; ++j) images.push_back(Polynomial::variable(ring, j));
    for (std::size_t i = 0; i < space.dim(); ++i) {
        Polynomial img = Polynomial::variable(ring, out.pivots[i]);
        for (auto j : out.others) {
            const FieldElement& c = space.rows()[i][j];
            if (!c.is_zero()) img -= Polynomial::variable(ring, j).scaled(c);
        }
        images[out.pivots[i]] = img;
    }
    for (const auto& g : gens) out.gens.push_back(substitute(g, images));
    return out;
}

std::vector<Polynomial> linear_space_generators(const std::vector<Polynomial>& gens, const SubspaceBasis& space) {
    RingPtr ring = ring_of(gens);
    Field k = ring->field();
    AdaptedCoordinates ad = adapt_coordinates(gens, space);
    std::uint32_t D = max_degree(gens);
    GradedIdeal full(ring, ad.gens, D);
    std::vector<Polynomial> inside;
    for (std::uint32_t d = 0; d <= D; ++d) {
        const SubspaceBasis& piece = full.piece(d);
        if (piece.dim() == 0) continue;
        Matrix coord_rows;
        const auto& monos = full.monomials(d);
        for (std::size_t j = 0; j < monos.size(); ++j) {
            bool pure = std::all_of(ad.others.begin(), ad.others.end(), [&](std::size_t v) { return monos[j][v] == 0; });
            if (!pure) continue;
            Vector e = zero_vector(k, monos.size());
            e[j] = k.one();
            coord_rows.push_back(std::move(e));
        }
        SubspaceBasis sub = echelon(k, monos.size(), coord_rows);
        SubspaceBasis inside_d = subspace_intersection(piece, sub);
        std::optional<GradedIdeal> lower;
        if (!inside.empty()) lower.emplace(ring, inside, d);
        for (const auto& row : inside_d.rows()) {
            Polynomial g = full.from_coordinates(row, d);
            if (lower && lower->contains(g)) continue;
            inside.push_back(g);
            lower.emplace(ring, inside, d);
        }
    }
    return inside;
}

bool is_valid_linear_space(const std::vector<Polynomial>& gens, const SubspaceBasis& space) {
    RingPtr ring = ring_of(gens);
    AdaptedCoordinates ad = adapt_coordinates(gens, space);
    std::uint32_t D = max_degree(gens);
    GradedIdeal full(ring, ad.gens, D);
    std::vector<Polynomial> inside = linear_space_generators(gens, space);
    if (inside.empty()) return std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); });
    GradedIdeal gen_by_inside(ring, inside, D);
    for (std::uint32_t d = 0; d <= D; ++d)
        if (gen_by_inside.piece(d).dim() != full.piece(d).dim()) return false;
    return true;
}

DirectrixResult directrix(const std::vector<Polynomial>& gens) {
    RingPtr ring = ring_of(gens);
    Field k = ring->field();
    std::size_t n = ring->size();
    RidgeResult rid = ridge(gens);
    DirectrixResult out{ring, SubspaceBasis(k, n), {}, 0};
    if (k.is_perfect()) {
        LinearReduction lin = ridge_reduced_as_linear(rid.basis);
        if (!lin.forms) throw InternalError("reduced ridge over a perfect field is not linear: " + lin.witness);
        out.space = linear_span(ring, *lin.forms);
    } else {
        std::uint64_t p = k.characteristic();
        std::uint32_t maxdeg = max_degree(gens);
        std::uint32_t e = 0;
        for (std::uint64_t pe = 1; pe < maxdeg; pe *= p) ++e;
        bool done = false;
        for (std::uint32_t level = e; level <= e + 2 && !done; ++level) {
            ParameterRootExtension ext(k, level);
            TriangularAdditiveBasis lifted = rid.basis;
            lifted.field = ext.extended();
            for (auto& s : lifted.sigmas)
                for (auto& c : s.coeffs) c = ext.embed(c);
            LinearReduction lin = ridge_reduced_as_linear(lifted);
            if (!lin.forms) continue;
            Matrix rows;
            for (const auto& ell : *lin.forms) {
                std::vector<std::vector<FieldElement>> coords;
                for (const auto& c : ell.coeffs) coords.push_back(ext.expand(c));
                for (std::size_t b = 0; b < ext.basis_exponents().size(); ++b) {
                    Vector row;
                    for (std::size_t j = 0; j < n; ++j) row.push_back(coords[j][b]);
                    if (!is_zero_vector(row)) rows.push_back(std::move(row));
                }
            }
            out.space = echelon(k, n, rows);
            out.level = level;
            done = true;
        }
        if (!done) throw InternalError("coefficient roots missing after raising the perfection level");
    }
    if (!is_valid_linear_space(gens, out.space))
        throw InternalError("directrix validity certificate failed");
    out.forms = linear_polynomials(ring, out.space);
    return out;
}

std::vector<Polynomial> hs_stratum_derivative_ideal(const std::vector<Polynomial>& gens) {
    RingPtr ring = ring_of(gens);
    std::vector<Polynomial> out;
    for (const auto& F : gens) {
        if (F.is_zero()) continue;
        std::uint32_t deg = F.degree();
        for (std::uint32_t k = 0; k < deg; ++k) {
            for (const auto& A : monomials_of_degree(ring->size(), k)) {
                Polynomial der = hasse_derivative(F, A);
                if (der.is_zero()) continue;
                if (std::find(out.begin(), out.end(), der) == out.end()) out.push_back(std::move(der));
            }
        }
    }
    return out;
}

}  // namespace hsc
