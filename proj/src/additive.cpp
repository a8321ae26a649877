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

#include "hsconst/additive.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hsconst/error.hpp"
#include "hsconst/linalg.hpp"

namespace hsc {

namespace {

bool is_power_of(std::uint64_t q, std::uint64_t p) {
    if (q == 0) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

std::vector<std::size_t> identity_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

}  // namespace

bool AdditivePolynomial::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const FieldElement& c) { return c.is_zero(); });
}

std::optional<std::size_t> AdditivePolynomial::leading_variable(const std::vector<std::size_t>& order) const {
    for (auto j : order)
        if (!coeffs[j].is_zero()) return j;
    return std::nullopt;
}

AdditivePolynomial AdditivePolynomial::raised(std::uint64_t factor) const {
    AdditivePolynomial out{q * factor, coeffs};
    if (factor == 1) return out;
    for (auto& c : out.coeffs) c = c.pow(factor);
    return out;
}

AdditivePolynomial AdditivePolynomial::scaled(const FieldElement& c) const {
    AdditivePolynomial out = *this;
    for (auto& x : out.coeffs) x *= c;
    return out;
}

Polynomial AdditivePolynomial::to_polynomial(const RingPtr& ring, const std::vector<std::size_t>& vars) const {
    Polynomial out(ring);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        Monomial m(ring->size(), 0);
        m[vars[j]] = static_cast<std::uint32_t>(q);
        out.add_term(m, coeffs[j]);
    }
    return out;
}

Polynomial AdditivePolynomial::to_polynomial(const RingPtr& ring) const {
    return to_polynomial(ring, identity_indices(coeffs.size()));
}

std::optional<AdditivePolynomial> as_additive(const Polynomial& f, const std::vector<std::size_t>& vars) {
    AdditivePolynomial out{0, std::vector<FieldElement>(vars.size(), f.field().zero())};
    for (const auto& [m, c] : f.terms()) {
        std::optional<std::size_t> slot;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = std::find(vars.begin(), vars.end(), i);
            if (slot || it == vars.end()) return std::nullopt;
            slot = static_cast<std::size_t>(it - vars.begin());
        }
        if (!slot) return std::nullopt;
        std::uint64_t d = m[vars[*slot]];
        if (out.q != 0 && out.q != d) return std::nullopt;
        out.q = d;
        out.coeffs[*slot] = c;
    }
    if (out.q == 0) out.q = 1;
    std::uint64_t p = f.field().characteristic();
    if (p == 0 ? out.q != 1 : !is_power_of(out.q, p)) return std::nullopt;
    return out;
}

std::vector<std::uint64_t> TriangularAdditiveBasis::degrees() const {
    std::vector<std::uint64_t> out;
    for (const auto& s : sigmas) out.push_back(s.q);
    return out;
}

std::vector<Polynomial> TriangularAdditiveBasis::polynomials(const RingPtr& ring,
                                                             const std::vector<std::size_t>& vars) const {
    std::vector<Polynomial> out;
    for (const auto& s : sigmas) out.push_back(s.to_polynomial(ring, vars));
    return out;
}

TriangularAdditiveBasis additive_echelon(Field f, std::size_t nvars, const std::vector<AdditivePolynomial>& input) {
    std::uint64_t p = f.characteristic();
    std::map<std::uint64_t, Matrix> by_degree;
    for (const auto& a : input) {
        if (a.coeffs.size() != nvars) throw InputError("additive polynomial has the wrong number of variables");
        if (p == 0 ? a.q != 1 : !is_power_of(a.q, p))
            throw InputError("additive degree " + std::to_string(a.q) + " is not a power of the characteristic");
        if (!a.is_zero()) by_degree[a.q].push_back(a.coeffs);
    }
    TriangularAdditiveBasis out{f, nvars, {}, {}, {}};
    for (auto& [q, rows] : by_degree) {
        for (auto& row : rows) {
            for (std::size_t k = 0; k < out.sigmas.size(); ++k) {
                FieldElement c = row[out.leaders[k]];
                if (c.is_zero()) continue;
                AdditivePolynomial lifted = out.sigmas[k].raised(q / out.sigmas[k].q);
                for (std::size_t j = 0; j < nvars; ++j)
                    if (!lifted.coeffs[j].is_zero()) row[j] -= c * lifted.coeffs[j];
            }
        }
        SubspaceBasis e = echelon(f, nvars, rows);
        for (std::size_t i = 0; i < e.dim(); ++i) {
            out.sigmas.push_back(AdditivePolynomial{q, e.rows()[i]});
            out.leaders.push_back(e.pivots()[i]);
        }
    }
    out.permutation = out.leaders;
    for (std::size_t j = 0; j < nvars; ++j)
        if (std::find(out.leaders.begin(), out.leaders.end(), j) == out.leaders.end()) out.permutation.push_back(j);
    return out;
}

TriangularReduction triangular_reduce(const Polynomial& f, const TriangularAdditiveBasis& basis,
                                      const std::vector<std::size_t>& vars) {
    const RingPtr& ring = f.ring();
    if (vars.size() != basis.nvars) throw InputError("variable map does not match the basis");
    std::vector<Polynomial> sigma = basis.polynomials(ring, vars);
    TriangularReduction out{Polynomial(ring), std::vector<Polynomial>(basis.size(), Polynomial(ring))};
    Polynomial work = f;
    while (!work.is_zero()) {
        auto it = work.terms().rbegin();
        Monomial m = it->first;
        FieldElement c = it->second;
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < basis.size() && !hit; ++i)
            if (m[vars[basis.leaders[i]]] >= basis.sigmas[i].q) hit = i;
        if (!hit) {
            out.remainder.add_term(m, c);
            work.add_term(m, -c);
            continue;
        }
        m[vars[basis.leaders[*hit]]] -= static_cast<std::uint32_t>(basis.sigmas[*hit].q);
        out.cofactors[*hit].add_term(m, c);
        work -= sigma[*hit].times_monomial(m).scaled(c);
    }
    return out;
}

TriangularReduction triangular_reduce(const Polynomial& f, const TriangularAdditiveBasis& basis) {
    return triangular_reduce(f, basis, identity_indices(basis.nvars));
}

}  // namespace hsc
