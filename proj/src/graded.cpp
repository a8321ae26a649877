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

#include "hsconst/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hsconst/error.hpp"
#include "hsconst/univariate.hpp"

namespace hsc {

// ------------------------------------------------------------ HSFunction

bool HSFunction::below_or_equal(const HSFunction& o) const {
    std::size_t n = std::min(values.size(), o.values.size());
    for (std::size_t i = 0; i < n; ++i)
        if (values[i] > o.values[i]) return false;
    return true;
}

std::string HSFunction::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ")";
    if (shift) os << " shift " << shift;
    return os.str();
}

HSFunction hs_iterate(const HSFunction& h, std::uint32_t t) {
    HSFunction out = h;
    for (std::uint32_t k = 0; k < t; ++k) {
        std::int64_t acc = 0;
        for (auto& v : out.values) {
            acc += v;
            v = acc;
        }
    }
    out.shift += t;
    return out;
}

std::uint32_t default_truncation(const std::vector<Polynomial>& gens) {
    std::uint32_t d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return 2 * d + 2;
}

void require_homogeneous(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        if (!g.is_homogeneous()) throw InputError("generator '" + g.to_string() + "' is not homogeneous");
}

// ------------------------------------------------------------ GradedIdeal

GradedIdeal::GradedIdeal(RingPtr ring, std::vector<Polynomial> gens, std::uint32_t D)
    : ring_(std::move(ring)), gens_(std::move(gens)), D_(D) {
    require_homogeneous(gens_);
    Field f = ring_->field();
    std::size_t n = ring_->size();
    for (const auto& g : gens_)
        if (!(*g.ring() == *ring_)) throw InputError("generators live in different rings");
    for (std::uint32_t d = 0; d <= D; ++d) {
        monos_.push_back(monomials_of_degree(n, d));
        std::map<Monomial, std::size_t> idx;
        for (std::size_t j = 0; j < monos_[d].size(); ++j) idx.emplace(monos_[d][j], j);
        index_.push_back(std::move(idx));

        std::size_t cols = monos_[d].size();
        Matrix rows;
        if (d > 0) {
            for (const auto& r : pieces_[d - 1].rows()) {
                for (std::size_t i = 0; i < n; ++i) {
                    Vector v = zero_vector(f, cols);
                    for (std::size_t j = 0; j < r.size(); ++j) {
                        if (r[j].is_zero()) continue;
                        Monomial m = monos_[d - 1][j];
                        m[i] += 1;
                        v[index_[d].at(m)] = r[j];
                    }
                    rows.push_back(std::move(v));
                }
            }
        }
        SubspaceBasis lower = echelon(f, cols, rows);
        lower_.push_back(lower.dim());
        Matrix all = lower.rows();
        bool extra = false;
        for (const auto& g : gens_) {
            if (g.is_zero() || g.degree() != d) continue;
            all.push_back(coordinates(g, d));
            extra = true;
        }
        pieces_.push_back(extra ? echelon(f, cols, all) : lower);
    }
}

std::size_t GradedIdeal::column(const Monomial& m) const {
    std::uint32_t d = total_degree(m);
    if (d > D_) throw InputError("monomial degree exceeds the truncation");
    return index_[d].at(m);
}

Vector GradedIdeal::coordinates(const Polynomial& f, std::uint32_t d) const {
    if (d > D_) throw InputError("degree " + std::to_string(d) + " exceeds the truncation");
    Vector v = zero_vector(field(), monos_[d].size());
    for (const auto& [m, c] : f.terms()) {
        if (total_degree(m) != d) throw InputError("polynomial is not homogeneous of degree " + std::to_string(d));
        v[index_[d].at(m)] = c;
    }
    return v;
}

Polynomial GradedIdeal::from_coordinates(const Vector& v, std::uint32_t d) const {
    Polynomial out(ring_);
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) out.add_term(monos_[d][j], v[j]);
    return out;
}

Polynomial GradedIdeal::reduce(const Polynomial& f) const {
    Polynomial out(ring_);
    if (f.is_zero()) return out;
    for (std::uint32_t d = *f.order(); d <= f.degree(); ++d) {
        Polynomial part = f.homogeneous_part(d);
        if (part.is_zero()) continue;
        out += from_coordinates(pieces_.at(d).reduce(coordinates(part, d)), d);
    }
    return out;
}

bool GradedIdeal::contains(const Polynomial& f) const { return reduce(f).is_zero(); }

// ------------------------------------------------------------ graded operations

namespace {

RingPtr common_ring(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw InputError("empty generator list");
    return gens.front().ring();
}

}  // namespace

std::vector<std::size_t> graded_component_dims(const std::vector<Polynomial>& gens, std::uint32_t D) {
    GradedIdeal gi(common_ring(gens), gens, D);
    std::vector<std::size_t> out;
    for (std::uint32_t d = 0; d <= D; ++d) out.push_back(gi.piece(d).dim());
    return out;
}

HSFunction hs_cone_origin(const std::vector<Polynomial>& gens, std::uint32_t D) {
    GradedIdeal gi(common_ring(gens), gens, D);
    HSFunction h;
    h.truncation = D;
    h.tag = "origin";
    for (std::uint32_t d = 0; d <= D; ++d)
        h.values.push_back(static_cast<std::int64_t>(gi.monomials(d).size() - gi.piece(d).dim()));
    return h;
}

std::vector<std::uint32_t> nu_star_graded(const std::vector<Polynomial>& gens, std::uint32_t D) {
    std::uint32_t maxdeg = 0;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
    if (D < maxdeg) throw InputError("truncation below the maximal generator degree");
    GradedIdeal gi(common_ring(gens), gens, D);
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 0; d <= D; ++d)
        for (std::size_t k = gi.lower_dimension(d); k < gi.piece(d).dim(); ++k) out.push_back(d);
    return out;
}

bool graded_membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw InputError("membership test needs a homogeneous polynomial");
    std::uint32_t d = f.degree();
    if (gens.empty()) return false;
    GradedIdeal gi(f.ring(), gens, d);
    return gi.contains(f);
}

// ------------------------------------------------------------ local HS

std::size_t ShapePosition::residue_degree() const {
    return minimal_polynomial.empty() ? 1 : minimal_polynomial.size() - 1;
}

namespace {

// g = c*X_i + r with c a nonzero constant and r free of X_i.
std::optional<FieldElement> linear_coefficient(const Polynomial& g, std::size_t i) {
    std::optional<FieldElement> c;
    for (const auto& [m, coeff] : g.terms()) {
        if (m[i] == 0) continue;
        if (m[i] > 1 || total_degree(m) != 1 || c) return std::nullopt;
        c = coeff;
    }
    return c;
}

std::vector<Polynomial> identity_images(const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < ring->size(); ++i) out.push_back(Polynomial::variable(ring, i));
    return out;
}

std::string show_upoly(const UPoly& m, const RingPtr& ring, std::size_t var) {
    return from_upoly(m, ring, var).to_string();
}

}  // namespace

ShapePosition shape_position(const RingPtr& ring, const std::vector<Polynomial>& M) {
    std::size_t n = ring->size();
    std::vector<Polynomial> G;
    for (const auto& g : M) {
        if (!(*g.ring() == *ring)) throw InputError("maximal ideal generators live in another ring");
        if (!g.is_zero()) G.push_back(g);
    }
    std::vector<std::optional<Polynomial>> sub(n);
    std::vector<std::size_t> order;
    for (bool found = true; found;) {
        found = false;
        for (std::size_t gi = 0; gi < G.size() && !found; ++gi) {
            for (std::size_t i = n; i-- > 0 && !found;) {
                if (sub[i]) continue;
                auto c = linear_coefficient(G[gi], i);
                if (!c) continue;
                Monomial e(n, 0);
                e[i] = 1;
                Polynomial h = (G[gi] - Polynomial::monomial(ring, e, *c)).scaled(-c->inverse());
                std::vector<Polynomial> images = identity_images(ring);
                images[i] = h;
                G.erase(G.begin() + static_cast<std::ptrdiff_t>(gi));
                for (auto& g : G) g = substitute(g, images);
                G.erase(std::remove_if(G.begin(), G.end(), [](const Polynomial& g) { return g.is_zero(); }),
                        G.end());
                sub[i] = h;
                order.push_back(i);
                found = true;
            }
        }
    }
    for (const auto& g : G)
        if (g.is_constant()) throw InputError("ideal is not maximal: it is the unit ideal");
    std::set<std::size_t> appearing;
    for (const auto& g : G)
        for (const auto& [m, c] : g.terms())
            for (std::size_t i = 0; i < n; ++i)
                if (m[i]) appearing.insert(i);
    if (appearing.size() > 1)
        throw InputError(
            "maximal ideal must be in shape position: one univariate generator plus generators X_i - h_i");
    for (std::size_t i = 0; i < n; ++i)
        if (!sub[i] && !appearing.count(i))
            throw InputError("ideal is not maximal: variable '" + ring->variables()[i] + "' is unconstrained");

    ShapePosition out;
    UPoly m;
    if (!appearing.empty()) {
        std::size_t a = *appearing.begin();
        for (const auto& g : G) m = ugcd(m, to_upoly(g, a));
        if (udegree(m) < 1) throw InputError("ideal is not maximal: it is the unit ideal");
        auto irr = is_irreducible(m);
        if (!irr)
            throw InputError("cannot decide whether " + show_upoly(m, ring, a) + " is irreducible over " +
                             ring->field().to_string());
        if (!*irr) throw InputError("ideal is not maximal: " + show_upoly(m, ring, a) + " is reducible");
        out.anchor = a;
        out.minimal_polynomial = m;
    }
    // Resolve the eliminated variables into expressions in the anchor.
    std::vector<Polynomial> images = identity_images(ring);
    if (out.anchor && udegree(m) == 1) {
        images[*out.anchor] = Polynomial::constant(ring, -m[0]);
        out.anchor.reset();
        out.minimal_polynomial.clear();
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Polynomial h = substitute(*sub[*it], images);
        if (out.anchor) h = from_upoly(udivmod(to_upoly(h, *out.anchor), m).second, ring, *out.anchor);
        images[*it] = h;
    }
    for (std::size_t i = 0; i < n; ++i)
        out.offsets.push_back(out.anchor && i == *out.anchor ? Polynomial(ring) : images[i]);
    return out;
}

namespace {

HSFunction hs_rational(const std::vector<Polynomial>& gens, std::uint32_t D) {
    const RingPtr& ring = gens.front().ring();
    std::size_t n = ring->size();
    Field f = ring->field();
    std::vector<std::vector<Monomial>> monos;
    std::map<Monomial, std::size_t> col;
    std::vector<std::size_t> level_of;
    for (std::uint32_t d = 0; d <= D; ++d) {
        monos.push_back(monomials_of_degree(n, d));
        for (const auto& m : monos.back()) {
            col.emplace(m, level_of.size());
            level_of.push_back(d);
        }
    }
    EchelonBuilder b(f, level_of.size());
    for (const auto& g : gens) {
        auto ord = g.order();
        if (!ord || *ord > D) continue;
        for (std::uint32_t d = 0; d + *ord <= D; ++d) {
            for (const auto& m : monos[d]) {
                Vector v = zero_vector(f, level_of.size());
                for (const auto& [gm, c] : g.terms()) {
                    if (total_degree(gm) + d > D) continue;
                    Monomial pm = gm;
                    for (std::size_t i = 0; i < n; ++i) pm[i] += m[i];
                    v[col.at(pm)] = c;
                }
                b.add(std::move(v));
            }
        }
    }
    HSFunction h;
    h.truncation = D;
    std::vector<std::int64_t> piv(D + 1, 0);
    for (auto c : b.pivot_columns()) piv[level_of[c]]++;
    for (std::uint32_t d = 0; d <= D; ++d) h.values.push_back(static_cast<std::int64_t>(monos[d].size()) - piv[d]);
    return h;
}

// Basis X_a^r m^b X'^c of k[X]/M^(D+1) for M = (m(X_a), X'), level b + |c|.
class MAdicQuotient {
public:
    MAdicQuotient(RingPtr ring, std::size_t anchor, UPoly m, std::uint32_t D)
        : ring_(std::move(ring)), a_(anchor), m_(std::move(m)), D_(D) {
        std::size_t n = ring_->size();
        std::size_t e = m_.size() - 1;
        for (std::uint32_t level = 0; level <= D; ++level) {
            for (std::uint32_t s = 0; s <= level; ++s) {
                for (const auto& c0 : monomials_of_degree(n - 1, s)) {
                    Monomial c(n, 0);
                    for (std::size_t i = 0, k = 0; i < n; ++i)
                        if (i != a_) c[i] = c0[k++];
                    for (std::size_t r = 0; r < e; ++r) {
                        Monomial key = c;
                        key.push_back(level - s);
                        key.push_back(static_cast<std::uint32_t>(r));
                        col_.emplace(key, level_of_.size());
                        keys_.push_back(key);
                        level_of_.push_back(level);
                    }
                }
            }
        }
        mpow_.push_back(UPoly{ring_->field().one()});
        for (std::uint32_t b = 1; b <= D; ++b) mpow_.push_back(umul(mpow_.back(), m_));
    }

    std::size_t size() const { return keys_.size(); }
    std::size_t level(std::size_t col) const { return level_of_[col]; }
    std::size_t residue_degree() const { return m_.size() - 1; }

    Polynomial basis_element(std::size_t col) const {
        const Monomial& key = keys_[col];
        std::size_t n = ring_->size();
        Monomial c(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(n));
        UPoly xr(key[n + 1] + 1, ring_->field().zero());
        xr.back() = ring_->field().one();
        return from_upoly(umul(xr, mpow_[key[n]]), ring_, a_).times_monomial(c);
    }

    Vector normal_form(const Polynomial& f) const {
        std::size_t n = ring_->size();
        std::map<Monomial, UPoly> groups;
        for (const auto& [m, c] : f.terms()) {
            Monomial key = m;
            std::uint32_t ea = key[a_];
            key[a_] = 0;
            if (total_degree(key) > D_) continue;
            UPoly& u = groups[key];
            if (u.size() <= ea) u.resize(ea + 1, ring_->field().zero());
            u[ea] = c;
        }
        Vector v = zero_vector(ring_->field(), keys_.size());
        for (auto& [c, u] : groups) {
            utrim(u);
            std::uint32_t room = D_ - total_degree(c);
            for (std::uint32_t b = 0; b <= room && !u.empty(); ++b) {
                auto [q, r] = udivmod(u, m_);
                for (std::size_t j = 0; j < r.size(); ++j) {
                    if (r[j].is_zero()) continue;
                    Monomial key = c;
                    key.push_back(b);
                    key.push_back(static_cast<std::uint32_t>(j));
                    v[col_.at(key)] = r[j];
                }
                u = std::move(q);
            }
        }
        (void)n;
        return v;
    }

private:
    RingPtr ring_;
    std::size_t a_;
    UPoly m_;
    std::uint32_t D_;
    std::map<Monomial, std::size_t> col_;
    std::vector<Monomial> keys_;
    std::vector<std::size_t> level_of_;
    std::vector<UPoly> mpow_;
};

HSFunction hs_madic(const std::vector<Polynomial>& gens, std::size_t anchor, const UPoly& m, std::uint32_t D) {
    const RingPtr& ring = gens.front().ring();
    MAdicQuotient A(ring, anchor, m, D);
    EchelonBuilder b(ring->field(), A.size());
    for (const auto& g : gens) {
        Vector ng = A.normal_form(g);
        std::size_t ord = D + 1;
        for (std::size_t j = 0; j < ng.size(); ++j)
            if (!ng[j].is_zero()) ord = std::min(ord, A.level(j));
        if (ord > D) continue;
        for (std::size_t j = 0; j < A.size(); ++j) {
            if (A.level(j) + ord > D) continue;
            b.add(A.normal_form(g * A.basis_element(j)));
        }
    }
    std::vector<std::int64_t> cols(D + 1, 0), piv(D + 1, 0);
    for (std::size_t j = 0; j < A.size(); ++j) cols[A.level(j)]++;
    for (auto c : b.pivot_columns()) piv[A.level(c)]++;
    HSFunction h;
    h.truncation = D;
    auto e = static_cast<std::int64_t>(A.residue_degree());
    for (std::uint32_t d = 0; d <= D; ++d) {
        std::int64_t k = cols[d] - piv[d];
        if (k % e != 0) throw InternalError("layer dimension not divisible by the residue degree");
        h.values.push_back(k / e);
    }
    return h;
}

}  // namespace

HSFunction hs_local_truncated(const std::vector<Polynomial>& gens, const ShapePosition& point, std::uint32_t D) {
    RingPtr ring = common_ring(gens);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring->size(); ++i)
        images.push_back(Polynomial::variable(ring, i) + point.offsets.at(i));
    std::vector<Polynomial> moved;
    for (const auto& g : gens) moved.push_back(substitute(g, images));
    HSFunction h = point.anchor ? hs_madic(moved, *point.anchor, point.minimal_polynomial, D) : hs_rational(moved, D);
    return h;
}

HSFunction hs_local_truncated(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& M, std::uint32_t D) {
    return hs_local_truncated(gens, shape_position(common_ring(gens), M), D);
}

HSFunction hs_at_origin(const std::vector<Polynomial>& gens, std::uint32_t D) {
    HSFunction h = hs_rational(gens, D);
    h.tag = "origin";
    return h;
}

HSFunction hs_generic_point(const std::vector<Polynomial>& gens, const std::vector<std::string>& stratum,
                            std::uint32_t D) {
    RingPtr ring = common_ring(gens);
    std::vector<std::size_t> ys;
    std::vector<bool> is_y(ring->size(), false);
    for (const auto& name : stratum) {
        std::size_t i = ring->require_index(name);
        if (is_y[i]) throw InputError("stratum variable '" + name + "' listed twice");
        is_y[i] = true;
        ys.push_back(i);
    }
    std::vector<std::string> free;
    std::vector<std::size_t> ws;
    for (std::size_t i = 0; i < ring->size(); ++i)
        if (!is_y[i]) {
            free.push_back(ring->variables()[i]);
            ws.push_back(i);
        }
    Field k2 = ring->field().with_parameters(free);
    std::size_t s0 = ring->field().parameter_count();
    RingPtr target = make_ring(k2, stratum);
    std::vector<Polynomial> moved;
    for (const auto& g : gens) {
        Polynomial out(target);
        for (const auto& [m, c] : g.terms()) {
            Monomial my(ys.size());
            bool in_y = false;
            for (std::size_t j = 0; j < ys.size(); ++j) {
                my[j] = m[ys[j]];
                in_y = in_y || my[j] > 0;
            }
            if (!in_y)
                throw InputError("generator '" + g.to_string() + "' is not in the ideal of the stratum");
            FieldElement coeff = extend_parameters(c, k2);
            for (std::size_t j = 0; j < ws.size(); ++j)
                if (m[ws[j]]) coeff *= k2.parameter(s0 + j).pow(m[ws[j]]);
            out.add_term(my, coeff);
        }
        moved.push_back(std::move(out));
    }
    HSFunction h;
    if (ys.empty()) {
        h.truncation = D;
        h.values.assign(D + 1, 0);
        h.values[0] = 1;
    } else {
        h = hs_rational(moved, D);
    }
    h.tag = "generic";
    return h;
}

}  // namespace hsc
