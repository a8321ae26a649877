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

#include "hsconst/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hsconst/error.hpp"

namespace hsc {

std::uint32_t total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::uint32_t{0}); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Ring::Ring(Field field, std::vector<std::string> vars) : field_(field), vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
        if (field_.parameter_index(v)) throw InputError("variable '" + v + "' clashes with a field parameter");
    }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t Ring::require_index(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw InputError("unknown variable '" + name + "'");
    return *i;
}

RingPtr make_ring(Field field, std::vector<std::string> vars) {
    return std::make_shared<const Ring>(field, std::move(vars));
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
    Polynomial p(ring);
    p.add_term(Monomial(ring->size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw InputError("variable index out of range");
    Monomial m(ring->size(), 0);
    m[index] = 1;
    Field f = ring->field();
    return monomial(std::move(ring), std::move(m), f.one());
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
    std::size_t i = ring->require_index(name);
    return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const FieldElement& c) {
    Polynomial p(std::move(ring));
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

std::uint32_t Polynomial::degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

std::optional<std::uint32_t> Polynomial::order() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const { return terms_.empty() || degree() == *order(); }

std::uint32_t Polynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Polynomial Polynomial::homogeneous_part(std::uint32_t d) const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) == d) out.terms_.emplace(m, c);
    return out;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field().zero() : it->second;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
    if (m.size() != ring_->size()) throw InputError("monomial length does not match ring");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw ArithmeticError("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial out(a.ring_);
    Monomial m(a.nvars());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms_) out.terms_.emplace(m, x * c);
    return out;
}

Polynomial Polynomial::times_monomial(const Monomial& s) const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) {
        Monomial n = m;
        for (std::size_t i = 0; i < n.size(); ++i) n[i] += s[i];
        out.terms_.emplace(std::move(n), c);
    }
    return out;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
    return a.terms_.size() == b.terms_.size() &&
           std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                      [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& names = ring_->variables();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        bool compound = false;
        if (negative) {
            FieldElement pos = -c;
            cs = pos.to_string();
        }
        // A coefficient with interior + or - needs parentheses.
        compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find(" ") != std::string::npos;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        bool has_var = total_degree(m) > 0;
        if (!has_var) {
            os << (compound ? "(" + cs + ")" : cs);
        } else if (cs != "1") {
            os << (compound || cs.find('/') != std::string::npos ? "(" + cs + ")" : cs) << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << names[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

OrderAndInitial order_and_initial_form(const Polynomial& f) {
    auto ord = f.order();
    if (!ord) return {std::nullopt, Polynomial(f.ring())};
    return {ord, f.homogeneous_part(*ord)};
}

Polynomial hasse_derivative(const Polynomial& f, const Monomial& a) {
    if (a.size() != f.nvars()) throw InputError("derivative multi-index length mismatch");
    Polynomial out(f.ring());
    Field k = f.field();
    for (const auto& [m, c] : f.terms()) {
        FieldElement coeff = c;
        Monomial n(m.size());
        bool ok = true;
        for (std::size_t i = 0; i < m.size() && ok; ++i) {
            if (m[i] < a[i]) {
                ok = false;
                break;
            }
            n[i] = m[i] - a[i];
            if (a[i]) coeff *= binomial(k, m[i], a[i]);
            ok = !coeff.is_zero();
        }
        if (ok) out.add_term(n, coeff);
    }
    return out;
}

Polynomial taylor_translate(const Polynomial& f, const std::vector<std::size_t>& vars,
                            const std::vector<std::string>& names) {
    if (vars.size() != names.size()) throw InputError("one translation variable per chosen variable");
    std::vector<std::string> all = f.ring()->variables();
    all.insert(all.end(), names.begin(), names.end());
    RingPtr target = make_ring(f.field(), all);
    std::size_t n = f.nvars();
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(target, i));
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (vars[k] >= n) throw InputError("variable index out of range");
        images[vars[k]] += Polynomial::variable(target, n + k);
    }
    return substitute(f, images);
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
    if (images.size() != f.nvars()) throw InputError("substitution must assign every variable");
    if (images.empty()) throw InputError("substitution into a ring without variables");
    RingPtr target = images[0].ring();
    for (const auto& im : images)
        if (!(*im.ring() == *target)) throw InputError("substitution images from different rings");
    if (!(target->field() == f.field())) throw InputError("substitution changes the coefficient field");
    // Cache powers per variable.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, f.field().one()));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Polynomial out(target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) term = term * power(i, m[i]);
        out += term;
    }
    return out;
}

Polynomial rename_into(const Polynomial& f, const RingPtr& target) {
    if (!(target->field() == f.field())) throw InputError("rename_into changes the coefficient field");
    std::vector<std::size_t> pos;
    for (const auto& v : f.ring()->variables()) pos.push_back(target->require_index(v));
    Polynomial out(target);
    for (const auto& [m, c] : f.terms()) {
        Monomial n(target->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) n[pos[i]] = m[i];
        out.add_term(n, c);
    }
    return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Monomial m(n, 0);
    // Descending graded lex: x1 exponent runs from d down to 0.
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == n) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (std::uint32_t e = left + 1; e-- > 0;) {
            m[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace hsc
