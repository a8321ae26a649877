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

#include "hsconst/param_poly.hpp"

#include <algorithm>
#include <sstream>

#include "hsconst/error.hpp"

namespace hsc {

namespace {

mpz_class mod_inverse(const mpz_class& a, std::uint64_t p) {
    mpz_class r;
    mpz_class m(static_cast<unsigned long>(p));
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw ArithmeticError("non-invertible residue");
    return r;
}

// Univariate view in one parameter: coefficient of v^k at index k; the
// coefficients have v-exponent zero.
using Univariate = std::vector<ParamPoly>;

Univariate to_univariate(const ParamPoly& a, std::size_t v) {
    Univariate out(a.degree_in(v) + 1, ParamPoly(a.nvars(), a.modulus()));
    for (const auto& [e, c] : a.terms()) {
        Exponent f = e;
        f[v] = 0;
        out[e[v]].add_term(f, c);
    }
    return out;
}

ParamPoly from_univariate(const Univariate& u, std::size_t v, std::size_t nvars, std::uint64_t mod) {
    ParamPoly out(nvars, mod);
    for (std::size_t k = 0; k < u.size(); ++k) {
        for (const auto& [e, c] : u[k].terms()) {
            Exponent f = e;
            f[v] = static_cast<std::uint32_t>(k);
            out.add_term(f, c);
        }
    }
    return out;
}

void trim(Univariate& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

ParamPoly content_in(const ParamPoly& a, std::size_t v) {
    ParamPoly g(a.nvars(), a.modulus());
    for (const auto& c : to_univariate(a, v)) {
        if (c.is_zero()) continue;
        g = ParamPoly::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Univariate pseudo_remainder(Univariate a, const Univariate& b) {
    const ParamPoly& lb = b.back();
    std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        std::size_t shift = a.size() - 1 - db;
        ParamPoly la = a.back();
        for (auto& c : a) c = c * lb;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = a[k + shift] - la * b[k];
        trim(a);
    }
    return a;
}

}  // namespace

mpz_class ParamPoly::reduce(const mpz_class& c) const {
    if (modulus_ == 0) return c;
    mpz_class m(static_cast<unsigned long>(modulus_));
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    return r;
}

ParamPoly ParamPoly::constant(std::size_t nvars, std::uint64_t modulus, const mpz_class& c) {
    ParamPoly p(nvars, modulus);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

ParamPoly ParamPoly::variable(std::size_t nvars, std::uint64_t modulus, std::size_t index) {
    ParamPoly p(nvars, modulus);
    Exponent e(nvars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

bool ParamPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

bool ParamPoly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

mpz_class ParamPoly::constant_value() const { return terms_.empty() ? mpz_class(0) : terms_.begin()->second; }

std::uint32_t ParamPoly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int ParamPoly::top_variable() const {
    int top = -1;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) top = std::max(top, static_cast<int>(i));
    return top;
}

void ParamPoly::add_term(const Exponent& e, const mpz_class& c) {
    mpz_class r = reduce(c);
    if (r == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, r);
        return;
    }
    it->second = reduce(it->second + r);
    if (it->second == 0) terms_.erase(it);
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out(nvars_, modulus_);
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out(a.nvars_, a.modulus_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

ParamPoly ParamPoly::scaled(const mpz_class& c) const {
    ParamPoly out(nvars_, modulus_);
    for (const auto& [e, x] : terms_) out.add_term(e, x * c);
    return out;
}

ParamPoly ParamPoly::pow(std::uint64_t e) const {
    ParamPoly result = constant(nvars_, modulus_, 1);
    ParamPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

ParamPoly ParamPoly::shifted(const Exponent& s) const {
    ParamPoly out(nvars_, modulus_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

ParamPoly ParamPoly::exact_div(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    ParamPoly q(a.nvars_, a.modulus_);
    ParamPoly r = a;
    const Exponent& lb = b.leading_exponent();
    const mpz_class& cb = b.leading_coefficient();
    mpz_class inv = a.modulus_ ? mod_inverse(cb, a.modulus_) : mpz_class(0);
    while (!r.is_zero()) {
        const Exponent& lr = r.leading_exponent();
        Exponent s(lr.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (lr[i] < lb[i]) throw ArithmeticError("inexact polynomial division");
            s[i] = lr[i] - lb[i];
        }
        mpz_class c;
        if (a.modulus_) {
            c = r.leading_coefficient() * inv;
        } else {
            if (!mpz_divisible_p(r.leading_coefficient().get_mpz_t(), cb.get_mpz_t()))
                throw ArithmeticError("inexact polynomial division");
            c = r.leading_coefficient() / cb;
        }
        ParamPoly t(a.nvars_, a.modulus_);
        t.add_term(s, c);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
    auto normalize = [](ParamPoly p) {
        if (p.is_zero()) return p;
        if (p.modulus_) {
            mpz_class inv = mod_inverse(p.leading_coefficient(), p.modulus_);
            return p.scaled(inv);
        }
        return p.leading_coefficient() < 0 ? -p : p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    int v = std::max(a.top_variable(), b.top_variable());
    if (v < 0) {
        if (a.modulus_) return constant(a.nvars_, a.modulus_, 1);
        return constant(a.nvars_, 0, ::gcd(a.constant_value(), b.constant_value()));
    }
    auto var = static_cast<std::size_t>(v);
    if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
    if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

    ParamPoly ca = content_in(a, var);
    ParamPoly cb = content_in(b, var);
    ParamPoly g = gcd(ca, cb);
    Univariate ua = to_univariate(exact_div(a, ca), var);
    Univariate ub = to_univariate(exact_div(b, cb), var);
    if (ua.size() < ub.size()) std::swap(ua, ub);
    while (!ub.empty()) {
        Univariate r = pseudo_remainder(ua, ub);
        ua = std::move(ub);
        if (r.empty()) {
            ub.clear();
            break;
        }
        ParamPoly rp = from_univariate(r, var, a.nvars_, a.modulus_);
        ub = to_univariate(exact_div(rp, content_in(rp, var)), var);
    }
    ParamPoly last = from_univariate(ua, var, a.nvars_, a.modulus_);
    last = exact_div(last, content_in(last, var));
    return normalize(g * last);
}

ParamPoly ParamPoly::inflate(std::uint64_t k) const {
    ParamPoly out(nvars_, modulus_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (auto& x : f) x = static_cast<std::uint32_t>(x * k);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

bool ParamPoly::deflate(std::uint64_t k, ParamPoly& out) const {
    ParamPoly r(nvars_, modulus_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (auto& x : f) {
            if (x % k != 0) return false;
            x = static_cast<std::uint32_t>(x / k);
        }
        r.terms_.emplace(std::move(f), c);
    }
    out = std::move(r);
    return true;
}

std::string ParamPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class coeff = c;
        bool negative = modulus_ == 0 && coeff < 0;
        if (negative) coeff = -coeff;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool has_var = std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; });
        if (!has_var || coeff != 1) {
            os << coeff.get_str();
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace hsc
