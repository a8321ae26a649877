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

#include "hsconst/univariate.hpp"

#include <algorithm>

#include "hsconst/error.hpp"

namespace hsc {

namespace {

Field base_of(Field f) { return f.characteristic() == 0 ? Field::rationals() : Field::prime(f.characteristic()); }

std::optional<FieldElement> to_base(const FieldElement& x, Field base) {
    if (!x.field().has_parameters()) return x;
    ParamPoly n = x.numerator(), d = x.denominator();
    if (!n.is_constant() || !d.is_constant()) return std::nullopt;
    return base.from_mpz(n.constant_value()) / base.from_mpz(d.constant_value());
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

FieldElement evaluate(const UPoly& a, const FieldElement& x) {
    FieldElement acc = x.field().zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

// Degree <= 3 over Q is reducible iff it has a rational root.
std::optional<bool> rational_cubic_irreducible(const UPoly& a) {
    mpz_class l = 1;
    for (const auto& c : a) l = lcm(l, mpz_class(c.as_rational()->get_den()));
    std::vector<mpz_class> z;
    for (const auto& c : a) z.push_back(mpz_class(*c.as_rational() * l));
    if (z.front() == 0) return false;
    const mpz_class limit("1000000000000");
    if (abs(z.front()) > limit || abs(z.back()) > limit) return std::nullopt;
    Field q = Field::rationals();
    for (const auto& num : positive_divisors(z.front()))
        for (const auto& den : positive_divisors(z.back()))
            for (int s : {1, -1}) {
                FieldElement x = FieldElement::rational(q, mpq_class(num * s, den));
                if (evaluate(a, x).is_zero()) return false;
            }
    return true;
}

// Rational roots of an integer-content polynomial without zero constant term.
std::optional<std::vector<FieldElement>> rational_roots(const UPoly& a) {
    mpz_class l = 1;
    for (const auto& c : a) l = lcm(l, mpz_class(c.as_rational()->get_den()));
    std::vector<mpz_class> z;
    for (const auto& c : a) z.push_back(mpz_class(*c.as_rational() * l));
    const mpz_class limit("1000000000000");
    if (abs(z.front()) > limit || abs(z.back()) > limit) return std::nullopt;
    Field q = Field::rationals();
    std::vector<FieldElement> out;
    for (const auto& num : positive_divisors(z.front()))
        for (const auto& den : positive_divisors(z.back()))
            for (int s : {1, -1}) {
                FieldElement x = FieldElement::rational(q, mpq_class(num * s, den));
                if (evaluate(a, x).is_zero() && std::find(out.begin(), out.end(), x) == out.end())
                    out.push_back(x);
            }
    return out;
}

FieldElement lift_from_base(const FieldElement& x, Field target) {
    if (x.field() == target) return x;
    if (auto q = x.as_rational()) return FieldElement::rational(target, *q);
    return target.from_int(static_cast<long>(x.as_prime_residue()));
}

// Over F_p: no irreducible factor of degree i <= n/2 divides X^(p^i) - X.
bool prime_field_irreducible(const UPoly& a) {
    Field f = a.front().field();
    std::uint64_t p = f.characteristic();
    int n = udegree(a);
    UPoly x = {f.zero(), f.one()};
    UPoly power = x;
    for (int i = 1; 2 * i <= n; ++i) {
        power = upowmod(power, p, a);
        UPoly g = ugcd(a, usub(power, x));
        if (udegree(g) > 0) return false;
    }
    return true;
}

}  // namespace

void utrim(UPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int udegree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly uadd(const UPoly& a, const UPoly& b) {
    const UPoly& big = a.size() >= b.size() ? a : b;
    const UPoly& small = a.size() >= b.size() ? b : a;
    UPoly out = big;
    for (std::size_t i = 0; i < small.size(); ++i) out[i] += small[i];
    utrim(out);
    return out;
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly nb = b;
    for (auto& c : nb) c = -c;
    return uadd(a, nb);
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly out(a.size() + b.size() - 1, a.front().field().zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    utrim(out);
    return out;
}

std::pair<UPoly, UPoly> udivmod(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw ArithmeticError("division by the zero polynomial");
    UPoly r = a;
    utrim(r);
    if (r.size() < b.size()) return {UPoly{}, r};
    Field f = b.front().field();
    UPoly q(r.size() - b.size() + 1, f.zero());
    FieldElement inv = b.back().inverse();
    while (r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        FieldElement c = r.back() * inv;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[shift + j] -= c * b[j];
        r.pop_back();
        utrim(r);
    }
    utrim(q);
    return {q, r};
}

UPoly umonic(const UPoly& a) {
    if (a.empty()) return a;
    FieldElement inv = a.back().inverse();
    UPoly out = a;
    for (auto& c : out) c *= inv;
    return out;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = udivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(a);
}

UPoly upowmod(const UPoly& base, std::uint64_t e, const UPoly& mod) {
    Field f = mod.front().field();
    UPoly result = {f.one()};
    UPoly b = udivmod(base, mod).second;
    while (e > 0) {
        if (e & 1) result = udivmod(umul(result, b), mod).second;
        e >>= 1;
        if (e > 0) b = udivmod(umul(b, b), mod).second;
    }
    return udivmod(result, mod).second;
}

UPoly to_upoly(const Polynomial& f, std::size_t var) {
    UPoly out;
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] != 0) throw InputError("polynomial is not univariate");
        if (out.size() <= m[var]) out.resize(m[var] + 1, f.field().zero());
        out[m[var]] = c;
    }
    utrim(out);
    return out;
}

Polynomial from_upoly(const UPoly& a, const RingPtr& ring, std::size_t var) {
    Polynomial out(ring);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        Monomial m(ring->size(), 0);
        m[var] = static_cast<std::uint32_t>(i);
        out.add_term(m, a[i]);
    }
    return out;
}

std::optional<std::vector<FieldElement>> roots_in_field(const UPoly& input) {
    UPoly a = input;
    utrim(a);
    int n = udegree(a);
    if (n < 0) return std::nullopt;
    std::vector<FieldElement> out;
    if (n == 0) return out;
    Field f = a.front().field();
    std::uint64_t p = f.characteristic();
    if (n == 1) {
        out.push_back(-a[0] / a[1]);
        return out;
    }
    std::size_t low = 0;
    while (a[low].is_zero()) ++low;
    if (low > 0) {
        out.push_back(f.zero());
        UPoly rest(a.begin() + static_cast<std::ptrdiff_t>(low), a.end());
        auto more = roots_in_field(rest);
        if (!more) return std::nullopt;
        for (auto& r : *more)
            if (!r.is_zero()) out.push_back(r);
        std::sort(out.begin(), out.end());
        return out;
    }
    if (p != 0) {
        std::uint64_t q = static_cast<std::uint64_t>(n);
        while (q % p == 0) q /= p;
        bool binomial_shape = q == 1;
        for (int i = 1; i < n && binomial_shape; ++i) binomial_shape = a[i].is_zero();
        if (binomial_shape) {
            if (auto r = qth_power_root(-a[0] / a[n], static_cast<std::uint64_t>(n))) out.push_back(*r);
            return out;
        }
    }
    if (f.has_parameters()) {
        Field base = base_of(f);
        UPoly b;
        for (const auto& c : a) {
            auto x = to_base(c, base);
            if (!x) return std::nullopt;
            b.push_back(*x);
        }
        auto roots = roots_in_field(b);
        if (!roots) return std::nullopt;
        for (const auto& r : *roots) out.push_back(lift_from_base(r, f));
        std::sort(out.begin(), out.end());
        return out;
    }
    if (p != 0) {
        if (p > (1u << 16)) return std::nullopt;
        for (std::uint64_t v = 0; v < p; ++v) {
            FieldElement x = f.from_int(static_cast<long>(v));
            if (evaluate(a, x).is_zero()) out.push_back(x);
        }
        return out;
    }
    auto roots = rational_roots(a);
    if (roots) std::sort(roots->begin(), roots->end());
    return roots;
}

std::optional<bool> is_irreducible(const UPoly& a) {
    int n = udegree(a);
    if (n < 1) return false;
    if (n == 1) return true;
    Field f = a.front().field();
    std::uint64_t p = f.characteristic();
    if (f.has_parameters()) {
        // k is algebraically closed in k(t), so base coefficients reduce to
        // the base field.
        Field base = base_of(f);
        UPoly b;
        for (const auto& c : a) {
            auto x = to_base(c, base);
            if (!x) {
                b.clear();
                break;
            }
            b.push_back(*x);
        }
        if (!b.empty()) return is_irreducible(b);
        if (p != 0) {
            std::uint64_t q = static_cast<std::uint64_t>(n);
            while (q % p == 0) q /= p;
            bool binomial_shape = q == 1;
            for (int i = 1; i < n && binomial_shape; ++i) binomial_shape = a[i].is_zero();
            if (binomial_shape) {
                // X^(p^s) - c is irreducible iff c is not a p-th power.
                FieldElement c = -a[0] / a[n];
                return !qth_power_root(c, p).has_value();
            }
        }
        return std::nullopt;
    }
    if (p != 0) return prime_field_irreducible(a);
    if (n <= 3) return rational_cubic_irreducible(a);
    return std::nullopt;
}

}  // namespace hsc
