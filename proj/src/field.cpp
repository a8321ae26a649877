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

#include "hsconst/field.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "hsconst/error.hpp"

namespace hsc {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t to_residue(const mpz_class& v, std::uint64_t p) {
    mpz_class m(static_cast<unsigned long>(p));
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r.get_ui();
}

struct Registry {
    std::mutex mu;
    std::vector<std::unique_ptr<FieldDescriptor>> items;

    const FieldDescriptor* intern(FieldDescriptor d) {
        std::lock_guard<std::mutex> lock(mu);
        for (const auto& it : items)
            if (*it == d) return it.get();
        items.push_back(std::make_unique<FieldDescriptor>(std::move(d)));
        return items.back().get();
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field::Field() : desc_(registry().intern(FieldDescriptor{})) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint64_t p) { return function_field(p, {}); }

Field Field::function_field(std::uint64_t p, std::vector<std::string> params) {
    FieldDescriptor d;
    d.characteristic = p;
    d.levels.assign(params.size(), 0);
    d.parameters = std::move(params);
    return make(std::move(d));
}

Field Field::make(FieldDescriptor d) {
    if (d.characteristic != 0 && !is_prime(d.characteristic))
        throw InputError("characteristic " + std::to_string(d.characteristic) + " is not prime");
    if (d.characteristic > (std::uint64_t{1} << 31)) throw InputError("characteristic too large");
    if (d.levels.size() != d.parameters.size()) throw InputError("perfection levels do not match parameters");
    std::set<std::string> seen;
    for (const auto& n : d.parameters) {
        if (n.empty()) throw InputError("empty parameter name");
        if (!seen.insert(n).second) throw InputError("duplicate parameter '" + n + "'");
    }
    if (d.characteristic == 0 && std::any_of(d.levels.begin(), d.levels.end(), [](auto l) { return l != 0; }))
        throw InputError("perfection levels require positive characteristic");
    return Field(registry().intern(std::move(d)));
}

std::vector<std::string> Field::parameter_names() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < desc_->parameters.size(); ++i)
        out.push_back(desc_->parameters[i] + std::string(desc_->levels[i], '\''));
    return out;
}

std::optional<std::size_t> Field::parameter_index(const std::string& name) const {
    auto names = parameter_names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

Field Field::with_parameters(const std::vector<std::string>& extra) const {
    FieldDescriptor d = *desc_;
    for (const auto& n : extra) {
        d.parameters.push_back(n);
        d.levels.push_back(0);
    }
    return make(std::move(d));
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long v) const { return from_mpz(mpz_class(v)); }

FieldElement Field::from_mpz(const mpz_class& v) const {
    if (is_prime_field()) return FieldElement(*this, to_residue(v, characteristic()));
    if (is_rationals()) return FieldElement(*this, mpq_class(v));
    std::size_t n = parameter_count();
    return FieldElement::normalize(*this, ParamPoly::constant(n, characteristic(), v),
                                   ParamPoly::constant(n, characteristic(), 1));
}

FieldElement Field::parameter(const std::string& name) const {
    auto idx = parameter_index(name);
    if (!idx) throw InputError("parameter '" + name + "' not in field " + to_string());
    return parameter(*idx);
}

FieldElement Field::parameter(std::size_t index) const {
    std::size_t n = parameter_count();
    if (index >= n) throw InputError("parameter index out of range");
    return FieldElement::normalize(*this, ParamPoly::variable(n, characteristic(), index),
                                   ParamPoly::constant(n, characteristic(), 1));
}

std::string Field::to_string() const {
    std::string base = characteristic() == 0 ? "Q" : "F" + std::to_string(characteristic());
    if (!has_parameters()) return base;
    std::string s = base + "(";
    auto names = parameter_names();
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
    return s + ")";
}

// --------------------------------------------------------- FieldElement

FieldElement FieldElement::normalize(Field f, ParamPoly num, ParamPoly den) {
    if (den.is_zero()) throw ArithmeticError("zero denominator");
    std::uint64_t p = f.characteristic();
    if (num.nvars() != f.parameter_count() || den.nvars() != f.parameter_count() || num.modulus() != p ||
        den.modulus() != p)
        throw InputError("parameter polynomial does not belong to field " + f.to_string());
    if (!f.has_parameters()) {
        if (p) {
            std::uint64_t n = to_residue(num.constant_value(), p);
            std::uint64_t d = to_residue(den.constant_value(), p);
            if (d == 0) throw ArithmeticError("zero denominator");
            return FieldElement(f, mulmod(n, powmod(d, p - 2, p), p));
        }
        mpq_class q(num.constant_value(), den.constant_value());
        q.canonicalize();
        return FieldElement(f, q);
    }
    if (num.is_zero()) {
        den = ParamPoly::constant(f.parameter_count(), p, 1);
    } else {
        ParamPoly g = ParamPoly::gcd(num, den);
        if (!g.is_one()) {
            num = ParamPoly::exact_div(num, g);
            den = ParamPoly::exact_div(den, g);
        }
        mpz_class lc = den.leading_coefficient();
        if (p) {
            if (lc != 1) {
                mpz_class inv;
                mpz_class m(static_cast<unsigned long>(p));
                mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t());
                num = num.scaled(inv);
                den = den.scaled(inv);
            }
        } else if (lc < 0) {
            num = -num;
            den = -den;
        }
    }
    auto rf = std::make_shared<const RationalFunction>(RationalFunction{std::move(num), std::move(den)});
    return FieldElement(f, std::move(rf));
}

FieldElement FieldElement::rational(Field f, const mpq_class& q) {
    if (f.characteristic() == 0 && !f.has_parameters()) {
        mpq_class c = q;
        c.canonicalize();
        return FieldElement(f, c);
    }
    return f.from_mpz(q.get_num()) / f.from_mpz(q.get_den());
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw ArithmeticError("mixed fields: " + field_.to_string() + " and " + o.field_.to_string());
}

bool FieldElement::is_zero() const {
    switch (repr_.index()) {
        case 0: return std::get<0>(repr_) == 0;
        case 1: return std::get<1>(repr_) == 0;
        default: return rf().num.is_zero();
    }
}

bool FieldElement::is_one() const {
    switch (repr_.index()) {
        case 0: return std::get<0>(repr_) == 1;
        case 1: return std::get<1>(repr_) == 1;
        default: return rf().num.is_one() && rf().den.is_one();
    }
}

FieldElement FieldElement::operator-() const {
    switch (repr_.index()) {
        case 0: {
            std::uint64_t p = field_.characteristic();
            std::uint64_t v = std::get<0>(repr_);
            return FieldElement(field_, v == 0 ? 0 : p - v);
        }
        case 1: return FieldElement(field_, mpq_class(-std::get<1>(repr_)));
        default: {
            auto r = std::make_shared<const RationalFunction>(RationalFunction{-rf().num, rf().den});
            return FieldElement(field_, std::move(r));
        }
    }
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same(o);
    switch (repr_.index()) {
        case 0: {
            std::uint64_t p = field_.characteristic();
            std::uint64_t s = std::get<0>(repr_) + std::get<0>(o.repr_);
            repr_ = s >= p ? s - p : s;
            return *this;
        }
        case 1: std::get<1>(repr_) += std::get<1>(o.repr_); return *this;
        default: {
            if (o.is_zero()) return *this;
            if (is_zero()) return *this = o;
            const auto& a = rf();
            const auto& b = o.rf();
            if (a.den == b.den) return *this = normalize(field_, a.num + b.num, a.den);
            return *this = normalize(field_, a.num * b.den + b.num * a.den, a.den * b.den);
        }
    }
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same(o);
    switch (repr_.index()) {
        case 0: repr_ = mulmod(std::get<0>(repr_), std::get<0>(o.repr_), field_.characteristic()); return *this;
        case 1: std::get<1>(repr_) *= std::get<1>(o.repr_); return *this;
        default: {
            if (is_zero() || o.is_one()) return *this;
            if (o.is_zero() || is_one()) return *this = o;
            const auto& a = rf();
            const auto& b = o.rf();
            return *this = normalize(field_, a.num * b.num, a.den * b.den);
        }
    }
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    switch (repr_.index()) {
        case 0: {
            std::uint64_t p = field_.characteristic();
            return FieldElement(field_, powmod(std::get<0>(repr_), p - 2, p));
        }
        case 1: return FieldElement(field_, mpq_class(1 / std::get<1>(repr_)));
        default: return normalize(field_, rf().den, rf().num);
    }
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) return false;
    switch (a.repr_.index()) {
        case 0: return std::get<0>(a.repr_) == std::get<0>(b.repr_);
        case 1: return std::get<1>(a.repr_) == std::get<1>(b.repr_);
        default: return a.rf().num == b.rf().num && a.rf().den == b.rf().den;
    }
}

bool operator<(const FieldElement& a, const FieldElement& b) {
    if (a.repr_.index() == 0 && b.repr_.index() == 0) return std::get<0>(a.repr_) < std::get<0>(b.repr_);
    if (a.repr_.index() == 1 && b.repr_.index() == 1) return std::get<1>(a.repr_) < std::get<1>(b.repr_);
    return a.to_string() < b.to_string();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement result = field_.one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

FieldElement FieldElement::frobenius() const {
    std::uint64_t p = field_.characteristic();
    if (p == 0) return *this;
    if (repr_.index() == 0) return *this;
    // Coefficients lie in F_p, so x^p only multiplies exponents by p.
    return normalize(field_, rf().num.inflate(p), rf().den.inflate(p));
}

ParamPoly FieldElement::numerator() const {
    std::size_t n = field_.parameter_count();
    std::uint64_t p = field_.characteristic();
    switch (repr_.index()) {
        case 0: return ParamPoly::constant(n, p, mpz_class(static_cast<unsigned long>(std::get<0>(repr_))));
        case 1: return ParamPoly::constant(n, p, std::get<1>(repr_).get_num());
        default: return rf().num;
    }
}

ParamPoly FieldElement::denominator() const {
    std::size_t n = field_.parameter_count();
    std::uint64_t p = field_.characteristic();
    switch (repr_.index()) {
        case 0: return ParamPoly::constant(n, p, 1);
        case 1: return ParamPoly::constant(n, p, std::get<1>(repr_).get_den());
        default: return rf().den;
    }
}

std::optional<mpq_class> FieldElement::as_rational() const {
    if (field_.characteristic() != 0) return std::nullopt;
    if (repr_.index() == 1) return std::get<1>(repr_);
    if (!rf().num.is_constant() || !rf().den.is_constant()) return std::nullopt;
    mpq_class q(rf().num.constant_value(), rf().den.constant_value());
    q.canonicalize();
    return q;
}

std::uint64_t FieldElement::as_prime_residue() const {
    if (repr_.index() != 0) throw InputError("element is not in a prime field");
    return std::get<0>(repr_);
}

std::string FieldElement::to_string() const {
    switch (repr_.index()) {
        case 0: return std::to_string(std::get<0>(repr_));
        case 1: return std::get<1>(repr_).get_str();
        default: {
            auto names = field_.parameter_names();
            std::string n = rf().num.to_string(names);
            if (rf().den.is_one()) return n;
            std::string d = rf().den.to_string(names);
            if (rf().num.terms().size() > 1) n = "(" + n + ")";
            if (rf().den.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
            return n + "/" + d;
        }
    }
}

// ------------------------------------------------------------ roots etc.

std::optional<FieldElement> qth_power_root(const FieldElement& x, std::uint64_t q) {
    Field f = x.field();
    std::uint64_t p = f.characteristic();
    if (q == 1) return x;
    if (p == 0) throw InputError("p-power roots need positive characteristic");
    std::uint64_t t = q;
    while (t % p == 0) t /= p;
    if (t != 1) throw InputError(std::to_string(q) + " is not a power of the characteristic");
    // Frobenius is the identity on F_p, so coefficients are their own roots.
    if (!f.has_parameters()) return x;
    ParamPoly num, den;
    if (!x.numerator().deflate(q, num) || !x.denominator().deflate(q, den)) return std::nullopt;
    return FieldElement::normalize(f, num, den);
}

ParameterRootExtension::ParameterRootExtension(Field base, std::uint32_t e) : base_(base), e_(e), pe_(1) {
    std::uint64_t p = base.characteristic();
    if (e > 0 && p == 0) throw InputError("parameter roots need positive characteristic");
    for (std::uint32_t i = 0; i < e; ++i) pe_ *= p;
    FieldDescriptor d = base.descriptor();
    for (auto& l : d.levels) l += e;
    extended_ = Field::make(std::move(d));
    std::size_t s = base.parameter_count();
    basis_.push_back(Exponent(s, 0));
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Exponent> next;
        for (const auto& b : basis_) {
            for (std::uint64_t j = 0; j < pe_; ++j) {
                Exponent c = b;
                c[i] = static_cast<std::uint32_t>(j);
                next.push_back(c);
            }
        }
        basis_ = std::move(next);
    }
}

FieldElement ParameterRootExtension::embed(const FieldElement& x) const {
    if (!(x.field() == base_)) throw ArithmeticError("element not in the base field");
    if (!base_.has_parameters()) {
        if (base_.characteristic() == 0) return FieldElement::rational(extended_, *x.as_rational());
        return extended_.from_int(static_cast<long>(x.as_prime_residue()));
    }
    return FieldElement::normalize(extended_, x.numerator().inflate(pe_), x.denominator().inflate(pe_));
}

std::vector<FieldElement> ParameterRootExtension::expand(const FieldElement& x) const {
    if (!(x.field() == extended_)) throw ArithmeticError("element not in the extended field");
    if (!base_.has_parameters()) {
        if (base_.characteristic() == 0) return {FieldElement::rational(base_, *x.as_rational())};
        return {base_.from_int(static_cast<long>(x.as_prime_residue()))};
    }
    // D^(p^e) has every exponent divisible by p^e, hence lies in k.
    const ParamPoly& den = x.denominator();
    ParamPoly norm = den.inflate(pe_);
    ParamPoly m = x.numerator() * den.pow(pe_ - 1);
    ParamPoly base_den;
    norm.deflate(pe_, base_den);
    std::vector<FieldElement> out;
    std::size_t s = base_.parameter_count();
    for (const auto& j : basis_) {
        ParamPoly part(s, base_.characteristic());
        for (const auto& [e, c] : m.terms()) {
            bool match = true;
            for (std::size_t i = 0; i < s; ++i) match = match && e[i] % pe_ == j[i];
            if (!match) continue;
            Exponent f(s);
            for (std::size_t i = 0; i < s; ++i) f[i] = static_cast<std::uint32_t>((e[i] - j[i]) / pe_);
            part.add_term(f, c);
        }
        out.push_back(FieldElement::normalize(base_, part, base_den));
    }
    return out;
}

FieldElement ParameterRootExtension::assemble(const std::vector<FieldElement>& coords) const {
    if (coords.size() != basis_.size()) throw InputError("coordinate count mismatch");
    FieldElement sum = extended_.zero();
    std::size_t s = base_.parameter_count();
    for (std::size_t k = 0; k < coords.size(); ++k) {
        FieldElement mono = extended_.one();
        for (std::size_t i = 0; i < s; ++i) mono *= extended_.parameter(i).pow(basis_[k][i]);
        sum += embed(coords[k]) * mono;
    }
    return sum;
}

FieldElement binomial(Field f, std::uint64_t n, std::uint64_t k) {
    if (k > n) return f.zero();
    std::uint64_t p = f.characteristic();
    if (p == 0) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        return f.from_mpz(b);
    }
    std::uint64_t r = 1;
    while (n || k) {
        std::uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return f.zero();
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), nd, kd);
        r = mulmod(r, to_residue(b, p), p);
        n /= p;
        k /= p;
    }
    return f.from_int(static_cast<long>(r));
}

FieldElement extend_parameters(const FieldElement& x, Field target) {
    Field source = x.field();
    if (source == target) return x;
    auto src = source.parameter_names(), dst = target.parameter_names();
    if (source.characteristic() != target.characteristic() || src.size() > dst.size() ||
        !std::equal(src.begin(), src.end(), dst.begin()))
        throw InputError("cannot embed " + source.to_string() + " into " + target.to_string());
    std::size_t s = dst.size();
    std::uint64_t p = target.characteristic();
    auto widen = [&](const ParamPoly& a) {
        ParamPoly out(s, p);
        for (const auto& [e, c] : a.terms()) {
            Exponent f(s, 0);
            std::copy(e.begin(), e.end(), f.begin());
            out.add_term(f, c);
        }
        return out;
    };
    if (s == 0) return x;
    return FieldElement::normalize(target, widen(x.numerator()), widen(x.denominator()));
}

}  // namespace hsc
