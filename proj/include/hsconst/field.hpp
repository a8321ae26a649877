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

#ifndef HSCONST_FIELD_HPP
#define HSCONST_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hsconst/param_poly.hpp"

namespace hsc {

/// Characteristic, parameter names and perfection levels of a coefficient
/// field. Descriptors are interned: two equal descriptors share one address,
/// so fields compare by pointer.
struct FieldDescriptor {
    std::uint64_t characteristic = 0;
    /// Base names of the parameters, in order.
    std::vector<std::string> parameters;
    /// Perfection level per parameter: parameter i stands for
    /// parameters[i]^(1/p^levels[i]).
    std::vector<std::uint32_t> levels;

    bool operator==(const FieldDescriptor&) const = default;
};

class FieldElement;

/// Handle to an interned field descriptor. Cheap to copy.
class Field {
public:
    Field();  // the rationals

    static Field rationals();
    static Field prime(std::uint64_t p);
    /// Fraction field of Q[params] (p == 0) or F_p[params].
    static Field function_field(std::uint64_t p, std::vector<std::string> params);
    static Field make(FieldDescriptor d);

    const FieldDescriptor& descriptor() const { return *desc_; }
    std::uint64_t characteristic() const { return desc_->characteristic; }
    std::size_t parameter_count() const { return desc_->parameters.size(); }
    bool has_parameters() const { return !desc_->parameters.empty(); }
    bool is_prime_field() const { return desc_->characteristic != 0 && !has_parameters(); }
    bool is_rationals() const { return desc_->characteristic == 0 && !has_parameters(); }
    /// Perfect fields handled here: Q and F_p.
    bool is_perfect() const { return !has_parameters() || desc_->characteristic == 0; }
    /// Display names of the parameters (level-tagged for adjoined roots).
    std::vector<std::string> parameter_names() const;
    std::optional<std::size_t> parameter_index(const std::string& name) const;

    /// The same field with further parameters appended (fraction field of
    /// this field's polynomial ring in the new names).
    Field with_parameters(const std::vector<std::string>& extra) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long v) const;
    FieldElement from_mpz(const mpz_class& v) const;
    /// Parameter by display name; throws InputError when unknown.
    FieldElement parameter(const std::string& name) const;
    FieldElement parameter(std::size_t index) const;

    std::string to_string() const;

    friend bool operator==(Field a, Field b) { return a.desc_ == b.desc_; }
    const FieldDescriptor* id() const { return desc_; }

private:
    explicit Field(const FieldDescriptor* d) : desc_(d) {}
    const FieldDescriptor* desc_;
};

/// Reduced fraction num/den of parameter polynomials.
struct RationalFunction {
    ParamPoly num;
    ParamPoly den;
};

/// Exact scalar in Q, F_p, or a rational function field over one of them.
/// Always held in canonical form, so equality is structural.
class FieldElement {
public:
    FieldElement() : FieldElement(Field::rationals().zero()) {}

    Field field() const { return field_; }

    /// Canonical element num/den; throws ArithmeticError on zero denominator.
    static FieldElement normalize(Field f, ParamPoly num, ParamPoly den);
    static FieldElement rational(Field f, const mpq_class& q);

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    /// x -> x^p; identity in characteristic 0.
    FieldElement frobenius() const;

    /// Numerator and denominator as parameter polynomials.
    ParamPoly numerator() const;
    ParamPoly denominator() const;

    /// Value when the element lies in Q; nullopt otherwise.
    std::optional<mpq_class> as_rational() const;
    /// Residue when the field is F_p.
    std::uint64_t as_prime_residue() const;

    std::string to_string() const;
    /// Total order on canonical forms, for deterministic sorting.
    friend bool operator<(const FieldElement& a, const FieldElement& b);

private:
    using Repr = std::variant<std::uint64_t, mpq_class, std::shared_ptr<const RationalFunction>>;
    FieldElement(Field f, Repr r) : field_(f), repr_(std::move(r)) {}
    void check_same(const FieldElement& o) const;
    const RationalFunction& rf() const { return *std::get<2>(repr_); }

    Field field_;
    Repr repr_;

    friend class Field;
};

/// r with r^q == x when such r exists in the field; q must be a power of the
/// characteristic. Throws InputError in characteristic 0 unless q == 1.
std::optional<FieldElement> qth_power_root(const FieldElement& x, std::uint64_t q);

/// Truncated perfection tower k' = k(t^(1/p^e)) over a function field k.
class ParameterRootExtension {
public:
    ParameterRootExtension(Field base, std::uint32_t e);

    Field base() const { return base_; }
    Field extended() const { return extended_; }
    std::uint32_t level() const { return e_; }
    std::uint64_t degree_per_parameter() const { return pe_; }

    /// Embeds k into k' (t -> t'^(p^e)).
    FieldElement embed(const FieldElement& x) const;
    /// Coordinates of a k'-element over the monomial basis
    /// {prod t'^j_i : 0 <= j_i < p^e}, listed in the order of basis_exponents().
    std::vector<FieldElement> expand(const FieldElement& x) const;
    /// Inverse of expand.
    FieldElement assemble(const std::vector<FieldElement>& coords) const;
    const std::vector<Exponent>& basis_exponents() const { return basis_; }

private:
    Field base_;
    Field extended_;
    std::uint32_t e_;
    std::uint64_t pe_;
    std::vector<Exponent> basis_;
};

/// Embeds x into a field with the same characteristic whose parameter list
/// extends that of x's field.
FieldElement extend_parameters(const FieldElement& x, Field target);

/// Binomial coefficient reduced into the field (Lucas' theorem in
/// characteristic p).
FieldElement binomial(Field f, std::uint64_t n, std::uint64_t k);

}  // namespace hsc

#endif  // HSCONST_FIELD_HPP
