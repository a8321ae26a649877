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

#ifndef HSCONST_POLYNOMIAL_HPP
#define HSCONST_POLYNOMIAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsconst/field.hpp"

namespace hsc {

using Monomial = Exponent;

std::uint32_t total_degree(const Monomial& m);

/// Graded lexicographic order, x1 > x2 > ... within one degree.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Coefficient field plus ordered variable names.
class Ring {
public:
    Ring(Field field, std::vector<std::string> vars);

    Field field() const { return field_; }
    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require_index(const std::string& name) const;

    friend bool operator==(const Ring& a, const Ring& b) { return a.field_ == b.field_ && a.vars_ == b.vars_; }

private:
    Field field_;
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> vars);

/// Sparse multivariate polynomial; zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Monomial, FieldElement, GrlexLess>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const FieldElement& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial monomial(RingPtr ring, Monomial m, const FieldElement& c);

    const RingPtr& ring() const { return ring_; }
    Field field() const { return ring_->field(); }
    const Terms& terms() const { return terms_; }
    std::size_t nvars() const { return ring_->size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; 0 for the zero polynomial.
    std::uint32_t degree() const;
    /// Lowest total degree of a term; nullopt for zero (order infinity).
    std::optional<std::uint32_t> order() const;
    bool is_homogeneous() const;
    std::uint32_t degree_in(std::size_t var) const;
    Polynomial homogeneous_part(std::uint32_t d) const;
    FieldElement coefficient(const Monomial& m) const;
    /// Leading term in graded lex order.
    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }

    void add_term(const Monomial& m, const FieldElement& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const FieldElement& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial pow(std::uint64_t e) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Canonical text: terms in descending graded lex order.
    std::string to_string() const;

private:
    void check_ring(const Polynomial& o) const;

    RingPtr ring_;
    Terms terms_;
};

struct OrderAndInitial {
    std::optional<std::uint32_t> order;  // nullopt means infinity
    Polynomial initial;
};

/// Order at the origin and the sum of the minimal-degree terms.
OrderAndInitial order_and_initial_form(const Polynomial& f);

/// Coefficient of T^A in f(X+T): X^B -> binom(B,A) X^(B-A).
Polynomial hasse_derivative(const Polynomial& f, const Monomial& a);

/// f(X+T) expanded, with one translation variable per chosen variable,
/// appended to the ring in the order of `vars` under `names`.
Polynomial taylor_translate(const Polynomial& f, const std::vector<std::size_t>& vars,
                            const std::vector<std::string>& names);

/// f(images[0], ..., images[n-1]); all images share one target ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// The same polynomial over another ring with identical variable count,
/// with coefficients mapped by `fn`.
template <class Fn>
Polynomial map_coefficients(const Polynomial& f, RingPtr target, Fn fn) {
    Polynomial out(std::move(target));
    for (const auto& [m, c] : f.terms()) out.add_term(m, fn(c));
    return out;
}

/// Moves f into a ring containing all of f's variables (by name).
Polynomial rename_into(const Polynomial& f, const RingPtr& target);

/// All monomials of total degree d in n variables, descending graded lex.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d);

}  // namespace hsc

#endif  // HSCONST_POLYNOMIAL_HPP
