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

#ifndef HSCONST_PARAM_POLY_HPP
#define HSCONST_PARAM_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hsc {

using Exponent = std::vector<std::uint32_t>;

/// Sparse polynomial in the field parameters with coefficients in Z
/// (modulus 0) or F_p (modulus p). Terms are kept in ascending lex order of
/// exponent vectors, so the leading term is the last one.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(std::size_t nvars, std::uint64_t modulus) : nvars_(nvars), modulus_(modulus) {}

    static ParamPoly constant(std::size_t nvars, std::uint64_t modulus, const mpz_class& c);
    static ParamPoly variable(std::size_t nvars, std::uint64_t modulus, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    std::uint64_t modulus() const { return modulus_; }
    const std::map<Exponent, mpz_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Constant coefficient value; only meaningful when is_constant().
    mpz_class constant_value() const;

    const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
    const mpz_class& leading_coefficient() const { return terms_.rbegin()->second; }
    std::uint32_t degree_in(std::size_t var) const;
    /// Highest parameter index that occurs, or -1 for constants.
    int top_variable() const;

    void add_term(const Exponent& e, const mpz_class& c);

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly scaled(const mpz_class& c) const;
    ParamPoly pow(std::uint64_t e) const;
    ParamPoly shifted(const Exponent& e) const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Exact quotient a / b; throws ArithmeticError when b does not divide a.
    static ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b);
    /// Normalized gcd: monic (F_p) or primitive with positive leading
    /// coefficient (Z).
    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

    /// Multiplies every exponent by k.
    ParamPoly inflate(std::uint64_t k) const;
    /// Divides every exponent by k; returns false when some exponent is not
    /// divisible.
    bool deflate(std::uint64_t k, ParamPoly& out) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    mpz_class reduce(const mpz_class& c) const;

    std::size_t nvars_ = 0;
    std::uint64_t modulus_ = 0;
    std::map<Exponent, mpz_class> terms_;
};

}  // namespace hsc

#endif  // HSCONST_PARAM_POLY_HPP
