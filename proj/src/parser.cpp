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

#include "hsconst/parser.hpp"

#include <cctype>

#include "hsconst/error.hpp"

namespace hsc {

namespace {

// Recursive descent:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty expression");
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) fail(unexpected());
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

    std::string unexpected() const {
        if (pos_ >= text_.size()) return "unexpected end of input";
        return std::string("unexpected character '") + text_[pos_] + "'";
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Polynomial d = unary();
                if (!d.is_constant()) throw ParseError(at + 1, "division by an expression in the variables");
                if (d.is_zero()) throw ParseError(at + 1, "division by zero");
                acc = acc.scaled(d.coefficient(Monomial(ring_->size(), 0)).inverse());
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (!accept('^')) return base;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("exponent must be a nonnegative integer literal");
        mpz_class e = integer();
        if (!e.fits_ulong_p() || e > 1000000) fail("exponent too large");
        return base.pow(e.get_ui());
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(ring_, ring_->field().from_mpz(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (auto i = ring_->index_of(name)) return Polynomial::variable(ring_, *i);
            if (ring_->field().parameter_index(name))
                return Polynomial::constant(ring_, ring_->field().parameter(name));
            throw ParseError(start + 1, "unknown identifier '" + name + "'");
        }
        fail(unexpected());
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

std::vector<Polynomial> parse_polynomials(const std::vector<std::string>& texts, const RingPtr& ring) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
    return out;
}

}  // namespace hsc
