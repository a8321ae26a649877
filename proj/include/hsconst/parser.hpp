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

#ifndef HSCONST_PARSER_HPP
#define HSCONST_PARSER_HPP

#include <string_view>

#include "hsconst/polynomial.hpp"

namespace hsc {

/// Parses `+ - * / ^`, parentheses, integer literals, ring variables and
/// field parameters. Multiplication is always explicit. Division is only
/// allowed by expressions free of ring variables. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Shorthand for tests and bindings: parse each string in the same ring.
std::vector<Polynomial> parse_polynomials(const std::vector<std::string>& texts, const RingPtr& ring);

}  // namespace hsc

#endif  // HSCONST_PARSER_HPP
