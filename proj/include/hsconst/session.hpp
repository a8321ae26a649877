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

#ifndef HSCONST_SESSION_HPP
#define HSCONST_SESSION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsconst/polynomial.hpp"

namespace hsc {

struct Split {
    std::vector<std::string> u;
    std::vector<std::string> y;
    bool operator==(const Split&) const = default;
};

/// An ideal file: a field, variables, an optional (u, y) split and nonzero
/// generators.
///
///     # comment
///     field Q | field Fp <p> | field Frac <Q|p> ; <params>
///     vars <names>
///     split u: <names> ; y: <names>
///     gen <expr>
struct Session {
    Field field;
    std::vector<std::string> vars;
    std::optional<Split> split;
    RingPtr ring;
    std::vector<Polynomial> gens;

    friend bool operator==(const Session& a, const Session& b);
};

/// Throws SessionError with the offending line and column.
Session parse_ideal_file(std::string_view text);

/// Canonical text of a session; parse_ideal_file reads it back unchanged.
std::string print_session(const Session& s);

/// The field line without the keyword, e.g. "Frac 2 ; t".
std::string field_declaration(Field f);

}  // namespace hsc

#endif  // HSCONST_SESSION_HPP
