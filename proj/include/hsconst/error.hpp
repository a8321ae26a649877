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

#ifndef HSCONST_ERROR_HPP
#define HSCONST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hsc {

/// Invalid input to a library operation (bad arguments, unsupported field).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed polynomial text; column is 1-based.
class ParseError : public InputError {
public:
    ParseError(std::size_t column, const std::string& what)
        : InputError("column " + std::to_string(column) + ": " + what), column_(column), detail_(what) {}
    std::size_t column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t column_;
    std::string detail_;
};

/// Malformed ideal file; line and column are 1-based.
class SessionError : public InputError {
public:
    SessionError(std::size_t line, std::size_t column, const std::string& what)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column),
          detail_(what) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

/// Division by zero, inexact division, mixed fields.
class ArithmeticError : public std::domain_error {
public:
    explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

/// A certificate that should always hold failed. Signals a bug or a bound
/// that needs raising.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hsc

#endif  // HSCONST_ERROR_HPP
