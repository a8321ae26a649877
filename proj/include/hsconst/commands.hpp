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

#ifndef HSCONST_COMMANDS_HPP
#define HSCONST_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hsconst/session.hpp"

namespace hsc {

constexpr int report_schema = 1;
const char* library_version();

struct CommandOptions {
    std::optional<std::uint32_t> D;
    std::optional<std::uint32_t> nmax;
    std::optional<std::size_t> steps;
    std::optional<std::uint32_t> ext;
    std::optional<std::uint32_t> box;
    std::optional<std::string> chart;
    bool text = false;
};

struct CommandResult {
    std::string output;
    /// 0 on success, 2 when the answer is inconclusive.
    int exit_code = 0;
};

const std::vector<std::string>& command_names();

/// Runs one command and renders the report as JSON (or indented text).
/// Throws InputError for unknown commands and out-of-range options.
CommandResult run_command(const Session& session, const std::string& command, const CommandOptions& options);

}  // namespace hsc

#endif  // HSCONST_COMMANDS_HPP
