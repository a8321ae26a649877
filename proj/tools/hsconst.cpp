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

// hsconst <command> <ideal-file> [options]
//
// Reads an ideal file ("-" for standard input), runs one command and writes
// the report to standard output. Exit status: 0 success, 1 error,
// 2 inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hsconst/commands.hpp"
#include "hsconst/error.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hsc::InputError("cannot open '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert-Samuel constancy toolkit"};
    app.set_version_flag("--version", std::string("hsconst ") + hsc::library_version());

    std::string command, path;
    hsc::CommandOptions opts;
    std::uint32_t D = 0, nmax = 0, ext = 0, box = 0;
    std::size_t steps = 0;
    std::string chart;
    bool json_flag = false;

    app.add_option("command", command, "hs, nu-star, directrix, ridge, stratum-ideal, polyhedron, prepare, blowup, "
                                       "criterion, normal-flat, scan or report")
        ->required();
    app.add_option("file", path, "ideal file, or - for standard input")->required();
    auto* d_opt = app.add_option("--D", D, "truncation degree");
    auto* nmax_opt = app.add_option("--nmax", nmax, "largest exponent tried in radical tests");
    auto* steps_opt = app.add_option("--steps", steps, "dissolution budget for preparation");
    auto* ext_opt = app.add_option("--ext", ext, "largest extension degree of scanned points");
    auto* box_opt = app.add_option("--box", box, "bound on coordinate encodings in scans (0: all)");
    auto* chart_opt = app.add_option("--chart", chart, "blow-up chart: u or y<j>");
    auto* json_opt = app.add_flag("--json", json_flag, "JSON output (default)");
    auto* text_opt = app.add_flag("--text", opts.text, "indented text output");
    json_opt->excludes(text_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    if (*d_opt) opts.D = D;
    if (*nmax_opt) opts.nmax = nmax;
    if (*steps_opt) opts.steps = steps;
    if (*ext_opt) opts.ext = ext;
    if (*box_opt) opts.box = box;
    if (*chart_opt) opts.chart = chart;

    try {
        hsc::Session session = hsc::parse_ideal_file(read_input(path));
        hsc::CommandResult result = hsc::run_command(session, command, opts);
        std::cout << result.output;
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
