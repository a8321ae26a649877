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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsconst/commands.hpp"
#include "hsconst/cone.hpp"
#include "hsconst/criterion.hpp"
#include "hsconst/error.hpp"
#include "hsconst/graded.hpp"
#include "hsconst/session.hpp"

namespace py = pybind11;
using namespace hsc;

namespace {

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

std::optional<bool> as_optional(Verdict v) {
    if (v == Verdict::Inconclusive) return std::nullopt;
    return v == Verdict::True;
}

std::vector<std::string> split_part(const Session& s, bool u) {
    if (!s.split) return {};
    return u ? s.split->u : s.split->y;
}

}  // namespace

PYBIND11_MODULE(_hsconst, m) {
    m.doc() = "Hilbert-Samuel constancy on cones and characteristic polyhedra.";
    m.attr("__version__") = library_version();
    m.attr("REPORT_SCHEMA") = report_schema;

    py::register_exception<SessionError>(m, "SessionError", PyExc_ValueError);

    py::class_<Session>(m, "Session")
        .def_property_readonly("field", [](const Session& s) { return field_declaration(s.field); })
        .def_property_readonly("vars", [](const Session& s) { return s.vars; })
        .def_property_readonly("has_split", [](const Session& s) { return s.split.has_value(); })
        .def_property_readonly("u", [](const Session& s) { return split_part(s, true); })
        .def_property_readonly("y", [](const Session& s) { return split_part(s, false); })
        .def_property_readonly("gens", [](const Session& s) { return strings(s.gens); })
        .def("__eq__", [](const Session& a, const Session& b) { return a == b; })
        .def("__str__", &print_session)
        .def("__repr__", [](const Session& s) { return "<hsconst.Session over " + s.field.to_string() + ">"; });

    m.def("parse", &parse_ideal_file, py::arg("text"), "Parses the text of an .ideal file.");

    m.def("command_names", &command_names);

    m.def(
        "run_command",
        [](const Session& s, const std::string& command, std::optional<std::uint32_t> D,
           std::optional<std::uint32_t> nmax, std::optional<std::size_t> steps, std::optional<std::uint32_t> ext,
           std::optional<std::uint32_t> box, std::optional<std::string> chart, bool text) {
            CommandOptions o{D, nmax, steps, ext, box, chart, text};
            CommandResult r;
            {
                py::gil_scoped_release release;
                r = run_command(s, command, o);
            }
            return py::make_tuple(r.output, r.exit_code);
        },
        py::arg("session"), py::arg("command"), py::kw_only(), py::arg("D") = py::none(),
        py::arg("nmax") = py::none(), py::arg("steps") = py::none(), py::arg("ext") = py::none(),
        py::arg("box") = py::none(), py::arg("chart") = py::none(), py::arg("text") = false,
        "Runs one CLI command and returns (report text, exit code).");

    m.def(
        "hs_at_origin", [](const Session& s, std::uint32_t D) { return hs_at_origin(s.gens, D).values; },
        py::arg("session"), py::arg("D"));
    m.def(
        "hs_cone_origin", [](const Session& s, std::uint32_t D) { return hs_cone_origin(s.gens, D).values; },
        py::arg("session"), py::arg("D"));
    m.def(
        "hs_generic_point",
        [](const Session& s, const std::vector<std::string>& stratum, std::uint32_t D) {
            return hs_generic_point(s.gens, stratum, D).values;
        },
        py::arg("session"), py::arg("stratum"), py::arg("D"));
    m.def(
        "directrix", [](const Session& s) { return strings(directrix(s.gens).forms); }, py::arg("session"));
    m.def(
        "ridge", [](const Session& s) { return strings(ridge(s.gens).sigmas); }, py::arg("session"));
    m.def(
        "cone_constancy_criterion",
        [](const Session& s) {
            CriterionReport r = cone_constancy_criterion(s.gens);
            py::dict d;
            d["predicted_constant"] = as_optional(r.predicted);
            d["summary"] = r.summary;
            d["notes"] = r.notes;
            return d;
        },
        py::arg("session"));
    m.def(
        "stratum_scan",
        [](const Session& s, std::uint32_t ext, std::uint32_t box, std::uint32_t D) {
            StratumScan r;
            {
                py::gil_scoped_release release;
                r = stratum_scan(s.gens, ext, box, D);
            }
            py::dict d;
            d["constant"] = r.constant;
            d["origin"] = r.origin.values;
            d["stratum"] = r.stratum;
            d["points"] = r.points.size();
            return d;
        },
        py::arg("session"), py::arg("ext") = default_scan_extension, py::arg("box") = 0,
        py::arg("D") = default_scan_truncation);
}
