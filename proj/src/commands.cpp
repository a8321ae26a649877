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

#include "hsconst/commands.hpp"

#include <algorithm>

#include <json.hpp>

#include "hsconst/cone.hpp"
#include "hsconst/criterion.hpp"
#include "hsconst/error.hpp"
#include "hsconst/graded.hpp"
#include "hsconst/polyhedron.hpp"

namespace hsc {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint32_t max_truncation = 60;
constexpr std::uint32_t max_nmax = 512;
constexpr std::size_t max_steps_option = 100000;
constexpr std::uint32_t max_extension_option = 6;
constexpr std::uint32_t max_box = 65536;

std::string rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string point(const QPoint& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + rational(p[i]);
    return out;
}

json optional_rational(const std::optional<mpq_class>& q) { return q ? json(rational(*q)) : json(nullptr); }

// Descending lexicographic order, so the vertex on the first axis leads.
json points(std::vector<QPoint> ps) {
    std::sort(ps.begin(), ps.end(), [](const QPoint& a, const QPoint& b) { return b < a; });
    json a = json::array();
    for (const auto& p : ps) a.push_back(point(p));
    return a;
}

json polys(const std::vector<Polynomial>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

json sorted_polys(const std::vector<Polynomial>& ps) {
    std::vector<std::string> s;
    for (const auto& p : ps) s.push_back(p.to_string());
    std::sort(s.begin(), s.end());
    return s;
}

json values(const HSFunction& h) { return h.values; }

json verdict_value(Verdict v) { return v == Verdict::Inconclusive ? json(nullptr) : json(v == Verdict::True); }

template <class T>
T check_range(const std::optional<T>& v, T fallback, T lo, T hi, const std::string& flag) {
    if (!v) return fallback;
    T x = *v;
    if (x < lo || x > hi)
        throw InputError("option --" + flag + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return x;
}

std::uint32_t max_degree(const std::vector<Polynomial>& gens) {
    std::uint32_t d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
}

bool all_homogeneous(const std::vector<Polynomial>& gens) {
    return std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

// The unique smallest set of variables whose ideal contains every
// generator, when there is exactly one.
std::optional<std::vector<std::string>> coordinate_reduction(const Session& s) {
    std::size_t n = s.vars.size();
    if (n > 16) return std::nullopt;
    std::vector<std::uint32_t> supports;
    for (const auto& g : s.gens)
        for (const auto& [m, c] : g.terms()) {
            std::uint32_t mask = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (m[i]) mask |= 1u << i;
            supports.push_back(mask);
        }
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<std::uint32_t> hits;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
            if (std::all_of(supports.begin(), supports.end(), [&](std::uint32_t t) { return (t & mask) != 0; }))
                hits.push_back(mask);
        }
        if (hits.empty()) continue;
        if (hits.size() > 1) return std::nullopt;
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i)
            if (hits[0] & (1u << i)) out.push_back(s.vars[i]);
        return out;
    }
    return std::nullopt;
}

const Split& require_split(const Session& s, const std::string& command) {
    if (!s.split) throw InputError(command + " needs a 'split u: ... ; y: ...' declaration");
    return *s.split;
}

json prepared_json(const PreparedSystem& sys) {
    json log = json::array();
    for (const auto& step : sys.log) {
        json lam = json::array();
        for (const auto& c : step.lambda) lam.push_back(c.to_string());
        log.push_back({{"vertex", point(step.vertex)}, {"lambda", lam}, {"substitutions", step.substitutions}});
    }
    DeltaFace df = delta_and_first_face(sys.polyhedron);
    return {{"prepared", sys.prepared},
            {"steps", sys.steps},
            {"generators", polys(sys.generators)},
            {"vertices", points(sys.polyhedron.vertices())},
            {"delta", optional_rational(df.delta)},
            {"first_face", points(df.first_face)},
            {"empty", sys.polyhedron.empty()},
            {"log", log},
            {"normalizations", sys.normalizations},
            {"normalization", "reduced"}};
}

json scan_json(const StratumScan& s) {
    json pts = json::array();
    for (const auto& p : s.points) {
        json e = {{"label", p.label}, {"extension", p.extension}, {"hs", values(p.hs)}, {"in_stratum", p.in_stratum}};
        if (s.ridge_coincides) {
            e["on_ridge_cone"] = p.on_ridge_cone;
            e["in_derivative_zero_set"] = p.in_derivative_zero_set;
        }
        pts.push_back(std::move(e));
    }
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    return {{"origin", values(s.origin)},
            {"max_extension", s.max_extension},
            {"box", s.box},
            {"points", pts},
            {"stratum", s.stratum},
            {"constant", s.constant},
            {"ridge_coincides", opt(s.ridge_coincides)},
            {"derivative_matches", opt(s.derivative_matches)}};
}

json normal_flatness_json(const NormalFlatness& nf) {
    return {{"flat", nf.flat},
            {"origin", values(nf.origin)},
            {"generic", values(nf.generic)},
            {"origin_iterated", values(nf.origin_iterated)},
            {"generic_iterated", values(nf.generic_iterated)},
            {"first_difference", nf.first_difference ? json(*nf.first_difference) : json(nullptr)}};
}

json radical_json(const RadicalCertificate& c) {
    json exps = json::array();
    for (const auto& e : c.exponents) exps.push_back(e ? json(*e) : json(nullptr));
    return {{"verdict", to_string(c.verdict)},
            {"explanation", c.explanation},
            {"outside", polys(c.outside)},
            {"exponents", exps},
            {"counterexample", c.counterexample ? json(*c.counterexample) : json(nullptr)},
            {"nmax", c.nmax}};
}

json criterion_json(const CriterionReport& r) {
    std::string witness;
    if (r.ridge_verdict == Verdict::False)
        witness = r.ridge_witness;
    else if (r.radical.verdict != Verdict::True)
        witness = r.radical.explanation;
    else if (r.normal_flatness && !r.normal_flatness->flat)
        witness = "HS differ at n = " + std::to_string(*r.normal_flatness->first_difference);
    json out = {{"summary", r.summary},
                {"predicted", to_string(r.predicted)},
                {"predicted_constant", verdict_value(r.predicted)},
                {"witness", witness},
                {"homogeneous", r.homogeneous}};
    if (r.directrix) {
        out["directrix"] = polys(r.directrix->forms);
        out["ridge"] = polys(r.ridge->sigmas);
        out["translation_stable"] = r.translation_stable;
        out["i_red_equals_j"] = radical_json(r.radical);
        out["ridge_red_equals_j"] = {{"verdict", to_string(r.ridge_verdict)},
                                     {"witness", r.ridge_witness},
                                     {"reduced_forms", polys(r.ridge_reduced)}};
    } else {
        out["reduction_is_declared_subspace"] = radical_json(r.radical);
    }
    out["reduction"] = r.reduction;
    out["normal_flatness"] = r.normal_flatness ? normal_flatness_json(*r.normal_flatness) : json(nullptr);
    if (r.polyhedron) {
        json p = prepared_json(r.polyhedron->system);
        p["u"] = r.polyhedron->u;
        p["y"] = r.polyhedron->y;
        p["empty_after_preparation"] = r.polyhedron->empty;
        out["polyhedron"] = p;
    } else {
        out["polyhedron"] = nullptr;
    }
    out["scan"] = r.scan ? scan_json(*r.scan) : json(nullptr);
    out["notes"] = r.notes;
    out["disagreements"] = r.disagreements;
    return out;
}

void render_text(const json& j, const std::string& indent, std::string& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        std::string key = j.is_object() ? it.key() : "-";
        bool nested = (v.is_object() && !v.empty()) ||
                      (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); }));
        if (nested) {
            out += indent + key + ":\n";
            render_text(v, indent + "  ", out);
            continue;
        }
        std::string text;
        if (v.is_string())
            text = v.get<std::string>();
        else if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i)
                text += (i ? ", " : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            text = "[" + text + "]";
        } else
            text = v.dump();
        out += indent + key + ": " + text + "\n";
    }
}

}  // namespace

const char* library_version() { return HSCONST_VERSION; }

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"hs",     "nu-star", "directrix", "ridge",    "stratum-ideal",
                                                   "polyhedron", "prepare", "blowup",    "criterion", "normal-flat",
                                                   "scan",   "report"};
    return names;
}

CommandResult run_command(const Session& s, const std::string& command, const CommandOptions& o) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end())
        throw InputError("unknown command '" + command + "'");
    const auto& gens = s.gens;
    if (gens.empty()) throw InputError("empty generator list");

    bool scan_like = command == "scan" || command == "report";
    std::uint32_t D = check_range<std::uint32_t>(o.D, scan_like ? default_scan_truncation : default_truncation(gens), 1,
                                                 max_truncation, "D");
    std::uint32_t nmax = check_range<std::uint32_t>(o.nmax, default_nmax(gens), 1, max_nmax, "nmax");
    std::size_t steps = check_range<std::size_t>(o.steps, default_prepare_steps, 0, max_steps_option, "steps");
    std::uint32_t ext = check_range<std::uint32_t>(o.ext, default_scan_extension, 1, max_extension_option, "ext");
    std::uint32_t box = check_range<std::uint32_t>(o.box, 0, 0, max_box, "box");
    std::string chart = o.chart.value_or("u");
    if (chart != "u" && chart != "u1") {
        bool ok = chart.size() > 1 && chart[0] == 'y' &&
                  std::all_of(chart.begin() + 1, chart.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
                  chart.size() < 6;
        if (ok) {
            std::size_t j = std::stoul(chart.substr(1));
            ok = s.split && j >= 1 && j <= s.split->y.size();
        }
        if (!ok) throw InputError("option --chart out of range: expected u, u1 or y<j> for a y-variable index j");
    }

    json report;
    report["schema"] = report_schema;
    report["version"] = library_version();
    report["command"] = command;
    json split = nullptr;
    if (s.split) split = {{"u", s.split->u}, {"y", s.split->y}};
    report["session"] = {{"field", field_declaration(s.field)}, {"vars", s.vars}, {"split", split}, {"gens", polys(gens)}};
    report["options"] = {{"D", D}, {"nmax", nmax}, {"steps", steps}, {"ext", ext}, {"box", box}, {"chart", chart}};

    int exit_code = 0;
    std::string status = "ok";
    json result;

    if (command == "hs") {
        result["origin"] = values(hs_at_origin(gens, D));
        std::optional<std::vector<std::string>> y;
        if (s.split)
            y = s.split->y;
        else
            y = coordinate_reduction(s);
        result["stratum"] = y ? json(*y) : json(nullptr);
        result["generic"] = y ? values(hs_generic_point(gens, *y, D)) : json(nullptr);
        if (all_homogeneous(gens)) result["cone_origin"] = values(hs_cone_origin(gens, D));
    } else if (command == "nu-star") {
        if (!all_homogeneous(gens)) throw InputError("nu-star needs homogeneous generators");
        if (D < max_degree(gens)) throw InputError("option --D out of range: below the largest generator degree");
        result["nu_star"] = nu_star_graded(gens, D);
    } else if (command == "directrix") {
        DirectrixResult d = directrix(gens);
        result = {{"forms", polys(d.forms)}, {"dimension", d.dim()}, {"level", d.level}};
    } else if (command == "ridge") {
        RidgeResult r = ridge(gens);
        LinearReduction lin = ridge_reduced_as_linear(r.basis);
        result["sigmas"] = polys(r.sigmas);
        result["degrees"] = r.basis.degrees();
        result["translation_stable"] = verify_translation_stability(gens, r.basis);
        result["escalated"] = r.escalated;
        result["stabilizer_size"] = r.stabilizer.size();
        if (lin.forms)
            result["reduced"] = {{"forms", polys(linear_polynomials(s.ring, linear_span(s.ring, *lin.forms)))}};
        else
            result["reduced"] = {{"witness", lin.witness}};
    } else if (command == "stratum-ideal") {
        result["generators"] = sorted_polys(hs_stratum_derivative_ideal(gens));
    } else if (command == "polyhedron") {
        const Split& sp = require_split(s, command);
        OrthantPolyhedron poly = projected_polyhedron(gens, make_coordinates(s.ring, sp.u, sp.y));
        DeltaFace df = delta_and_first_face(poly);
        result = {{"vertices", points(poly.vertices())},
                  {"delta", optional_rational(df.delta)},
                  {"first_face", points(df.first_face)},
                  {"empty", poly.empty()}};
    } else if (command == "prepare") {
        const Split& sp = require_split(s, command);
        PreparedSystem sys = prepare(gens, make_coordinates(s.ring, sp.u, sp.y), steps);
        result = prepared_json(sys);
        if (!sys.prepared) {
            exit_code = 2;
            status = "inconclusive";
        }
    } else if (command == "blowup") {
        const Split& sp = require_split(s, command);
        PreparedSystem sys = prepare(gens, make_coordinates(s.ring, sp.u, sp.y), steps);
        BlowupReport b = blowup_chart_transform(sys, chart);
        std::vector<bool> exact(b.exact_division.begin(), b.exact_division.end());
        result = {{"chart", b.chart},
                  {"prepared_input", b.prepared_input},
                  {"generators", polys(b.generators)},
                  {"vertices", points(b.polyhedron.vertices())},
                  {"mapped", points(b.mapped.vertices())},
                  {"delta_before", optional_rational(b.delta_before)},
                  {"min_first", optional_rational(b.min_first)},
                  {"mapped_min_first", optional_rational(b.mapped_min_first)},
                  {"law_holds", b.law_holds},
                  {"permissible", b.permissible},
                  {"exact_division", exact}};
    } else if (command == "criterion") {
        CriterionReport r = cone_constancy_criterion(gens, nmax);
        result = criterion_json(r);
        if (r.predicted == Verdict::Inconclusive) {
            exit_code = 2;
            status = "inconclusive";
        }
    } else if (command == "normal-flat") {
        const Split& sp = require_split(s, command);
        result = normal_flatness_json(normal_flatness_check(gens, sp.y, D));
    } else if (command == "scan") {
        result = scan_json(stratum_scan(gens, ext, box, D));
    } else if (command == "report") {
        ReportOptions ro;
        if (s.split) {
            ro.u = s.split->u;
            ro.y = s.split->y;
        }
        ro.max_extension = ext;
        ro.box = box;
        ro.truncation = D;
        ro.nmax = nmax;
        ro.max_steps = steps;
        CriterionReport r = theorem_report(gens, ro);
        result = criterion_json(r);
        if (!r.disagreements.empty()) {
            exit_code = 1;
            status = "disagreement";
        } else if (r.predicted == Verdict::Inconclusive) {
            exit_code = 2;
            status = "inconclusive";
        }
    }
    report["status"] = status;
    report["result"] = result;

    CommandResult out;
    out.exit_code = exit_code;
    if (o.text) {
        render_text(report, "", out.output);
    } else {
        out.output = report.dump(2) + "\n";
    }
    return out;
}

}  // namespace hsc
