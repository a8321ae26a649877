#include <json.hpp>

#include "doctest.h"
#include "hsconst/commands.hpp"
#include "hsconst/error.hpp"

using namespace hsc;
using nlohmann::json;

namespace {

const char* solvable_curve = "field Q\nvars u1 u2 y1\nsplit u: u1 u2 ; y: y1\ngen y1^2 - 2*u1^2*y1 + u1^4 - u2^5\n";
const char* fat_line = "field Q\nvars x1 x2 x3\ngen x1^2+x2*x3^2\ngen x2^2\n";
const char* fat_line_split = "field Q\nvars x1 x2 x3\nsplit u: x3 ; y: x1 x2\ngen x1^2+x2*x3^2\ngen x2^2\n";
const char* imperfect_cone = "field Frac 2 ; t\nvars X Y\ngen X^2+t*Y^2\n";

json run(const char* text, const std::string& cmd, CommandOptions o = {}, int expected_exit = 0) {
    CommandResult r = run_command(parse_ideal_file(text), cmd, o);
    CHECK(r.exit_code == expected_exit);
    return json::parse(r.output);
}

std::string error_of(const char* text, const std::string& cmd, CommandOptions o = {}) {
    try {
        run_command(parse_ideal_file(text), cmd, o);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("every report carries the envelope") {
    for (const auto& cmd : command_names()) {
        bool cone_only = cmd == "nu-star" || cmd == "scan" || cmd == "directrix" || cmd == "ridge" || cmd == "criterion";
        json r = run(cone_only ? "field Fp 3\nvars x y\ngen x*y\n" : fat_line_split, cmd);
        if (cone_only) {
            CHECK(r["session"]["field"] == "Fp 3");
            continue;
        }
        CHECK(r["schema"] == 1);
        CHECK(r["version"] == "0.1.0");
        CHECK(r["command"] == cmd);
        CHECK(r["session"]["field"] == "Q");
        CHECK(r["session"]["split"]["y"] == json({"x1", "x2"}));
        CHECK(r["options"].contains("D"));
        CHECK(r.contains("result"));
    }
}

TEST_CASE("polyhedron of the solvable curve") {
    json r = run(solvable_curve, "polyhedron")["result"];
    CHECK(r["vertices"] == json({"2/1,0/1", "0/1,5/2"}));
    CHECK(r["delta"] == "2/1");
    json p = run(solvable_curve, "prepare")["result"];
    CHECK(p["prepared"] == true);
    CHECK(p["generators"] == json({"-u2^5 + y1^2"}));
    CHECK(p["vertices"] == json({"0/1,5/2"}));
    CHECK(p["log"][0]["substitutions"] == json({"y1 -> u1^2 + y1"}));
    json b = run(solvable_curve, "blowup")["result"];
    CHECK(b["min_first"] == "3/2");
    CHECK(b["law_holds"] == true);
}

TEST_CASE("hs of the fat line") {
    CommandOptions o;
    o.D = 6;
    json r = run(fat_line, "hs", o)["result"];
    CHECK(r["origin"] == json({1, 3, 4, 4, 4, 4, 4}));
    CHECK(r["generic"] == json({1, 1, 1, 1, 0, 0, 0}));
    CHECK(r["stratum"] == json({"x1", "x2"}));
}

TEST_CASE("criterion over an imperfect field") {
    json r = run(imperfect_cone, "criterion")["result"];
    CHECK(r["predicted_constant"] == false);
    CHECK(r["witness"] == "t admits no square root");
    CHECK(r["ridge"] == json({"T_X^2 + t*T_Y^2"}));
    CHECK(r["directrix"] == json({"X", "Y"}));
}

TEST_CASE("report and normal flatness on the fat line") {
    json r = run(fat_line_split, "report")["result"];
    CHECK(r["summary"] == "reduction regular, not normally flat, HS non-constant");
    CHECK(r["polyhedron"]["vertices"] == json({"2/1"}));
    CHECK(r["polyhedron"]["empty_after_preparation"] == false);
    json nf = run(fat_line_split, "normal-flat")["result"];
    CHECK(nf["flat"] == false);
    CHECK(nf["first_difference"] == 1);
}

TEST_CASE("cone commands over a prime field") {
    const char* fat = "field Fp 2\nvars x y\ngen (x + y)^4\n";
    json s = run(fat, "scan")["result"];
    CHECK(s["constant"] == true);
    CHECK(s["stratum"] == json({"origin", "GF(2):(1, 1)"}));
    json n = run(fat, "nu-star")["result"];
    CHECK(n["nu_star"] == json({4}));
    json d = run(fat, "directrix")["result"];
    CHECK(d["forms"] == json({"x + y"}));
    json si = run("field Fp 3\nvars x y\ngen x*y\n", "stratum-ideal")["result"];
    CHECK(si["generators"] == json({"x", "x*y", "y"}));
    json rep = run("field Fp 3\nvars x y\ngen x*y\n", "report")["result"];
    CHECK(rep["predicted_constant"] == false);
    CHECK(rep["scan"]["constant"] == false);
}

TEST_CASE("inconclusive answers exit with status 2") {
    json r = run("field Q\nvars x y\ngen x^2 + y^2\n", "criterion", {}, 2);
    CHECK(r["status"] == "inconclusive");
    CHECK(r["result"]["predicted_constant"].is_null());
    CommandOptions o;
    o.steps = 0;
    CHECK(run(solvable_curve, "prepare", o, 2)["result"]["prepared"] == false);
}

TEST_CASE("reports are deterministic") {
    for (const char* text : {solvable_curve, fat_line_split, imperfect_cone}) {
        auto s = parse_ideal_file(text);
        CHECK(run_command(s, "report", {}).output == run_command(s, "report", {}).output);
    }
    CommandOptions t;
    t.text = true;
    std::string text = run_command(parse_ideal_file(solvable_curve), "polyhedron", t).output;
    CHECK(text.find("vertices: [2/1,0/1, 0/1,5/2]") != std::string::npos);
}

TEST_CASE("golden command errors") {
    CHECK(error_of(fat_line, "frobnicate") == "unknown command 'frobnicate'");
    CommandOptions big;
    big.D = 0;
    CHECK(error_of(fat_line, "hs", big) == "option --D out of range [1, 60]");
    CommandOptions ext;
    ext.ext = 9;
    CHECK(error_of(fat_line, "scan", ext) == "option --ext out of range [1, 6]");
    CommandOptions nm;
    nm.nmax = 0;
    CHECK(error_of(fat_line, "criterion", nm) == "option --nmax out of range [1, 512]");
    CommandOptions st;
    st.steps = 1000000;
    CHECK(error_of(solvable_curve, "prepare", st) == "option --steps out of range [0, 100000]");
    CommandOptions bx;
    bx.box = 70000;
    CHECK(error_of(fat_line, "scan", bx) == "option --box out of range [0, 65536]");
    CommandOptions ch;
    ch.chart = "y7";
    CHECK(error_of(solvable_curve, "blowup", ch) == "option --chart out of range: expected u, u1 or y<j> for a y-variable index j");
    CHECK(error_of(fat_line, "polyhedron") == "polyhedron needs a 'split u: ... ; y: ...' declaration");
    CHECK(error_of(fat_line, "nu-star") == "nu-star needs homogeneous generators");
    CHECK(error_of(fat_line, "scan") == "enumeration unsupported over Q");
    CHECK(error_of(fat_line, "criterion") == "generator 'x2*x3^2 + x1^2' is not homogeneous");
    CommandOptions low;
    low.D = 2;
    CHECK(error_of("field Q\nvars x y\ngen x^3\n", "nu-star", low) ==
          "option --D out of range: below the largest generator degree");
    Session empty = parse_ideal_file(fat_line);
    empty.gens.clear();
    CHECK_THROWS_WITH_AS(run_command(empty, "hs", {}), "empty generator list", InputError);
    CHECK(error_of(fat_line, "report") == "unsupported input: a non-homogeneous ideal needs a declared u/y split");
}
