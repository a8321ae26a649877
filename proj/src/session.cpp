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

#include "hsconst/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hsconst/error.hpp"
#include "hsconst/parser.hpp"

namespace hsc {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, std::size_t offset = 0) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        std::size_t start = i;
        if (line[i] == ';' || line[i] == ',') {
            out.push_back({std::string(1, line[i]), offset + start + 1});
            ++i;
            continue;
        }
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != ';' && line[i] != ',')
            ++i;
        out.push_back({std::string(line.substr(start, i - start)), offset + start + 1});
    }
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    Session run() {
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t end = text_.find('\n', pos);
            if (end == std::string_view::npos) end = text_.size();
            ++line_;
            std::string_view line = text_.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            std::size_t hash = line.find('#');
            if (hash != std::string_view::npos) line = line.substr(0, hash);
            handle(line);
            if (end == text_.size()) break;
            pos = end + 1;
        }
        if (!field_) fail(line_, 1, "missing field declaration");
        if (!vars_seen_) fail(line_, 1, "missing vars declaration");
        if (s_.gens.empty()) fail(line_, 1, "empty generator list");
        return std::move(s_);
    }

private:
    [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) const {
        throw SessionError(line, column, what);
    }

    void handle(std::string_view line) {
        auto tokens = tokenize(line);
        if (tokens.empty()) return;
        const std::string& kw = tokens[0].text;
        if (kw == "field")
            read_field(tokens);
        else if (kw == "vars")
            read_vars(tokens);
        else if (kw == "split")
            read_split(tokens);
        else if (kw == "gen")
            read_gen(line, tokens);
        else
            fail(line_, tokens[0].column, "unknown directive '" + kw + "'");
    }

    std::uint64_t read_characteristic(const Token& t) {
        if (t.text == "Q") return 0;
        if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            t.text.size() > 9)
            fail(line_, t.column, "expected a prime, got '" + t.text + "'");
        std::uint64_t p = std::stoull(t.text);
        if (!is_prime(p)) fail(line_, t.column, "characteristic " + t.text + " is not a prime");
        return p;
    }

    void read_field(const std::vector<Token>& tokens) {
        if (field_) fail(line_, tokens[0].column, "duplicate field declaration");
        if (tokens.size() < 2) fail(line_, tokens[0].column + 5, "expected Q, Fp or Frac");
        const Token& kind = tokens[1];
        if (kind.text == "Q") {
            if (tokens.size() > 2) fail(line_, tokens[2].column, "unexpected '" + tokens[2].text + "'");
            field_ = Field::rationals();
        } else if (kind.text == "Fp") {
            if (tokens.size() < 3) fail(line_, kind.column + 2, "expected a prime");
            if (tokens.size() > 3) fail(line_, tokens[3].column, "unexpected '" + tokens[3].text + "'");
            if (tokens[2].text == "Q") fail(line_, tokens[2].column, "expected a prime, got 'Q'");
            field_ = Field::prime(read_characteristic(tokens[2]));
        } else if (kind.text == "Frac") {
            if (tokens.size() < 3) fail(line_, kind.column + 4, "expected Q or a prime");
            std::uint64_t p = read_characteristic(tokens[2]);
            if (tokens.size() < 4 || tokens[3].text != ";")
                fail(line_, tokens.size() < 4 ? tokens[2].column + tokens[2].text.size() : tokens[3].column, "expected ';'");
            std::vector<std::string> params;
            for (std::size_t i = 4; i < tokens.size(); ++i) {
                if (tokens[i].text == ",") continue;
                if (!is_identifier(tokens[i].text))
                    fail(line_, tokens[i].column, "invalid parameter name '" + tokens[i].text + "'");
                if (std::find(params.begin(), params.end(), tokens[i].text) != params.end())
                    fail(line_, tokens[i].column, "duplicate parameter '" + tokens[i].text + "'");
                params.push_back(tokens[i].text);
            }
            if (params.empty()) fail(line_, tokens[3].column + 1, "expected at least one parameter");
            field_ = Field::function_field(p, params);
        } else {
            fail(line_, kind.column, "unknown field '" + kind.text + "'");
        }
        s_.field = *field_;
    }

    void read_vars(const std::vector<Token>& tokens) {
        if (!field_) fail(line_, tokens[0].column, "field must be declared before vars");
        if (vars_seen_) fail(line_, tokens[0].column, "duplicate vars declaration");
        vars_seen_ = true;
        std::vector<std::string> params = field_->parameter_names();
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const Token& t = tokens[i];
            if (t.text == ",") continue;
            if (!is_identifier(t.text)) fail(line_, t.column, "invalid variable name '" + t.text + "'");
            if (std::find(s_.vars.begin(), s_.vars.end(), t.text) != s_.vars.end())
                fail(line_, t.column, "duplicate variable '" + t.text + "'");
            if (std::find(params.begin(), params.end(), t.text) != params.end())
                fail(line_, t.column, "variable '" + t.text + "' clashes with a field parameter");
            s_.vars.push_back(t.text);
        }
        if (s_.vars.empty()) fail(line_, tokens[0].column + 4, "expected at least one variable");
        s_.ring = make_ring(*field_, s_.vars);
    }

    void read_split(const std::vector<Token>& tokens) {
        if (!vars_seen_) fail(line_, tokens[0].column, "vars must be declared before split");
        if (s_.split) fail(line_, tokens[0].column, "duplicate split declaration");
        Split sp;
        std::vector<std::string>* part = nullptr;
        std::set<std::string> seen;
        bool seen_u = false, seen_y = false;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const Token& t = tokens[i];
            if (t.text == "u:" && !seen_u && !seen_y) {
                part = &sp.u;
                seen_u = true;
            } else if (t.text == "y:" && !seen_y) {
                part = &sp.y;
                seen_y = true;
            } else if (t.text == ";" || t.text == ",") {
                continue;
            } else if (!part) {
                fail(line_, t.column, "expected 'u:'");
            } else {
                if (std::find(s_.vars.begin(), s_.vars.end(), t.text) == s_.vars.end())
                    fail(line_, t.column, "unknown variable '" + t.text + "'");
                if (!seen.insert(t.text).second) fail(line_, t.column, "variable '" + t.text + "' listed twice in split");
                part->push_back(t.text);
            }
        }
        if (!seen_u || !seen_y) fail(line_, tokens[0].column, "split needs 'u:' and 'y:' parts");
        if (seen.size() != s_.vars.size()) fail(line_, tokens[0].column, "split must partition the variables");
        if (sp.y.empty()) fail(line_, tokens[0].column, "split needs at least one y-variable");
        s_.split = std::move(sp);
    }

    void read_gen(std::string_view line, const std::vector<Token>& tokens) {
        if (!vars_seen_) fail(line_, tokens[0].column, "vars must be declared before gen");
        std::size_t start = tokens[0].column - 1 + 3;
        std::string_view expr = line.substr(start);
        std::size_t lead = 0;
        while (lead < expr.size() && std::isspace(static_cast<unsigned char>(expr[lead]))) ++lead;
        if (lead == expr.size()) fail(line_, start + 1, "expected an expression");
        Polynomial g(s_.ring);
        try {
            g = parse_polynomial(expr, s_.ring);
        } catch (const ParseError& e) {
            fail(line_, start + e.column(), e.detail());
        }
        if (g.is_zero()) fail(line_, start + lead + 1, "zero generator");
        s_.gens.push_back(std::move(g));
    }

    std::string_view text_;
    std::size_t line_ = 0;
    std::optional<Field> field_;
    bool vars_seen_ = false;
    Session s_;
};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i];
    return out;
}

}  // namespace

bool operator==(const Session& a, const Session& b) {
    if (!(a.field == b.field) || a.vars != b.vars || a.split != b.split || a.gens.size() != b.gens.size()) return false;
    for (std::size_t i = 0; i < a.gens.size(); ++i)
        if (a.gens[i].to_string() != b.gens[i].to_string()) return false;
    return true;
}

Session parse_ideal_file(std::string_view text) { return Reader(text).run(); }

std::string field_declaration(Field f) {
    std::uint64_t p = f.characteristic();
    std::string base = p == 0 ? "Q" : std::to_string(p);
    if (!f.has_parameters()) return p == 0 ? "Q" : "Fp " + base;
    return "Frac " + base + " ; " + join(f.parameter_names());
}

std::string print_session(const Session& s) {
    std::string out = "field " + field_declaration(s.field) + "\n";
    out += "vars " + join(s.vars) + "\n";
    if (s.split) out += "split u: " + join(s.split->u) + " ; y: " + join(s.split->y) + "\n";
    for (const auto& g : s.gens) out += "gen " + g.to_string() + "\n";
    return out;
}

}  // namespace hsc
