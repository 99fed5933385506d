// Copyright 2026 The fsigtool authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fsig/problem.hpp"

#include <cctype>

namespace fsig {

// --- minimal TOML-subset reader --------------------------------------------
// Supports: [dotted.tables], key = value with integer, "string",
// [array, ...] of values, and { inline = "tables" }. Comments with '#'.

namespace {

struct TomlValue {
    enum class Type { integer, string, array, table } type = Type::integer;
    long long int_val = 0;
    std::string str_val;
    std::vector<TomlValue> array;
    std::map<std::string, TomlValue> table;
};

using TomlSection = std::map<std::string, TomlValue>;

struct TomlReader {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit TomlReader(const std::string& s) : src(s) {}

    [[noreturn]] void error(const std::string& msg) const {
        throw Error(Errc::parse,
                    msg + " at line " + std::to_string(line) + ", column " + std::to_string(col),
                    line, col);
    }

    char cur() const { return pos < src.size() ? src[pos] : '\0'; }
    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_inline_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) advance();
    }
    void skip_ws_and_comments(bool cross_lines) {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == ' ' || c == '\t') {
                advance();
            } else if (c == '#') {
                while (pos < src.size() && src[pos] != '\n') advance();
            } else if (cross_lines && (c == '\n' || c == '\r')) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string bare_key() {
        skip_inline_ws();
        std::string k;
        while (pos < src.size() &&
               (std::isalnum((unsigned char)src[pos]) || src[pos] == '_' || src[pos] == '-')) {
            k += src[pos];
            advance();
        }
        if (k.empty()) error("expected a key");
        return k;
    }

    TomlValue value() {
        skip_ws_and_comments(true);
        char c = cur();
        if (c == '"') return string_value();
        if (c == '[') return array_value();
        if (c == '{') return inline_table();
        if (c == '-' || std::isdigit((unsigned char)c)) return integer_value();
        error("expected a value");
    }

    TomlValue string_value() {
        TomlValue v;
        v.type = TomlValue::Type::string;
        advance();  // opening quote
        while (pos < src.size() && src[pos] != '"') {
            if (src[pos] == '\\' && pos + 1 < src.size() &&
                (src[pos + 1] == '"' || src[pos + 1] == '\\')) {
                advance();
            }
            if (src[pos] == '\n') error("unterminated string");
            v.str_val += src[pos];
            advance();
        }
        if (cur() != '"') error("unterminated string");
        advance();
        return v;
    }

    TomlValue integer_value() {
        TomlValue v;
        v.type = TomlValue::Type::integer;
        bool neg = false;
        if (cur() == '-') {
            neg = true;
            advance();
        }
        if (!std::isdigit((unsigned char)cur())) error("expected an integer");
        long long x = 0;
        while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
            x = checked_mul(x, 10);
            x = checked_add(x, src[pos] - '0');
            advance();
        }
        v.int_val = neg ? -x : x;
        return v;
    }

    TomlValue array_value() {
        TomlValue v;
        v.type = TomlValue::Type::array;
        advance();  // '['
        skip_ws_and_comments(true);
        while (cur() != ']') {
            v.array.push_back(value());
            skip_ws_and_comments(true);
            if (cur() == ',') {
                advance();
                skip_ws_and_comments(true);
            } else if (cur() != ']') {
                error("expected ',' or ']' in array");
            }
        }
        advance();  // ']'
        return v;
    }

    TomlValue inline_table() {
        TomlValue v;
        v.type = TomlValue::Type::table;
        advance();  // '{'
        skip_ws_and_comments(true);
        while (cur() != '}') {
            std::string k = bare_key();
            skip_ws_and_comments(true);
            if (cur() != '=') error("expected '=' in inline table");
            advance();
            v.table[k] = value();
            skip_ws_and_comments(true);
            if (cur() == ',') {
                advance();
                skip_ws_and_comments(true);
            } else if (cur() != '}') {
                error("expected ',' or '}' in inline table");
            }
        }
        advance();  // '}'
        return v;
    }
};

std::map<std::string, TomlSection> read_toml(const std::string& text) {
    std::map<std::string, TomlSection> sections;
    TomlReader rd(text);
    std::string current;
    while (rd.pos < text.size()) {
        rd.skip_ws_and_comments(true);
        if (rd.pos >= text.size()) break;
        if (rd.cur() == '[') {
            rd.advance();
            std::string path = rd.bare_key();
            while (rd.cur() == '.') {
                rd.advance();
                path += "." + rd.bare_key();
            }
            rd.skip_inline_ws();
            if (rd.cur() != ']') rd.error("expected ']' after table name");
            rd.advance();
            current = path;
            sections[current];  // materialize even if empty
        } else {
            std::string key = rd.bare_key();
            rd.skip_inline_ws();
            if (rd.cur() != '=') rd.error("expected '=' after key '" + key + "'");
            rd.advance();
            TomlValue v = rd.value();
            if (sections[current].count(key)) rd.error("duplicate key '" + key + "'");
            sections[current][key] = std::move(v);
        }
    }
    return sections;
}

// Typed accessors with decent error messages.
const TomlValue* find(const TomlSection& sec, const std::string& key) {
    auto it = sec.find(key);
    return it == sec.end() ? nullptr : &it->second;
}

long long need_int(const TomlSection& sec, const std::string& where, const std::string& key) {
    const TomlValue* v = find(sec, key);
    if (!v || v->type != TomlValue::Type::integer)
        fail(Errc::parse, "[" + where + "] needs integer key '" + key + "'");
    return v->int_val;
}

std::optional<long long> opt_int(const TomlSection& sec, const std::string& key) {
    const TomlValue* v = find(sec, key);
    if (!v) return std::nullopt;
    if (v->type != TomlValue::Type::integer) fail(Errc::parse, "key '" + key + "' must be an integer");
    return v->int_val;
}

std::optional<std::string> opt_str(const TomlSection& sec, const std::string& key) {
    const TomlValue* v = find(sec, key);
    if (!v) return std::nullopt;
    if (v->type != TomlValue::Type::string) fail(Errc::parse, "key '" + key + "' must be a string");
    return v->str_val;
}

std::string need_str(const TomlSection& sec, const std::string& where, const std::string& key) {
    auto s = opt_str(sec, key);
    if (!s) fail(Errc::parse, "[" + where + "] needs string key '" + key + "'");
    return *s;
}

std::vector<std::string> str_array(const TomlSection& sec, const std::string& where,
                                   const std::string& key) {
    const TomlValue* v = find(sec, key);
    if (!v || v->type != TomlValue::Type::array)
        fail(Errc::parse, "[" + where + "] needs array key '" + key + "'");
    std::vector<std::string> out;
    for (const auto& item : v->array) {
        if (item.type != TomlValue::Type::string)
            fail(Errc::parse, "array '" + key + "' must contain strings");
        out.push_back(item.str_val);
    }
    return out;
}

std::map<std::string, std::string> str_table(const TomlSection& sec, const std::string& where,
                                             const std::string& key) {
    const TomlValue* v = find(sec, key);
    if (!v || v->type != TomlValue::Type::table)
        fail(Errc::parse, "[" + where + "] needs inline-table key '" + key + "'");
    std::map<std::string, std::string> out;
    for (const auto& [k, item] : v->table) {
        if (item.type != TomlValue::Type::string)
            fail(Errc::parse, "table '" + key + "' must map to strings");
        out[k] = item.str_val;
    }
    return out;
}

}  // namespace

Rational parse_rational_text(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(Errc::parse, "malformed rational '" + text + "'");
    }
}

ProblemFile parse_problem(const std::string& text) {
    auto sections = read_toml(text);
    ProblemFile pf;

    auto ring_it = sections.find("ring");
    if (ring_it == sections.end()) fail(Errc::parse, "missing [ring] section");
    const TomlSection& ring = ring_it->second;
    long long p = need_int(ring, "ring", "p");
    if (p < 2 || p > 0x7fffffff) fail(Errc::parse, "[ring] p out of range");
    pf.p = (std::uint32_t)p;
    pf.vars = str_array(ring, "ring", "vars");
    pf.quotient = opt_str(ring, "quotient");
    if (auto d = opt_int(ring, "dimension")) pf.dimension = (int)*d;

    for (const auto& [path, sec] : sections) {
        if (path.rfind("divisor.", 0) == 0) {
            std::string name = path.substr(8);
            const TomlValue* comps = find(sec, "components");
            if (!comps || comps->type != TomlValue::Type::array)
                fail(Errc::parse, "[" + path + "] needs array key 'components'");
            std::vector<ProblemFile::DivisorComponentSec> list;
            for (const auto& item : comps->array) {
                if (item.type != TomlValue::Type::table)
                    fail(Errc::parse, "divisor components must be inline tables");
                ProblemFile::DivisorComponentSec c;
                c.poly = need_str(item.table, path, "poly");
                c.num = need_int(item.table, path, "num");
                c.den = need_int(item.table, path, "den");
                list.push_back(std::move(c));
            }
            pf.divisors[name] = std::move(list);
        } else if (path.rfind("base.", 0) == 0) {
            std::string name = path.substr(5);
            ProblemFile::BaseSec b;
            b.vars = str_array(sec, path, "vars");
            b.reduce = str_table(sec, path, "reduce");
            pf.bases[name] = std::move(b);
        } else if (path.rfind("cover.", 0) == 0) {
            std::string name = path.substr(6);
            ProblemFile::CoverSec c;
            c.vars = str_array(sec, path, "vars");
            c.quotient = opt_str(sec, "quotient");
            c.inclusion = str_table(sec, path, "inclusion");
            c.index = need_int(sec, path, "index");
            c.witness = need_str(sec, path, "witness");
            pf.covers[name] = std::move(c);
        }
    }

    if (auto it = sections.find("pair"); it != sections.end()) {
        pf.delta_name = opt_str(it->second, "delta");
        pf.d_name = opt_str(it->second, "D");
        if (auto r = opt_str(it->second, "rounding")) pf.rounding = *r;
    }
    if (pf.rounding != "qm1" && pf.rounding != "q")
        fail(Errc::parse, "rounding must be 'qm1' or 'q'");

    auto task_it = sections.find("task");
    if (task_it == sections.end()) fail(Errc::parse, "missing [task] section");
    const TomlSection& task = task_it->second;
    pf.command = need_str(task, "task", "command");
    pf.emax = opt_int(task, "emax");
    pf.e = opt_int(task, "e");
    pf.r = opt_int(task, "r");
    pf.sdim = opt_int(task, "sdim");
    if (find(task, "grid")) pf.grid = str_array(task, "task", "grid");
    pf.base = opt_str(task, "base");
    pf.base_prime = opt_str(task, "base_prime");
    pf.cover = opt_str(task, "cover");
    pf.g = opt_str(task, "g");
    if (find(task, "ideal")) pf.ideal = str_array(task, "task", "ideal");

    return pf;
}

Workspace build_workspace(const ProblemFile& pf) {
    Workspace ws;
    RingPtr S = make_ring(pf.p, pf.vars);
    std::optional<Polynomial> quotient;
    if (pf.quotient && !pf.quotient->empty()) quotient = parse_polynomial(*pf.quotient, S);
    ws.pres = make_presentation(S, quotient, pf.dimension);

    for (const auto& [name, comps] : pf.divisors) {
        QDivisor d;
        for (const auto& c : comps) {
            if (c.den <= 0) fail(Errc::input, "divisor '" + name + "' has non-positive denominator");
            d.components.push_back(
                QDivisorComponent{parse_polynomial(c.poly, S), Rational(c.num, c.den)});
        }
        ws.divisors[name] = std::move(d);
    }

    ws.pair.ring = ws.pres;
    ws.pair.rounding = pf.rounding == "q" ? Rounding::ceil_q : Rounding::ceil_qm1;
    if (pf.delta_name) {
        auto it = ws.divisors.find(*pf.delta_name);
        if (it == ws.divisors.end())
            fail(Errc::input, "pair references unknown divisor '" + *pf.delta_name + "'");
        ws.pair.delta = it->second;
    }
    if (pf.d_name) {
        auto it = ws.divisors.find(*pf.d_name);
        if (it == ws.divisors.end())
            fail(Errc::input, "pair references unknown divisor '" + *pf.d_name + "'");
        ws.divisor_d = it->second;
    }

    for (const auto& [name, sec] : pf.bases) {
        RingPtr base_ring = make_ring(pf.p, sec.vars);
        std::vector<Polynomial> images;
        for (const auto& v : S->vars()) {
            auto it = sec.reduce.find(v);
            if (it == sec.reduce.end())
                fail(Errc::input, "base '" + name + "' missing reduction for variable '" + v + "'");
            images.push_back(parse_polynomial(it->second, base_ring));
        }
        ws.bases[name] = make_base_presentation(ws.pres, sec.vars, images);
    }

    for (const auto& [name, sec] : pf.covers) {
        CoverPresentation cover;
        RingPtr C = make_ring(pf.p, sec.vars);
        std::optional<Polynomial> cq;
        if (sec.quotient && !sec.quotient->empty()) cq = parse_polynomial(*sec.quotient, C);
        cover.cover_ring = make_presentation(C, cq, std::nullopt);
        for (const auto& v : S->vars()) {
            auto it = sec.inclusion.find(v);
            if (it == sec.inclusion.end())
                fail(Errc::input, "cover '" + name + "' missing inclusion for variable '" + v + "'");
            cover.inclusion.push_back(parse_polynomial(it->second, C));
        }
        if (sec.index < 1) fail(Errc::input, "cover index must be >= 1");
        cover.index = sec.index;
        cover.cartier_witness = parse_polynomial(sec.witness, C);
        ws.covers[name] = std::move(cover);
    }

    return ws;
}

}  // namespace fsig
